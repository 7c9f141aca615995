//! Sparse exact polynomials: bivariate `Poly` in x, y (the workhorse for
//! lines, first integrals and one-forms) and a small multivariate `MPoly`
//! used for symbolic component checks.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::num::{to_f64, Rat, Ring};

/// Bivariate polynomial with exact coefficients, sparse over `(deg_x, deg_y)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<S: Ring> {
    terms: BTreeMap<(u32, u32), S>,
}

impl<S: Ring> Poly<S> {
    pub fn new() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        let mut p = Poly::new();
        p.add_term(0, 0, c);
        p
    }

    pub fn monomial(i: u32, j: u32, c: S) -> Self {
        let mut p = Poly::new();
        p.add_term(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, S::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, S::one())
    }

    /// `a*x + b*y + c`.
    pub fn linear(a: S, b: S, c: S) -> Self {
        let mut p = Poly::new();
        p.add_term(1, 0, a);
        p.add_term(0, 1, b);
        p.add_term(0, 0, c);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> S {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &S)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut p = Poly::new();
        for (&(i, j), v) in &self.terms {
            p.add_term(i, j, v.clone() * c.clone());
        }
        p
    }

    pub fn diff_x(&self) -> Self {
        let mut p = Poly::new();
        for (&(i, j), v) in &self.terms {
            if i > 0 {
                p.add_term(i - 1, j, v.clone() * S::from_int(i as i64));
            }
        }
        p
    }

    pub fn diff_y(&self) -> Self {
        let mut p = Poly::new();
        for (&(i, j), v) in &self.terms {
            if j > 0 {
                p.add_term(i, j - 1, v.clone() * S::from_int(j as i64));
            }
        }
        p
    }

    pub fn eval(&self, x: &S, y: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), v) in &self.terms {
            let mut t = v.clone();
            for _ in 0..i {
                t = t * x.clone();
            }
            for _ in 0..j {
                t = t * y.clone();
            }
            acc = acc + t;
        }
        acc
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(S::one());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            n >>= 1;
        }
        acc
    }
}

impl<S: Ring> Default for Poly<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl Poly<Rat> {
    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for (&(i, j), v) in &self.terms {
            acc += to_f64(v) * x.powi(i as i32) * y.powi(j as i32);
        }
        acc
    }
}

impl<S: Ring> Add for Poly<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (&(i, j), v) in &rhs.terms {
            self.add_term(i, j, v.clone());
        }
        self
    }
}

impl<S: Ring> Sub for Poly<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Ring> Neg for Poly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut p = Poly::new();
        for ((i, j), v) in self.terms {
            p.terms.insert((i, j), -v);
        }
        p
    }
}

impl<S: Ring> Mul for Poly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut p = Poly::new();
        for (&(i1, j1), v1) in &self.terms {
            for (&(i2, j2), v2) in &rhs.terms {
                p.add_term(i1 + i2, j1 + j2, v1.clone() * v2.clone());
            }
        }
        p
    }
}

impl<S: Ring> Zero for Poly<S> {
    fn zero() -> Self {
        Poly::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Ring> One for Poly<S> {
    fn one() -> Self {
        Poly::constant(S::one())
    }
}

impl<S: Ring> Ring for Poly<S> {
    fn from_rat(q: Rat) -> Self {
        Poly::constant(S::from_rat(q))
    }
}

/// Multivariate polynomial over a fixed number of variables.
///
/// Exponent vectors are kept dense but tiny (six variables at most here).
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<S: Ring> {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, S>,
}

impl<S: Ring> MPoly<S> {
    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = MPoly { nvars, terms: BTreeMap::new() };
        p.add_term(alloc::vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut exps = alloc::vec![0u8; nvars];
        exps[idx] = 1;
        let mut p = MPoly { nvars, terms: BTreeMap::new() };
        p.add_term(exps, S::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Zero- and one-constants created through `Zero`/`One` carry no arity;
    /// give them one before combining.
    fn coerce(mut self, nvars: usize) -> Self {
        if self.nvars == nvars {
            return self;
        }
        assert!(self.nvars == 0, "mixed-arity polynomial arithmetic");
        let terms = core::mem::take(&mut self.terms);
        let mut p = MPoly { nvars, terms: BTreeMap::new() };
        for (_, c) in terms {
            p.add_term(alloc::vec![0; nvars], c);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u8>, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

impl<S: Ring> Add for MPoly<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let nvars = self.nvars.max(rhs.nvars);
        let mut lhs = self.coerce(nvars);
        for (e, v) in rhs.coerce(nvars).terms {
            lhs.add_term(e, v);
        }
        lhs
    }
}

impl<S: Ring> Sub for MPoly<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Ring> Neg for MPoly<S> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

impl<S: Ring> Mul for MPoly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let nvars = self.nvars.max(rhs.nvars);
        let lhs = self.coerce(nvars);
        let rhs = rhs.coerce(nvars);
        let mut p = MPoly { nvars, terms: BTreeMap::new() };
        for (e1, v1) in &lhs.terms {
            for (e2, v2) in &rhs.terms {
                let exps: Vec<u8> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(exps, v1.clone() * v2.clone());
            }
        }
        p
    }
}

impl<S: Ring> Zero for MPoly<S> {
    fn zero() -> Self {
        // nvars of a bare zero is unknowable; use 0 and coerce on add.
        MPoly { nvars: 0, terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Ring> One for MPoly<S> {
    fn one() -> Self {
        MPoly::constant(0, S::one())
    }
}

impl<S: Ring> Ring for MPoly<S> {
    fn from_rat(q: Rat) -> Self {
        MPoly::constant(0, S::from_rat(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat_int, Rat};

    #[test]
    fn product_of_lines_expands() {
        // x * y * (x + y - 1) = x^2 y + x y^2 - x y
        let x: Poly<Rat> = Poly::x();
        let y: Poly<Rat> = Poly::y();
        let l3 = Poly::linear(rat_int(1), rat_int(1), rat_int(-1));
        let f = x * y * l3;
        assert_eq!(f.coeff(2, 1), rat_int(1));
        assert_eq!(f.coeff(1, 2), rat_int(1));
        assert_eq!(f.coeff(1, 1), rat_int(-1));
        assert_eq!(f.total_degree(), 3);
        assert_eq!(f.eval(&rat_int(2), &rat_int(3)), rat_int(24));
    }

    #[test]
    fn derivative_rules() {
        let f: Poly<Rat> = Poly::monomial(2, 3, rat_int(5));
        assert_eq!(f.diff_x(), Poly::monomial(1, 3, rat_int(10)));
        assert_eq!(f.diff_y(), Poly::monomial(2, 2, rat_int(15)));
    }

    #[test]
    fn mpoly_expansion() {
        // (A + B)^2 - (A^2 + 2AB + B^2) == 0
        let a: MPoly<Rat> = MPoly::var(2, 0);
        let b: MPoly<Rat> = MPoly::var(2, 1);
        let lhs = (a.clone() + b.clone()) * (a.clone() + b.clone());
        let two = MPoly::constant(2, rat_int(2));
        let rhs = a.clone() * a.clone() + two * a * b.clone() + b.clone() * b;
        assert!((lhs - rhs).is_zero());
    }
}
