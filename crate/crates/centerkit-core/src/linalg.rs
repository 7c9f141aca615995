//! Dense exact linear algebra over a field: reduced row echelon form,
//! rank, nullspace, linear solves and canonical subspace comparison.
//!
//! Everything here is fraction-exact; no tolerances anywhere.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::num::Field;

/// Row-major dense matrix over an exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S: Field> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Field> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc = acc + self[(r, c)].clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(src) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, src);
            let inv = S::one() / self[(row, col)].clone();
            for c in col..self.cols {
                self[(row, c)] = self[(row, c)].clone() * inv.clone();
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for c in col..self.cols {
                        let delta = factor.clone() * self[(row, c)].clone();
                        self[(r, c)] = self[(r, c)].clone() - delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace `{v : Av = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().peekable();
        let free_cols: Vec<usize> = (0..self.cols)
            .filter(|c| {
                if piv_iter.peek() == Some(&c) {
                    piv_iter.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        for &fc in &free_cols {
            let mut v = vec![S::zero(); self.cols];
            v[fc] = S::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(r, fc)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Particular solution of `Ax = b`, if consistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // inconsistent: pivot in the augmented column
        }
        let mut x = vec![S::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// A functional `y` with `y A = 0` and `y.b != 0`, witnessing that `b`
    /// is not in the column space. `None` when `b` is in the image.
    pub fn infeasibility_certificate(&self, b: &[S]) -> Option<Vec<S>> {
        for y in self.transpose().nullspace() {
            let mut dot = S::zero();
            for (yi, bi) in y.iter().zip(b) {
                dot = dot + yi.clone() * bi.clone();
            }
            if !dot.is_zero() {
                return Some(y);
            }
        }
        None
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<S: Field> core::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (r, c): (usize, usize)) -> &S {
        &self.data[r * self.cols + c]
    }
}

impl<S: Field> core::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut S {
        &mut self.data[r * self.cols + c]
    }
}

/// A linear subspace of `S^n` in canonical (RREF, no zero rows) form.
///
/// Canonicity makes subspace equality a plain comparison.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<S: Field> {
    ambient: usize,
    echelon: Vec<Vec<S>>,
}

impl<S: Field> Subspace<S> {
    pub fn from_spanning(ambient: usize, vectors: &[Vec<S>]) -> Self {
        let mut m = Matrix::from_rows(vectors);
        if vectors.is_empty() {
            return Subspace { ambient, echelon: Vec::new() };
        }
        assert_eq!(m.cols(), ambient);
        let pivots = m.rref();
        let echelon = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace { ambient, echelon }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.echelon
    }

    /// Exact membership: reduce `v` against the echelon rows.
    pub fn contains(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for row in &self.echelon {
            let lead = row.iter().position(|x| !x.is_zero()).expect("zero echelon row");
            if !v[lead].is_zero() {
                let factor = v[lead].clone(); // echelon pivot is 1
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = vi.clone() - factor.clone() * ri.clone();
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.echelon.iter().all(|v| self.contains(v))
    }

    /// Dimension of `self + span(v)`; equals `dim` iff `v` is contained.
    pub fn joined_with(&self, v: &[S]) -> Subspace<S> {
        let mut rows = self.echelon.clone();
        rows.push(v.to_vec());
        Subspace::from_spanning(self.ambient, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat_int, Rat};

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect();
        Matrix::from_rows(&rows)
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let b = vec![rat_int(3), rat_int(1)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);

        let a2 = m(&[&[1, 1], &[2, 2]]);
        let b2 = vec![rat_int(1), rat_int(3)];
        assert!(a2.solve(&b2).is_none());
        let cert = a2.infeasibility_certificate(&b2).unwrap();
        // cert * A = 0, cert * b != 0
        let ta = a2.transpose().mul_vec(&cert);
        assert!(ta.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn subspace_equality_is_canonical() {
        let s1 = Subspace::from_spanning(
            3,
            &[
                vec![rat_int(1), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(1), rat_int(1)],
            ],
        );
        let s2 = Subspace::from_spanning(
            3,
            &[
                vec![rat_int(1), rat_int(2), rat_int(1)],
                vec![rat_int(2), rat_int(3), rat_int(1)],
            ],
        );
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
        assert!(s1.contains(&[rat_int(1), rat_int(0), rat_int(-1)]));
        assert!(!s1.contains(&[rat_int(1), rat_int(0), rat_int(0)]));
    }
}
