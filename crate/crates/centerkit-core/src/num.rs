//! Exact scalar arithmetic: arbitrary-precision rationals, quadratic
//! extensions of the rationals, and small integer helpers.

use alloc::string::String;
use core::fmt;
use core::marker::PhantomData;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Builds a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Builds a rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &Rat) -> Rat {
    x - x.floor()
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Positive gcd of two unsigned integers.
pub fn gcd_u32(a: u32, b: u32) -> u32 {
    num_integer::gcd(a, b)
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}

/// Commutative Q-algebra operations: what polynomial arithmetic and the
/// Bautin generator formulas need.
///
/// Implemented by [`Rat`], [`QuadExt`], and by the polynomial types
/// themselves, so a formula written once runs over Q, Q(i), Q(sqrt 3) and
/// symbolically over polynomial rings.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Debug
{
    fn from_rat(q: Rat) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }
}

/// A ring with exact division: what Gaussian elimination needs.
pub trait Field: Ring + Div<Output = Self> {}

impl<T: Ring + Div<Output = T>> Field for T {}

impl Ring for Rat {
    fn from_rat(q: Rat) -> Self {
        q
    }
}

/// Marker fixing the radicand of a quadratic extension.
pub trait Radicand: Clone + PartialEq + fmt::Debug + 'static {
    /// The rational number whose square root is adjoined. Must not be a
    /// square in Q, otherwise division breaks.
    fn radicand() -> Rat;

    /// Symbol used by `Display`.
    const SYMBOL: &'static str;
}

/// `sqrt(-1)`: Gaussian rationals.
#[derive(Clone, PartialEq, Debug)]
pub struct MinusOne;

impl Radicand for MinusOne {
    fn radicand() -> Rat {
        rat_int(-1)
    }
    const SYMBOL: &'static str = "i";
}

/// `sqrt(3)`: the extension in which the reversible-slice first integral
/// splits into lines.
#[derive(Clone, PartialEq, Debug)]
pub struct Three;

impl Radicand for Three {
    fn radicand() -> Rat {
        rat_int(3)
    }
    const SYMBOL: &'static str = "sqrt3";
}

/// Element `a + b*sqrt(D)` of a quadratic extension of Q.
#[derive(Clone, PartialEq)]
pub struct QuadExt<R: Radicand> {
    pub re: Rat,
    pub im: Rat,
    _marker: PhantomData<R>,
}

/// Gaussian rationals Q(i).
pub type GaussRat = QuadExt<MinusOne>;

impl<R: Radicand> QuadExt<R> {
    pub fn new(re: Rat, im: Rat) -> Self {
        QuadExt {
            re,
            im,
            _marker: PhantomData,
        }
    }

    /// The adjoined square root itself.
    pub fn root() -> Self {
        QuadExt::new(Rat::zero(), Rat::one())
    }

    pub fn conj(&self) -> Self {
        QuadExt::new(self.re.clone(), -self.im.clone())
    }

    /// Field norm `a^2 - D b^2`; zero only at zero.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re - R::radicand() * &self.im * &self.im
    }
}

impl<R: Radicand> fmt::Debug for QuadExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*{})", self.re, self.im, R::SYMBOL)
    }
}

impl<R: Radicand> fmt::Display for QuadExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}+{}{}", self.re, self.im, R::SYMBOL)
        }
    }
}

impl<R: Radicand> Add for QuadExt<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        QuadExt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<R: Radicand> Sub for QuadExt<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        QuadExt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<R: Radicand> Neg for QuadExt<R> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt::new(-self.re, -self.im)
    }
}

impl<R: Radicand> Mul for QuadExt<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = R::radicand();
        QuadExt::new(
            &self.re * &rhs.re + d * &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<R: Radicand> Div for QuadExt<R> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in quadratic extension");
        let c = rhs.conj();
        let prod = self * c;
        QuadExt::new(prod.re / n.clone(), prod.im / n)
    }
}

impl<R: Radicand> Zero for QuadExt<R> {
    fn zero() -> Self {
        QuadExt::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<R: Radicand> One for QuadExt<R> {
    fn one() -> Self {
        QuadExt::new(Rat::one(), Rat::zero())
    }
}

impl<R: Radicand> Ring for QuadExt<R> {
    fn from_rat(q: Rat) -> Self {
        QuadExt::new(q, Rat::zero())
    }
}

/// Parses `"p/q"`, `"p"` or a plain integer into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Renders a rational as `p` or `p/q` (canonical reduced form).
pub fn format_rat(x: &Rat) -> String {
    use alloc::format;
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sign of a rational as -1, 0, +1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
