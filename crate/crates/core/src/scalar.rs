//! Exact scalar types the engine is generic over.
//!
//! Everything here is exact: the homology, dimension and gcd computations
//! have no meaning over floating point, so the trait is bounded by
//! [`num_integer::Integer`] rather than `Float`. Rational quantities are
//! built on top as [`num_rational::Ratio<T>`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// An exact signed integer ring element.
///
/// Implemented for `i64`, `i128` and [`BigInt`]. Fixed-width types are
/// faster but may overflow on large inputs; the crate-root aliases use
/// `BigInt`.
pub trait Scalar:
    Integer + Signed + Clone + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("i64 always fits an exact scalar")
    }

    /// Converts to a `BigInt` without loss.
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// gcd of a sequence; the gcd of the empty sequence is 0.
pub fn gcd_all<'a, T: Scalar, I: IntoIterator<Item = &'a T>>(it: I) -> T {
    it.into_iter().fold(T::zero(), |acc, x| acc.gcd(x))
}

/// Running gcds `g_1, g_12, g_123, ...` of a sequence.
pub fn prefix_gcds<T: Scalar>(xs: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(xs.len());
    let mut g = T::zero();
    for x in xs {
        g = g.gcd(x);
        out.push(g.clone());
    }
    out
}

/// Ordinary binomial coefficient `C(n, r)` for `n, r >= 0`; zero when `r > n`.
pub fn binomial<T: Scalar>(n: u64, r: u64) -> T {
    if r > n {
        return T::zero();
    }
    let r = r.min(n - r);
    let mut acc = T::one();
    for i in 0..r {
        acc = acc * T::from_u64(n - i).expect("u64 fits") / T::from_u64(i + 1).expect("u64 fits");
    }
    acc
}

/// Generalized binomial coefficient: the falling factorial
/// `m (m-1) ... (m-b+1) / b!`, defined for every integer `m`.
pub fn gen_binomial<T: Scalar>(m: &T, b: u64) -> T {
    let mut acc = T::one();
    let mut top = m.clone();
    for i in 1..=b {
        // the product of i consecutive integers is divisible by i!
        acc = acc * top.clone() / T::from_u64(i).expect("u64 fits");
        top = top - T::one();
    }
    acc
}
