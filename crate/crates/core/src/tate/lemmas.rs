//! Arithmetic facts about `g_{1..m}(k) = gcd(binom(k,1), ..., binom(k,m))` that
//! make the basis changes in the Tate computations unimodular.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::scalar::{binomial, prefix_gcds};

/// `[g_1, g_{12}, ..., g_{1..m}]` at level `k`.
pub fn prefix_binomial_gcds(k: u64, m: usize) -> Vec<BigInt> {
    let c: Vec<BigInt> = (1..=m as u64).map(|i| binomial(k, i)).collect();
    prefix_gcds(&c)
}

fn exact_div(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::Internal("division by a zero gcd".into()));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{den} does not divide {num}")));
    }
    Ok(q)
}

/// The four gcds `gcd(m * g_{1..m} / g_{1..m-1}, g_{1..m})` for
/// `(m, multiplier) = (2, 2), (3, 3), (4, 2), (5, 5)`, with `g_{1..0} = c_1`
/// for the first. Each is 1 for every `k >= 1`.
pub fn unit_lemmas(k: u64) -> Result<[BigInt; 4]> {
    if k == 0 {
        return invalid("unit lemmas need k >= 1");
    }
    let g = prefix_binomial_gcds(k, 5);
    let one = |mult: i64, hi: &BigInt, lo: &BigInt| -> Result<BigInt> {
        Ok(exact_div(&(hi * BigInt::from(mult)), lo)?.gcd(hi))
    };
    Ok([
        one(2, &g[1], &g[0])?,
        one(3, &g[2], &g[1])?,
        one(2, &g[3], &g[2])?,
        one(5, &g[4], &g[3])?,
    ])
}

/// `g_{1..2n-2}` divides `(g_{1..2n-1} / g_{1..2n}) * binom(k, 2n)`, for `n >= 2`.
pub fn spin_divisibility(n: usize, k: u64) -> Result<bool> {
    if n < 2 || k == 0 {
        return invalid("spin divisibility needs n >= 2 and k >= 1");
    }
    let g = prefix_binomial_gcds(k, 2 * n);
    let ratio = exact_div(&g[2 * n - 2], &g[2 * n - 1])?;
    let value = ratio * binomial::<BigInt>(k, 2 * n as u64);
    Ok((value % &g[2 * n - 3]).is_zero())
}

/// True when all four unit lemmas hold at `k`.
pub fn unit_lemmas_hold(k: u64) -> Result<bool> {
    Ok(unit_lemmas(k)?.iter().all(One::is_one))
}
