use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::orders::ImageVector;
use crate::rootrep::{Family, RootSystem};
use crate::scalar::binomial;

fn g2() -> &'static RootSystem {
    static G2: OnceLock<RootSystem> = OnceLock::new();
    G2.get_or_init(|| RootSystem::new(Family::G, 2).expect("G2 is a valid root system"))
}

fn exact(num: BigInt, den: i64) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Internal(format!("{den} does not divide {num}")));
    }
    Ok(q)
}

/// `{k, binom(k+2,2) - 1, (k+1)(k+2)(2k+3)(3k+4)(3k+5)/120 - 1}`.
pub fn g2_closed_form_set(k: u64) -> Result<Vec<BigInt>> {
    if k == 0 {
        return invalid("G2 closed form needs k != 0");
    }
    let kk = BigInt::from(k);
    let top = (&kk + 1) * (&kk + 2) * (&kk * 2 + 3) * (&kk * 3 + 4) * (&kk * 3 + 5);
    Ok(vec![
        kk,
        binomial::<BigInt>(k + 2, 2) - 1,
        exact(top, 120)? - 1,
    ])
}

/// Signed dimension of the module induced from `n*a + m*b`, where `a` and `b`
/// are the fundamental weights of the 7- and 14-dimensional representations.
fn gamma(n: i64, m: i64) -> Result<BigInt> {
    let w = g2().weight(&[n, m])?;
    Ok(g2().holo_induce_dim::<BigInt>(&w)?.signed_dimension())
}

/// Six differences of induced characters whose gcd is `c(G_2, k)`.
pub fn g2_sixfold(k: i64) -> Result<ImageVector> {
    if k < 1 {
        return invalid("g2_sixfold needs k >= 1");
    }
    let entries = vec![
        gamma(0, k)? - gamma(0, 0)?,
        gamma(0, k - 1)?,
        gamma(0, k - 2)?,
        gamma(1, k)? - gamma(1, 0)?,
        gamma(1, k - 1)?,
        gamma(2, k)? + gamma(0, k + 1)? - gamma(2, 0)? - gamma(0, 1)?,
    ];
    ImageVector::unlabeled(entries)
}

/// The six differences as explicit polynomials in `k`.
pub fn g2_polynomial_list(k: i64) -> Result<ImageVector> {
    if k < 1 {
        return invalid("g2_polynomial_list needs k >= 1");
    }
    let poly = |c: [i64; 5], den: i64| -> Result<BigInt> {
        let x = BigInt::from(k);
        let inner = c
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &ci| acc * &x + ci);
        exact(x * inner, den)
    };
    let entries = vec![
        poly([422, 585, 400, 135, 18], 120)?,
        poly([2, 15, 40, 45, 18], 120)?,
        poly([2, -15, 40, -45, 18], 120)?,
        poly([601, 660, 350, 90, 9], 30)?,
        poly([16, 60, 80, 45, 9], 30)?,
        poly([2867, 2550, 1090, 225, 18], 30)?,
    ];
    ImageVector::unlabeled(entries)
}
