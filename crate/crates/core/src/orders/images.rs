use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::orders::{BinomialRule, GroupFamily, GroupSpec, ImageVector};
use crate::rootrep::{Family, RootSystem};
use crate::scalar::gen_binomial;

fn signed_binom(k: i64, i: u64) -> BigInt {
    gen_binomial(&BigInt::from(k), i)
}

/// `binom(k+i, i) - 1` for `i = 1..n`.
pub fn su_images(n: u32, k: i64) -> Result<ImageVector> {
    if n == 0 || k == 0 {
        return invalid("su_images needs n >= 1 and k != 0");
    }
    let entries = (1..=n as u64)
        .map(|i| gen_binomial(&BigInt::from(k + i as i64), i) - 1)
        .collect();
    ImageVector::unlabeled(entries)
}

/// Same entries through `A_i` representations: signed dimension of the
/// holomorphically induced module at `k * omega_1`, minus one.
pub fn su_images_weyl(n: u32, k: i64) -> Result<ImageVector> {
    if n == 0 || k == 0 {
        return invalid("su_images_weyl needs n >= 1 and k != 0");
    }
    let entries = (1..=n as usize)
        .map(|i| {
            let rs = RootSystem::new(Family::A, i)?;
            let mut coords = vec![0i64; i];
            coords[0] = k;
            let mu = rs.weight(&coords)?;
            Ok(rs.holo_induce_dim::<BigInt>(&mu)?.signed_dimension() - 1)
        })
        .collect::<Result<Vec<_>>>()?;
    ImageVector::unlabeled(entries)
}

/// `sum_{j=-k}^{-1} gen_binomial(2j + 2(i-1), 2(i-1))` for `i = 1..n`.
pub fn sp_images_thom(n: u32, k: i64) -> Result<ImageVector> {
    if k <= 0 {
        return invalid("sp_images_thom needs k > 0");
    }
    sp_images_thom_with(n, k as u64, BinomialRule::Standard)
}

pub fn sp_images_thom_with(n: u32, k: u64, rule: BinomialRule) -> Result<ImageVector> {
    if n == 0 || k == 0 {
        return invalid("Sp images need n >= 1 and k >= 1");
    }
    let entries = (1..=n as i64)
        .map(|i| {
            let b = 2 * (i - 1);
            (-(k as i64)..=-1)
                .map(|j| rule.eval(&BigInt::from(2 * j + b), b as u64))
                .fold(BigInt::zero(), |acc, v| acc + v)
        })
        .collect();
    ImageVector::unlabeled(entries)
}

/// The product formula
/// `prod_{j<l<=i} (l-j)(2k+2i+2-j-l) * prod_{j<=i} (k+i+1-j) / prod_{t<=i} (2t-1)!`.
pub fn sp_conjecture_term(i: u32, k: u64) -> Result<BigInt> {
    let (i, k) = (BigInt::from(i), BigInt::from(k));
    let iu = i.to_string().parse::<i64>().expect("small");
    let mut num = BigInt::from(1);
    for j in 1..=iu {
        for l in (j + 1)..=iu {
            num *= BigInt::from(l - j) * (&k * 2 + &i * 2 + 2 - (j + l));
        }
        num *= &k + &i + 1 - j;
    }
    let mut den = BigInt::from(1);
    for t in 1..=iu {
        for f in 1..=(2 * t - 1) {
            den *= f;
        }
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "product formula not integral at i={i}, k={k}"
        )));
    }
    Ok(q)
}

/// `P_i(k) - P_i(0)` for `i = 1..n`.
pub fn sp_images_conjecture(n: u32, k: i64) -> Result<ImageVector> {
    if n == 0 || k <= 0 {
        return invalid("sp_images_conjecture needs n >= 1 and k > 0");
    }
    let entries = (1..=n)
        .map(|i| Ok(sp_conjecture_term(i, k as u64)? - sp_conjecture_term(i, 0)?))
        .collect::<Result<Vec<_>>>()?;
    ImageVector::unlabeled(entries)
}

/// Generator images for a Spin group, before and after the generators
/// eliminated by relations are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinImages {
    pub full: ImageVector,
    pub reduced: ImageVector,
}

pub fn spin_images(g: &GroupSpec) -> Result<SpinImages> {
    let k = g.k();
    let n = g.parameter() as u64;
    let b = |i: u64| signed_binom(k, i);
    let mut full = Vec::new();
    let mut keep = Vec::new();
    match g.family() {
        GroupFamily::SpinOdd => {
            for j in 1..2 * n {
                let (label, value) = match j.cmp(&n) {
                    std::cmp::Ordering::Less => (format!("a{j}"), b(j)),
                    std::cmp::Ordering::Equal => (format!("a{j}"), b(j) * 2),
                    std::cmp::Ordering::Greater => (format!("a{j}"), b(j) * 2 + b(j - 1)),
                };
                full.push((label, value));
                keep.push(j < n || j % 2 == 1);
            }
        }
        GroupFamily::SpinEven => {
            for j in 1..n {
                full.push((format!("a{j}"), b(j)));
                keep.push(true);
            }
            full.push((format!("a{n}^"), b(n)));
            keep.push(true);
            full.push(("b".to_string(), BigInt::zero()));
            keep.push(n % 2 == 1);
            full.push((format!("a{}v", n + 1), b(n + 1) * 2));
            keep.push(n.is_multiple_of(2));
            for j in (n + 2)..=(2 * n) {
                full.push((format!("a{j}"), b(j) * 2 + b(j - 1)));
                keep.push(j % 2 == 1);
            }
        }
        f => return invalid(format!("{f} is not a Spin family")),
    }
    let reduced: Vec<_> = full
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(e, _)| e.clone())
        .collect();
    let split = |v: Vec<(String, BigInt)>| {
        let (labels, entries): (Vec<_>, Vec<_>) = v.into_iter().unzip();
        ImageVector::new(entries, labels)
    };
    Ok(SpinImages {
        full: split(full)?,
        reduced: split(reduced)?,
    })
}
