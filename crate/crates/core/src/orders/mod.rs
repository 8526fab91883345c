//! Cyclic orders `c(G, k)` of twisted K-theory, by closed form and by
//! representation-theoretic image vectors.

mod crosscheck;
mod g2;
mod images;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::scalar::{binomial, gcd_all};

pub use crate::scalar::gen_binomial;
pub use crosscheck::{cross_check, cross_check_with, CrossCheckReport};
pub use g2::{g2_closed_form_set, g2_polynomial_list, g2_sixfold};
pub use images::{
    sp_conjecture_term, sp_images_conjecture, sp_images_thom, sp_images_thom_with, spin_images,
    su_images, su_images_weyl, SpinImages,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    SU,
    Sp,
    SpinOdd,
    SpinEven,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 9] = [
        GroupFamily::SU,
        GroupFamily::Sp,
        GroupFamily::SpinOdd,
        GroupFamily::SpinEven,
        GroupFamily::G2,
        GroupFamily::F4,
        GroupFamily::E6,
        GroupFamily::E7,
        GroupFamily::E8,
    ];

    /// Rank of an exceptional family, which is also its only valid parameter.
    pub fn exceptional_rank(self) -> Option<u32> {
        match self {
            GroupFamily::G2 => Some(2),
            GroupFamily::F4 => Some(4),
            GroupFamily::E6 => Some(6),
            GroupFamily::E7 => Some(7),
            GroupFamily::E8 => Some(8),
            _ => None,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupFamily::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown group family {s:?}")))
    }
}

/// A compact Lie group together with a nonzero twisting level.
///
/// `SpinOdd m` is `Spin(2m+1)` and `SpinEven m` is `Spin(2m+2)`, both with `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    family: GroupFamily,
    parameter: u32,
    k: i64,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, parameter: u32, k: i64) -> Result<Self> {
        if k == 0 {
            return invalid("twisting level k must be nonzero");
        }
        let min = match family {
            GroupFamily::SU | GroupFamily::Sp => 1,
            GroupFamily::SpinOdd | GroupFamily::SpinEven => 2,
            _ => 0,
        };
        if let Some(rank) = family.exceptional_rank() {
            if parameter != rank {
                return invalid(format!("{family} has rank {rank}, not {parameter}"));
            }
        } else if parameter < min {
            return invalid(format!(
                "{family} parameter must be at least {min} (degenerate rank {parameter})"
            ));
        }
        Ok(GroupSpec {
            family,
            parameter,
            k,
        })
    }

    /// Exceptional group at level `k`.
    pub fn exceptional(family: GroupFamily, k: i64) -> Result<Self> {
        let rank = family
            .exceptional_rank()
            .ok_or_else(|| Error::InvalidInput(format!("{family} needs an explicit parameter")))?;
        GroupSpec::new(family, rank, k)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn parameter(&self) -> u32 {
        self.parameter
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn with_k(&self, k: i64) -> Result<Self> {
        GroupSpec::new(self.family, self.parameter, k)
    }

    /// Conventional group name, e.g. `SU(3)`, `Spin(7)`.
    pub fn group_name(&self) -> String {
        let p = self.parameter;
        match self.family {
            GroupFamily::SU => format!("SU({})", p + 1),
            GroupFamily::Sp => format!("Sp({p})"),
            GroupFamily::SpinOdd => format!("Spin({})", 2 * p + 1),
            GroupFamily::SpinEven => format!("Spin({})", 2 * p + 2),
            f => f.to_string(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at k={}", self.group_name(), self.k)
    }
}

/// Twisted images `tau_k(x_i) - tau_0(x_i)` of algebra generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageVector {
    entries: Vec<BigInt>,
    labels: Vec<String>,
}

impl ImageVector {
    pub fn new(entries: Vec<BigInt>, labels: Vec<String>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Internal("image vector must be nonempty".into()));
        }
        if labels.len() != entries.len() {
            return Err(Error::Internal("image labels do not match entries".into()));
        }
        Ok(ImageVector { entries, labels })
    }

    /// Labels `x1, x2, ...`.
    pub fn unlabeled(entries: Vec<BigInt>) -> Result<Self> {
        let labels = (1..=entries.len()).map(|i| format!("x{i}")).collect();
        ImageVector::new(entries, labels)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn gcd(&self) -> BigInt {
        gcd_all(&self.entries)
    }
}

/// How generalized binomials are evaluated. `OffByOne` multiplies in one
/// extra falling factor and exists only to exercise the cross-checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum BinomialRule {
    #[default]
    Standard,
    OffByOne,
}

impl BinomialRule {
    pub fn eval(self, m: &BigInt, b: u64) -> BigInt {
        let base: BigInt = gen_binomial(m, b);
        match self {
            BinomialRule::Standard => base,
            BinomialRule::OffByOne => base * (m - BigInt::from(b)),
        }
    }
}

fn big_binom(k: u64, i: u64) -> BigInt {
    binomial(k, i)
}

/// Closed-form generating set whose gcd is `c(G, |k|)`.
pub fn closed_form_set(g: &GroupSpec) -> Result<Vec<BigInt>> {
    closed_form_set_with(g, BinomialRule::Standard)
}

fn closed_form_set_with(g: &GroupSpec, rule: BinomialRule) -> Result<Vec<BigInt>> {
    let k = g.k.unsigned_abs();
    let p = g.parameter as u64;
    let mixed = |i: u64| big_binom(k, 2 * i + 1) * 2 + big_binom(k, 2 * i);
    let set = match g.family {
        GroupFamily::SU => (1..=p).map(|i| big_binom(k + i, i) - 1).collect(),
        GroupFamily::Sp => sp_images_thom_with(g.parameter, k, rule)?.entries,
        GroupFamily::SpinOdd if p % 2 == 1 => {
            // Spin(4n-1), n = (m+1)/2
            let n = p.div_ceil(2);
            let mut s: Vec<BigInt> = (1..=2 * n - 2).map(|i| big_binom(k, i)).collect();
            s.push(big_binom(k, 2 * n - 1) * 2);
            s.extend((n..=2 * n - 2).map(mixed));
            s
        }
        GroupFamily::SpinOdd => {
            // Spin(4n+1), n = m/2
            let n = p / 2;
            let mut s: Vec<BigInt> = (1..=2 * n - 1).map(|i| big_binom(k, i)).collect();
            s.extend((n..=2 * n - 1).map(mixed));
            s
        }
        GroupFamily::SpinEven if p.is_multiple_of(2) => {
            // Spin(4n+2), n = m/2
            let n = p / 2;
            let mut s: Vec<BigInt> = (1..=2 * n).map(|i| big_binom(k, i)).collect();
            s.push(big_binom(k, 2 * n + 1) * 2);
            s.extend((n + 1..=2 * n - 1).map(mixed));
            s
        }
        GroupFamily::SpinEven => {
            // Spin(4n), n = (m+1)/2
            let n = p.div_ceil(2);
            let mut s: Vec<BigInt> = (1..=2 * n - 1).map(|i| big_binom(k, i)).collect();
            s.extend((n..=2 * n - 2).map(mixed));
            s
        }
        GroupFamily::G2 => g2_closed_form_set(k)?,
        f => {
            return Err(Error::InsufficientData(format!(
                "images of the unlettered generators of {f} are not available"
            )))
        }
    };
    Ok(set)
}

/// `c(G, k)`; depends only on `|k|`.
pub fn closed_form_order(g: &GroupSpec) -> Result<BigInt> {
    closed_form_order_with(g, BinomialRule::Standard)
}

pub(crate) fn closed_form_order_with(g: &GroupSpec, rule: BinomialRule) -> Result<BigInt> {
    let c = gcd_all(&closed_form_set_with(g, rule)?);
    if c.is_zero() {
        return Err(Error::Internal(format!(
            "closed form for {g} has no nonzero entry"
        )));
    }
    Ok(c)
}

/// True when `c(G, k) = 1`, i.e. the twisted K-theory vanishes.
pub fn is_trivial(g: &GroupSpec) -> Result<bool> {
    Ok(closed_form_order(g)?.is_one())
}
