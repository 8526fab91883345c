use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::orders::images::{sp_images_conjecture, spin_images, su_images_weyl};
use crate::orders::{
    closed_form_order_with, g2_polynomial_list, g2_sixfold, BinomialRule, GroupFamily, GroupSpec,
};

/// Values of `c(G, k)` by every available route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub group: GroupSpec,
    pub values: BTreeMap<String, BigInt>,
    pub agree: bool,
}

impl CrossCheckReport {
    fn new(group: GroupSpec, values: BTreeMap<String, BigInt>) -> Self {
        let mut it = values.values();
        let first = it.next();
        let agree = it.all(|v| Some(v) == first);
        CrossCheckReport {
            group,
            values,
            agree,
        }
    }
}

pub fn cross_check(g: &GroupSpec) -> Result<CrossCheckReport> {
    cross_check_with(g, BinomialRule::Standard)
}

/// Like [`cross_check`] but evaluates generalized binomials with `rule`.
pub fn cross_check_with(g: &GroupSpec, rule: BinomialRule) -> Result<CrossCheckReport> {
    let k = g.k();
    let abs_k = k.abs();
    let p = g.parameter();
    let mut values = BTreeMap::new();
    let other = |family, parameter| -> Result<BigInt> {
        closed_form_order_with(&GroupSpec::new(family, parameter, k)?, rule)
    };
    values.insert("closed_form".to_string(), closed_form_order_with(g, rule)?);
    match g.family() {
        GroupFamily::SU => {
            values.insert("weyl_dimension".into(), su_images_weyl(p, k)?.gcd());
            match p {
                1 => {
                    values.insert("Sp(1)".into(), other(GroupFamily::Sp, 1)?);
                }
                3 => {
                    values.insert("Spin(6)".into(), other(GroupFamily::SpinEven, 2)?);
                }
                _ => {}
            }
        }
        GroupFamily::Sp => {
            values.insert("conjecture".into(), sp_images_conjecture(p, abs_k)?.gcd());
            match p {
                1 => {
                    values.insert("SU(2)".into(), other(GroupFamily::SU, 1)?);
                }
                2 => {
                    values.insert("Spin(5)".into(), other(GroupFamily::SpinOdd, 2)?);
                }
                _ => {}
            }
        }
        GroupFamily::SpinOdd | GroupFamily::SpinEven => {
            let images = spin_images(g)?;
            values.insert("images_reduced".into(), images.reduced.gcd());
            values.insert("images_full".into(), images.full.gcd());
            match (g.family(), p) {
                (GroupFamily::SpinOdd, 2) => {
                    values.insert("Sp(2)".into(), other(GroupFamily::Sp, 2)?);
                }
                (GroupFamily::SpinEven, 2) => {
                    values.insert("SU(4)".into(), other(GroupFamily::SU, 3)?);
                }
                _ => {}
            }
        }
        GroupFamily::G2 => {
            values.insert("sixfold".into(), g2_sixfold(abs_k)?.gcd());
            values.insert("polynomials".into(), g2_polynomial_list(abs_k)?.gcd());
        }
        f => {
            return Err(Error::InsufficientData(format!(
                "no routes available for {f}"
            )))
        }
    }
    Ok(CrossCheckReport::new(*g, values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_agree() {
        let g = GroupSpec::new(GroupFamily::G2, 2, 2).unwrap();
        let r = cross_check(&g).unwrap();
        assert!(r.agree);
        assert!(r.values.values().all(|v| *v == BigInt::from(1)));
        for (f, p) in [
            (GroupFamily::SpinEven, 2),
            (GroupFamily::SpinOdd, 2),
            (GroupFamily::SU, 3),
            (GroupFamily::Sp, 2),
        ] {
            let r = cross_check(&GroupSpec::new(f, p, 4).unwrap()).unwrap();
            assert!(r.agree, "{r:?}");
            assert_eq!(r.values["closed_form"], BigInt::from(2));
        }
    }

    #[test]
    fn fault_is_detected() {
        let g = GroupSpec::new(GroupFamily::Sp, 1, 3).unwrap();
        assert!(!cross_check_with(&g, BinomialRule::OffByOne).unwrap().agree);
    }
}
