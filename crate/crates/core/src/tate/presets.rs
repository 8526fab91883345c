//! Named relation sets for loop-space K-homology rings, evaluated at level `k`.
//!
//! Every lettered generator maps to `binom(k, i)`; the relation variables
//! come first, and unlettered polynomial generators follow as extra `T`s.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::scalar::{binomial, gcd_all, Scalar};
use crate::tate::complex::TateSpec;
use crate::tate::homology::ExteriorPattern;
use crate::tate::relation::{Assignment, Poly, RelationPoly};

/// Image of the unlettered `G_2` generator `x_3`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum X3Image<T> {
    /// `binom(k, 3)`, matching the lettered convention.
    #[default]
    Binomial,
    Value(T),
    /// `x_3` omitted from the complex.
    Dropped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PresetName {
    Koszul,
    G2,
    F4Core,
    E7Core,
    E7Rejected,
    E8Core,
    SpinR3,
    SpinR4,
}

impl PresetName {
    pub const ALL: [PresetName; 8] = [
        PresetName::Koszul,
        PresetName::G2,
        PresetName::F4Core,
        PresetName::E7Core,
        PresetName::E7Rejected,
        PresetName::E8Core,
        PresetName::SpinR3,
        PresetName::SpinR4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PresetName::Koszul => "koszul",
            PresetName::G2 => "g2",
            PresetName::F4Core => "f4core",
            PresetName::E7Core => "e7core",
            PresetName::E7Rejected => "e7rejected",
            PresetName::E8Core => "e8core",
            PresetName::SpinR3 => "spinR3",
            PresetName::SpinR4 => "spinR4",
        }
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PresetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PresetName::ALL
            .into_iter()
            .find(|p| p.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown preset {s:?}")))
    }
}

/// A relation set with images and the homology it is expected to have.
#[derive(Clone, Debug)]
pub struct Preset<T> {
    pub name: String,
    pub images: Vec<T>,
    pub relations: Vec<RelationPoly<T>>,
    pub labels: Vec<String>,
    /// `None` for negative controls.
    pub expected: Option<ExteriorPattern<T>>,
}

impl<T: Scalar> Preset<T> {
    pub fn spec(&self, rule: Assignment) -> Result<TateSpec<T>> {
        TateSpec::from_relations(self.images.clone(), &self.relations, rule)?
            .with_labels(self.labels.clone())
    }
}

fn binomial_images<T: Scalar>(k: u64, n: usize) -> Vec<T> {
    (1..=n as u64).map(|i| binomial(k, i)).collect()
}

fn lettered(n: usize) -> Vec<String> {
    "abcde".chars().take(n).map(String::from).collect()
}

fn level(k: i64) -> Result<u64> {
    if k == 0 {
        return invalid("level k must be nonzero");
    }
    Ok(k.unsigned_abs())
}

fn relations<T: Scalar>(polys: Vec<Poly<T>>) -> Result<Vec<RelationPoly<T>>> {
    polys.into_iter().map(RelationPoly::new).collect()
}

/// Lettered relations `a(a-1)-2b`, `b(a-2)-3c`, then either
/// `b(b+1)-a(b+c)-2d` or the rejected `c(a-3)-4d`, then `d(a-4)-5e`.
fn exceptional_relations<T: Scalar>(
    nvars: usize,
    count: usize,
    rejected_third: bool,
) -> Vec<Poly<T>> {
    let v = Poly::vars(nvars);
    let mut out = vec![v[0].clone() * (v[0].clone() - 1) - v[1].clone() * 2];
    if count > 1 {
        out.push(v[1].clone() * (v[0].clone() - 2) - v[2].clone() * 3);
    }
    if count > 2 {
        out.push(if rejected_third {
            v[2].clone() * (v[0].clone() - 3) - v[3].clone() * 4
        } else {
            v[1].clone() * (v[1].clone() + 1)
                - v[0].clone() * (v[1].clone() + v[2].clone())
                - v[3].clone() * 2
        });
    }
    if count > 3 {
        out.push(v[3].clone() * (v[0].clone() - 4) - v[4].clone() * 5);
    }
    out
}

/// Exterior algebra on `c` with no divided powers.
pub fn koszul<T: Scalar>(c: Vec<T>) -> Result<Preset<T>> {
    if c.is_empty() {
        return invalid("Koszul preset needs at least one image");
    }
    let g = gcd_all(&c);
    let expected = (!g.is_zero()).then(|| ExteriorPattern {
        modulus: g,
        exterior_rank: c.len() - 1,
    });
    Ok(Preset {
        name: PresetName::Koszul.to_string(),
        labels: (1..=c.len()).map(|i| format!("x{i}")).collect(),
        relations: Vec::new(),
        images: c,
        expected,
    })
}

pub fn g2<T: Scalar>(k: i64, x3: X3Image<T>) -> Result<Preset<T>> {
    let k = level(k)?;
    let mut images: Vec<T> = binomial_images(k, 2);
    let mut labels = lettered(2);
    match x3 {
        X3Image::Binomial => images.push(binomial(k, 3)),
        X3Image::Value(v) => images.push(v),
        X3Image::Dropped => {}
    }
    let exterior_rank = images.len() - 2;
    if images.len() == 3 {
        labels.push("x3".into());
    }
    let relations = relations(exceptional_relations(images.len(), 1, false))?;
    Ok(Preset {
        name: PresetName::G2.to_string(),
        expected: Some(ExteriorPattern {
            modulus: gcd_all(&images),
            exterior_rank,
        }),
        images,
        relations,
        labels,
    })
}

fn exceptional_core<T: Scalar>(
    name: PresetName,
    k: i64,
    letters: usize,
    rejected: bool,
) -> Result<Preset<T>> {
    let k = level(k)?;
    let images: Vec<T> = binomial_images(k, letters);
    let relations = relations(exceptional_relations(letters, letters - 1, rejected))?;
    let expected = (!rejected).then(|| ExteriorPattern {
        modulus: gcd_all(&images),
        exterior_rank: 0,
    });
    Ok(Preset {
        name: name.to_string(),
        images,
        relations,
        labels: lettered(letters),
        expected,
    })
}

/// `F_4` lettered core: `a, b, c` with two relations.
pub fn f4_core<T: Scalar>(k: i64) -> Result<Preset<T>> {
    exceptional_core(PresetName::F4Core, k, 3, false)
}

/// `E_7` lettered core: `a, b, c, d` with three relations.
pub fn e7_core<T: Scalar>(k: i64) -> Result<Preset<T>> {
    exceptional_core(PresetName::E7Core, k, 4, false)
}

/// `E_7` core with the third relation replaced by `c(a-3) - 4d`; no expected pattern.
pub fn e7_rejected<T: Scalar>(k: i64) -> Result<Preset<T>> {
    exceptional_core(PresetName::E7Rejected, k, 4, true)
}

/// `E_8` lettered core: `a, ..., e` with four relations.
pub fn e8_core<T: Scalar>(k: i64) -> Result<Preset<T>> {
    exceptional_core(PresetName::E8Core, k, 5, false)
}

/// `rho_k` in `Z[a_1, ..., a_nvars]`, with `a_0 = 1`.
pub fn spin_relation<T: Scalar>(k: usize, nvars: usize) -> Result<Poly<T>> {
    if k == 0 || 2 * k > nvars {
        return invalid(format!("rho_{k} needs variables a_1..a_{}", 2 * k));
    }
    let a = |i: usize| {
        if i == 0 {
            Poly::constant(nvars, T::one())
        } else {
            Poly::var(nvars, i - 1)
        }
    };
    let mut rho = a(k) * a(k);
    for i in 0..k {
        let mut inner = Poly::zero(nvars);
        for j in k..=(2 * k - i - 1) {
            let coeff: i64 = binomial((k - i - 1) as u64, (j - k) as u64);
            inner = inner + (a(j + 1) * 2 + a(j)) * coeff;
        }
        let term = a(i) * inner;
        rho = if (k - i).is_multiple_of(2) {
            rho + term
        } else {
            rho - term
        };
    }
    Ok(rho)
}

/// `R_n = Z[a_1..a_{2n-2}] / (rho_1, ..., rho_{n-1})`.
pub fn spin_r<T: Scalar>(n: usize, k: i64) -> Result<Preset<T>> {
    if n < 2 {
        return invalid("R_n needs n >= 2");
    }
    let k = level(k)?;
    let nvars = 2 * n - 2;
    let images: Vec<T> = binomial_images(k, nvars);
    let relations = (1..n)
        .map(|j| spin_relation(j, nvars))
        .collect::<Result<Vec<_>>>()?;
    let relations = self::relations(relations)?;
    Ok(Preset {
        name: format!("spinR{n}"),
        expected: Some(ExteriorPattern {
            modulus: gcd_all(&images),
            exterior_rank: n - 2,
        }),
        labels: (1..=nvars).map(|i| format!("a{i}")).collect(),
        images,
        relations,
    })
}

/// Looks up a named preset. `koszul_images` is used only by `Koszul`.
pub fn preset<T: Scalar>(
    name: PresetName,
    k: i64,
    koszul_images: Option<Vec<T>>,
    x3: X3Image<T>,
) -> Result<Preset<T>> {
    match name {
        PresetName::Koszul => match koszul_images {
            Some(c) => koszul(c),
            None => invalid("koszul preset needs an image vector"),
        },
        PresetName::G2 => g2(k, x3),
        PresetName::F4Core => f4_core(k),
        PresetName::E7Core => e7_core(k),
        PresetName::E7Rejected => e7_rejected(k),
        PresetName::E8Core => e8_core(k),
        PresetName::SpinR3 => spin_r(3, k),
        PresetName::SpinR4 => spin_r(4, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(p: &Preset<i64>) -> Vec<Vec<i64>> {
        p.spec(Assignment::Lowest).unwrap().s_rows().to_vec()
    }

    #[test]
    fn g2_rows() {
        for k in 1..=15 {
            let p = g2::<i64>(k, X3Image::Binomial).unwrap();
            assert_eq!(rows(&p), vec![vec![k - 1, -2, 0]]);
        }
        assert_eq!(g2::<i64>(5, X3Image::Dropped).unwrap().images, vec![5, 10]);
        assert_eq!(
            g2::<i64>(5, X3Image::Value(7)).unwrap().images,
            vec![5, 10, 7]
        );
    }

    #[test]
    fn e7_third_row_matches_printed_form() {
        for k in 1..=12u64 {
            let p = e7_core::<i64>(k as i64).unwrap();
            let c: Vec<i64> = (1..=4).map(|i| binomial(k, i)).collect();
            assert_eq!(rows(&p)[2], vec![-(c[1] + c[2]), c[1] + 1, 0, -2]);
            let r = e7_rejected::<i64>(k as i64).unwrap();
            assert_eq!(rows(&r)[2], vec![c[2], 0, -3, -4]);
        }
    }

    #[test]
    fn spin_relations_low_order() {
        let v = Poly::<i64>::vars(4);
        let a = |i: usize| v[i - 1].clone();
        let rho1 = a(1) * a(1) - a(2) * 2 - a(1);
        assert_eq!(spin_relation::<i64>(1, 4).unwrap(), rho1);
        let rho2 = a(2) * a(2) + a(2) + a(3) * 3 + a(4) * 2 - a(1) * a(3) * 2 - a(1) * a(2);
        assert_eq!(spin_relation::<i64>(2, 4).unwrap(), rho2);
        let v = Poly::<i64>::vars(6);
        let a = |i: usize| v[i - 1].clone();
        let rho3 = a(3) * a(3) - a(6) * 2 - a(5) * 5 - a(4) * 4 - a(3)
            + a(1) * (a(5) * 2 + a(4) * 3 + a(3))
            - a(2) * (a(4) * 2 + a(3));
        assert_eq!(spin_relation::<i64>(3, 6).unwrap(), rho3);
        assert!(spin_relation::<i64>(3, 5).is_err());
    }

    #[test]
    fn spin_r3_rows() {
        for k in 1..=12u64 {
            let p = spin_r::<i64>(3, k as i64).unwrap();
            let c: Vec<i64> = (1..=4).map(|i| binomial(k, i)).collect();
            assert_eq!(
                rows(&p),
                vec![
                    vec![c[0] - 1, -2, 0, 0],
                    vec![-2 * c[2] - c[1], c[1] + 1, 3, 2]
                ]
            );
        }
    }

    #[test]
    fn every_preset_is_consistent() {
        for name in PresetName::ALL {
            for k in [-7i64, 1, 2, 6, 11] {
                let p = preset::<i64>(name, k, Some(vec![k, 2 * k]), X3Image::default()).unwrap();
                for rule in [Assignment::Lowest, Assignment::Highest] {
                    assert!(p.spec(rule).unwrap().is_consistent(), "{name} k={k}");
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for name in PresetName::ALL {
            assert_eq!(name.as_str().parse::<PresetName>().unwrap(), name);
        }
        assert!("g3".parse::<PresetName>().is_err());
        assert!(f4_core::<i64>(0).is_err());
    }
}
