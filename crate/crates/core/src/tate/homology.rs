//! Integer homology of Tate complexes and the closed-form Koszul oracle.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::scalar::{binomial, gcd_all, Scalar};
use crate::snf::invariant_factors;
use crate::tate::complex::TateComplex;

/// `Z^free_rank + Z/t_1 + Z/t_2 + ...` with `t_1 | t_2 | ...`, all `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: Scalar> DegreeHomology<T> {
    pub fn trivial() -> Self {
        DegreeHomology {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// `count` copies of `Z/g` (trivial when `g == 1`).
    pub fn cyclic_power(g: &T, count: usize) -> Self {
        let torsion = if g.is_one() {
            Vec::new()
        } else {
            vec![g.clone(); count]
        };
        DegreeHomology {
            free_rank: 0,
            torsion,
        }
    }
}

impl<T: Scalar> fmt::Display for DegreeHomology<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

impl<T: Scalar + FromStr> FromStr for DegreeHomology<T> {
    type Err = Error;

    /// Accepts the `Display` form; torsion summands may appear in any order
    /// and `Z/1` summands are dropped. Torsion is not re-normalized into a
    /// divisor chain, so write it that way.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = DegreeHomology::trivial();
        if s == "0" {
            return Ok(out);
        }
        for part in s.split('+').map(str::trim) {
            if part == "Z" {
                out.free_rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                out.free_rank += r
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad rank in {part:?}")))?;
            } else if let Some(t) = part.strip_prefix("Z/") {
                let t: T = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad modulus in {part:?}")))?;
                let t = t.abs();
                if t.is_zero() {
                    out.free_rank += 1;
                } else if !t.is_one() {
                    out.torsion.push(t);
                }
            } else {
                return Err(Error::Parse(format!("unrecognized summand {part:?}")));
            }
        }
        out.torsion.sort();
        Ok(out)
    }
}

/// Homology in degrees `0 ..= bound - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable<T> {
    pub degrees: Vec<DegreeHomology<T>>,
}

impl<T: Scalar> HomologyTable<T> {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree(&self, d: usize) -> Option<&DegreeHomology<T>> {
        self.degrees.get(d)
    }

    /// True when every degree above zero vanishes.
    pub fn concentrated_in_degree_zero(&self) -> bool {
        self.degrees.iter().skip(1).all(DegreeHomology::is_trivial)
    }

    /// True when some degree `>= 1` has torsion.
    pub fn has_higher_torsion(&self) -> bool {
        self.degrees.iter().skip(1).any(|h| !h.torsion.is_empty())
    }
}

impl<T: Scalar> fmt::Display for HomologyTable<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, h) in self.degrees.iter().enumerate() {
            writeln!(f, "H_{d} = {h}")?;
        }
        Ok(())
    }
}

/// Homology of a built complex through degree `bound - 1`.
pub fn homology<T: Scalar>(cx: &TateComplex<T>) -> HomologyTable<T> {
    let bound = cx.degree_bound();
    // factors[d] = invariant factors of the boundary out of degree d
    let mut factors: Vec<Vec<T>> = vec![Vec::new()];
    for d in 1..=bound {
        let m = cx.boundary_matrix(d).expect("degree within bound");
        factors.push(invariant_factors(&m));
    }
    let degrees = (0..bound)
        .map(|d| {
            let rank_out = factors[d].len();
            let rank_in = factors[d + 1].len();
            DegreeHomology {
                free_rank: cx.rank(d) - rank_out - rank_in,
                torsion: factors[d + 1]
                    .iter()
                    .filter(|t| !t.is_one())
                    .cloned()
                    .collect(),
            }
        })
        .collect();
    HomologyTable { degrees }
}

/// `Z/g` tensored with an exterior algebra on `exterior_rank` degree-1 generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorPattern<T> {
    pub modulus: T,
    pub exterior_rank: usize,
}

impl<T: Scalar> ExteriorPattern<T> {
    pub fn table(&self, bound: usize) -> HomologyTable<T> {
        let degrees = (0..bound)
            .map(|j| {
                let count: u64 = binomial::<i64>(self.exterior_rank as u64, j as u64) as u64;
                DegreeHomology::cyclic_power(&self.modulus, count as usize)
            })
            .collect();
        HomologyTable { degrees }
    }
}

/// Closed form for the Koszul complex on `c`: `H_j = (Z/g)^C(n-1, j)`, `g = gcd(c)`.
pub fn koszul_reference<T: Scalar>(c: &[T], bound: usize) -> Result<HomologyTable<T>> {
    let g = gcd_all(c);
    if g.is_zero() {
        return invalid("Koszul reference needs a nonzero image");
    }
    Ok(ExteriorPattern {
        modulus: g,
        exterior_rank: c.len() - 1,
    }
    .table(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tate::complex::{build_complex, TateSpec};
    use num_bigint::BigInt;

    fn table(rows: &[&str]) -> HomologyTable<i64> {
        HomologyTable {
            degrees: rows.iter().map(|r| r.parse().unwrap()).collect(),
        }
    }

    #[test]
    fn koszul_two_four() {
        let cx = build_complex(TateSpec::koszul(vec![2i64, 4]), 3).unwrap();
        let h = homology(&cx);
        assert_eq!(h, table(&["Z/2", "Z/2", "0"]));
        assert_eq!(koszul_reference(&[2i64, 4], 3).unwrap(), h);
    }

    #[test]
    fn koszul_unit_gcd_is_acyclic() {
        let cx = build_complex(TateSpec::koszul(vec![6i64, 15, 20]), 4).unwrap();
        assert!(homology(&cx).degrees.iter().all(DegreeHomology::is_trivial));
        assert!(koszul_reference(&[1i64, 7, 9], 4)
            .unwrap()
            .degrees
            .iter()
            .all(DegreeHomology::is_trivial));
    }

    #[test]
    fn single_generator() {
        for k in [-9i64, 1, 2, 12] {
            let r = koszul_reference(&[k], 4).unwrap();
            assert_eq!(r.degrees[0], DegreeHomology::cyclic_power(&k.abs(), 1));
            assert!(r.concentrated_in_degree_zero());
        }
        assert!(koszul_reference(&[0i64, 0], 3).is_err());
    }

    #[test]
    fn free_part_appears_with_zero_differential() {
        let cx = build_complex(TateSpec::koszul(vec![0i64, 0]), 3).unwrap();
        assert_eq!(homology(&cx), table(&["Z", "Z^2", "Z"]));
    }

    #[test]
    fn g2_at_four() {
        let spec = TateSpec::new(vec![4i64, 6, 4], vec![vec![3, -2, 0]]).unwrap();
        let h = homology(&build_complex(spec, 6).unwrap());
        assert_eq!(h, table(&["Z/2", "Z/2", "0", "0", "0", "0"]));
    }

    #[test]
    fn display_round_trip() {
        let h: DegreeHomology<BigInt> = "Z^2 + Z/2 + Z/6".parse().unwrap();
        assert_eq!(h.free_rank, 2);
        assert_eq!(h.to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!(
            "0".parse::<DegreeHomology<i64>>().unwrap(),
            DegreeHomology::trivial()
        );
        assert_eq!(
            "Z/1".parse::<DegreeHomology<i64>>().unwrap(),
            DegreeHomology::trivial()
        );
        assert!("Q/2".parse::<DegreeHomology<i64>>().is_err());
    }
}
