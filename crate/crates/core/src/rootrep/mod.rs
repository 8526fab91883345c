//! Root systems, the Weyl dimension formula, and holomorphic induction.
//!
//! Weights are stored in the fundamental-weight basis and roots in the
//! simple-root basis, so every pairing with a coroot is an integer.

mod cartan;

use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

/// A weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<i64>,
}

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of reflecting a weight into the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chamber {
    /// The weight lies on a wall.
    Singular,
    /// `sign` is `(-1)^(number of simple reflections used)`.
    Regular { dominant: Weight, sign: i8 },
}

/// Nonequivariant pushforward of a line bundle along `G/H -> pt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InductionResult<T> {
    Singular,
    Regular {
        sign: i8,
        dominant: Weight,
        dimension: T,
    },
}

impl<T: Scalar> InductionResult<T> {
    /// `sign * dimension`, or zero when singular.
    pub fn signed_dimension(&self) -> T {
        match self {
            InductionResult::Singular => T::zero(),
            InductionResult::Regular {
                sign, dimension, ..
            } => {
                if *sign < 0 {
                    -dimension.clone()
                } else {
                    dimension.clone()
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return invalid(format!("no root system of type {family}{rank}"));
        }
        let data = cartan::cartan_data(family, rank);
        let mut rs = RootSystem {
            family,
            rank,
            cartan: data.cartan,
            symmetrizer: data.symmetrizer,
            positive_roots: Vec::new(),
            positive_coroots: Vec::new(),
        };
        rs.generate_roots()?;
        if family == Family::G {
            rs.fix_g2_labels()?;
        }
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Coroots of [`Self::positive_roots`] (same order) in simple-coroot coordinates.
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    pub fn weight(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.rank {
            return invalid(format!(
                "weight has {} coordinates, rank is {}",
                coords.len(),
                self.rank
            ));
        }
        Ok(Weight {
            coords: coords.to_vec(),
        })
    }

    pub fn zero_weight(&self) -> Weight {
        Weight {
            coords: vec![0; self.rank],
        }
    }

    /// Half the sum of the positive roots: every fundamental coordinate is 1.
    pub fn rho(&self) -> Weight {
        Weight {
            coords: vec![1; self.rank],
        }
    }

    pub fn fundamental(&self, i: usize) -> Result<Weight> {
        if i >= self.rank {
            return invalid(format!("fundamental weight index {i} out of range"));
        }
        let mut coords = vec![0; self.rank];
        coords[i] = 1;
        Ok(Weight { coords })
    }

    fn check(&self, w: &Weight) -> Result<()> {
        if w.coords.len() != self.rank {
            return invalid(format!(
                "weight {w} does not belong to a rank {} system",
                self.rank
            ));
        }
        Ok(())
    }

    /// `<w, beta^vee>` for the positive coroot with the given index.
    pub fn pair(&self, w: &Weight, coroot: usize) -> Result<i64> {
        self.check(w)?;
        let Some(c) = self.positive_coroots.get(coroot) else {
            return invalid(format!(
                "coroot index {coroot} out of range ({})",
                self.positive_coroots.len()
            ));
        };
        Ok(dot(&w.coords, c))
    }

    /// Simple reflection `s_i` applied to a weight.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let wi = w.coords[i];
        Weight {
            coords: (0..self.rank)
                .map(|j| w.coords[j] - wi * self.cartan[j][i])
                .collect(),
        }
    }

    /// Weyl dimension of the irreducible representation with dominant highest weight `lambda`.
    pub fn weyl_dim<T: Scalar>(&self, lambda: &Weight) -> Result<T> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return invalid(format!("weight {lambda} is not dominant"));
        }
        let shifted = lambda.zip_with(&self.rho(), |a, b| a + b);
        let mut acc = Ratio::from_integer(T::one());
        for c in &self.positive_coroots {
            let num = T::from_int(dot(&shifted.coords, c));
            let den = T::from_int(c.iter().sum());
            acc = acc * Ratio::new(num, den);
        }
        if !acc.is_integer() {
            return Err(Error::Internal(format!(
                "dimension of {lambda} is not an integer: {acc}"
            )));
        }
        Ok(acc.to_integer())
    }

    /// Reflects into the dominant chamber, or reports a wall.
    pub fn to_dominant(&self, w: &Weight) -> Result<Chamber> {
        self.check(w)?;
        if self.positive_coroots.iter().any(|c| dot(&w.coords, c) == 0) {
            return Ok(Chamber::Singular);
        }
        let bound = 2 * self.positive_roots.len() + 1;
        let mut cur = w.clone();
        let mut steps = 0usize;
        while let Some(i) = cur.coords.iter().position(|&c| c < 0) {
            if steps >= bound {
                return Err(Error::Internal(format!(
                    "reflection of {w} did not terminate"
                )));
            }
            cur = self.reflect(&cur, i);
            steps += 1;
        }
        let sign = if steps.is_multiple_of(2) { 1 } else { -1 };
        Ok(Chamber::Regular {
            dominant: cur,
            sign,
        })
    }

    /// Pushforward of the bundle with weight `mu`: zero if `mu + rho` is singular,
    /// otherwise `(-1)^ind` times the dimension at `T(mu + rho) - rho`.
    pub fn holo_induce_dim<T: Scalar>(&self, mu: &Weight) -> Result<InductionResult<T>> {
        self.check(mu)?;
        let shifted = mu.zip_with(&self.rho(), |a, b| a + b);
        match self.to_dominant(&shifted)? {
            Chamber::Singular => Ok(InductionResult::Singular),
            Chamber::Regular { dominant, sign } => {
                let highest = dominant.zip_with(&self.rho(), |a, b| a - b);
                let dimension = self.weyl_dim(&highest)?;
                Ok(InductionResult::Regular {
                    sign,
                    dominant: highest,
                    dimension,
                })
            }
        }
    }

    /// `<beta, alpha_i^vee>` for a root in simple-root coordinates.
    fn root_pair(&self, beta: &[i64], i: usize) -> i64 {
        dot(&self.cartan[i], beta)
    }

    fn norm(&self, beta: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += beta[i] * beta[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        s
    }

    fn generate_roots(&mut self) -> Result<()> {
        let n = self.rank;
        for i in 0..n {
            for j in 0..n {
                if self.symmetrizer[i] * self.cartan[i][j]
                    != self.symmetrizer[j] * self.cartan[j][i]
                {
                    return Err(Error::Internal("cartan matrix is not symmetrizable".into()));
                }
            }
        }
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: HashSet<Vec<i64>> = simple.iter().cloned().collect();
        let mut roots = simple;
        let mut idx = 0;
        // Breadth-first by height; alpha_i-strings decide which extensions are roots.
        while idx < roots.len() {
            let beta = roots[idx].clone();
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - self.root_pair(&beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        roots.push(up);
                    }
                }
            }
            idx += 1;
        }
        let mut coroots = Vec::with_capacity(roots.len());
        for beta in &roots {
            let nb = self.norm(beta);
            let mut c = Vec::with_capacity(n);
            for j in 0..n {
                let num = 2 * beta[j] * self.symmetrizer[j];
                if num % nb != 0 {
                    return Err(Error::Internal(format!("non-integral coroot for {beta:?}")));
                }
                c.push(num / nb);
            }
            coroots.push(c);
        }
        self.positive_roots = roots;
        self.positive_coroots = coroots;
        Ok(())
    }

    /// Fundamental weight 1 must carry the 7-dimensional representation and
    /// weight 2 the 14-dimensional one; swap the simple roots otherwise.
    fn fix_g2_labels(&mut self) -> Result<()> {
        let d1: i64 = self.weyl_dim(&self.fundamental(0)?)?;
        let d2: i64 = self.weyl_dim(&self.fundamental(1)?)?;
        match (d1, d2) {
            (7, 14) => Ok(()),
            (14, 7) => {
                self.cartan = vec![
                    vec![self.cartan[1][1], self.cartan[1][0]],
                    vec![self.cartan[0][1], self.cartan[0][0]],
                ];
                self.symmetrizer.swap(0, 1);
                self.generate_roots()
            }
            _ => Err(Error::Internal(format!(
                "unexpected G2 fundamental dimensions {d1}, {d2}"
            ))),
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::binomial;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn all_systems() -> Vec<RootSystem> {
        let mut v = Vec::new();
        for n in 1..=7 {
            v.push(RootSystem::new(Family::A, n).unwrap());
        }
        for n in 2..=6 {
            v.push(RootSystem::new(Family::B, n).unwrap());
            v.push(RootSystem::new(Family::C, n).unwrap());
        }
        for n in 3..=6 {
            v.push(RootSystem::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            v.push(RootSystem::new(Family::E, n).unwrap());
        }
        v.push(RootSystem::new(Family::F, 4).unwrap());
        v.push(RootSystem::new(Family::G, 2).unwrap());
        v
    }

    fn systems() -> &'static [RootSystem] {
        static SYSTEMS: std::sync::OnceLock<Vec<RootSystem>> = std::sync::OnceLock::new();
        SYSTEMS.get_or_init(all_systems)
    }

    fn expected_root_count(f: Family, n: usize) -> usize {
        match (f, n) {
            (Family::A, n) => n * (n + 1) / 2,
            (Family::B | Family::C, n) => n * n,
            (Family::D, n) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, 8) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
            _ => unreachable!(),
        }
    }

    #[test]
    fn smallest_case() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.cartan(), &[vec![2]]);
    }

    #[test]
    fn type_invariants() {
        for rs in all_systems() {
            let n = rs.rank();
            assert_eq!(
                rs.positive_roots().len(),
                expected_root_count(rs.family(), n),
                "{}{n}",
                rs.family()
            );
            for i in 0..n {
                assert_eq!(rs.cartan()[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(rs.cartan()[i][j] <= 0);
                    }
                    assert_eq!(
                        rs.symmetrizer()[i] * rs.cartan()[i][j],
                        rs.symmetrizer()[j] * rs.cartan()[j][i]
                    );
                }
                let mut simple = vec![0; n];
                simple[i] = 1;
                assert!(rs.positive_roots().contains(&simple));
            }
            assert!(rs.positive_roots().iter().flatten().all(|&c| c >= 0));
            assert_eq!(rs.weyl_dim::<i64>(&rs.zero_weight()).unwrap(), 1);
        }
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::G, 3).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
        assert!(RootSystem::new(Family::E, 9).is_err());
    }

    #[test]
    fn pairing_duality() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let w1 = rs.fundamental(0).unwrap();
        assert_eq!(rs.pair(&w1, 0).unwrap(), 1);
        assert_eq!(rs.pair(&w1, 1).unwrap(), 0);
        assert!(rs.pair(&w1, 3).is_err());
    }

    #[test]
    fn g2_rho_pairings() {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        let rho = rs.rho();
        // highest root 3a1 + 2a2 is long; its coroot is a1^v + 2 a2^v
        let top = rs
            .positive_roots()
            .iter()
            .position(|r| r == &vec![3, 2])
            .unwrap();
        assert_eq!(rs.positive_coroots()[top], vec![1, 2]);
        assert_eq!(rs.pair(&rho, top).unwrap(), 3);
        // the largest <rho, beta^v> is h - 1 = 5 for G2
        let max = (0..6).map(|i| rs.pair(&rho, i).unwrap()).max().unwrap();
        assert_eq!(max, 5);
    }

    #[test]
    fn g2_dimensions() {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        let d = |a, b| rs.weyl_dim::<i64>(&rs.weight(&[a, b]).unwrap()).unwrap();
        assert_eq!(d(1, 0), 7);
        assert_eq!(d(0, 1), 14);
        assert_eq!(d(1, 1), 64);
        assert_eq!(d(2, 0), 27);
        assert_eq!(d(0, 2), 77);
        assert_eq!(d(2, 1), 189);
    }

    #[test]
    fn type_a_symmetric_powers() {
        for n in 1..=6usize {
            let rs = RootSystem::new(Family::A, n).unwrap();
            for k in 0..=20i64 {
                let mut c = vec![0; n];
                c[0] = k;
                let dim: BigInt = rs.weyl_dim(&rs.weight(&c).unwrap()).unwrap();
                assert_eq!(dim, binomial::<BigInt>(n as u64 + k as u64, n as u64));
            }
        }
    }

    #[test]
    fn known_small_dimensions() {
        // B3 spin rep, C3 standard, D4 vector, E6 minuscule, E8 adjoint, F4 smallest
        let cases: &[(Family, usize, &[i64], i64)] = &[
            (Family::B, 3, &[0, 0, 1], 8),
            (Family::B, 3, &[1, 0, 0], 7),
            (Family::C, 3, &[1, 0, 0], 6),
            (Family::D, 4, &[1, 0, 0, 0], 8),
            (Family::D, 4, &[0, 0, 0, 1], 8),
            (Family::E, 6, &[1, 0, 0, 0, 0, 0], 27),
            (Family::E, 7, &[0, 0, 0, 0, 0, 0, 1], 56),
            (Family::E, 8, &[0, 0, 0, 0, 0, 0, 0, 1], 248),
            (Family::E, 8, &[1, 0, 0, 0, 0, 0, 0, 0], 3875),
            (Family::F, 4, &[0, 0, 0, 1], 26),
        ];
        for &(f, n, w, d) in cases {
            let rs = RootSystem::new(f, n).unwrap();
            assert_eq!(
                rs.weyl_dim::<i64>(&rs.weight(w).unwrap()).unwrap(),
                d,
                "{f}{n} {w:?}"
            );
        }
    }

    #[test]
    fn weyl_dim_rejects_non_dominant() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        assert!(rs.weyl_dim::<i64>(&rs.weight(&[-1, 0]).unwrap()).is_err());
        assert!(rs.weight(&[1]).is_err());
    }

    #[test]
    fn to_dominant_cases() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let w = rs.weight(&[2, 1]).unwrap();
        assert_eq!(
            rs.to_dominant(&w).unwrap(),
            Chamber::Regular {
                dominant: w,
                sign: 1
            }
        );
        assert_eq!(
            rs.to_dominant(&rs.weight(&[0, 3]).unwrap()).unwrap(),
            Chamber::Singular
        );
        // (1,-1) pairs to zero with the coroot of a1 + a2
        assert_eq!(
            rs.to_dominant(&rs.weight(&[1, -1]).unwrap()).unwrap(),
            Chamber::Singular
        );

        let a1 = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(
            a1.to_dominant(&a1.weight(&[-3]).unwrap()).unwrap(),
            Chamber::Regular {
                dominant: a1.weight(&[3]).unwrap(),
                sign: -1
            }
        );
    }

    #[test]
    fn induction_basics() {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        let r: InductionResult<i64> = rs.holo_induce_dim(&rs.zero_weight()).unwrap();
        assert_eq!(
            r,
            InductionResult::Regular {
                sign: 1,
                dominant: rs.zero_weight(),
                dimension: 1
            }
        );
        // mu + rho = (1, 0) lies on the wall of a2
        let s: InductionResult<i64> = rs.holo_induce_dim(&rs.weight(&[0, -1]).unwrap()).unwrap();
        assert_eq!(s, InductionResult::Singular);
        assert_eq!(s.signed_dimension(), 0);
        // A1: mu = -3 gives mu + rho = -2, reflected to 2, highest weight 1, dimension 2, sign -1
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        let r: InductionResult<i64> = a1.holo_induce_dim(&a1.weight(&[-3]).unwrap()).unwrap();
        assert_eq!(r.signed_dimension(), -2);
    }

    #[test]
    fn g2_long_root_powers() {
        let rs = RootSystem::new(Family::G, 2).unwrap();
        for k in 0..=60i64 {
            let r: InductionResult<BigInt> =
                rs.holo_induce_dim(&rs.weight(&[0, k]).unwrap()).unwrap();
            let expect =
                BigInt::from((k + 1) * (k + 2) * (2 * k + 3) * (3 * k + 4) * (3 * k + 5) / 120);
            assert_eq!(r.signed_dimension(), expect);
        }
    }

    fn regular_weight(rs: &RootSystem, raw: &[i64]) -> Option<Weight> {
        let w = rs.weight(&raw[..rs.rank()]).ok()?;
        matches!(rs.to_dominant(&w), Ok(Chamber::Regular { .. })).then_some(w)
    }

    proptest! {
        #[test]
        fn dominant_is_idempotent(sys in 0usize..26, raw in proptest::collection::vec(-6i64..6, 8)) {
            let rs = &systems()[sys];
            if let Some(w) = regular_weight(rs, &raw) {
                let Chamber::Regular { dominant, .. } = rs.to_dominant(&w).unwrap() else { unreachable!() };
                prop_assert_eq!(
                    rs.to_dominant(&dominant).unwrap(),
                    Chamber::Regular { dominant: dominant.clone(), sign: 1 }
                );
            }
        }

        #[test]
        fn weyl_orbit_has_one_dominant_point(
            sys in 0usize..26,
            raw in proptest::collection::vec(-6i64..6, 8),
            word in proptest::collection::vec(0usize..8, 0..12)
        ) {
            let rs = &systems()[sys];
            if let Some(w) = regular_weight(rs, &raw) {
                let mut moved = w.clone();
                for &i in &word {
                    moved = rs.reflect(&moved, i % rs.rank());
                }
                let (Chamber::Regular { dominant: d0, sign: s0 }, Chamber::Regular { dominant: d1, sign: s1 }) =
                    (rs.to_dominant(&w).unwrap(), rs.to_dominant(&moved).unwrap())
                else {
                    return Err(TestCaseError::fail("reflection changed regularity"));
                };
                prop_assert_eq!(d0, d1);
                let parity = if word.len() % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(s1 * parity, s0);
            }
        }

        #[test]
        fn induction_on_dominant_is_dimension(sys in 0usize..26, raw in proptest::collection::vec(0i64..4, 8)) {
            let rs = &systems()[sys];
            let mu = rs.weight(&raw[..rs.rank()]).unwrap();
            let r: InductionResult<BigInt> = rs.holo_induce_dim(&mu).unwrap();
            let d: BigInt = rs.weyl_dim(&mu).unwrap();
            prop_assert_eq!(r, InductionResult::Regular { sign: 1, dominant: mu, dimension: d });
        }
    }
}
