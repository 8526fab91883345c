//! Sparse integer polynomials and the splitting of a relation into
//! generator coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// Sparse polynomial in `nvars` variables, keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, T::one());
        p
    }

    /// All variables `x_0 .. x_{nvars-1}`.
    pub fn vars(nvars: usize) -> Vec<Self> {
        (0..nvars).map(|i| Self::var(nvars, i)).collect()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn constant_term(&self) -> T {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: T) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(T::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn eval(&self, at: &[T]) -> T {
        assert_eq!(at.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| c.clone() * monomial_value(e, at))
            .fold(T::zero(), |a, b| a + b)
    }
}

fn monomial_value<T: Scalar>(exps: &[u32], at: &[T]) -> T {
    let mut v = T::one();
    for (x, &p) in at.iter().zip(exps) {
        for _ in 0..p {
            v = v * x.clone();
        }
    }
    v
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(mut self, rhs: Poly<T>) -> Poly<T> {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Add<i64> for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: i64) -> Poly<T> {
        let n = self.nvars;
        self + Poly::constant(n, T::from_int(rhs))
    }
}

impl<T: Scalar> Sub<i64> for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: i64) -> Poly<T> {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul<i64> for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: i64) -> Poly<T> {
        self.scale(&T::from_int(rhs))
    }
}

/// A relation in the augmentation ideal: a polynomial with zero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPoly<T>(Poly<T>);

impl<T: Scalar> RelationPoly<T> {
    pub fn new(p: Poly<T>) -> Result<Self> {
        if !p.constant_term().is_zero() {
            return invalid(format!(
                "relation has nonzero constant term {}",
                p.constant_term()
            ));
        }
        Ok(RelationPoly(p))
    }

    pub fn poly(&self) -> &Poly<T> {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars
    }
}

/// Which variable a monomial is charged to when splitting a relation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Assignment {
    /// Lowest-index variable dividing the monomial.
    #[default]
    Lowest,
    /// Highest-index variable dividing the monomial.
    Highest,
}

/// Writes `rho = sum_i c_i(x) x_i` and evaluates each `c_i` at `images`.
pub fn decompose_and_evaluate<T: Scalar>(
    rho: &RelationPoly<T>,
    images: &[T],
    rule: Assignment,
) -> Result<Vec<T>> {
    let n = rho.nvars();
    if images.len() != n {
        return invalid(format!("{} images given for {} variables", images.len(), n));
    }
    let mut out = vec![T::zero(); n];
    for (exps, c) in rho.poly().terms() {
        let mut dividing = exps
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0)
            .map(|(i, _)| i);
        let i = match rule {
            Assignment::Lowest => dividing.next(),
            Assignment::Highest => dividing.next_back(),
        };
        // zero constant term is an invariant of RelationPoly
        let i = i.expect("monomial of a relation has positive degree");
        let mut quotient = exps.to_vec();
        quotient[i] -= 1;
        out[i] = out[i].clone() + c.clone() * monomial_value(&quotient, images);
    }
    Ok(out)
}
