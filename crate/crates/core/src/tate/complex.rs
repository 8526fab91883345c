//! Tate complexes with integer coefficients: an exterior algebra on degree-1
//! generators `T_i` tensored with a divided-power algebra on degree-2
//! generators `S_j`.
//!
//! The differential is an odd derivation with `d(T_i) = c_i` and
//! `d(S_j^(m)) = (sum_i e_ji T_i) S_j^(m-1)`. Monomials are written with the
//! `T` factors first, in ascending index order.

use std::collections::HashMap;
use std::fmt;

use crate::error::{invalid, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tate::relation::{decompose_and_evaluate, Assignment, RelationPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateSpec<T> {
    n_ext: usize,
    t_images: Vec<T>,
    s_rows: Vec<Vec<T>>,
    labels: Option<Vec<String>>,
}

impl<T: Scalar> TateSpec<T> {
    pub fn new(t_images: Vec<T>, s_rows: Vec<Vec<T>>) -> Result<Self> {
        let n_ext = t_images.len();
        if let Some((j, r)) = s_rows.iter().enumerate().find(|(_, r)| r.len() != n_ext) {
            return invalid(format!("row {j} has length {}, expected {n_ext}", r.len()));
        }
        Ok(TateSpec {
            n_ext,
            t_images,
            s_rows,
            labels: None,
        })
    }

    /// Koszul complex: exterior generators only.
    pub fn koszul(t_images: Vec<T>) -> Self {
        TateSpec {
            n_ext: t_images.len(),
            t_images,
            s_rows: Vec::new(),
            labels: None,
        }
    }

    /// One divided-power generator per relation, rows obtained by splitting
    /// each relation and evaluating at `images`.
    pub fn from_relations(
        images: Vec<T>,
        relations: &[RelationPoly<T>],
        rule: Assignment,
    ) -> Result<Self> {
        let rows = relations
            .iter()
            .map(|r| decompose_and_evaluate(r, &images, rule))
            .collect::<Result<Vec<_>>>()?;
        Self::new(images, rows)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n_ext {
            return invalid(format!(
                "{} labels for {} generators",
                labels.len(),
                self.n_ext
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n_ext(&self) -> usize {
        self.n_ext
    }

    pub fn n_div(&self) -> usize {
        self.s_rows.len()
    }

    pub fn t_images(&self) -> &[T] {
        &self.t_images
    }

    pub fn s_rows(&self) -> &[Vec<T>] {
        &self.s_rows
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `sum_i e_ji c_i` for every row; all zero exactly when `d∘d = 0`.
    pub fn cycle_defects(&self) -> Vec<T> {
        self.s_rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&self.t_images)
                    .fold(T::zero(), |a, (e, c)| a + e.clone() * c.clone())
            })
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.cycle_defects().iter().all(|x| x.is_zero())
    }
}

/// `T_{ext[0]} ... T_{ext[p-1]} * prod_j S_j^(div[j])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub ext: Vec<usize>,
    pub div: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> usize {
        self.ext.len() + 2 * self.div.iter().map(|&m| m as usize).sum::<usize>()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for &i in &self.ext {
            write!(f, "T{}", i + 1)?;
            any = true;
        }
        for (j, &m) in self.div.iter().enumerate() {
            match m {
                0 => {}
                1 => write!(f, "S{}", j + 1)?,
                _ => write!(f, "S{}^({m})", j + 1)?,
            }
            any |= m > 0;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct TateComplex<T> {
    spec: TateSpec<T>,
    degree_bound: usize,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

pub const DEFAULT_DEGREE_BOUND: usize = 6;

pub fn build_complex<T: Scalar>(spec: TateSpec<T>, degree_bound: usize) -> Result<TateComplex<T>> {
    if degree_bound == 0 {
        return invalid("degree bound must be at least 1");
    }
    let bases: Vec<Vec<Monomial>> = (0..=degree_bound)
        .map(|d| basis_in_degree(&spec, d))
        .collect();
    let index = bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect())
        .collect();
    Ok(TateComplex {
        spec,
        degree_bound,
        bases,
        index,
    })
}

/// Groups by number of `T` factors (descending); within a group, `T`-subsets
/// lexicographic, then divided-power exponents lexicographic.
fn basis_in_degree<T>(spec: &TateSpec<T>, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for p in (0..=d.min(spec.n_ext)).rev() {
        if !(d - p).is_multiple_of(2) {
            continue;
        }
        let weight = ((d - p) / 2) as u32;
        let exps = compositions(weight, spec.s_rows.len());
        for subset in combinations(spec.n_ext, p) {
            for m in &exps {
                out.push(Monomial {
                    ext: subset.clone(),
                    div: m.clone(),
                });
            }
        }
    }
    out
}

/// Sorted `p`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors of length `parts` summing to `total`, lexicographic.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn sign<T: Scalar>(negative: bool, x: T) -> T {
    if negative {
        -x
    } else {
        x
    }
}

impl<T: Scalar> TateComplex<T> {
    pub fn spec(&self) -> &TateSpec<T> {
        &self.spec
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.bases.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, d: usize) -> usize {
        self.basis(d).len()
    }

    /// Boundary of a single monomial as `(index in degree - 1 basis, coefficient)` pairs.
    pub fn boundary_of(&self, mono: &Monomial) -> Vec<(usize, T)> {
        let d = mono.degree();
        if d == 0 {
            return Vec::new();
        }
        let target = &self.index[d - 1];
        let mut out: Vec<(usize, T)> = Vec::new();
        let mut push = |m: Monomial, c: T| {
            if !c.is_zero() {
                out.push((target[&m], c));
            }
        };

        for (pos, &i) in mono.ext.iter().enumerate() {
            let c = self.spec.t_images[i].clone();
            let mut ext = mono.ext.clone();
            ext.remove(pos);
            push(
                Monomial {
                    ext,
                    div: mono.div.clone(),
                },
                sign(pos % 2 == 1, c),
            );
        }

        let passing_ts = mono.ext.len() % 2 == 1;
        for (j, &m) in mono.div.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let mut div = mono.div.clone();
            div[j] -= 1;
            for (i, e) in self.spec.s_rows[j].iter().enumerate() {
                if e.is_zero() || mono.ext.contains(&i) {
                    continue;
                }
                // T_I * T_i: move T_i left past the factors with larger index
                let larger = mono.ext.iter().filter(|&&x| x > i).count();
                let at = mono.ext.len() - larger;
                let mut ext = mono.ext.clone();
                ext.insert(at, i);
                push(
                    Monomial {
                        ext,
                        div: div.clone(),
                    },
                    sign(passing_ts ^ (larger % 2 == 1), e.clone()),
                );
            }
        }
        out
    }

    /// Matrix of the differential from degree `d` to degree `d - 1`.
    pub fn boundary_matrix(&self, d: usize) -> Result<Matrix<T>> {
        if d == 0 || d > self.degree_bound {
            return invalid(format!(
                "boundary degree {d} outside 1..={}",
                self.degree_bound
            ));
        }
        let mut m = Matrix::<T>::zeros(self.rank(d - 1), self.rank(d));
        for (col, mono) in self.bases[d].iter().enumerate() {
            for (row, c) in self.boundary_of(mono) {
                m[(row, col)] = m[(row, col)].clone() + c;
            }
        }
        Ok(m)
    }
}
