//! Spin^c characteristic numbers `<lambda^2, [M]>` on small cohomology rings
//! given by structure constants.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::scalar::Scalar;

/// A graded commutative ring with a finite monomial basis, basis element 0
/// being the unit and `top` the fundamental-class monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyModel {
    name: String,
    basis: Vec<(String, u32)>,
    /// `products[i][j]` expresses `e_i * e_j` in the basis.
    products: Vec<Vec<Vec<i64>>>,
    top: usize,
}

impl CohomologyModel {
    pub fn new(
        name: &str,
        basis: Vec<(String, u32)>,
        products: Vec<Vec<Vec<i64>>>,
        top: usize,
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 || top >= n || basis[0].1 != 0 {
            return invalid("basis must start with the unit and contain the top class");
        }
        if products.len() != n
            || products
                .iter()
                .any(|r| r.len() != n || r.iter().any(|p| p.len() != n))
        {
            return invalid("structure constants must form an n x n x n table");
        }
        let top_deg = basis[top].1;
        for i in 0..n {
            for j in 0..n {
                for (l, &c) in products[i][j].iter().enumerate() {
                    if c != 0 && basis[l].1 != basis[i].1 + basis[j].1 {
                        return invalid(format!(
                            "{} * {} has a term of the wrong degree",
                            basis[i].0, basis[j].0
                        ));
                    }
                }
                if basis[i].1 + basis[j].1 > top_deg && products[i][j].iter().any(|&c| c != 0) {
                    return invalid("products above the top degree must vanish");
                }
            }
        }
        Ok(CohomologyModel {
            name: name.to_string(),
            basis,
            products,
            top,
        })
    }

    /// `Z[h]/(h^3)`.
    pub fn cp2() -> Self {
        let basis = vec![("1".into(), 0), ("h".into(), 2), ("h^2".into(), 4)];
        let e = |i: usize| (0..3).map(|l| i64::from(l == i)).collect::<Vec<_>>();
        let z = vec![0; 3];
        let products = vec![
            vec![e(0), e(1), e(2)],
            vec![e(1), e(2), z.clone()],
            vec![e(2), z.clone(), z],
        ];
        CohomologyModel::new("CP2", basis, products, 2).expect("valid table")
    }

    /// `Z[y, x]/(y^2, x^2 + yx)`.
    pub fn pnu() -> Self {
        let basis = vec![
            ("1".into(), 0),
            ("y".into(), 2),
            ("x".into(), 2),
            ("yx".into(), 4),
        ];
        let e = |i: usize| (0..4).map(|l| i64::from(l == i)).collect::<Vec<_>>();
        let z = vec![0; 4];
        let products = vec![
            vec![e(0), e(1), e(2), e(3)],
            vec![e(1), z.clone(), e(3), z.clone()],
            vec![e(2), e(3), vec![0, 0, 0, -1], z.clone()],
            vec![e(3), z.clone(), z.clone(), z],
        ];
        CohomologyModel::new("PNU", basis, products, 3).expect("valid table")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(String, u32)] {
        &self.basis
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn top_degree(&self) -> u32 {
        self.basis[self.top].1
    }

    pub fn basis_element<T: Scalar>(&self, i: usize) -> Class<T> {
        let coeffs = (0..self.dim())
            .map(|l| if l == i { T::one() } else { T::zero() })
            .collect();
        Class {
            model: self.name.clone(),
            coeffs,
        }
    }

    /// Looks up a basis monomial by name.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| Error::InvalidInput(format!("{} has no monomial {name:?}", self.name)))
    }

    /// Integer combination of named monomials.
    pub fn class<T: Scalar>(&self, terms: &[(T, &str)]) -> Result<Class<T>> {
        let mut coeffs = vec![T::zero(); self.dim()];
        for (c, name) in terms {
            let i = self.index_of(name)?;
            coeffs[i] = coeffs[i].clone() + c.clone();
        }
        Ok(Class {
            model: self.name.clone(),
            coeffs,
        })
    }

    fn check<T>(&self, a: &Class<T>) -> Result<()> {
        if a.model != self.name || a.coeffs.len() != self.dim() {
            return invalid(format!("class from {} used in {}", a.model, self.name));
        }
        Ok(())
    }

    pub fn add<T: Scalar>(&self, a: &Class<T>, b: &Class<T>) -> Result<Class<T>> {
        self.check(a)?;
        self.check(b)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.clone() + y.clone())
            .collect();
        Ok(Class {
            model: self.name.clone(),
            coeffs,
        })
    }

    pub fn scale<T: Scalar>(&self, c: &T, a: &Class<T>) -> Result<Class<T>> {
        self.check(a)?;
        let coeffs = a.coeffs.iter().map(|x| x.clone() * c.clone()).collect();
        Ok(Class {
            model: self.name.clone(),
            coeffs,
        })
    }

    pub fn mul<T: Scalar>(&self, a: &Class<T>, b: &Class<T>) -> Result<Class<T>> {
        self.check(a)?;
        self.check(b)?;
        let mut coeffs = vec![T::zero(); self.dim()];
        for (i, ai) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (l, &s) in self.products[i][j].iter().enumerate() {
                    if s != 0 {
                        coeffs[l] = coeffs[l].clone() + ai.clone() * bj.clone() * T::from_int(s);
                    }
                }
            }
        }
        Ok(Class {
            model: self.name.clone(),
            coeffs,
        })
    }

    /// Evaluation on the fundamental class.
    pub fn evaluate<T: Scalar>(&self, a: &Class<T>) -> Result<T> {
        self.check(a)?;
        Ok(a.coeffs[self.top].clone())
    }

    fn is_homogeneous<T: Scalar>(&self, a: &Class<T>, degree: u32) -> bool {
        a.coeffs
            .iter()
            .zip(&self.basis)
            .all(|(c, (_, d))| c.is_zero() || *d == degree)
    }
}

/// An element of a [`CohomologyModel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class<T> {
    model: String,
    coeffs: Vec<T>,
}

impl<T: Scalar> Class<T> {
    pub fn model(&self) -> &str {
        &self.model
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }
}

/// A degree-2 class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaClass<T>(Class<T>);

impl<T: Scalar> LambdaClass<T> {
    pub fn new(model: &CohomologyModel, class: Class<T>) -> Result<Self> {
        model.check(&class)?;
        if !model.is_homogeneous(&class, 2) {
            return invalid("lambda must be homogeneous of degree 2");
        }
        Ok(LambdaClass(class))
    }

    pub fn class(&self) -> &Class<T> {
        &self.0
    }
}

impl<T: Scalar> fmt::Display for Class<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*e{i}"))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `base + 2 d`.
pub fn modify_lambda<T: Scalar>(
    model: &CohomologyModel,
    base: &LambdaClass<T>,
    d: &LambdaClass<T>,
) -> Result<LambdaClass<T>> {
    let twice = model.scale(&T::from_int(2), &d.0)?;
    LambdaClass::new(model, model.add(&base.0, &twice)?)
}

/// `<lambda^2, [M]>`; the model must have top degree 4.
pub fn char_number<T: Scalar>(model: &CohomologyModel, lambda: &LambdaClass<T>) -> Result<T> {
    if model.top_degree() != 4 {
        return invalid(format!(
            "{} has top degree {}, need 4",
            model.name,
            model.top_degree()
        ));
    }
    model.evaluate(&model.mul(&lambda.0, &lambda.0)?)
}

/// `lambda` of `CP^2` modified by `k h`.
pub fn cp2_lambda<T: Scalar>(k: i64) -> Result<LambdaClass<T>> {
    let m = CohomologyModel::cp2();
    let base = LambdaClass::new(&m, m.class(&[(T::from_int(3), "h")])?)?;
    let d = LambdaClass::new(&m, m.class(&[(T::from_int(k), "h")])?)?;
    modify_lambda(&m, &base, &d)
}

/// `lambda` of the projective bundle modified by `k` times the hyperplane
/// class, which is `-y` since `y` is tautological.
pub fn pnu_lambda<T: Scalar>(k: i64) -> Result<LambdaClass<T>> {
    let m = CohomologyModel::pnu();
    let base = LambdaClass::new(
        &m,
        m.class(&[(T::from_int(-2), "y"), (T::from_int(-2), "x")])?,
    )?;
    let d = LambdaClass::new(&m, m.class(&[(T::from_int(-k), "y")])?)?;
    modify_lambda(&m, &base, &d)
}

/// The two characteristic numbers at twist `k`: `(CP^2(k), P(k))`.
pub fn char_numbers<T: Scalar>(k: i64) -> Result<(T, T)> {
    Ok((
        char_number(&CohomologyModel::cp2(), &cp2_lambda(k)?)?,
        char_number(&CohomologyModel::pnu(), &pnu_lambda(k)?)?,
    ))
}

/// Characteristic number of the boundary combination
/// `CP^2(k) - CP^2 - (k+3)/2 (P(k) - P)`; vanishes for odd `k`.
pub fn boundary_check<T: Scalar>(k: i64) -> Result<T> {
    if k <= 0 || k % 2 == 0 {
        return invalid(format!("boundary check needs odd positive k, got {k}"));
    }
    let (cp, pn) = char_numbers::<T>(k)?;
    let (cp0, pn0) = char_numbers::<T>(0)?;
    Ok(cp - cp0 - T::from_int((k + 3) / 2) * (pn - pn0))
}
