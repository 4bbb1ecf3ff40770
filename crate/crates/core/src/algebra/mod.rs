//! Tridendriform algebras given by structure constants.
//!
//! An algebra on the basis `e_1..e_n` is three `n × n × n` tensors, one per
//! product. `T[(i, j, k)]` is the coefficient of `e_k` in `e_i ∘ e_j`.
//! Indices are 0-based in this API and 1-based in files and reports.

pub(crate) mod format;
mod linear_map;
mod residuals;
mod subspaces;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::{add_scaled, unit_vector, zero_vector, LinAlgError, Rational};

pub use format::{FormatError, TdaFile};
pub use linear_map::LinearMap;
pub use residuals::{AxiomFailure, ResidualReport, AXIOM_COUNT, AXIOM_NAMES};
pub use subspaces::CenterMode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("not tridendriform: {0}")]
    NotTridendriform(AxiomFailure),
}

/// One of the three products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductTag {
    Prec,
    Succ,
    Vee,
}

impl ProductTag {
    pub const ALL: [ProductTag; 3] = [ProductTag::Prec, ProductTag::Succ, ProductTag::Vee];

    pub fn name(self) -> &'static str {
        match self {
            ProductTag::Prec => "prec",
            ProductTag::Succ => "succ",
            ProductTag::Vee => "vee",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ProductTag::Prec => "≺",
            ProductTag::Succ => "≻",
            ProductTag::Vee => "∨",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ProductTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "prec" => Ok(ProductTag::Prec),
            "succ" => Ok(ProductTag::Succ),
            "vee" => Ok(ProductTag::Vee),
            other => Err(format!("unknown product {other:?}")),
        }
    }
}

/// Selects the product whose associativity [`TridendriformAlgebra::is_associative`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocProduct {
    /// `x ∗ y = x≺y + x≻y + x∨y`
    Star,
    Vee,
}

/// Dense `n × n × n` array of structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    n: usize,
    data: Vec<Rational>,
}

impl StructureTensor {
    pub fn zero(n: usize) -> Self {
        StructureTensor {
            n,
            data: vec![Rational::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[(i * self.n + j) * self.n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let n = self.n;
        self.data[(i * n + j) * n + k] = value;
    }

    /// Coefficient vector of `e_i ∘ e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.n + j) * self.n;
        &self.data[start..start + self.n]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// Nonzero entries in lexicographic `(i, j, k)` order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let n = self.n;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(idx, x)| (idx / (n * n), (idx / n) % n, idx % n, x))
    }

    /// Flattening as a `n² × n` matrix with row `(i, j)` holding `e_i ∘ e_j`.
    pub fn flattening(&self) -> crate::exactla::Matrix {
        crate::exactla::Matrix::from_entries(self.n * self.n, self.n, self.data.clone()).expect("tensor storage is n^3")
    }

    fn apply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vector(self.n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                add_scaled(&mut out, &w, self.product_of_basis(i, j));
            }
        }
        out
    }
}

/// A vector space with three bilinear products `≺`, `≻`, `∨`.
///
/// Nothing about the axioms is assumed at construction; use
/// [`TridendriformAlgebra::axiom_residuals`] or [`TridendriformAlgebra::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TridendriformAlgebra {
    basis_names: Vec<String>,
    tensors: [StructureTensor; 3],
}

impl TridendriformAlgebra {
    pub fn zero(n: usize) -> Self {
        TridendriformAlgebra {
            basis_names: default_basis_names(n),
            tensors: [
                StructureTensor::zero(n),
                StructureTensor::zero(n),
                StructureTensor::zero(n),
            ],
        }
    }

    pub fn from_tensors(
        basis_names: Vec<String>,
        prec: StructureTensor,
        succ: StructureTensor,
        vee: StructureTensor,
    ) -> Result<Self, LinAlgError> {
        let n = basis_names.len();
        for t in [&prec, &succ, &vee] {
            if t.dim() != n {
                return Err(LinAlgError::DimensionMismatch {
                    expected: n,
                    found: t.dim(),
                });
            }
        }
        Ok(TridendriformAlgebra {
            basis_names,
            tensors: [prec, succ, vee],
        })
    }

    /// Builds an algebra from a list of 0-based `(product, i, j, k, coefficient)` entries.
    /// Repeated keys accumulate.
    pub fn from_entries<I>(n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (ProductTag, usize, usize, usize, Rational)>,
    {
        let mut alg = TridendriformAlgebra::zero(n);
        for (tag, i, j, k, c) in entries {
            let t = &mut alg.tensors[tag.index()];
            let sum = t.get(i, j, k) + &c;
            t.set(i, j, k, sum);
        }
        alg
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self, LinAlgError> {
        if names.len() != self.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.dim(),
                found: names.len(),
            });
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn tensor(&self, tag: ProductTag) -> &StructureTensor {
        &self.tensors[tag.index()]
    }

    pub fn set(&mut self, tag: ProductTag, i: usize, j: usize, k: usize, value: Rational) {
        self.tensors[tag.index()].set(i, j, k, value);
    }

    pub fn is_zero(&self) -> bool {
        self.tensors.iter().all(StructureTensor::is_zero)
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LinAlgError> {
        if v.len() != self.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear product `x ∘ y` for the selected product.
    pub fn multiply(&self, which: ProductTag, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.tensor(which).apply(x, y))
    }

    /// Sum product `x ∗ y = x≺y + x≻y + x∨y`.
    pub fn star(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.star_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, which: ProductTag, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.tensor(which).apply(x, y)
    }

    pub(crate) fn star_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vector(self.dim());
        for tag in ProductTag::ALL {
            for (o, v) in out.iter_mut().zip(self.tensor(tag).apply(x, y)) {
                *o += &v;
            }
        }
        out
    }

    /// Structure tensor of the sum product.
    pub fn star_tensor(&self) -> StructureTensor {
        let n = self.dim();
        let mut t = StructureTensor::zero(n);
        for idx in 0..n * n * n {
            t.data[idx] = self.tensors.iter().map(|s| &s.data[idx]).sum();
        }
        t
    }

    /// `(x∘y)∘z = x∘(y∘z)` on every basis triple.
    pub fn is_associative(&self, which: AssocProduct) -> bool {
        self.associativity_witness(which).is_none()
    }

    /// First basis triple (0-based) where associativity fails.
    pub fn associativity_witness(&self, which: AssocProduct) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let op = |x: &[Rational], y: &[Rational]| match which {
            AssocProduct::Star => self.star_unchecked(x, y),
            AssocProduct::Vee => self.mul_unchecked(ProductTag::Vee, x, y),
        };
        let basis: Vec<_> = (0..n).map(|i| unit_vector(n, i)).collect();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let ab = op(a, b);
                for (k, c) in basis.iter().enumerate() {
                    if op(&ab, c) != op(a, &op(b, c)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `φ(x ∘ y) = φ(x) ∘' φ(y)` on every basis pair and every product.
    /// `phi` is `target.dim() × self.dim()`.
    pub fn is_morphism_to(&self, phi: &LinearMap, target: &TridendriformAlgebra) -> Result<bool, LinAlgError> {
        if phi.cols() != self.dim() || phi.rows() != target.dim() {
            return Err(LinAlgError::ShapeMismatch {
                left: (phi.rows(), phi.cols()),
                right: (target.dim(), self.dim()),
            });
        }
        let n = self.dim();
        let images: Vec<_> = (0..n).map(|i| phi.image_of_basis(i)).collect();
        for tag in ProductTag::ALL {
            for i in 0..n {
                for j in 0..n {
                    let lhs = phi.apply(self.tensor(tag).product_of_basis(i, j))?;
                    let rhs = target.mul_unchecked(tag, &images[i], &images[j]);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Runs the axiom check and wraps the algebra if every residual vanishes.
    pub fn verify(self) -> Result<VerifiedAlgebra, AlgebraError> {
        let report = self.axiom_residuals();
        match report.first_failure {
            None => Ok(VerifiedAlgebra(self)),
            Some(f) => Err(AlgebraError::NotTridendriform(f)),
        }
    }
}

/// Free-standing form of [`TridendriformAlgebra::is_morphism_to`].
pub fn is_morphism(
    phi: &LinearMap,
    source: &TridendriformAlgebra,
    target: &TridendriformAlgebra,
) -> Result<bool, LinAlgError> {
    source.is_morphism_to(phi, target)
}

/// An algebra that has passed [`TridendriformAlgebra::axiom_residuals`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedAlgebra(TridendriformAlgebra);

impl VerifiedAlgebra {
    pub fn into_inner(self) -> TridendriformAlgebra {
        self.0
    }
}

impl std::ops::Deref for VerifiedAlgebra {
    type Target = TridendriformAlgebra;
    fn deref(&self) -> &TridendriformAlgebra {
        &self.0
    }
}

pub fn default_basis_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactla::int_vector;

    pub(crate) fn ex21() -> TridendriformAlgebra {
        TridendriformAlgebra::from_entries(2, ProductTag::ALL.map(|t| (t, 1, 1, 0, Rational::one())))
    }

    /// DT_3^5 as built in the classification proof.
    pub(crate) fn dt35() -> TridendriformAlgebra {
        use ProductTag::*;
        let one = Rational::one;
        TridendriformAlgebra::from_entries(
            3,
            [
                (Prec, 0, 0, 2, one()),
                (Prec, 0, 1, 2, one()),
                (Prec, 1, 0, 2, one()),
                (Succ, 0, 0, 2, one()),
                (Succ, 1, 0, 2, one()),
                (Succ, 1, 1, 2, one()),
                (Vee, 1, 0, 2, one()),
                (Vee, 1, 1, 2, one()),
            ],
        )
    }

    pub(crate) fn idempotent_prec_succ() -> TridendriformAlgebra {
        TridendriformAlgebra::from_entries(
            1,
            [
                (ProductTag::Prec, 0, 0, 0, Rational::one()),
                (ProductTag::Succ, 0, 0, 0, Rational::one()),
            ],
        )
    }

    #[test]
    fn multiply_ex21() {
        let a = ex21();
        let e2 = int_vector(&[0, 1]);
        assert_eq!(a.multiply(ProductTag::Prec, &e2, &e2).unwrap(), int_vector(&[1, 0]));
    }

    #[test]
    fn multiply_zero_left_is_zero() {
        let a = dt35();
        let y = int_vector(&[3, -1, 2]);
        for tag in ProductTag::ALL {
            assert_eq!(a.multiply(tag, &zero_vector(3), &y).unwrap(), zero_vector(3));
        }
    }

    #[test]
    fn multiply_dt35_e1_prec_e2() {
        let a = dt35();
        let r = a
            .multiply(ProductTag::Prec, &int_vector(&[1, 0, 0]), &int_vector(&[0, 1, 0]))
            .unwrap();
        assert_eq!(r, int_vector(&[0, 0, 1]));
    }

    #[test]
    fn multiply_checks_dimension() {
        let a = ex21();
        assert!(a
            .multiply(ProductTag::Vee, &int_vector(&[1]), &int_vector(&[1, 0]))
            .is_err());
        assert!(a.star(&int_vector(&[1, 0]), &int_vector(&[1, 0, 0])).is_err());
    }

    #[test]
    fn star_examples() {
        let e2 = int_vector(&[0, 1]);
        assert_eq!(ex21().star(&e2, &e2).unwrap(), int_vector(&[3, 0]));
        assert_eq!(ex21().star(&e2, &zero_vector(2)).unwrap(), zero_vector(2));
        let d = dt35();
        assert_eq!(
            d.star(&int_vector(&[0, 1, 0]), &int_vector(&[1, 0, 0])).unwrap(),
            int_vector(&[0, 0, 3])
        );
    }

    #[test]
    fn associativity_examples() {
        assert!(ex21().is_associative(AssocProduct::Star));
        assert!(ex21().is_associative(AssocProduct::Vee));
        assert!(dt35().is_associative(AssocProduct::Vee));
        // e1∗e1 = 2e1, so both bracketings give 4e1: ∗ is associative even
        // though axiom 1 fails.
        assert!(idempotent_prec_succ().is_associative(AssocProduct::Star));
    }

    #[test]
    fn star_fails_when_not_associative() {
        // e1≺e1 = e2, e2≺e1 = e1: (e1∗e1)∗e1 = e1 but e1∗(e1∗e1) = e1∗e2 = 0.
        let a = TridendriformAlgebra::from_entries(
            2,
            [
                (ProductTag::Prec, 0, 0, 1, Rational::one()),
                (ProductTag::Prec, 1, 0, 0, Rational::one()),
            ],
        );
        assert!(!a.is_associative(AssocProduct::Star));
    }

    #[test]
    fn morphism_examples() {
        let a = dt35();
        assert!(is_morphism(&LinearMap::identity(3), &a, &a).unwrap());
        assert!(is_morphism(&LinearMap::zero(2, 3), &a, &ex21()).unwrap());
        let e = ex21();
        for (lambda, expect) in [(0, true), (1, true), (2, false), (-1, false)] {
            let phi = LinearMap::identity(2).scale(&Rational::from_int(lambda));
            assert_eq!(is_morphism(&phi, &e, &e).unwrap(), expect, "lambda = {lambda}");
        }
        assert!(is_morphism(&LinearMap::identity(2), &a, &a).is_err());
    }

    #[test]
    fn verify_wraps_only_valid_algebras() {
        assert!(ex21().verify().is_ok());
        let err = idempotent_prec_succ().verify().unwrap_err();
        assert!(matches!(err, AlgebraError::NotTridendriform(f) if f.axiom == 1));
    }
}
