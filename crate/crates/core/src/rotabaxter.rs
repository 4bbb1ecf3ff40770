//! Rota–Baxter operators on associative algebras and the tridendriform
//! structure they induce: `a≺b = a∘R(b)`, `a≻b = R(a)∘b`, `a∨b = θ(a∘b)`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::format::{fill_tensor, resolve_basis, tensor_entries, write_entries, write_header, Entry};
use crate::algebra::{default_basis_names, FormatError, LinearMap, StructureTensor, TridendriformAlgebra};
use crate::exactla::{add_scaled, unit_vector, zero_vector, LinAlgError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotaBaxterError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("product is not associative at basis triple (e{0}, e{1}, e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("not a Rota-Baxter operator of weight {theta}: identity fails at (e{}, e{})", .witness.0, .witness.1)]
    NotRotaBaxter { theta: Rational, witness: (usize, usize) },
}

/// An associative algebra given by one structure tensor `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativeAlgebra {
    basis_names: Vec<String>,
    mu: StructureTensor,
}

impl AssociativeAlgebra {
    /// Checks associativity on all basis triples.
    pub fn new(basis_names: Vec<String>, mu: StructureTensor) -> Result<Self, RotaBaxterError> {
        if mu.dim() != basis_names.len() {
            return Err(LinAlgError::DimensionMismatch {
                expected: basis_names.len(),
                found: mu.dim(),
            }
            .into());
        }
        let alg = AssociativeAlgebra { basis_names, mu };
        if let Some((i, j, k)) = alg.associativity_witness() {
            return Err(RotaBaxterError::NotAssociative(i + 1, j + 1, k + 1));
        }
        Ok(alg)
    }

    /// 0-based `(i, j, k, coefficient)` entries.
    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self, RotaBaxterError>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut mu = StructureTensor::zero(n);
        for (i, j, k, c) in entries {
            let sum = mu.get(i, j, k) + &c;
            mu.set(i, j, k, sum);
        }
        Self::new(default_basis_names(n), mu)
    }

    pub fn zero(n: usize) -> Self {
        AssociativeAlgebra {
            basis_names: default_basis_names(n),
            mu: StructureTensor::zero(n),
        }
    }

    /// The sum product `∗` of a tridendriform algebra, which is associative
    /// whenever the axioms hold.
    pub fn from_star_product(alg: &TridendriformAlgebra) -> Result<Self, RotaBaxterError> {
        Self::new(alg.basis_names().to_vec(), alg.star_tensor())
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn mu(&self) -> &StructureTensor {
        &self.mu
    }

    pub fn has_nonzero_product(&self) -> bool {
        !self.mu.is_zero()
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(LinAlgError::DimensionMismatch {
                    expected: self.dim(),
                    found: v.len(),
                });
            }
        }
        Ok(self.mul_unchecked(x, y))
    }

    fn mul_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vector(self.dim());
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let w = xi * yj;
                add_scaled(&mut out, &w, self.mu.product_of_basis(i, j));
            }
        }
        out
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let e: Vec<_> = (0..n).map(|i| unit_vector(n, i)).collect();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_unchecked(&e[i], &e[j]);
                for k in 0..n {
                    let left = self.mul_unchecked(&ij, &e[k]);
                    let right = self.mul_unchecked(&e[i], &self.mul_unchecked(&e[j], &e[k]));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

/// A linear operator `R` together with a weight `θ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotaBaxterData {
    #[serde(alias = "R")]
    pub operator: LinearMap,
    pub theta: Rational,
}

impl RotaBaxterData {
    pub fn new(operator: LinearMap, theta: Rational) -> Self {
        RotaBaxterData { operator, theta }
    }

    pub fn identity(n: usize, theta: Rational) -> Self {
        RotaBaxterData::new(LinearMap::identity(n), theta)
    }

    pub fn from_json_str(s: &str) -> Result<Self, FormatError> {
        let rb: RotaBaxterData = serde_json::from_str(s)?;
        if rb.operator.rows() != rb.operator.cols() {
            return Err(FormatError::Invalid(format!(
                "operator must be square, got {}x{}",
                rb.operator.rows(),
                rb.operator.cols()
            )));
        }
        Ok(rb)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, FormatError> {
        Self::from_json_str(&read(path.as_ref())?)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn check_sizes(a: &AssociativeAlgebra, rb: &RotaBaxterData) -> Result<(), LinAlgError> {
    let n = a.dim();
    if rb.operator.rows() != n || rb.operator.cols() != n {
        return Err(LinAlgError::ShapeMismatch {
            left: (rb.operator.rows(), rb.operator.cols()),
            right: (n, n),
        });
    }
    Ok(())
}

/// First basis pair (0-based) where `R(a)∘R(b) = R(R(a)∘b + a∘R(b) + θ a∘b)` fails.
pub fn rota_baxter_witness(a: &AssociativeAlgebra, rb: &RotaBaxterData) -> Result<Option<(usize, usize)>, LinAlgError> {
    check_sizes(a, rb)?;
    let n = a.dim();
    let r = &rb.operator;
    let images: Vec<_> = (0..n).map(|i| r.image_of_basis(i)).collect();
    for i in 0..n {
        let ei = unit_vector(n, i);
        for j in 0..n {
            let ej = unit_vector(n, j);
            let lhs = a.mul_unchecked(&images[i], &images[j]);
            let mut inner = a.mul_unchecked(&images[i], &ej);
            for (x, y) in inner.iter_mut().zip(a.mul_unchecked(&ei, &images[j])) {
                *x += &y;
            }
            add_scaled(&mut inner, &rb.theta, &a.mul_unchecked(&ei, &ej));
            if lhs != r.apply(&inner)? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_rota_baxter(a: &AssociativeAlgebra, rb: &RotaBaxterData) -> Result<bool, LinAlgError> {
    Ok(rota_baxter_witness(a, rb)?.is_none())
}

/// The induced tridendriform algebra. Refuses operators that fail the
/// Rota–Baxter identity.
pub fn induced_tridendriform(
    a: &AssociativeAlgebra,
    rb: &RotaBaxterData,
) -> Result<TridendriformAlgebra, RotaBaxterError> {
    if let Some((i, j)) = rota_baxter_witness(a, rb)? {
        return Err(RotaBaxterError::NotRotaBaxter {
            theta: rb.theta.clone(),
            witness: (i + 1, j + 1),
        });
    }
    let n = a.dim();
    let r = &rb.operator;
    let mut prec = StructureTensor::zero(n);
    let mut succ = StructureTensor::zero(n);
    let mut vee = StructureTensor::zero(n);
    let images: Vec<_> = (0..n).map(|i| r.image_of_basis(i)).collect();
    for i in 0..n {
        let ei = unit_vector(n, i);
        for j in 0..n {
            let ej = unit_vector(n, j);
            let p = a.mul_unchecked(&ei, &images[j]);
            let s = a.mul_unchecked(&images[i], &ej);
            for k in 0..n {
                prec.set(i, j, k, p[k].clone());
                succ.set(i, j, k, s[k].clone());
                vee.set(i, j, k, &rb.theta * a.mu.get(i, j, k));
            }
        }
    }
    Ok(TridendriformAlgebra::from_tensors(
        a.basis_names.clone(),
        prec,
        succ,
        vee,
    )?)
}

/// The TDA format with a single product key `mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssociativeFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub mu: Vec<Entry>,
}

#[derive(Debug, Error)]
pub enum AssociativeLoadError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Algebra(#[from] RotaBaxterError),
}

impl AssociativeAlgebra {
    pub fn from_json_str(s: &str) -> Result<Self, AssociativeLoadError> {
        let file: AssociativeFile = serde_json::from_str(s).map_err(FormatError::from)?;
        let basis = resolve_basis(file.dim, file.basis)?;
        let mu = fill_tensor(file.dim, "mu", &file.mu)?;
        Ok(AssociativeAlgebra::new(basis, mu)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, AssociativeLoadError> {
        Self::from_json_str(&read(path.as_ref())?)
    }

    pub fn to_json_string(&self) -> String {
        let mut out = String::new();
        write_header(&mut out, self.dim(), &self.basis_names);
        write_entries(&mut out, "mu", &tensor_entries(&self.mu), true);
        out.push_str("}\n");
        out
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Small associative algebras used by examples and the command line.
pub mod stock {
    use super::*;

    pub const IDS: [&str; 3] = ["idempotent1", "ex2-star", "zero2"];

    /// `e1∘e1 = e1`.
    pub fn idempotent() -> AssociativeAlgebra {
        AssociativeAlgebra::from_entries(1, [(0, 0, 0, Rational::one())]).expect("associative")
    }

    /// Sum product of the two-dimensional example: `e2∗e2 = 3e1`.
    pub fn ex2_star() -> AssociativeAlgebra {
        AssociativeAlgebra::from_entries(2, [(1, 1, 0, Rational::from_int(3))]).expect("associative")
    }

    pub fn zero2() -> AssociativeAlgebra {
        AssociativeAlgebra::zero(2)
    }

    pub fn by_id(id: &str) -> Option<AssociativeAlgebra> {
        match id {
            "idempotent1" => Some(idempotent()),
            "ex2-star" => Some(ex2_star()),
            "zero2" => Some(zero2()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AssocProduct, ProductTag};
    use crate::exactla::Matrix;

    fn minus_one() -> Rational {
        Rational::from_int(-1)
    }

    #[test]
    fn zero_operator_is_always_rota_baxter() {
        for a in [stock::idempotent(), stock::ex2_star(), stock::zero2()] {
            for theta in [0, 1, -3] {
                let rb = RotaBaxterData::new(LinearMap::zero(a.dim(), a.dim()), Rational::from_int(theta));
                assert!(is_rota_baxter(&a, &rb).unwrap());
            }
        }
    }

    #[test]
    fn identity_weight_minus_one() {
        for a in [stock::idempotent(), stock::ex2_star(), stock::zero2()] {
            let rb = RotaBaxterData::identity(a.dim(), minus_one());
            assert!(is_rota_baxter(&a, &rb).unwrap());
        }
    }

    #[test]
    fn identity_weight_zero_rejected_with_witness() {
        let a = stock::ex2_star();
        let rb = RotaBaxterData::identity(2, Rational::zero());
        assert_eq!(rota_baxter_witness(&a, &rb).unwrap(), Some((1, 1)));
        let err = induced_tridendriform(&a, &rb).unwrap_err();
        assert_eq!(
            err,
            RotaBaxterError::NotRotaBaxter {
                theta: Rational::zero(),
                witness: (2, 2)
            }
        );
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let rb = RotaBaxterData::identity(3, minus_one());
        assert!(is_rota_baxter(&stock::ex2_star(), &rb).is_err());
    }

    #[test]
    fn zero_operator_weight_one_gives_vee_only() {
        let a = stock::ex2_star();
        let rb = RotaBaxterData::new(LinearMap::zero(2, 2), Rational::one());
        let t = induced_tridendriform(&a, &rb).unwrap();
        assert!(t.tensor(ProductTag::Prec).is_zero());
        assert!(t.tensor(ProductTag::Succ).is_zero());
        assert_eq!(t.tensor(ProductTag::Vee), a.mu());
        assert!(t.axiom_residuals().pass);
    }

    #[test]
    fn idempotent_identity_construction() {
        let t = induced_tridendriform(&stock::idempotent(), &RotaBaxterData::identity(1, minus_one())).unwrap();
        assert_eq!(t.tensor(ProductTag::Prec).get(0, 0, 0), &Rational::one());
        assert_eq!(t.tensor(ProductTag::Succ).get(0, 0, 0), &Rational::one());
        assert_eq!(t.tensor(ProductTag::Vee).get(0, 0, 0), &minus_one());
        assert!(t.axiom_residuals().pass);
        assert!(t.is_associative(AssocProduct::Star));
    }

    #[test]
    fn zero_algebra_induces_zero() {
        let rb = RotaBaxterData::new(
            LinearMap::new(Matrix::from_i64(&[&[1, 2], &[3, 4]])),
            Rational::new(5, 2),
        );
        let t = induced_tridendriform(&stock::zero2(), &rb).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn non_associative_product_rejected() {
        // e1∘e1 = e2, e2∘e1 = e1.
        let err =
            AssociativeAlgebra::from_entries(2, [(0, 0, 1, Rational::one()), (1, 0, 0, Rational::one())]).unwrap_err();
        assert!(matches!(err, RotaBaxterError::NotAssociative(..)));
    }

    #[test]
    fn files_round_trip() {
        let a = stock::ex2_star();
        let back = AssociativeAlgebra::from_json_str(&a.to_json_string()).unwrap();
        assert_eq!(back, a);
        let rb = RotaBaxterData::new(
            LinearMap::diagonal(&[Rational::new(1, 2), Rational::one()]),
            minus_one(),
        );
        assert_eq!(RotaBaxterData::from_json_str(&rb.to_json_string()).unwrap(), rb);
        let short = r#"{"R": [["1","0"],["0","1"]], "theta": "-1"}"#;
        assert_eq!(
            RotaBaxterData::from_json_str(short).unwrap(),
            RotaBaxterData::identity(2, minus_one())
        );
        assert!(RotaBaxterData::from_json_str(r#"{"R": [["1","0"]], "theta": "0"}"#).is_err());
    }
}
