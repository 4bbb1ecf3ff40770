//! Spaces of linear operators cut out by derivation-like identities.
//!
//! Each condition is linear in the operator's matrix entries, so every space
//! is the nullspace of an assembled matrix with `n²` columns. Column index
//! `c·n + r` holds the unknown at row `r`, column `c` of the operator, i.e.
//! the unknowns are the images of `e_1, …, e_n` stacked.

mod fingerprint;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{LinearMap, ProductTag, StructureTensor, TridendriformAlgebra};
use crate::exactla::{LinAlgError, Matrix, Rational, SubspaceBasis};

pub use fingerprint::{compare, fingerprint, Comparison, Fingerprint, INVARIANT_NAMES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    /// `D(x∘y) = D(x)∘y + x∘D(y)`
    Derivation,
    /// `D(x∘y) = 0`, `D(x)∘y = 0` and `x∘D(y) = 0`
    CentralDerivation,
    /// `ψ(x∘y) = ψ(x)∘y = x∘ψ(y)`
    Centroid,
    /// `ψ(x)∘y = x∘ψ(y)`
    QuasiCentroid,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 4] = [
        OperatorKind::Derivation,
        OperatorKind::CentralDerivation,
        OperatorKind::Centroid,
        OperatorKind::QuasiCentroid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Derivation => "derivation",
            OperatorKind::CentralDerivation => "central-derivation",
            OperatorKind::Centroid => "centroid",
            OperatorKind::QuasiCentroid => "quasi-centroid",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown operator kind {s:?}"))
    }
}

/// Coefficient rows of the three linear expressions that appear in every
/// condition, for a fixed product, basis pair `(i, j)` and component `q`.
struct Terms {
    /// `op(e_i ∘ e_j)_q`
    op_of_product: Vec<Rational>,
    /// `(op(e_i) ∘ e_j)_q`
    op_left: Vec<Rational>,
    /// `(e_i ∘ op(e_j))_q`
    op_right: Vec<Rational>,
}

fn terms(t: &StructureTensor, i: usize, j: usize, q: usize) -> Terms {
    let n = t.dim();
    let idx = |row: usize, col: usize| col * n + row;
    let mut op_of_product = vec![Rational::zero(); n * n];
    let mut op_left = vec![Rational::zero(); n * n];
    let mut op_right = vec![Rational::zero(); n * n];
    for p in 0..n {
        // op(e_i∘e_j)_q = Σ_p T_ij^p op[q][p]
        op_of_product[idx(q, p)] += t.get(i, j, p);
        // (op(e_i)∘e_j)_q = Σ_p op[p][i] T_pj^q
        op_left[idx(p, i)] += t.get(p, j, q);
        // (e_i∘op(e_j))_q = Σ_p op[p][j] T_ip^q
        op_right[idx(p, j)] += t.get(i, p, q);
    }
    Terms {
        op_of_product,
        op_left,
        op_right,
    }
}

fn combine(parts: &[(&[Rational], i64)]) -> Vec<Rational> {
    let len = parts[0].0.len();
    let mut out = vec![Rational::zero(); len];
    for (v, sign) in parts {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            match sign {
                1 => *o += x,
                -1 => *o -= x,
                _ => unreachable!("signs are ±1"),
            }
        }
    }
    out
}

/// The linear system whose nullspace is the operator space of `kind`.
///
/// Rows are generated in `(product, i, j, q)` order; centroid and central
/// derivation contribute several rows per index tuple.
pub fn assemble_system(alg: &TridendriformAlgebra, kind: OperatorKind) -> Matrix {
    let n = alg.dim();
    let mut rows = Vec::new();
    for tag in ProductTag::ALL {
        let t = alg.tensor(tag);
        for i in 0..n {
            for j in 0..n {
                for q in 0..n {
                    let Terms {
                        op_of_product: prod,
                        op_left: left,
                        op_right: right,
                    } = terms(t, i, j, q);
                    match kind {
                        OperatorKind::Derivation => {
                            rows.push(combine(&[(&prod, 1), (&left, -1), (&right, -1)]));
                        }
                        OperatorKind::CentralDerivation => {
                            rows.push(prod);
                            rows.push(left);
                            rows.push(right);
                        }
                        OperatorKind::Centroid => {
                            rows.push(combine(&[(&prod, 1), (&left, -1)]));
                            rows.push(combine(&[(&prod, 1), (&right, -1)]));
                        }
                        OperatorKind::QuasiCentroid => {
                            rows.push(combine(&[(&left, 1), (&right, -1)]));
                        }
                    }
                }
            }
        }
    }
    Matrix::from_rows(n * n, rows).expect("rows have n^2 entries")
}

/// A solved operator space: canonical basis plus the solution subspace of
/// flattened operators (for exact membership tests).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSpace {
    kind: OperatorKind,
    algebra_dim: usize,
    basis: Vec<LinearMap>,
    solutions: SubspaceBasis,
}

impl OperatorSpace {
    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    /// The space as a subspace of `Q^{n²}` (column-major flattenings).
    pub fn solutions(&self) -> &SubspaceBasis {
        &self.solutions
    }

    pub fn contains(&self, map: &LinearMap) -> Result<bool, LinAlgError> {
        if map.rows() != self.algebra_dim || map.cols() != self.algebra_dim {
            return Err(LinAlgError::ShapeMismatch {
                left: (map.rows(), map.cols()),
                right: (self.algebra_dim, self.algebra_dim),
            });
        }
        self.solutions.contains(&map.flatten())
    }

    pub fn is_subspace_of(&self, other: &OperatorSpace) -> bool {
        other
            .solutions
            .contains_subspace(&self.solutions)
            .expect("same algebra dimension")
    }

    pub fn to_record(&self) -> OperatorSpaceRecord {
        OperatorSpaceRecord {
            kind: self.kind,
            dimension: self.dimension(),
            basis: self.basis.clone(),
        }
    }
}

/// Serialized form: kind, dimension, and basis maps as rows of rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorSpaceRecord {
    pub kind: OperatorKind,
    pub dimension: usize,
    pub basis: Vec<LinearMap>,
}

pub fn operator_space(alg: &TridendriformAlgebra, kind: OperatorKind) -> OperatorSpace {
    let n = alg.dim();
    let solutions = assemble_system(alg, kind).nullspace();
    let basis = solutions
        .vectors()
        .iter()
        .map(|v| LinearMap::from_flat(n, v).expect("n^2 entries"))
        .collect();
    OperatorSpace {
        kind,
        algebra_dim: n,
        basis,
        solutions,
    }
}

/// `[a, b] = a·b − b·a`.
pub fn commutator(a: &LinearMap, b: &LinearMap) -> Result<LinearMap, LinAlgError> {
    let ab = a.compose(b)?;
    let ba = b.compose(a)?;
    ab.matrix().sub(ba.matrix()).map(LinearMap::new)
}

/// `[left, right] ⊆ target`, checked on every pair of basis maps.
pub fn closure_check(
    alg: &TridendriformAlgebra,
    left: OperatorKind,
    right: OperatorKind,
    target: OperatorKind,
) -> bool {
    let l = operator_space(alg, left);
    let r = operator_space(alg, right);
    let t = operator_space(alg, target);
    spaces_close(&l, &r, &t)
}

/// Same as [`closure_check`] on precomputed spaces.
pub fn spaces_close(left: &OperatorSpace, right: &OperatorSpace, target: &OperatorSpace) -> bool {
    left.basis.iter().all(|a| {
        right.basis.iter().all(|b| {
            let c = commutator(a, b).expect("square maps of equal size");
            target.contains(&c).expect("same algebra dimension")
        })
    })
}
