use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ProductTag, StructureTensor, TridendriformAlgebra};
use crate::exactla::Rational;

pub const AXIOM_COUNT: usize = 7;

/// The seven identities, in order, with `∗` the sum product.
pub const AXIOM_NAMES: [&str; AXIOM_COUNT] = [
    "(a≺b)≺c = a≺(b∗c)",
    "(a≻b)≺c = a≻(b≺c)",
    "(a∗b)≻c = a≻(b≻c)",
    "(a≻b)∨c = a≻(b∨c)",
    "(a≺b)∨c = a∨(b≻c)",
    "(a∨b)≺c = a∨(b≺c)",
    "(a∨b)∨c = a∨(b∨c)",
];

/// Earliest nonzero residual in `(axiom, i, j, k, q)` order; all indices 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub q: usize,
    pub value: Rational,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axiom {} {} fails at (i,j,k)=({},{},{}), component e{}: residual {}",
            self.axiom,
            AXIOM_NAMES[self.axiom - 1],
            self.i,
            self.j,
            self.k,
            self.q,
            self.value
        )
    }
}

/// Residual tensors `R_m[i][j][k][q]` = LHS − RHS of axiom `m` evaluated at
/// `(e_i, e_j, e_k)`, coefficient of `e_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualReport {
    dim: usize,
    residuals: Vec<Vec<Rational>>,
    pub pass: bool,
    pub first_failure: Option<AxiomFailure>,
}

impl ResidualReport {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Residual for axiom `axiom` (1-based) at 0-based `(i, j, k, q)`.
    pub fn residual(&self, axiom: usize, i: usize, j: usize, k: usize, q: usize) -> &Rational {
        let n = self.dim;
        &self.residuals[axiom - 1][((i * n + j) * n + k) * n + q]
    }

    /// Flat residual tensor of one axiom, `(i, j, k, q)` row-major.
    pub fn tensor(&self, axiom: usize) -> &[Rational] {
        &self.residuals[axiom - 1]
    }

    pub fn failing_axioms(&self) -> Vec<usize> {
        (1..=AXIOM_COUNT)
            .filter(|&m| self.residuals[m - 1].iter().any(|x| !x.is_zero()))
            .collect()
    }
}

/// `Σ_p A_ij^p B_pk^q`: basis form of `(e_i ∘_A e_j) ∘_B e_k`.
fn left_nested(a: &StructureTensor, b: &StructureTensor, i: usize, j: usize, k: usize, q: usize) -> Rational {
    (0..a.dim()).map(|p| a.get(i, j, p) * b.get(p, k, q)).sum()
}

/// `Σ_p A_jk^p B_ip^q`: basis form of `e_i ∘_B (e_j ∘_A e_k)`.
fn right_nested(a: &StructureTensor, b: &StructureTensor, i: usize, j: usize, k: usize, q: usize) -> Rational {
    (0..a.dim()).map(|p| a.get(j, k, p) * b.get(i, p, q)).sum()
}

impl TridendriformAlgebra {
    /// Evaluates the seven axioms in structure-constant form over every
    /// `(i, j, k, q)`.
    pub fn axiom_residuals(&self) -> ResidualReport {
        let n = self.dim();
        let prec = self.tensor(ProductTag::Prec);
        let succ = self.tensor(ProductTag::Succ);
        let vee = self.tensor(ProductTag::Vee);
        let star = self.star_tensor();

        // (left_inner, left_outer, right_inner, right_outer):
        // (e_i ∘li e_j) ∘lo e_k − e_i ∘ro (e_j ∘ri e_k)
        let shapes: [(&StructureTensor, &StructureTensor, &StructureTensor, &StructureTensor); AXIOM_COUNT] = [
            (prec, prec, &star, prec),
            (succ, prec, prec, succ),
            (&star, succ, succ, succ),
            (succ, vee, vee, succ),
            (prec, vee, succ, vee),
            (vee, prec, prec, vee),
            (vee, vee, vee, vee),
        ];

        let mut residuals = Vec::with_capacity(AXIOM_COUNT);
        let mut first_failure = None;
        for (m, (li, lo, ri, ro)) in shapes.iter().enumerate() {
            let mut r = Vec::with_capacity(n * n * n * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        for q in 0..n {
                            let value = left_nested(li, lo, i, j, k, q) - right_nested(ri, ro, i, j, k, q);
                            if first_failure.is_none() && !value.is_zero() {
                                first_failure = Some(AxiomFailure {
                                    axiom: m + 1,
                                    i: i + 1,
                                    j: j + 1,
                                    k: k + 1,
                                    q: q + 1,
                                    value: value.clone(),
                                });
                            }
                            r.push(value);
                        }
                    }
                }
            }
            residuals.push(r);
        }
        ResidualReport {
            dim: n,
            residuals,
            pass: first_failure.is_none(),
            first_failure,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{dt35, ex21, idempotent_prec_succ};
    use super::*;

    #[test]
    fn ex21_passes() {
        let r = ex21().axiom_residuals();
        assert!(r.pass);
        assert!(r.first_failure.is_none());
        assert!(r.failing_axioms().is_empty());
    }

    #[test]
    fn dt35_passes() {
        assert!(dt35().axiom_residuals().pass);
    }

    #[test]
    fn lone_idempotent_prec_passes() {
        let a = TridendriformAlgebra::from_entries(1, [(ProductTag::Prec, 0, 0, 0, Rational::one())]);
        assert!(a.axiom_residuals().pass);
    }

    #[test]
    fn prec_and_succ_idempotent_fails_axiom_one() {
        let r = idempotent_prec_succ().axiom_residuals();
        assert!(!r.pass);
        let f = r.first_failure.clone().unwrap();
        assert_eq!((f.axiom, f.i, f.j, f.k, f.q), (1, 1, 1, 1, 1));
        // (e1≺e1)≺e1 = e1 against e1≺(e1∗e1) = 2e1.
        assert_eq!(f.value, Rational::from_int(-1));
        assert_eq!(r.residual(1, 0, 0, 0, 0), &Rational::from_int(-1));
    }

    #[test]
    fn zero_algebra_passes() {
        assert!(TridendriformAlgebra::zero(3).axiom_residuals().pass);
    }
}
