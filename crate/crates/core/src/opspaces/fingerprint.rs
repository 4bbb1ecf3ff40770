use serde::{Deserialize, Serialize};

use super::{operator_space, OperatorKind};
use crate::algebra::{ProductTag, TridendriformAlgebra};

/// Invariants in comparison order. `compare` reports the first that differs.
pub const INVARIANT_NAMES: [&str; 10] = [
    "dim",
    "der_dim",
    "zder_dim",
    "centroid_dim",
    "quasi_centroid_dim",
    "center_dim",
    "square_dim",
    "prec_rank",
    "succ_rank",
    "vee_rank",
];

/// Isomorphism invariants of an algebra. Two algebras with different
/// fingerprints are not isomorphic; equal fingerprints prove nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub der_dim: usize,
    pub zder_dim: usize,
    pub centroid_dim: usize,
    pub quasi_centroid_dim: usize,
    pub center_dim: usize,
    /// `dim(E ∗ E)`
    pub square_dim: usize,
    /// Ranks of the `n² × n` flattenings of `≺`, `≻`, `∨`.
    pub prec_rank: usize,
    pub succ_rank: usize,
    pub vee_rank: usize,
}

impl Fingerprint {
    pub fn values(&self) -> [usize; 10] {
        [
            self.dim,
            self.der_dim,
            self.zder_dim,
            self.centroid_dim,
            self.quasi_centroid_dim,
            self.center_dim,
            self.square_dim,
            self.prec_rank,
            self.succ_rank,
            self.vee_rank,
        ]
    }
}

pub fn fingerprint(alg: &TridendriformAlgebra) -> Fingerprint {
    let dim_of = |kind| operator_space(alg, kind).dimension();
    Fingerprint {
        dim: alg.dim(),
        der_dim: dim_of(OperatorKind::Derivation),
        zder_dim: dim_of(OperatorKind::CentralDerivation),
        centroid_dim: dim_of(OperatorKind::Centroid),
        quasi_centroid_dim: dim_of(OperatorKind::QuasiCentroid),
        center_dim: alg.center().dim(),
        square_dim: alg.square().dim(),
        prec_rank: alg.tensor(ProductTag::Prec).flattening().rank(),
        succ_rank: alg.tensor(ProductTag::Succ).flattening().rank(),
        vee_rank: alg.tensor(ProductTag::Vee).flattening().rank(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Comparison {
    /// Certificate of non-isomorphism: the first invariant that differs.
    Distinguishable {
        invariant: String,
        left: usize,
        right: usize,
    },
    /// Every invariant agrees. Not a claim of isomorphism.
    Inconclusive,
}

pub fn compare(left: &Fingerprint, right: &Fingerprint) -> Comparison {
    let (l, r) = (left.values(), right.values());
    INVARIANT_NAMES
        .iter()
        .zip(l.iter().zip(r.iter()))
        .find(|(_, (a, b))| a != b)
        .map_or(Comparison::Inconclusive, |(name, (&a, &b))| {
            Comparison::Distinguishable {
                invariant: (*name).to_string(),
                left: a,
                right: b,
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::ex21;

    #[test]
    fn zero_algebra_fingerprint() {
        let f = fingerprint(&TridendriformAlgebra::zero(2));
        assert_eq!(
            f,
            Fingerprint {
                dim: 2,
                der_dim: 4,
                zder_dim: 4,
                centroid_dim: 4,
                quasi_centroid_dim: 4,
                center_dim: 2,
                square_dim: 0,
                prec_rank: 0,
                succ_rank: 0,
                vee_rank: 0,
            }
        );
    }

    #[test]
    fn self_comparison_is_inconclusive() {
        let f = fingerprint(&ex21());
        assert_eq!(compare(&f, &f), Comparison::Inconclusive);
    }

    #[test]
    fn dimension_difference_is_reported_first() {
        let a = fingerprint(&ex21());
        let b = fingerprint(&TridendriformAlgebra::zero(3));
        assert_eq!(
            compare(&a, &b),
            Comparison::Distinguishable {
                invariant: "dim".into(),
                left: 2,
                right: 3
            }
        );
    }

    #[test]
    fn comparison_serializes_with_verdict_tag() {
        let c = Comparison::Distinguishable {
            invariant: "der_dim".into(),
            left: 7,
            right: 5,
        };
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"verdict":"distinguishable","invariant":"der_dim","left":7,"right":5}"#
        );
        assert_eq!(serde_json::from_str::<Comparison>(&s).unwrap(), c);
    }
}
