//! Exact linear algebra over the rationals.
//!
//! Everything downstream (axiom residuals, operator spaces, subspace
//! products) reduces to rank and nullspace computations on small rational
//! matrices, so this module keeps to dense storage and plain Gauss-Jordan
//! elimination with a fixed pivoting order.

mod matrix;
mod rational;
mod subspace;

use thiserror::Error;

pub use matrix::{Echelon, Matrix};
pub use rational::{ParseRationalError, Rational};
pub use subspace::SubspaceBasis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}

/// Convenience: vector of rationals from small integers.
pub fn int_vector(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&x| Rational::from_int(x)).collect()
}

pub fn zero_vector(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn add_scaled(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if scale.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += &(scale * x);
    }
}
