//! Exact computations on tridendriform algebras over the rationals.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod exactla;
pub mod opspaces;
pub mod rotabaxter;

pub use algebra::{AlgebraError, LinearMap, ProductTag, TridendriformAlgebra};
pub use exactla::{Matrix, Rational, SubspaceBasis};
pub use opspaces::{operator_space, OperatorKind, OperatorSpace};
