use super::{LinAlgError, Matrix, Rational};

/// A subspace of `Q^n`, stored as the nonzero rows of its reduced row
/// echelon form. Equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Matrix::zeros(0, ambient_dim).nullspace()
    }

    /// Canonical basis of the span of `vectors` inside `Q^ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let m = Matrix::from_rows(ambient_dim, vectors)?;
        let echelon = m.rref();
        let rank = echelon.rank();
        let vectors = (0..rank).map(|r| echelon.reduced.row(r).to_vec()).collect();
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
            pivots: echelon.pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }

    /// Exact membership test: reduce `v` against the echelon basis.
    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinAlgError> {
        if v.len() != self.ambient_dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut residual = v.to_vec();
        for (basis, &p) in self.vectors.iter().zip(&self.pivots) {
            if residual[p].is_zero() {
                continue;
            }
            let factor = residual[p].clone();
            for (x, b) in residual.iter_mut().zip(basis) {
                *x -= &(&factor * b);
            }
        }
        Ok(residual.iter().all(Rational::is_zero))
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> Result<bool, LinAlgError> {
        for v in &other.vectors {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn contains_scalar_multiple() {
        let s = SubspaceBasis::span(2, vec![ints(&[1, 0])]).unwrap();
        assert!(s.contains(&ints(&[3, 0])).unwrap());
        assert!(!s.contains(&ints(&[0, 1])).unwrap());
    }

    #[test]
    fn full_space_contains_everything() {
        let s = SubspaceBasis::span(2, vec![ints(&[1, 1]), ints(&[1, -1])]).unwrap();
        assert_eq!(s, SubspaceBasis::full(2));
        for v in [[5, -7], [0, 0], [1, 2]] {
            assert!(s.contains(&ints(&v)).unwrap());
        }
    }

    #[test]
    fn contains_rejects_wrong_length() {
        let s = SubspaceBasis::zero(3);
        assert_eq!(
            s.contains(&ints(&[1, 2])),
            Err(LinAlgError::DimensionMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn span_drops_dependent_vectors() {
        let s = SubspaceBasis::span(2, vec![ints(&[1, 0]), ints(&[2, 0])]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.vectors(), &[ints(&[1, 0])]);
    }

    #[test]
    fn span_of_nothing_is_zero() {
        let s = SubspaceBasis::span(3, vec![]).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s, SubspaceBasis::zero(3));
    }

    #[test]
    fn span_three_with_one_relation() {
        // (1,0,-1) = (1,1,0) - (0,1,1).
        let s = SubspaceBasis::span(3, vec![ints(&[1, 1, 0]), ints(&[0, 1, 1]), ints(&[1, 0, -1])]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&ints(&[1, 0, -1])).unwrap());
    }

    #[test]
    fn span_rejects_ragged_input() {
        assert!(SubspaceBasis::span(3, vec![ints(&[1, 0])]).is_err());
    }
}
