use super::{ProductTag, TridendriformAlgebra};
use crate::exactla::{LinAlgError, Matrix, Rational, SubspaceBasis};

/// Which products the center's commutation condition ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CenterMode {
    #[default]
    AllProducts,
    Single(ProductTag),
}

impl CenterMode {
    fn tags(self) -> Vec<ProductTag> {
        match self {
            CenterMode::AllProducts => ProductTag::ALL.to_vec(),
            CenterMode::Single(t) => vec![t],
        }
    }
}

impl TridendriformAlgebra {
    fn check_ambient(&self, s: &SubspaceBasis) -> Result<(), LinAlgError> {
        if s.ambient_dim() != self.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// `A ∗ B = A≺B + A≻B + A∨B`, each term the span of basis-vector products.
    pub fn subspace_product(&self, a: &SubspaceBasis, b: &SubspaceBasis) -> Result<SubspaceBasis, LinAlgError> {
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        let mut products = Vec::new();
        for tag in ProductTag::ALL {
            for x in a.vectors() {
                for y in b.vectors() {
                    products.push(self.mul_unchecked(tag, x, y));
                }
            }
        }
        SubspaceBasis::span(self.dim(), products)
    }

    /// `E ∗ E`.
    pub fn square(&self) -> SubspaceBasis {
        let full = SubspaceBasis::full(self.dim());
        self.subspace_product(&full, &full).expect("ambient matches")
    }

    /// `{ a : a∘e_j = e_j∘a for every j }`, over all three products by default.
    pub fn center(&self) -> SubspaceBasis {
        self.center_with(CenterMode::AllProducts)
    }

    pub fn center_with(&self, mode: CenterMode) -> SubspaceBasis {
        let n = self.dim();
        // Unknowns a_1..a_n; row per (product, j, q): Σ_i a_i (T_ij^q − T_ji^q) = 0.
        let mut rows = Vec::new();
        for tag in mode.tags() {
            let t = self.tensor(tag);
            for j in 0..n {
                for q in 0..n {
                    rows.push((0..n).map(|i| t.get(i, j, q) - t.get(j, i, q)).collect());
                }
            }
        }
        Matrix::from_rows(n, rows).expect("rows have length n").nullspace()
    }

    /// `{ a : a∘s = s∘a = 0 for all s in A and every product }`.
    pub fn centralizer(&self, a: &SubspaceBasis) -> Result<SubspaceBasis, LinAlgError> {
        self.check_ambient(a)?;
        let n = self.dim();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for tag in ProductTag::ALL {
            let t = self.tensor(tag);
            for s in a.vectors() {
                for q in 0..n {
                    // (x ∘ s)_q = Σ_i x_i Σ_j s_j T_ij^q
                    rows.push((0..n).map(|i| (0..n).map(|j| &s[j] * t.get(i, j, q)).sum()).collect());
                    // (s ∘ x)_q = Σ_i x_i Σ_j s_j T_ji^q
                    rows.push((0..n).map(|i| (0..n).map(|j| &s[j] * t.get(j, i, q)).sum()).collect());
                }
            }
        }
        Ok(Matrix::from_rows(n, rows)?.nullspace())
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{dt35, ex21};
    use super::*;
    use crate::exactla::{int_vector, unit_vector};

    fn span(n: usize, vs: &[&[i64]]) -> SubspaceBasis {
        SubspaceBasis::span(n, vs.iter().map(|v| int_vector(v)).collect()).unwrap()
    }

    #[test]
    fn product_of_e2_with_itself() {
        let a = ex21();
        let e2 = span(2, &[&[0, 1]]);
        assert_eq!(a.subspace_product(&e2, &e2).unwrap(), span(2, &[&[1, 0]]));
    }

    #[test]
    fn zero_algebra_product_is_zero() {
        let z = TridendriformAlgebra::zero(3);
        let full = SubspaceBasis::full(3);
        assert_eq!(z.subspace_product(&full, &full).unwrap().dim(), 0);
    }

    #[test]
    fn dt35_square_is_e3() {
        assert_eq!(dt35().square(), span(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn product_checks_ambient() {
        assert!(ex21()
            .subspace_product(&SubspaceBasis::full(3), &SubspaceBasis::full(2))
            .is_err());
    }

    #[test]
    fn center_examples() {
        assert_eq!(TridendriformAlgebra::zero(4).center(), SubspaceBasis::full(4));
        assert_eq!(ex21().center(), SubspaceBasis::full(2));
    }

    /// Brute force: a basis vector coordinate vector a is central iff every
    /// commutator a∘e_j − e_j∘a vanishes, computed through multiply().
    fn is_central(alg: &TridendriformAlgebra, a: &[Rational]) -> bool {
        let n = alg.dim();
        ProductTag::ALL.iter().all(|&t| {
            (0..n).all(|j| {
                let e = unit_vector(n, j);
                alg.multiply(t, a, &e).unwrap() == alg.multiply(t, &e, a).unwrap()
            })
        })
    }

    #[test]
    fn dt35_center_matches_enumeration() {
        let alg = dt35();
        let c = alg.center();
        for v in c.vectors() {
            assert!(is_central(&alg, v));
        }
        // Enumerate small coordinate vectors; central ones must lie in c and
        // non-central ones must not.
        let range = -2..=2;
        for x in range.clone() {
            for y in range.clone() {
                for z in range.clone() {
                    let v = int_vector(&[x, y, z]);
                    assert_eq!(c.contains(&v).unwrap(), is_central(&alg, &v), "{v:?}");
                }
            }
        }
        // e1≻e2 = 0 but e2≻e1 = e3, which rules out e1 and e2.
        assert_eq!(c, span(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn center_per_product_variant() {
        let alg = dt35();
        let c_prec = alg.center_with(CenterMode::Single(ProductTag::Prec));
        assert!(c_prec.contains_subspace(&alg.center()).unwrap());
    }

    #[test]
    fn centralizer_examples() {
        let z = TridendriformAlgebra::zero(3);
        assert_eq!(z.centralizer(&SubspaceBasis::full(3)).unwrap(), SubspaceBasis::full(3));
        let a = ex21();
        assert_eq!(a.centralizer(&span(2, &[&[0, 1]])).unwrap(), span(2, &[&[1, 0]]));
        assert_eq!(a.centralizer(&span(2, &[&[1, 0]])).unwrap(), SubspaceBasis::full(2));
        assert!(a.centralizer(&SubspaceBasis::full(3)).is_err());
    }
}
