//! Independent recomputation of operator spaces through vector products, and
//! pointwise checks of every computed basis map on random vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tridend::algebra::ProductTag;
use tridend::catalog;
use tridend::exactla::{unit_vector, zero_vector};
use tridend::opspaces::{operator_space, OperatorKind};
use tridend::{LinearMap, Matrix, Rational, SubspaceBasis, TridendriformAlgebra};

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Residual vectors of the defining identities for one map at one basis pair.
fn residuals(
    alg: &TridendriformAlgebra,
    kind: OperatorKind,
    d: &LinearMap,
    x: &[Rational],
    y: &[Rational],
) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for tag in ProductTag::ALL {
        let m = |u: &[Rational], v: &[Rational]| alg.multiply(tag, u, v).unwrap();
        let dxy = d.apply(&m(x, y)).unwrap();
        let dx_y = m(&d.apply(x).unwrap(), y);
        let x_dy = m(x, &d.apply(y).unwrap());
        match kind {
            OperatorKind::Derivation => out.push(sub(&dxy, &add(&dx_y, &x_dy))),
            OperatorKind::CentralDerivation => out.extend([dxy, dx_y, x_dy]),
            OperatorKind::Centroid => out.extend([sub(&dxy, &dx_y), sub(&dxy, &x_dy)]),
            OperatorKind::QuasiCentroid => out.push(sub(&dx_y, &x_dy)),
        }
    }
    out
}

/// The solution space assembled column by column from elementary maps.
fn oracle_space(alg: &TridendriformAlgebra, kind: OperatorKind) -> SubspaceBasis {
    let n = alg.dim();
    let basis: Vec<_> = (0..n).map(|i| unit_vector(n, i)).collect();
    // Column-major unknowns: index col * n + row for E(row <- col).
    let mut columns = Vec::new();
    for col in 0..n {
        for row in 0..n {
            let e = LinearMap::elementary(n, row, col);
            let mut column = Vec::new();
            for x in &basis {
                for y in &basis {
                    for r in residuals(alg, kind, &e, x, y) {
                        column.extend(r);
                    }
                }
            }
            columns.push(column);
        }
    }
    let rows = columns[0].len();
    let mut entries = Vec::with_capacity(rows * n * n);
    for r in 0..rows {
        for c in &columns {
            entries.push(c[r].clone());
        }
    }
    Matrix::from_entries(rows, n * n, entries).unwrap().nullspace()
}

#[test]
fn operator_spaces_match_oracle_on_small_entries() {
    for e in catalog::entries().filter(|e| e.dim() <= 3) {
        let alg = e.instantiate_from(&catalog::default_params()).unwrap();
        for kind in OperatorKind::ALL {
            let space = operator_space(&alg, kind);
            let oracle = oracle_space(&alg, kind);
            assert_eq!(space.dimension(), oracle.dim(), "{} {kind:?}", e.id());
            assert_eq!(space.solutions(), &oracle, "{} {kind:?}", e.id());
        }
    }
}

#[test]
fn operator_spaces_match_oracle_on_dim4_entries() {
    for id in ["DT4.1", "DT4.9", "DT4.18", "DT4.20"] {
        let alg = catalog::lookup(id)
            .unwrap()
            .instantiate_from(&catalog::default_params())
            .unwrap();
        for kind in OperatorKind::ALL {
            assert_eq!(
                operator_space(&alg, kind).solutions(),
                &oracle_space(&alg, kind),
                "{id} {kind:?}"
            );
        }
    }
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
        .collect()
}

#[test]
fn basis_maps_satisfy_identities_on_random_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for e in catalog::entries() {
        let alg = e.instantiate_from(&catalog::default_params()).unwrap();
        let n = alg.dim();
        for kind in OperatorKind::ALL {
            let space = operator_space(&alg, kind);
            for d in space.basis() {
                for _ in 0..4 {
                    let x = random_vector(&mut rng, n);
                    let y = random_vector(&mut rng, n);
                    for r in residuals(&alg, kind, d, &x, &y) {
                        assert_eq!(r, zero_vector(n), "{} {kind:?}", e.id());
                    }
                }
            }
            // A random combination of basis maps stays in the space.
            let combo = space.basis().iter().fold(LinearMap::zero(n, n), |acc, d| {
                let s = Rational::from_int(rng.gen_range(-3..=3));
                LinearMap::new(acc.matrix().sub(&d.matrix().scale(&-s)).unwrap())
            });
            assert!(space.contains(&combo).unwrap());
        }
    }
}

#[test]
fn maps_outside_the_space_break_an_identity() {
    // Every elementary map not in the space must leave some nonzero residual.
    let alg = catalog::instantiate("DT3.5", &catalog::Params::new()).unwrap();
    let n = alg.dim();
    let basis: Vec<_> = (0..n).map(|i| unit_vector(n, i)).collect();
    for kind in OperatorKind::ALL {
        let space = operator_space(&alg, kind);
        for row in 0..n {
            for col in 0..n {
                let e = LinearMap::elementary(n, row, col);
                let violates = basis.iter().any(|x| {
                    basis.iter().any(|y| {
                        residuals(&alg, kind, &e, x, y)
                            .iter()
                            .any(|r| r.iter().any(|c| !c.is_zero()))
                    })
                });
                assert_eq!(space.contains(&e).unwrap(), !violates, "{kind:?} E({row},{col})");
            }
        }
    }
}
