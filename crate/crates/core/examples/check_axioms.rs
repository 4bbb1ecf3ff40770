// Build an algebra from structure constants and check the seven axioms.
//
// cargo run --example check_axioms

use tridend::algebra::ProductTag::{Prec, Succ, Vee};
use tridend::{catalog, Rational, TridendriformAlgebra};

fn main() {
    // e2 ∘ e2 = e1 for all three products.
    let one = Rational::one;
    let alg = TridendriformAlgebra::from_entries(
        2,
        [(Prec, 1, 1, 0, one()), (Succ, 1, 1, 0, one()), (Vee, 1, 1, 0, one())],
    );
    let report = alg.axiom_residuals();
    println!("hand-built: pass = {}", report.pass);

    // Idempotent prec and succ on one basis vector break the first axiom.
    let bad = TridendriformAlgebra::from_entries(1, [(Prec, 0, 0, 0, one()), (Succ, 0, 0, 0, one())]);
    if let Some(f) = bad.axiom_residuals().first_failure {
        println!("idempotent prec+succ: {f}");
    }

    for id in ["DT3.5", "DT4.1", "DT4.18"] {
        let alg = catalog::instantiate(id, &catalog::Params::new()).unwrap();
        match alg.verify() {
            Ok(v) => println!(
                "{id}: verified, star associative = {}",
                v.is_associative(tridend::algebra::AssocProduct::Star)
            ),
            Err(e) => println!("{id}: {e}"),
        }
    }
}
