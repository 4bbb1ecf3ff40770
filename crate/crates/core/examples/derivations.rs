// Derivations and central derivations, with the Lie bracket closing.
//
// cargo run --example derivations

use tridend::catalog;
use tridend::opspaces::{closure_check, commutator, operator_space, OperatorKind};

fn main() {
    let alg = catalog::instantiate("DT4.9", &catalog::unit_params()).unwrap();
    let der = operator_space(&alg, OperatorKind::Derivation);
    println!("Der(DT4.9) has dimension {}", der.dimension());
    for (n, d) in der.basis().iter().enumerate() {
        println!("  D{} = {:?}", n + 1, d.to_string_rows());
    }

    let [a, b, ..] = der.basis() else { return };
    let c = commutator(a, b).unwrap();
    println!("[D1, D2] in Der: {}", der.contains(&c).unwrap());

    let zder = operator_space(&alg, OperatorKind::CentralDerivation);
    println!("ZDer(DT4.9) has dimension {}", zder.dimension());
    println!("ZDer ⊆ Der: {}", zder.is_subspace_of(&der));
    println!(
        "[Der, ZDer] ⊆ ZDer: {}",
        closure_check(
            &alg,
            OperatorKind::Derivation,
            OperatorKind::CentralDerivation,
            OperatorKind::CentralDerivation
        )
    );
}
