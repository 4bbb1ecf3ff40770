// Center, square and centralizers as exact subspaces.
//
// cargo run --example subspaces

use tridend::exactla::int_vector;
use tridend::{catalog, SubspaceBasis};

fn main() {
    let alg = catalog::instantiate("DT3.5", &catalog::Params::new()).unwrap();
    println!("center: {:?}", alg.center().vectors());
    println!("E∗E:    {:?}", alg.square().vectors());

    let a = SubspaceBasis::span(3, vec![int_vector(&[1, 0, 0])]).unwrap();
    println!("centralizer of e1: {:?}", alg.centralizer(&a).unwrap().vectors());
}
