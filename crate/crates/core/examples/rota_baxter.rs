// Tridendriform algebras from Rota-Baxter operators on associative algebras.
//
// cargo run --example rota_baxter

use tridend::rotabaxter::{induced_tridendriform, rota_baxter_witness, stock, RotaBaxterData};
use tridend::{LinearMap, Rational};

fn main() {
    for id in stock::IDS {
        let a = stock::by_id(id).unwrap();
        let rb = RotaBaxterData::identity(a.dim(), Rational::from_int(-1));
        let t = induced_tridendriform(&a, &rb).unwrap();
        println!("{id}: R = id, θ = -1 gives axioms pass = {}", t.axiom_residuals().pass);
    }

    // Weight zero with R = id fails wherever the product is nonzero.
    let a = stock::ex2_star();
    let rb = RotaBaxterData::identity(2, Rational::zero());
    println!("ex2-star, θ = 0: witness {:?}", rota_baxter_witness(&a, &rb).unwrap());

    // The zero operator satisfies the identity for any weight.
    let rb = RotaBaxterData::new(LinearMap::zero(2, 2), Rational::new(3, 2));
    let t = induced_tridendriform(&a, &rb).unwrap();
    print!("{}", t.to_tda_string());
}
