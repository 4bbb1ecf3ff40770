// Rational RREF, rank and nullspace.
//
// cargo run --example exact_linear_algebra

use tridend::{Matrix, Rational};

fn main() {
    let m = Matrix::from_i64(&[&[2, 4, -2, 1], &[1, 2, 1, 0], &[3, 6, -1, 1]]);
    let e = m.rref();
    println!("pivots {:?}, rank {}", e.pivots, e.rank());
    let ns = m.nullspace();
    println!("nullity {}", ns.dim());
    for v in ns.vectors() {
        let image = m.mul_vec(v).unwrap();
        assert!(image.iter().all(Rational::is_zero));
        println!("  {:?}", v.iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    let third: Rational = "1/3".parse().unwrap();
    println!("1/3 + 1/6 = {}", &third + &Rational::new(1, 6));
}
