// Export a catalog entry to a TDA file and read it back.
//
// cargo run --example tda_files

use tridend::{catalog, TridendriformAlgebra};

fn main() {
    let params = catalog::parse_params("a=1/2,b=-3").unwrap();
    let alg = catalog::instantiate("DT4.20", &params).unwrap();
    let path = std::env::temp_dir().join("dt4_20.tda.json");
    alg.save(&path).unwrap();
    let back = TridendriformAlgebra::load(&path).unwrap();
    println!("round trip equal: {}", back == alg);
    print!("{}", std::fs::read_to_string(&path).unwrap());
    let _ = std::fs::remove_file(path);
}
