// Isomorphism invariants and non-isomorphism certificates.
//
// cargo run --example fingerprint_compare

use tridend::catalog;
use tridend::opspaces::{compare, fingerprint};

fn main() {
    let ids: Vec<&str> = catalog::entries().filter(|e| e.dim() == 4).map(|e| e.id()).collect();
    let prints: Vec<_> = ids
        .iter()
        .map(|id| {
            fingerprint(
                &catalog::lookup(id)
                    .unwrap()
                    .instantiate_from(&catalog::default_params())
                    .unwrap(),
            )
        })
        .collect();

    let a = &prints[4];
    let b = &prints[6];
    println!("{} vs {}: {:?}", ids[4], ids[6], compare(a, b));

    let mut unresolved = Vec::new();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if prints[i] == prints[j] {
                unresolved.push((ids[i], ids[j]));
            }
        }
    }
    println!("pairs the fingerprint cannot separate: {unresolved:?}");
}
