// Centroid and quasi-centroid spaces, printed as JSON records.
//
// cargo run --example centroids

use tridend::catalog;
use tridend::opspaces::{operator_space, OperatorKind};
use tridend::LinearMap;

fn main() {
    for id in ["EX2.1", "DT3.4", "DT4.1"] {
        let alg = catalog::instantiate(id, &catalog::Params::new()).unwrap();
        let c = operator_space(&alg, OperatorKind::Centroid);
        let qc = operator_space(&alg, OperatorKind::QuasiCentroid);
        let id_in_c = c.contains(&LinearMap::identity(alg.dim())).unwrap();
        println!(
            "{id}: dim C = {}, dim QC = {}, identity in C = {id_in_c}, C ⊆ QC = {}",
            c.dimension(),
            qc.dimension(),
            c.is_subspace_of(&qc)
        );
    }

    let alg = catalog::instantiate("DT4.1", &catalog::Params::new()).unwrap();
    let qc = operator_space(&alg, OperatorKind::QuasiCentroid);
    println!("{}", serde_json::to_string(&qc.to_record()).unwrap());
}
