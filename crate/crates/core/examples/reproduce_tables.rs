// Recompute every Der / C / QC dimension in the catalog and diff against the
// recorded tables.
//
// cargo run --release --example reproduce_tables [-- --json]

use tridend::catalog::{audit_tables, AuditPolicy};

fn main() {
    let report = audit_tables(&AuditPolicy::Generic);
    if std::env::args().any(|a| a == "--json") {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.render_human());
    }
}
