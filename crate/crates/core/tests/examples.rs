//! Every example compiles as part of the test build and runs to completion.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(check_axioms);
example!(derivations);
example!(centroids);
example!(subspaces);
example!(rota_baxter);
example!(fingerprint_compare);
example!(exact_linear_algebra);
example!(tda_files);
example!(reproduce_tables);
