//! Every example under `examples/` runs to completion.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(trees);
example!(flips_and_merges);
example!(strata_census);
example!(divisors);
example!(building_set);
example!(face_poset);
example!(chamber_tiles);
example!(adjacency);
example!(render);
