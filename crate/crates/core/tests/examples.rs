#[allow(dead_code)]
mod axioms_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/axioms.rs"));
}

#[test]
fn axioms_example_runs() {
    axioms_example::run_example().expect("axioms example should run");
}

#[allow(dead_code)]
mod duality_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/duality.rs"));
}

#[test]
fn duality_example_runs() {
    duality_example::run_example().expect("duality example should run");
}

#[allow(dead_code)]
mod frames_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/frames.rs"));
}

#[test]
fn frames_example_runs() {
    frames_example::run_example().expect("frames example should run");
}

#[allow(dead_code)]
mod extensions_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/extensions.rs"));
}

#[test]
fn extensions_example_runs() {
    extensions_example::run_example().expect("extensions example should run");
}

#[allow(dead_code)]
mod multimodal_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/multimodal.rs"));
}

#[test]
fn multimodal_example_runs() {
    multimodal_example::run_example().expect("multimodal example should run");
}

#[allow(dead_code)]
mod structure_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/structure.rs"));
}

#[test]
fn structure_example_runs() {
    structure_example::run_example().expect("structure example should run");
}

#[allow(dead_code)]
mod correspondence_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/correspondence.rs"));
}

#[test]
fn correspondence_example_runs() {
    correspondence_example::run_example().expect("correspondence example should run");
}

#[allow(dead_code)]
mod search_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/search.rs"));
}

#[test]
fn search_example_runs() {
    search_example::run_example().expect("search example should run");
}

#[allow(dead_code)]
mod homomorphisms_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/homomorphisms.rs"));
}

#[test]
fn homomorphisms_example_runs() {
    homomorphisms_example::run_example().expect("homomorphisms example should run");
}

#[allow(dead_code)]
mod verify_suite_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_suite.rs"));
}

#[test]
fn verify_suite_example_runs() {
    verify_suite_example::run_example().expect("verify_suite example should run");
}
