//! Every example runs to completion.

#[allow(dead_code)]
#[path = "../examples/build_algebra.rs"]
mod build_algebra;

#[allow(dead_code)]
#[path = "../examples/indecomposables.rs"]
mod indecomposables;

#[allow(dead_code)]
#[path = "../examples/tau_rigidity.rs"]
mod tau_rigidity;

#[allow(dead_code)]
#[path = "../examples/hasse_quiver.rs"]
mod hasse_quiver;

#[allow(dead_code)]
#[path = "../examples/cotorsion_pairs.rs"]
mod cotorsion_pairs;

#[allow(dead_code)]
#[path = "../examples/restriction.rs"]
mod restriction;

#[allow(dead_code)]
#[path = "../examples/brenner_butler.rs"]
mod brenner_butler;

#[test]
fn build_algebra_runs() {
    build_algebra::run_example().unwrap();
}

#[test]
fn indecomposables_runs() {
    indecomposables::run_example().unwrap();
}

#[test]
fn tau_rigidity_runs() {
    tau_rigidity::run_example().unwrap();
}

#[test]
fn hasse_quiver_runs() {
    hasse_quiver::run_example().unwrap();
}

#[test]
fn cotorsion_pairs_runs() {
    cotorsion_pairs::run_example().unwrap();
}

#[test]
fn restriction_runs() {
    restriction::run_example().unwrap();
}

#[test]
fn brenner_butler_runs() {
    brenner_butler::run_example().unwrap();
}
