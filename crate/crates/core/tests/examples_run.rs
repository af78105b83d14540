//! Every example runs and prints what it promises.

#[path = "../examples/koszul_connection.rs"]
#[allow(dead_code)]
mod koszul_connection;
#[path = "../examples/classify_structure.rs"]
#[allow(dead_code)]
mod classify_structure;
#[path = "../examples/curvature_identities.rs"]
#[allow(dead_code)]
mod curvature_identities;
#[path = "../examples/holomorphic_curvature.rs"]
#[allow(dead_code)]
mod holomorphic_curvature;
#[path = "../examples/three_dimensional.rs"]
#[allow(dead_code)]
mod three_dimensional;
#[path = "../examples/space_form_weyl.rs"]
#[allow(dead_code)]
mod space_form_weyl;
#[path = "../examples/model_files.rs"]
#[allow(dead_code)]
mod model_files;
#[path = "../examples/signature.rs"]
#[allow(dead_code)]
mod signature;

#[test]
fn koszul_table() {
    let out = koszul_connection::run().unwrap();
    assert!(out.contains("∇_E1 E2 = (0, 0, 1)"));
    assert!(out.contains("∇_E3 E2 = (1, 0, 0)"));
}

#[test]
fn classification() {
    let out = classify_structure::run().unwrap();
    assert_eq!(out.matches("quasi_para_sasakian: true").count(), 2);
    assert!(out.contains("quasi_para_sasakian: FAIL at (E1, E1) component E3: residual -1"));
}

#[test]
fn curvature_identities_pass() {
    let out = curvature_identities::run().unwrap();
    assert!(out.contains("scal = 2"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn holomorphic() {
    let out = holomorphic_curvature::run().unwrap();
    assert!(out.contains("H = -1 (model match true)"));
    assert!(out.contains("(a, b) = (2, -4), exact true"));
}

#[test]
fn three_dimensional_results() {
    let out = three_dimensional::run().unwrap();
    assert!(out.contains("paper_example: scal = -6, constant curvature -1"));
    assert!(out.contains("ricci_semisymmetric: FAIL"));
}

#[test]
fn weyl() {
    let out = space_form_weyl::run().unwrap();
    assert!(out.contains("scal = -20"));
    assert!(out.contains("Weyl tensor zero: true"));
}

#[test]
fn model_round_trip() {
    let out = model_files::run().unwrap();
    assert!(out.contains("round trip identical: true"));
    assert!(out.contains("c^3_12 = 1/2"));
}

#[test]
fn signatures() {
    let out = signature::run().unwrap();
    assert!(out.contains("zero diagonal 3x3: (1,2), det 2"));
}
