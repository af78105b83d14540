//! Frozen oracle values for the builtin models, derived by hand from the
//! Koszul formula and cross-checked with an independent fraction-arithmetic
//! computation.

use paraframe::catalog::{builtin, BUILTIN_NAMES};
use paraframe::curvature::space_form_riemann;
use paraframe::identities::{
    check_ricci_semisymmetry, compare_curvature, constant_curvature_test, detect_h, eta_einstein_fit, pc_bochner,
    phps_model, three_d_reconstruct, verify_phi_curvature, verify_structure_consequences, verify_xi_curvature,
    weyl_tensor,
};
use paraframe::paracontact::{check_axioms, classify, d_eta, lie_derivatives_along_xi, nijenhuis_normality};
use paraframe::report::{run_check, CheckOptions, Kind, Status};
use paraframe::{
    curvature_bundle, levi_civita, nabla_curvature, rat, sectional_curvature, validate_frame, CurvatureBundle,
    Error, ParacontactStructure, SymMatrix, TensorField, Valence, Vector,
};

fn structure(name: &str) -> ParacontactStructure {
    builtin(name).unwrap().structure().unwrap()
}

fn bundle(s: &ParacontactStructure) -> CurvatureBundle {
    curvature_bundle(s.base(), &levi_civita(s.base()).unwrap()).unwrap()
}

fn e(i: usize) -> Vector {
    Vector::basis(3, i - 1)
}

fn v(c: [i64; 3]) -> Vector {
    Vector(c.iter().map(|&x| rat(x)).collect())
}

fn ricci_matrix(cb: &CurvatureBundle) -> [[i64; 3]; 3] {
    let mut out = [[0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let r = cb.ricci.get(&[i, j]);
            assert!(r.is_integer());
            *x = i64::try_from(r.to_integer()).unwrap();
        }
    }
    out
}

#[test]
fn heisenberg_connection_table() {
    let conn = levi_civita(&builtin("para_heisenberg").unwrap().frame().unwrap()).unwrap();
    let table = [
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, -1], [0, 0, 0], [1, 0, 0]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
    ];
    for (i, row) in table.iter().enumerate() {
        for (j, expected) in row.iter().enumerate() {
            assert_eq!(conn.nabla_basis(i, j), v(*expected), "∇_E{} E{}", i + 1, j + 1);
        }
    }
}

#[test]
fn ricci_tables() {
    let cb = bundle(&structure("paper_example"));
    assert_eq!(ricci_matrix(&cb), [[-2, 0, 0], [0, 2, 0], [0, 0, -2]]);
    assert_eq!(cb.scal, rat(-6));

    let cb = bundle(&structure("para_heisenberg"));
    assert_eq!(ricci_matrix(&cb), [[2, 0, 0], [0, -2, 0], [0, 0, -2]]);
    assert_eq!(cb.scal, rat(2));

    let cb = bundle(&structure("abelian_flat"));
    assert!(cb.riemann.is_zero());
    assert_eq!(cb.scal, rat(0));
}

#[test]
fn heisenberg_curvature_values() {
    let cb = bundle(&structure("para_heisenberg"));
    assert_eq!(cb.r(&e(1), &e(2), &e(2)), v([-3, 0, 0]));
    assert_eq!(cb.r(&e(1), &e(3), &e(3)), v([-1, 0, 0]));
    assert_eq!(cb.r4(&e(1), &e(2), &e(1), &e(2)), rat(3));
    assert_eq!(sectional_curvature(&cb, &e(1), &e(2)).unwrap(), rat(3));
    assert_eq!(sectional_curvature(&cb, &e(1), &e(3)).unwrap(), rat(-1));
    assert_eq!(sectional_curvature(&cb, &e(2), &e(3)).unwrap(), rat(-1));
}

#[test]
fn example_group_sectional_curvatures() {
    let cb = bundle(&structure("paper_example"));
    for (x, y) in [(1, 2), (1, 3), (2, 3)] {
        assert_eq!(sectional_curvature(&cb, &e(x), &e(y)).unwrap(), rat(-1));
    }
}

#[test]
fn contact_form_differential() {
    let s = structure("paper_example");
    let de = d_eta(&s);
    assert_eq!(*de.get(&[0, 1]), rat(-1));
    assert_eq!(*de.get(&[1, 0]), rat(1));
    assert_eq!(s.g(&e(1), &s.phi(&e(2))), rat(1));
    let c = classify(&s, &levi_civita(s.base()).unwrap());
    assert!(c.paracontact_metric_neg.pass);
    let w = c.paracontact_metric_pos.witness.unwrap();
    assert_eq!((w.indices, w.residual), (vec![1, 2], rat(2)));
}

#[test]
fn builtins_validate_and_satisfy_axioms() {
    for name in BUILTIN_NAMES {
        let s = structure(name);
        assert!(validate_frame(s.base()).is_valid(), "{name}");
        let axioms = check_axioms(&s).unwrap();
        assert!(axioms.all_pass(), "{name}");
        assert_eq!(axioms.signature, Some((2, 1)));
        assert_eq!(s.trace_phi(), rat(0));
    }
}

#[test]
fn classification_table() {
    let expect = [
        ("paper_example", true, true, true),
        ("para_heisenberg", true, true, true),
        ("abelian_flat", false, true, true),
    ];
    for (name, qps, normal, killing) in expect {
        let s = structure(name);
        let c = classify(&s, &levi_civita(s.base()).unwrap());
        assert_eq!(c.is_quasi_para_sasakian(), qps, "{name}");
        assert_eq!(c.normal.pass, normal, "{name}");
        assert_eq!(c.k_paracontact.pass, killing, "{name}");
        assert!(!c.para_sasakian.pass, "{name}");
        if qps {
            assert!(c.paracontact_metric_neg.pass && c.nabla_xi_is_phi.pass, "{name}");
        }
    }
}

#[test]
fn nijenhuis_and_lie_derivatives_vanish_on_quasi_para_sasakian_models() {
    for name in ["paper_example", "para_heisenberg"] {
        let s = structure(name);
        let conn = levi_civita(s.base()).unwrap();
        assert!(nijenhuis_normality(&s).normal.pass);
        let lie = lie_derivatives_along_xi(&s, &conn);
        assert!(lie.metric.is_zero() && lie.phi.is_zero() && lie.eta.is_zero());
        for r in verify_structure_consequences(&s).unwrap() {
            assert!(r.pass, "{name}: {r}");
        }
    }
}

#[test]
fn quasi_para_sasakian_identities_refuse_other_structures() {
    let s = structure("abelian_flat");
    let conn = levi_civita(s.base()).unwrap();
    let cb = curvature_bundle(s.base(), &conn).unwrap();
    let nr = nabla_curvature(s.base(), &conn, &cb).unwrap();
    assert_eq!(verify_xi_curvature(&s, &cb, &nr), Err(Error::NotQuasiParaSasakian));
    assert_eq!(verify_phi_curvature(&s, &cb), Err(Error::NotQuasiParaSasakian));
    assert_eq!(detect_h(&s, &cb).unwrap_err(), Error::NotQuasiParaSasakian);
    assert_eq!(pc_bochner(&s, &cb).unwrap_err(), Error::NotQuasiParaSasakian);
    assert!(verify_structure_consequences(&s).is_err());
}

#[test]
fn wrong_holomorphic_curvature_is_detected() {
    let s = structure("paper_example");
    let cb = bundle(&s);
    let model = phps_model(&s, &rat(0)).unwrap();
    let r = compare_curvature("constant_phps", &cb, &model).unwrap();
    assert!(!r.pass && r.witness.is_some());
    let model = phps_model(&s, &rat(-1)).unwrap();
    assert!(compare_curvature("constant_phps", &cb, &model).unwrap().pass);
}

#[test]
fn holomorphic_curvature_per_direction() {
    let s = structure("para_heisenberg");
    let hol = detect_h(&s, &bundle(&s)).unwrap();
    assert_eq!(hol.per_direction, vec![(1, rat(3)), (2, rat(3))]);
}

#[test]
fn bochner_flag_matches_holomorphic_and_einstein_flags() {
    for name in ["paper_example", "para_heisenberg"] {
        let s = structure(name);
        let cb = bundle(&s);
        let b = pc_bochner(&s, &cb).unwrap();
        let hol = detect_h(&s, &cb).unwrap();
        let fit = eta_einstein_fit(&s, &cb).unwrap();
        assert_eq!(b.zero.pass, hol.matches_model && fit.exact, "{name}");
        assert!(fit.sum_rule.unwrap().pass);
    }
    assert_eq!(pc_bochner(&structure("paper_example"), &bundle(&structure("paper_example"))).unwrap().k, rat(2));
    assert_eq!(pc_bochner(&structure("para_heisenberg"), &bundle(&structure("para_heisenberg"))).unwrap().k, rat(0));
}

#[test]
fn three_dimensional_scalar_curvature_criterion() {
    for name in ["paper_example", "para_heisenberg"] {
        let s = structure(name);
        let cb = bundle(&s);
        let c = constant_curvature_test(&cb);
        assert_eq!(c == Some(rat(-1)), cb.scal == rat(-6), "{name}");
        if check_ricci_semisymmetry(&cb).unwrap().pass {
            assert_eq!((cb.scal.clone(), c), (rat(-6), Some(rat(-1))));
        }
        for r in three_d_reconstruct(&cb, &s).unwrap().reports() {
            assert!(r.pass, "{name}: {r}");
        }
    }
}

#[test]
fn dimension_preconditions() {
    let cb = bundle(&structure("paper_example"));
    assert_eq!(weyl_tensor(&cb).unwrap_err(), Error::DimensionTooSmall(3));
    let g = SymMatrix::diagonal(&[rat(1), rat(-1), rat(1), rat(-1), rat(1)]);
    let cb5 = CurvatureBundle::from_riemann(g.clone(), space_form_riemann(&g, &rat(-1))).unwrap();
    assert_eq!(
        three_d_reconstruct(&cb5, &structure("paper_example")).unwrap_err(),
        Error::WrongDimension { expected: 3, found: 5 }
    );
}

#[test]
fn space_form_ricci() {
    let g = SymMatrix::diagonal(&[rat(1), rat(-1), rat(1), rat(-1), rat(1)]);
    let cb = CurvatureBundle::from_riemann(g.clone(), space_form_riemann(&g, &rat(-1))).unwrap();
    let expected = TensorField::from_fn(5, Valence::new(0, 2), |i| rat(-4) * &g[(i[0], i[1])]);
    assert_eq!(cb.ricci, expected);
    assert_eq!(cb.scal, rat(-20));
    assert_eq!(constant_curvature_test(&cb), Some(rat(-1)));
}

#[test]
fn run_report_for_para_heisenberg() {
    let report = run_check(&builtin("para_heisenberg").unwrap(), &CheckOptions::default()).unwrap();
    assert!(report.overall());
    assert_eq!(report.summary.scal, rat(2));
    assert_eq!(report.summary.constant_curvature, None);
    assert_eq!(report.summary.h, Some(rat(3)));
    assert_eq!(report.summary.eta_einstein, Some((rat(2), rat(-4))));
    let rr = report.identity("ricci_semisymmetric").unwrap();
    assert_eq!(rr.kind, Kind::Property);
    assert!(matches!(rr.status, Status::Fail(Some(_))));
    let imp = report.implication("ricci_semisymmetric_implies_curvature_minus1").unwrap();
    assert!(!imp.hypothesis && imp.verified);
}

#[test]
fn run_report_for_flat_frame_skips_conditional_identities() {
    let report = run_check(&builtin("abelian_flat").unwrap(), &CheckOptions::default()).unwrap();
    assert!(report.overall());
    assert_eq!(report.classification_flag("quasi_para_sasakian"), Some(false));
    assert!(matches!(report.identity("curvature_xi").unwrap().status, Status::Skipped(_)));
    assert!(report.implications.is_empty());
    assert_eq!(report.summary.constant_curvature, Some(rat(0)));
}
