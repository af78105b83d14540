//! Property tests over random frames, random metrics and random changes of
//! basis.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use paraframe::algebra::{format_rational, invert_symmetric, parse_rational, signature};
use paraframe::catalog::{builtin, ModelSpec};
use paraframe::identities::{detect_h, eta_einstein_fit, structural};
use paraframe::paracontact::{check_axioms, classify};
use paraframe::{
    curvature_bundle, levi_civita, nabla_curvature, rat, ratio, sectional_curvature, validate_frame, FrameManifold,
    Matrix, ParacontactStructure, Rational, SymMatrix, TensorField, Valence, Vector,
};

fn matrix(dim: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, dim * dim)
        .prop_map(move |v| Matrix::from_fn(dim, |i, j| rat(v[i * dim + j])))
}

fn invertible(dim: usize) -> impl Strategy<Value = Matrix> {
    matrix(dim).prop_filter("singular", |m| !m.determinant().is_zero())
}

fn metric(dim: usize) -> impl Strategy<Value = SymMatrix> {
    prop::collection::vec(-3i64..=3, dim * dim)
        .prop_map(move |v| {
            let m = Matrix::from_fn(dim, |i, j| rat(v[i.min(j) * dim + i.max(j)]));
            SymMatrix::new(m).unwrap()
        })
        .prop_filter("degenerate", |g| !g.determinant().is_zero())
}

/// Structure constants of `F_a = Σ_i A_ia E_i`.
fn change_basis(c: &TensorField, a: &Matrix) -> TensorField {
    let d = c.dim();
    let inv = a.inverse().unwrap();
    TensorField::from_fn(d, Valence::new(1, 2), |idx| {
        let (p, q, r) = (idx[0], idx[1], idx[2]);
        let mut acc = Rational::zero();
        for i in 0..d {
            for j in 0..d {
                let w = &a[(i, p)] * &a[(j, q)];
                if w.is_zero() {
                    continue;
                }
                for k in 0..d {
                    acc += &w * c.get(&[i, j, k]) * &inv[(r, k)];
                }
            }
        }
        acc
    })
}

fn seed_algebra(kind: usize) -> FrameManifold {
    let g3 = SymMatrix::identity(3);
    let g4 = SymMatrix::identity(4);
    match kind {
        0 => builtin("paper_example").unwrap().frame().unwrap(),
        1 => builtin("para_heisenberg").unwrap().frame().unwrap(),
        2 => FrameManifold::from_brackets(g3, &[(0, 1, 1, rat(1)), (0, 2, 2, rat(1))]).unwrap(),
        3 => FrameManifold::from_brackets(
            g4,
            &[
                (3, 0, 0, rat(1)),
                (3, 1, 1, rat(1)),
                (3, 2, 2, rat(2)),
                (0, 1, 2, rat(1)),
            ],
        )
        .unwrap(),
        _ => FrameManifold::abelian(g4),
    }
}

/// A Lie-algebra frame in a random basis with a random metric.
fn valid_frame() -> impl Strategy<Value = FrameManifold> {
    (0usize..5).prop_flat_map(|kind| {
        let seed = seed_algebra(kind);
        let d = seed.dim();
        (invertible(d), metric(d)).prop_map(move |(a, g)| {
            FrameManifold::new(change_basis(seed.structure_constants(), &a), g).unwrap()
        })
    })
}

/// Random antisymmetric constants, kept only when Jacobi holds; otherwise the
/// abelian frame with the same metric.
fn sparse_or_abelian() -> impl Strategy<Value = FrameManifold> {
    (metric(3), prop::collection::vec((0usize..3, 0usize..3, 0usize..3, -2i64..=2), 0..3)).prop_map(|(g, entries)| {
        let brackets: Vec<_> = entries
            .into_iter()
            .filter(|(i, j, _, _)| i != j)
            .map(|(i, j, k, v)| (i, j, k, rat(v)))
            .collect();
        let frame = FrameManifold::from_brackets(g.clone(), &brackets).unwrap();
        if validate_frame(&frame).is_valid() {
            frame
        } else {
            FrameManifold::abelian(g)
        }
    })
}

fn transform_structure(s: &ParacontactStructure, a: &Matrix, g: SymMatrix) -> ParacontactStructure {
    let d = s.dim();
    let inv = a.inverse().unwrap();
    let frame = FrameManifold::new(change_basis(s.base().structure_constants(), a), g).unwrap();
    let phi = s.phi_tensor();
    let phi = TensorField::from_fn(d, Valence::new(1, 1), |idx| {
        let (p, r) = (idx[0], idx[1]);
        let mut acc = Rational::zero();
        for i in 0..d {
            for m in 0..d {
                acc += &a[(i, p)] * phi.get(&[i, m]) * &inv[(r, m)];
            }
        }
        acc
    });
    let xi = Vector((0..d).map(|r| (0..d).map(|m| &inv[(r, m)] * &s.xi().0[m]).sum()).collect());
    let eta = Vector((0..d).map(|p| (0..d).map(|i| &a[(i, p)] * &s.eta_components().0[i]).sum()).collect());
    ParacontactStructure::new(frame, phi, xi, eta).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn levi_civita_is_torsion_free_and_metric(frame in prop_oneof![valid_frame(), sparse_or_abelian()]) {
        prop_assert!(validate_frame(&frame).is_valid());
        let conn = levi_civita(&frame).unwrap();
        prop_assert!(structural::torsion_free(&frame, &conn).pass);
        prop_assert!(structural::metric_compatible(&frame, &conn).pass);
        prop_assert!(structural::nabla_metric_zero(&frame, &conn).unwrap().pass);
    }

    #[test]
    fn curvature_identities_hold(frame in valid_frame()) {
        let conn = levi_civita(&frame).unwrap();
        let cb = curvature_bundle(&frame, &conn).unwrap();
        let nr = nabla_curvature(&frame, &conn, &cb).unwrap();
        prop_assert!(structural::bianchi_first(&cb).pass);
        prop_assert!(structural::bianchi_second(&nr).pass);
        prop_assert!(structural::curvature_symmetries(&cb).pass);
        prop_assert!(structural::ricci_symmetric(&cb).pass);
        prop_assert_eq!(cb.ricci_operator_trace(), cb.scal.clone());
    }

    #[test]
    fn sectional_curvature_scaling_and_swap(
        frame in valid_frame(),
        x in prop::collection::vec(-2i64..=2, 4),
        y in prop::collection::vec(-2i64..=2, 4),
        lambda in prop_oneof![-3i64..=-1, 1i64..=3],
        t in -2i64..=2,
    ) {
        let d = frame.dim();
        let cb = curvature_bundle(&frame, &levi_civita(&frame).unwrap()).unwrap();
        let x = Vector(x[..d].iter().map(|&v| rat(v)).collect());
        let y = Vector(y[..d].iter().map(|&v| rat(v)).collect());
        if let Ok(k) = sectional_curvature(&cb, &x, &y) {
            prop_assert_eq!(sectional_curvature(&cb, &y, &x).unwrap(), k.clone());
            prop_assert_eq!(sectional_curvature(&cb, &x.scaled(&rat(lambda)), &y).unwrap(), k.clone());
            let shear = y.clone() + x.scaled(&rat(t));
            prop_assert_eq!(sectional_curvature(&cb, &x, &shear).unwrap(), k);
        }
    }

    #[test]
    fn signature_is_a_congruence_invariant(g in metric(4), a in invertible(4)) {
        prop_assert_eq!(signature(&g).unwrap(), signature(&g.congruent(&a)).unwrap());
    }

    #[test]
    fn signature_counts_every_direction(g in metric(4)) {
        let (p, q) = signature(&g).unwrap();
        prop_assert_eq!(p + q, 4);
        // the sign of the determinant is (-1)^q
        prop_assert_eq!(q % 2 == 1, g.determinant() < Rational::zero());
    }

    #[test]
    fn symmetric_inverse_is_an_involution(g in metric(4)) {
        let inv = invert_symmetric(&g).unwrap();
        prop_assert_eq!(inv.matrix().mul(g.matrix()), Matrix::identity(4));
        prop_assert_eq!(invert_symmetric(&inv).unwrap(), g);
    }

    #[test]
    fn rational_sum_matches_integer_oracle(
        a in any::<i64>(), b in any::<i64>().prop_filter("zero", |b| *b != 0),
        c in any::<i64>(), d in any::<i64>().prop_filter("zero", |d| *d != 0),
    ) {
        let sum = Rational::new(a.into(), b.into()) + Rational::new(c.into(), d.into());
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        let numer = &a * &d + &c * &b;
        let denom = &b * &d;
        // equal as fractions: cross-multiplication in plain big integers
        prop_assert_eq!(sum.numer() * &denom, numer * sum.denom());
        prop_assert!(sum.denom() > &BigInt::zero());
        prop_assert!(num_integer::Integer::gcd(sum.numer(), sum.denom()).is_one() || sum.numer().is_zero());
    }

    #[test]
    fn rational_text_round_trip(p in any::<i128>(), q in any::<i128>().prop_filter("zero", |q| *q != 0)) {
        let r = Rational::new(p.into(), q.into());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn structure_classes_survive_a_change_of_frame(
        name in prop_oneof![Just("paper_example"), Just("para_heisenberg"), Just("abelian_flat")],
        a in invertible(3),
    ) {
        let s = builtin(name).unwrap().structure().unwrap();
        let g = s.base().metric().congruent(&a);
        let t = transform_structure(&s, &a, g);
        prop_assert!(check_axioms(&t).unwrap().all_pass());
        let (c0, c1) = (
            classify(&s, &levi_civita(s.base()).unwrap()),
            classify(&t, &levi_civita(t.base()).unwrap()),
        );
        prop_assert_eq!(c0.flags(), c1.flags());
        let (cb0, cb1) = (
            curvature_bundle(s.base(), &levi_civita(s.base()).unwrap()).unwrap(),
            curvature_bundle(t.base(), &levi_civita(t.base()).unwrap()).unwrap(),
        );
        prop_assert_eq!(&cb0.scal, &cb1.scal);
        if c0.is_quasi_para_sasakian() {
            let (h0, h1) = (detect_h(&s, &cb0).unwrap(), detect_h(&t, &cb1).unwrap());
            prop_assert_eq!(h0.matches_model, h1.matches_model);
            prop_assert_eq!(h0.h, h1.h);
            let (f0, f1) = (eta_einstein_fit(&s, &cb0).unwrap(), eta_einstein_fit(&t, &cb1).unwrap());
            prop_assert_eq!((f0.a, f0.b, f0.exact), (f1.a, f1.b, f1.exact));
        }
    }

    #[test]
    fn projection_is_idempotent_and_kills_xi(
        name in prop_oneof![Just("paper_example"), Just("para_heisenberg"), Just("abelian_flat")],
        a in invertible(3),
    ) {
        let s = builtin(name).unwrap().structure().unwrap();
        let t = transform_structure(&s, &a, s.base().metric().congruent(&a));
        for i in 0..3 {
            let e = Vector::basis(3, i);
            prop_assert_eq!(t.h(&t.h(&e)), t.h(&e));
        }
        prop_assert!(t.h(t.xi()).is_zero());
        prop_assert!(t.trace_phi().is_zero());
    }

    #[test]
    fn model_files_round_trip(
        entries in prop::collection::btree_map((1usize..=3, 1usize..=3, 1usize..=3), (-9i64..=9, 1i64..=6), 0..4),
    ) {
        let mut spec = builtin("abelian_flat").unwrap();
        spec.name = "random".into();
        spec.structure_constants = entries
            .into_iter()
            .filter(|((i, j, _), (p, _))| i < j && *p != 0)
            .map(|((i, j, k), (p, q))| (i, j, k, ratio(p, q)))
            .collect();
        let frame = spec.frame().unwrap();
        prop_assume!(validate_frame(&frame).is_valid());
        let text = spec.to_json();
        let back = ModelSpec::from_json_str(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back, spec);
    }
}
