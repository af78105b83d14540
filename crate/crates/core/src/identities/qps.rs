//! Curvature identities that hold on every quasi-para-Sasakian frame.

use num_traits::{One, Zero};

use super::{check_scalars, check_vectors, Ctx, IdentityReport};
use crate::connection::{covariant_derivative, levi_civita};
use crate::algebra::Rational;
use crate::curvature::{sectional_curvature, CurvatureBundle};
use crate::error::{Error, Result};
use crate::paracontact::{classify, lie_derivatives_along_xi, ClassificationReport, ParacontactStructure};
use crate::tensor::TensorField;

/// Classifies `s` and fails with [`Error::NotQuasiParaSasakian`] unless it is
/// quasi-para-Sasakian.
pub fn ensure_quasi_para_sasakian(s: &ParacontactStructure) -> Result<ClassificationReport> {
    let conn = levi_civita(s.base())?;
    let report = classify(s, &conn);
    if report.is_quasi_para_sasakian() {
        Ok(report)
    } else {
        Err(Error::NotQuasiParaSasakian)
    }
}

/// Consequences of the quasi-para-Sasakian condition for the structure
/// tensors: `(∇_Xη)Y = -g(X,φY)`, `£_ξg = 0`, `£_ξφ = 0`, `£_ξη = 0` and
/// `dη(X,Y) = -g(X,φY)`.
pub fn verify_structure_consequences(s: &ParacontactStructure) -> Result<Vec<IdentityReport>> {
    let class = ensure_quasi_para_sasakian(s)?;
    let conn = levi_civita(s.base())?;
    let d = s.dim();
    let e = |i| crate::tensor::Vector::basis(d, i);
    let nabla_eta = covariant_derivative(&conn, &s.eta_tensor())?;
    let nabla_eta = check_scalars("nabla_eta", d, 2, |i| {
        nabla_eta.get(i) + s.g(&e(i[0]), &s.phi(&e(i[1])))
    });
    let lie = lie_derivatives_along_xi(s, &conn);
    let mut d_eta_phi = class.paracontact_metric_neg;
    d_eta_phi.name = "d_eta_phi".into();
    Ok(vec![nabla_eta, lie.metric_zero, lie.phi_zero, lie.eta_zero, d_eta_phi])
}

/// `R(X,Y)ξ = η(X)Y - η(Y)X`, `R(X,ξ)Y = g(X,Y)ξ - η(Y)X`,
/// `Ric(X,ξ) = -2nη(X)`, `K(X,ξ) = -1` for non-null horizontal `X`, and
/// `(∇_Z R)(X,Y)ξ = -R(X,Y)φZ + g(X,φZ)Y - g(Y,φZ)X`.
pub fn verify_xi_curvature(
    s: &ParacontactStructure,
    cb: &CurvatureBundle,
    nabla_r: &TensorField,
) -> Result<Vec<IdentityReport>> {
    ensure_quasi_para_sasakian(s)?;
    let c = Ctx::new(s, cb);
    let d = c.dim();
    let xi = c.xi();

    let curvature_xi = check_vectors("curvature_xi", d, 2, |i| {
        let (x, y) = (c.e(i[0]), c.e(i[1]));
        c.r(&x, &y, &xi) - (c.eta(&x) * y.clone() - c.eta(&y) * x.clone())
    });
    let curvature_xi_slot = check_vectors("curvature_xi_slot", d, 2, |i| {
        let (x, y) = (c.e(i[0]), c.e(i[1]));
        c.r(&x, &xi, &y) - (c.g(&x, &y) * xi.clone() - c.eta(&y) * x.clone())
    });
    let ricci_xi = check_scalars("ricci_xi", d, 1, |i| {
        let x = c.e(i[0]);
        c.ric(&x, &xi) + c.two_n() * c.eta(&x)
    });
    let xi_sectional = check_scalars("xi_sectional_curvature", d, 1, |i| {
        let x = s.h(&c.e(i[0]));
        match sectional_curvature(cb, &x, &xi) {
            Ok(k) => k + Rational::one(),
            // null or vanishing horizontal directions carry no plane
            Err(_) => Zero::zero(),
        }
    });
    let nabla_curvature_xi = check_vectors("nabla_curvature_xi", d, 3, |i| {
        let (z, x, y) = (c.e(i[0]), c.e(i[1]), c.e(i[2]));
        let pz = c.phi(&z);
        nabla_r.apply(&[&z, &x, &y, &xi])
            - (-c.r(&x, &y, &pz) + c.g(&x, &pz) * y.clone() - c.g(&y, &pz) * x.clone())
    });

    Ok(vec![curvature_xi, curvature_xi_slot, ricci_xi, xi_sectional, nabla_curvature_xi])
}

/// `R(X,Y)φZ - φR(X,Y)Z = g(Y,Z)φX - g(X,Z)φY - g(Y,φZ)X + g(X,φZ)Y` and
/// `R(φX,φY)Z = -R(X,Y)Z - g(Y,Z)X + g(X,Z)Y + g(Y,φZ)φX - g(X,φZ)φY`.
pub fn verify_phi_curvature(s: &ParacontactStructure, cb: &CurvatureBundle) -> Result<Vec<IdentityReport>> {
    ensure_quasi_para_sasakian(s)?;
    let c = Ctx::new(s, cb);
    let d = c.dim();

    let commutator = check_vectors("curvature_phi_commutator", d, 3, |i| {
        let (x, y, z) = (c.e(i[0]), c.e(i[1]), c.e(i[2]));
        let (px, py, pz) = (c.phi(&x), c.phi(&y), c.phi(&z));
        let lhs = c.r(&x, &y, &pz) - c.phi(&c.r(&x, &y, &z));
        let rhs = c.g(&y, &z) * px - c.g(&x, &z) * py - c.g(&y, &pz) * x.clone() + c.g(&x, &pz) * y.clone();
        lhs - rhs
    });
    let phi_pair = check_vectors("curvature_phi_pair", d, 3, |i| {
        let (x, y, z) = (c.e(i[0]), c.e(i[1]), c.e(i[2]));
        let (px, py, pz) = (c.phi(&x), c.phi(&y), c.phi(&z));
        let lhs = c.r(&px, &py, &z);
        let rhs = -c.r(&x, &y, &z) - c.g(&y, &z) * x.clone() + c.g(&x, &z) * y.clone()
            + c.g(&y, &pz) * px
            - c.g(&x, &pz) * py;
        lhs - rhs
    });
    Ok(vec![commutator, phi_pair])
}
