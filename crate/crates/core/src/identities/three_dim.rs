//! Reconstruction of the curvature of three-dimensional frames from Ricci
//! data.

use super::{check_scalars, check_vectors, qps::ensure_quasi_para_sasakian, Ctx, IdentityReport};
use crate::algebra::{rat, Rational};
use crate::curvature::CurvatureBundle;
use crate::error::{Error, Result};
use crate::paracontact::ParacontactStructure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeDimReport {
    /// `R(X,Y)Z = g(Y,Z)QX - g(X,Z)QY + g(QY,Z)X - g(QX,Z)Y - scal/2 (g(Y,Z)X - g(X,Z)Y)`.
    pub generic: IdentityReport,
    /// `Ric = (scal+2)/2 g - (scal+6)/2 η⊗η`, quasi-para-Sasakian only.
    pub ricci_form: Option<IdentityReport>,
    /// `R(X,Y)Z = (scal+4)/2 (g(Y,Z)X - g(X,Z)Y) - (scal+6)/2 (g(Y,Z)η(X)ξ
    ///   - g(X,Z)η(Y)ξ + η(Y)η(Z)X - η(X)η(Z)Y)`, quasi-para-Sasakian only.
    pub curvature_form: Option<IdentityReport>,
}

impl ThreeDimReport {
    pub fn reports(&self) -> Vec<&IdentityReport> {
        std::iter::once(&self.generic)
            .chain(self.ricci_form.as_ref())
            .chain(self.curvature_form.as_ref())
            .collect()
    }
}

pub fn three_d_reconstruct(cb: &CurvatureBundle, s: &ParacontactStructure) -> Result<ThreeDimReport> {
    if cb.dim() != 3 || s.dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: cb.dim(),
        });
    }
    let c = Ctx::new(s, cb);
    let half_scal = &cb.scal / rat(2);
    let generic = check_vectors("three_dim_curvature", 3, 3, |i| {
        let (x, y, z) = (c.e(i[0]), c.e(i[1]), c.e(i[2]));
        let (qx, qy) = (cb.q(&x), cb.q(&y));
        let (gyz, gxz) = (c.g(&y, &z), c.g(&x, &z));
        let rhs = gyz.clone() * qx.clone() - gxz.clone() * qy.clone() + c.g(&qy, &z) * x.clone()
            - c.g(&qx, &z) * y.clone()
            - &half_scal * (gyz * x.clone() - gxz * y.clone());
        c.r(&x, &y, &z) - rhs
    });

    if ensure_quasi_para_sasakian(s).is_err() {
        return Ok(ThreeDimReport {
            generic,
            ricci_form: None,
            curvature_form: None,
        });
    }

    let a: Rational = (&cb.scal + rat(2)) / rat(2);
    let b: Rational = (&cb.scal + rat(6)) / rat(2);
    let ricci_form = check_scalars("three_dim_ricci", 3, 2, |i| {
        let (x, y) = (c.e(i[0]), c.e(i[1]));
        c.ric(&x, &y) - (&a * c.g(&x, &y) - &b * c.eta(&x) * c.eta(&y))
    });
    let a4: Rational = (&cb.scal + rat(4)) / rat(2);
    let xi = c.xi();
    let curvature_form = check_vectors("three_dim_curvature_qps", 3, 3, |i| {
        let (x, y, z) = (c.e(i[0]), c.e(i[1]), c.e(i[2]));
        let (gyz, gxz) = (c.g(&y, &z), c.g(&x, &z));
        let (ex, ey, ez) = (c.eta(&x), c.eta(&y), c.eta(&z));
        let eta_part = &gyz * &ex * xi.clone() - &gxz * &ey * xi.clone() + &ey * &ez * x.clone()
            - &ex * &ez * y.clone();
        let rhs = &a4 * (gyz * x.clone() - gxz * y.clone()) - &b * eta_part;
        c.r(&x, &y, &z) - rhs
    });
    Ok(ThreeDimReport {
        generic,
        ricci_form: Some(ricci_form),
        curvature_form: Some(curvature_form),
    })
}
