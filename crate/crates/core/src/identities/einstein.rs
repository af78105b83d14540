use num_traits::Zero;

use super::{check_scalars, non_null_horizontal, qps::ensure_quasi_para_sasakian, IdentityReport};
use crate::algebra::Rational;
use crate::curvature::{sectional_curvature, CurvatureBundle};
use crate::error::{Error, Result};
use crate::paracontact::ParacontactStructure;
use crate::tensor::Vector;

/// Best fit of `Ric = a·g + b·η⊗η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaEinsteinFit {
    pub a: Rational,
    pub b: Rational,
    /// `Ric` equals `a·g + b·η⊗η` componentwise.
    pub exact: bool,
    pub residual: IdentityReport,
    /// `a + b = -2n`, checked only for quasi-para-Sasakian structures.
    pub sum_rule: Option<IdentityReport>,
}

/// Reads `a` off the first non-null horizontal direction (see
/// `non_null_horizontal`) and `b` off `ξ`,
/// then verifies the fit on every component.
pub fn eta_einstein_fit(s: &ParacontactStructure, cb: &CurvatureBundle) -> Result<EtaEinsteinFit> {
    let d = s.dim();
    let horizontal = non_null_horizontal(s)
        .into_iter()
        .next()
        .ok_or(Error::NoNonNullHorizontalDirection)?;
    let a = cb.ric(&horizontal, &horizontal) / cb.g(&horizontal, &horizontal);
    let xi = s.xi();
    let b = cb.ric(xi, xi) - &a;

    let residual = check_scalars("eta_einstein", d, 2, |i| {
        let (x, y) = (Vector::basis(d, i[0]), Vector::basis(d, i[1]));
        cb.ric(&x, &y) - (&a * cb.g(&x, &y) + &b * s.eta(&x) * s.eta(&y))
    });
    let sum_rule = ensure_quasi_para_sasakian(s).ok().map(|_| {
        let two_n = Rational::from_integer((d as i64 - 1).into());
        check_scalars("eta_einstein_sum", d, 0, |_| &a + &b + &two_n)
    });

    Ok(EtaEinsteinFit {
        exact: residual.pass,
        a,
        b,
        residual,
        sum_rule,
    })
}

/// Returns `c` when `R(X,Y,Z,W) = c(g(Y,Z)g(X,W) - g(X,Z)g(Y,W))` holds on
/// every component; the candidate comes from the first nondegenerate basis
/// plane.
pub fn constant_curvature_test(cb: &CurvatureBundle) -> Option<Rational> {
    let d = cb.dim();
    let e = |i| Vector::basis(d, i);
    let c = if d < 2 {
        Rational::zero()
    } else {
        (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .find_map(|(i, j)| sectional_curvature(cb, &e(i), &e(j)).ok())?
    };
    let g = &cb.metric;
    let matches = check_scalars("constant_curvature", d, 4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        cb.riemann_lowered.get(i) - &c * (&g[(y, z)] * &g[(x, w)] - &g[(x, z)] * &g[(y, w)])
    });
    matches.pass.then_some(c)
}
