//! Constant φ-para-holomorphic sectional curvature.

use num_traits::Zero;

use super::{check_tensor_zero, non_null_horizontal, qps::ensure_quasi_para_sasakian, IdentityReport};
use crate::algebra::{rat, ratio, Rational};
use crate::curvature::CurvatureBundle;
use crate::error::{Error, Result};
use crate::paracontact::ParacontactStructure;
use crate::tensor::{TensorField, Valence, Vector};

/// Outcome of [`detect_h`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolSectionalResult {
    pub h: Rational,
    /// `R` equals the model tensor built from `h` on every component.
    pub matches_model: bool,
    pub comparison: IdentityReport,
    /// `R(X,φX,X,φX)/g(X,X)²` for each non-null projected frame vector
    /// `X = φ²E_i`, keyed by the one-based `i`.
    pub per_direction: Vec<(usize, Rational)>,
}

/// Curvature tensor of a quasi-para-Sasakian frame with constant
/// φ-para-holomorphic sectional curvature `h`:
///
/// `4R(X,Y)Z = (h-3)(g(Y,Z)X - g(X,Z)Y) + (h+1)(η(X)η(Z)Y - η(Y)η(Z)X
///   + η(Y)g(X,Z)ξ - η(X)g(Y,Z)ξ + g(Y,φZ)φX - g(X,φZ)φY + 2g(φX,Y)φZ)`.
pub fn phps_model(s: &ParacontactStructure, h: &Rational) -> Result<TensorField> {
    ensure_quasi_para_sasakian(s)?;
    Ok(phps_tensor(s, h))
}

fn phps_tensor(s: &ParacontactStructure, h: &Rational) -> TensorField {
    let d = s.dim();
    let e = |i| Vector::basis(d, i);
    let xi = s.xi().clone();
    let (hm3, hp1, quarter) = (h - rat(3), h + rat(1), ratio(1, 4));
    let mut out = TensorField::zeros(d, Valence::new(1, 3));
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (e(i), e(j), e(k));
                let (px, py, pz) = (s.phi(&x), s.phi(&y), s.phi(&z));
                let (gxz, gyz) = (s.g(&x, &z), s.g(&y, &z));
                let (ex, ey, ez) = (s.eta(&x), s.eta(&y), s.eta(&z));
                let first = gyz.clone() * x.clone() - gxz.clone() * y.clone();
                let second = &ex * &ez * y.clone() - &ey * &ez * x.clone() + &ey * &gxz * xi.clone()
                    - &ex * &gyz * xi.clone()
                    + s.g(&y, &pz) * px.clone()
                    - s.g(&x, &pz) * py
                    + rat(2) * s.g(&px, &y) * pz;
                let v = &quarter * (&hm3 * first + &hp1 * second);
                for (m, value) in v.0.into_iter().enumerate() {
                    out.set(&[i, j, k, m], value);
                }
            }
        }
    }
    out
}

/// Residual `R - model` as an identity report.
pub fn compare_curvature(name: &str, cb: &CurvatureBundle, model: &TensorField) -> Result<IdentityReport> {
    let diff = cb.riemann.try_sub(model)?;
    Ok(check_tensor_zero(name, &diff))
}

/// Candidate `H = R(X,φX,X,φX)/g(X,X)²` from the first non-null horizontal
/// direction (a projected frame vector, or a projected sum of two), confirmed by comparing `R` with [`phps_model`].
pub fn detect_h(s: &ParacontactStructure, cb: &CurvatureBundle) -> Result<HolSectionalResult> {
    ensure_quasi_para_sasakian(s)?;
    let d = s.dim();
    let per_direction: Vec<(usize, Rational)> = (0..d)
        .filter_map(|i| {
            let x = s.h(&Vector::basis(d, i));
            let gxx = s.g(&x, &x);
            if gxx.is_zero() {
                return None;
            }
            let px = s.phi(&x);
            Some((i + 1, cb.r4(&x, &px, &x, &px) / (&gxx * &gxx)))
        })
        .collect();
    let x = non_null_horizontal(s).into_iter().next().ok_or(Error::DegenerateDirection)?;
    let (gxx, px) = (s.g(&x, &x), s.phi(&x));
    let h = cb.r4(&x, &px, &x, &px) / (&gxx * &gxx);
    let comparison = compare_curvature("constant_phps", cb, &phps_tensor(s, &h))?;
    Ok(HolSectionalResult {
        h,
        matches_model: comparison.pass,
        comparison,
        per_direction,
    })
}
