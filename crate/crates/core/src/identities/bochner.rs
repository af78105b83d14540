use super::{check_tensor_zero, qps::ensure_quasi_para_sasakian, Ctx, IdentityReport};
use crate::algebra::{rat, Rational};
use crate::curvature::CurvatureBundle;
use crate::error::Result;
use crate::paracontact::ParacontactStructure;
use crate::tensor::{TensorField, Valence};

/// PC-Bochner curvature tensor together with its constant `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcBochner {
    pub tensor: TensorField,
    pub k: Rational,
    pub zero: IdentityReport,
}

/// Paracontact Bochner tensor `B(X,Y,Z,W)` with `k = -(scal - 2n)/(2n + 2)`.
pub fn pc_bochner(s: &ParacontactStructure, cb: &CurvatureBundle) -> Result<PcBochner> {
    ensure_quasi_para_sasakian(s)?;
    let c = Ctx::new(s, cb);
    let d = c.dim();
    let two_n = c.two_n();
    let k = -(&cb.scal - &two_n) / (&two_n + rat(2));
    let denom = &two_n + rat(4);
    let ric_coeff = rat(1) / &denom;
    let gg_coeff = (&k - rat(4)) / &denom;
    let phi_coeff = -(&k + &two_n) / &denom;
    let eta_coeff = -(&k) / &denom;

    let tensor = TensorField::from_fn(d, Valence::new(0, 4), |i| {
        let (x, y, z, w) = (c.e(i[0]), c.e(i[1]), c.e(i[2]), c.e(i[3]));
        let (px, py, pz, pw) = (c.phi(&x), c.phi(&y), c.phi(&z), c.phi(&w));
        let (ex, ey, ez, ew) = (c.eta(&x), c.eta(&y), c.eta(&z), c.eta(&w));
        let g = |a, b| c.g(a, b);
        let ric = |a, b| c.ric(a, b);

        let ricci_part = ric(&x, &z) * g(&y, &w) - ric(&y, &z) * g(&x, &w) + ric(&y, &w) * g(&x, &z)
            - ric(&x, &w) * g(&y, &z)
            + ric(&px, &z) * g(&y, &pw)
            - ric(&py, &z) * g(&x, &pw)
            + ric(&py, &w) * g(&x, &pz)
            - ric(&px, &w) * g(&y, &pz)
            + rat(2) * ric(&px, &y) * g(&z, &pw)
            + rat(2) * ric(&pz, &w) * g(&x, &py)
            - ric(&x, &z) * &ey * &ew
            + ric(&y, &z) * &ex * &ew
            - ric(&y, &w) * &ex * &ez
            + ric(&x, &w) * &ey * &ez;
        let metric_part = g(&x, &z) * g(&y, &w) - g(&y, &z) * g(&x, &w);
        let phi_part =
            g(&y, &pw) * g(&x, &pz) - g(&x, &pw) * g(&y, &pz) + rat(2) * g(&x, &py) * g(&z, &pw);
        let eta_part = g(&x, &z) * &ey * &ew - g(&y, &z) * &ex * &ew + g(&y, &w) * &ex * &ez
            - g(&x, &w) * &ey * &ez;

        c.r4(&x, &y, &z, &w)
            + &ric_coeff * ricci_part
            + &gg_coeff * metric_part
            + &phi_coeff * phi_part
            + &eta_coeff * eta_part
    });
    let zero = check_tensor_zero("pc_bochner_zero", &tensor);
    Ok(PcBochner { tensor, k, zero })
}
