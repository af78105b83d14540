use super::{structural::metric_trace, IdentityReport, Witness};
use crate::algebra::{rat, Rational};
use crate::curvature::CurvatureBundle;
use crate::error::{Error, Result};
use crate::tensor::{TensorField, Valence};

/// Weyl conformal curvature tensor, `(0,4)`:
///
/// `C = R - (Ric ⊙ g)/(d-2) + scal/((d-1)(d-2)) · G`, with
/// `(Ric ⊙ g)(X,Y,Z,W) = Ric(Y,Z)g(X,W) - Ric(X,Z)g(Y,W) + g(Y,Z)Ric(X,W) - g(X,Z)Ric(Y,W)`
/// and `G(X,Y,Z,W) = g(Y,Z)g(X,W) - g(X,Z)g(Y,W)`.
pub fn weyl_tensor(cb: &CurvatureBundle) -> Result<TensorField> {
    let d = cb.dim();
    if d <= 3 {
        return Err(Error::DimensionTooSmall(d));
    }
    let dr = Rational::from_integer((d as i64).into());
    let ric_coeff = rat(1) / (&dr - rat(2));
    let scal_coeff = &cb.scal / ((&dr - rat(1)) * (&dr - rat(2)));
    let g = &cb.metric;
    let ric = &cb.ricci;
    Ok(TensorField::from_fn(d, Valence::new(0, 4), |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        let ric_g = ric.get(&[y, z]) * &g[(x, w)] - ric.get(&[x, z]) * &g[(y, w)]
            + &g[(y, z)] * ric.get(&[x, w])
            - &g[(x, z)] * ric.get(&[y, w]);
        let gg = &g[(y, z)] * &g[(x, w)] - &g[(x, z)] * &g[(y, w)];
        cb.riemann_lowered.get(i) - &ric_coeff * ric_g + &scal_coeff * gg
    }))
}

/// Every metric contraction of a `(0,4)` tensor vanishes.
pub fn weyl_traces_vanish(cb: &CurvatureBundle, c: &TensorField) -> IdentityReport {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let witness = pairs.iter().find_map(|&(a, b)| {
        let traced = metric_trace(cb, c, (a, b));
        traced.first_nonzero().map(|(idx, r)| Witness {
            indices: [a + 1, b + 1].into_iter().chain(idx.iter().map(|i| i + 1)).collect(),
            component: None,
            residual: r,
        })
    });
    IdentityReport::from_witness("weyl_trace_free", witness)
}
