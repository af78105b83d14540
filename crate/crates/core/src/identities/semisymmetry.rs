//! Curvature acting as a derivation of the tensor algebra.

use num_traits::Zero;

use super::{check_tensor_zero, IdentityReport};
use crate::algebra::Rational;
use crate::curvature::CurvatureBundle;
use crate::error::{Error, Result};
use crate::tensor::{TensorField, Valence};

/// `R(E_i,E_j)·T` for every `i, j`, as a tensor with two extra leading
/// covariant slots. On a covariant slot the action contributes
/// `-T(…, R(E_i,E_j)E_a, …)`; on a contravariant slot it applies
/// `R(E_i,E_j)` to the output.
pub fn derivation_action(cb: &CurvatureBundle, t: &TensorField) -> Result<TensorField> {
    if t.dim() != cb.dim() {
        return Err(Error::DimensionMismatch {
            expected: cb.dim(),
            found: t.dim(),
        });
    }
    let d = t.dim();
    let r = &cb.riemann;
    let Valence { contra, cov } = t.valence();
    Ok(TensorField::from_fn(d, Valence::new(contra, cov + 2), |idx| {
        let (i, j) = (idx[0], idx[1]);
        let rest = &idx[2..];
        let mut probe = rest.to_vec();
        let mut value = Rational::zero();
        for slot in 0..cov + contra {
            let original = rest[slot];
            for l in 0..d {
                let coeff = if slot < cov {
                    -r.get(&[i, j, original, l])
                } else {
                    r.get(&[i, j, l, original]).clone()
                };
                if coeff.is_zero() {
                    continue;
                }
                probe[slot] = l;
                value += coeff * t.get(&probe);
            }
            probe[slot] = original;
        }
        value
    }))
}

/// `R(X,Y)·Ric = 0`.
pub fn check_ricci_semisymmetry(cb: &CurvatureBundle) -> Result<IdentityReport> {
    let action = derivation_action(cb, &cb.ricci)?;
    Ok(check_tensor_zero("ricci_semisymmetric", &action))
}

/// `R(X,Y)·R = 0`.
pub fn check_semisymmetry(cb: &CurvatureBundle) -> Result<IdentityReport> {
    let action = derivation_action(cb, &cb.riemann)?;
    Ok(check_tensor_zero("semisymmetric", &action))
}
