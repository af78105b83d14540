//! Levi-Civita connection of a left-invariant metric and covariant
//! derivatives of constant tensors.

use num_traits::Zero;

use crate::algebra::{ratio, Rational};
use crate::error::{Error, Result};
use crate::frame::FrameManifold;
use crate::tensor::{TensorField, Valence, Vector};

/// Connection coefficients in the frame: `∇_{E_i} E_j = Γ^k_ij E_k`, stored
/// as a `(1,2)` tensor with `Γ^k_ij` at `[i, j, k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    gamma: TensorField,
}

impl Connection {
    pub fn new(gamma: TensorField) -> Result<Self> {
        if gamma.valence() != Valence::new(1, 2) {
            return Err(Error::ValenceMismatch {
                expected: "(1,2)".into(),
                found: gamma.valence().to_string(),
            });
        }
        Ok(Self { gamma })
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn coefficients(&self) -> &TensorField {
        &self.gamma
    }

    /// `Γ^k_ij`.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.gamma.get(&[i, j, k])
    }

    /// `∇_{E_i} E_j`.
    pub fn nabla_basis(&self, i: usize, j: usize) -> Vector {
        self.gamma.vector_at(&[i, j])
    }

    /// `∇_X Y` for left-invariant `X`, `Y`.
    pub fn nabla(&self, x: &Vector, y: &Vector) -> Vector {
        self.gamma.apply(&[x, y])
    }
}

/// Koszul formula for a left-invariant metric:
/// `2g(∇_{E_i}E_j, E_k) = g([E_i,E_j],E_k) - g([E_j,E_k],E_i) + g([E_k,E_i],E_j)`.
pub fn levi_civita(frame: &FrameManifold) -> Result<Connection> {
    let d = frame.dim();
    let g = frame.metric();
    let ginv = frame.metric_inverse()?;
    let half = ratio(1, 2);

    // lowered[i][j][k] = 2 g(∇_{E_i}E_j, E_k)
    let lowered = |i: usize, j: usize, k: usize| {
        (0..d).fold(Rational::zero(), |acc, l| {
            acc + frame.c(i, j, l) * &g[(l, k)] - frame.c(j, k, l) * &g[(l, i)]
                + frame.c(k, i, l) * &g[(l, j)]
        })
    };

    let gamma = TensorField::from_fn(d, Valence::new(1, 2), |idx| {
        let (i, j, m) = (idx[0], idx[1], idx[2]);
        let sum = (0..d)
            .filter(|&k| !ginv[(m, k)].is_zero())
            .fold(Rational::zero(), |acc, k| acc + &ginv[(m, k)] * lowered(i, j, k));
        sum * &half
    });
    Connection::new(gamma)
}

/// `∇T` for a tensor with constant frame components. The new covariant
/// slot (the differentiation direction) comes first, so for a `(1,q)` tensor
/// the entry at `[w, a_1..a_q, m]` is the `E_m` component of
/// `(∇_{E_w} T)(E_{a_1}, …, E_{a_q})`.
pub fn covariant_derivative(conn: &Connection, t: &TensorField) -> Result<TensorField> {
    let d = t.dim();
    if d != conn.dim() {
        return Err(Error::DimensionMismatch {
            expected: conn.dim(),
            found: d,
        });
    }
    let Valence { contra, cov } = t.valence();
    let out = TensorField::from_fn(d, Valence::new(contra, cov + 1), |idx| {
        let w = idx[0];
        let rest = &idx[1..];
        let mut value = Rational::zero();
        let mut probe = rest.to_vec();
        for slot in 0..cov + contra {
            let original = rest[slot];
            for l in 0..d {
                let coeff = if slot < cov {
                    // -T(…, ∇_w E_a, …)
                    -conn.gamma(w, original, l)
                } else {
                    // +∇_w acting on the output slot
                    conn.gamma(w, l, original).clone()
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
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, SymMatrix};

    #[test]
    fn abelian_frame_is_flat() {
        let f = FrameManifold::abelian(SymMatrix::diagonal(&[rat(1), rat(-1), rat(1)]));
        assert!(levi_civita(&f).unwrap().coefficients().is_zero());
    }

    #[test]
    fn singular_metric_is_an_error() {
        let f = FrameManifold::abelian(SymMatrix::diagonal(&[rat(1), rat(0)]));
        assert_eq!(levi_civita(&f), Err(Error::SingularMatrix));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let f = FrameManifold::abelian(SymMatrix::identity(3));
        let conn = levi_civita(&f).unwrap();
        let t = TensorField::zeros(2, Valence::new(0, 1));
        assert!(matches!(
            covariant_derivative(&conn, &t),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
