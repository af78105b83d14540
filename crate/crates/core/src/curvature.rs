//! Riemann, Ricci and scalar curvature of the Levi-Civita connection.
//!
//! Conventions: `R(X,Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_{[X,Y]}Z`,
//! `R(X,Y,Z,W) = g(R(X,Y)Z, W)`, `Ric(X,Y) = tr(Z ↦ R(Z,X)Y)`,
//! `g(QX, Y) = Ric(X,Y)` and `scal = tr_g Ric`.

use num_traits::{One, Zero};

use crate::algebra::{invert_symmetric, Rational, SymMatrix};
use crate::connection::{covariant_derivative, Connection};
use crate::error::{Error, Result};
use crate::frame::FrameManifold;
use crate::tensor::{TensorField, Valence, Vector};

/// Curvature data of a frame. Fields are public so that deliberately
/// inconsistent bundles can be assembled for negative tests; verifiers work
/// on whatever data they are given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureBundle {
    pub metric: SymMatrix,
    pub metric_inverse: SymMatrix,
    /// `(1,3)`: `[i, j, k, m]` is the `E_m` component of `R(E_i,E_j)E_k`.
    pub riemann: TensorField,
    /// `(0,4)`: `R(E_i,E_j,E_k,E_l) = g(R(E_i,E_j)E_k, E_l)`.
    pub riemann_lowered: TensorField,
    pub ricci: TensorField,
    /// Ricci operator `Q`, `(1,1)`.
    pub ricci_operator: TensorField,
    pub scal: Rational,
}

impl CurvatureBundle {
    /// Derives `R4`, `Ric`, `Q` and `scal` from a `(1,3)` curvature tensor.
    pub fn from_riemann(metric: SymMatrix, riemann: TensorField) -> Result<Self> {
        let d = metric.dim();
        if riemann.valence() != Valence::new(1, 3) {
            return Err(Error::ValenceMismatch {
                expected: "(1,3)".into(),
                found: riemann.valence().to_string(),
            });
        }
        if riemann.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: riemann.dim(),
            });
        }
        let metric_inverse = invert_symmetric(&metric)?;

        let riemann_lowered = TensorField::from_fn(d, Valence::new(0, 4), |idx| {
            (0..d).fold(Rational::zero(), |acc, m| {
                acc + riemann.get(&[idx[0], idx[1], idx[2], m]) * &metric[(m, idx[3])]
            })
        });
        let ricci = TensorField::from_fn(d, Valence::new(0, 2), |idx| {
            (0..d).fold(Rational::zero(), |acc, i| acc + riemann.get(&[i, idx[0], idx[1], i]))
        });
        let ricci_operator = TensorField::from_fn(d, Valence::new(1, 1), |idx| {
            (0..d).fold(Rational::zero(), |acc, y| {
                acc + &metric_inverse[(idx[1], y)] * ricci.get(&[idx[0], y])
            })
        });
        let mut scal = Rational::zero();
        for i in 0..d {
            for j in 0..d {
                scal += &metric_inverse[(i, j)] * ricci.get(&[i, j]);
            }
        }

        Ok(Self {
            metric,
            metric_inverse,
            riemann,
            riemann_lowered,
            ricci,
            ricci_operator,
            scal,
        })
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn g(&self, x: &Vector, y: &Vector) -> Rational {
        self.metric.form(x.components(), y.components())
    }

    /// `R(X,Y)Z`.
    pub fn r(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.riemann.apply(&[x, y, z])
    }

    /// `R(X,Y,Z,W)`.
    pub fn r4(&self, x: &Vector, y: &Vector, z: &Vector, w: &Vector) -> Rational {
        self.riemann_lowered.eval(&[x, y, z, w])
    }

    pub fn ric(&self, x: &Vector, y: &Vector) -> Rational {
        self.ricci.eval(&[x, y])
    }

    pub fn q(&self, x: &Vector) -> Vector {
        self.ricci_operator.apply(&[x])
    }

    /// `tr Q`.
    pub fn ricci_operator_trace(&self) -> Rational {
        (0..self.dim()).fold(Rational::zero(), |acc, i| acc + self.ricci_operator.get(&[i, i]))
    }
}

/// Curvature of the Levi-Civita connection `conn` of `frame`.
pub fn curvature_bundle(frame: &FrameManifold, conn: &Connection) -> Result<CurvatureBundle> {
    let d = frame.dim();
    if conn.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: conn.dim(),
        });
    }
    let riemann = TensorField::from_fn(d, Valence::new(1, 3), |idx| {
        let (i, j, k, m) = (idx[0], idx[1], idx[2], idx[3]);
        let mut value = Rational::zero();
        for l in 0..d {
            // ∇_i ∇_j E_k - ∇_j ∇_i E_k
            value += conn.gamma(j, k, l) * conn.gamma(i, l, m);
            value -= conn.gamma(i, k, l) * conn.gamma(j, l, m);
            // ∇_{[E_i,E_j]} E_k
            value -= frame.c(i, j, l) * conn.gamma(l, k, m);
        }
        value
    });
    CurvatureBundle::from_riemann(frame.metric().clone(), riemann)
}

/// `K(X,Y) = R(X,Y,Y,X) / (g(X,X)g(Y,Y) - g(X,Y)²)`.
pub fn sectional_curvature(cb: &CurvatureBundle, x: &Vector, y: &Vector) -> Result<Rational> {
    let gxy = cb.g(x, y);
    let denom = cb.g(x, x) * cb.g(y, y) - &gxy * &gxy;
    if denom.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    Ok(cb.r4(x, y, y, x) / denom)
}

/// `∇R` as a `(1,4)` tensor: `[w, i, j, k, m]` is the `E_m` component of
/// `(∇_{E_w} R)(E_i, E_j)E_k`.
pub fn nabla_curvature(frame: &FrameManifold, conn: &Connection, cb: &CurvatureBundle) -> Result<TensorField> {
    if frame.dim() != cb.dim() {
        return Err(Error::DimensionMismatch {
            expected: frame.dim(),
            found: cb.dim(),
        });
    }
    covariant_derivative(conn, &cb.riemann)
}

/// Curvature tensor of constant sectional curvature `c`:
/// `R(X,Y)Z = c(g(Y,Z)X - g(X,Z)Y)`.
pub fn space_form_riemann(metric: &SymMatrix, c: &Rational) -> TensorField {
    let d = metric.dim();
    TensorField::from_fn(d, Valence::new(1, 3), |idx| {
        let (i, j, k, m) = (idx[0], idx[1], idx[2], idx[3]);
        let delta = |a: usize, b: usize| if a == b { Rational::one() } else { Rational::zero() };
        c * (&metric[(j, k)] * delta(i, m) - &metric[(i, k)] * delta(j, m))
    })
}
