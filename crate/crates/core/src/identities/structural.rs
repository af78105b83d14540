//! Identities every Levi-Civita connection and its curvature satisfy,
//! independent of any paracontact structure.

use num_traits::Zero;

use super::{check_scalars, check_tensor_zero, check_vectors, IdentityReport};
use crate::algebra::Rational;
use crate::connection::{covariant_derivative, Connection};
use crate::curvature::CurvatureBundle;
use crate::error::Result;
use crate::frame::FrameManifold;
use crate::tensor::{TensorField, Valence, Vector};

/// The metric as a `(0,2)` tensor.
pub fn metric_tensor(frame: &FrameManifold) -> TensorField {
    let g = frame.metric();
    TensorField::from_fn(frame.dim(), Valence::new(0, 2), |idx| g[(idx[0], idx[1])].clone())
}

/// `∇_{E_i}E_j - ∇_{E_j}E_i = [E_i, E_j]`.
pub fn torsion_free(frame: &FrameManifold, conn: &Connection) -> IdentityReport {
    check_vectors("torsion_free", frame.dim(), 2, |i| {
        conn.nabla_basis(i[0], i[1]) - conn.nabla_basis(i[1], i[0]) - frame.bracket_basis(i[0], i[1])
    })
}

/// `g(∇_{E_i}E_j, E_k) + g(E_j, ∇_{E_i}E_k) = 0`.
pub fn metric_compatible(frame: &FrameManifold, conn: &Connection) -> IdentityReport {
    let e = |i| frame.basis(i);
    check_scalars("metric_compatible", frame.dim(), 3, |i| {
        frame.g(&conn.nabla_basis(i[0], i[1]), &e(i[2])) + frame.g(&e(i[1]), &conn.nabla_basis(i[0], i[2]))
    })
}

/// `∇g = 0`, computed through the generic covariant derivative.
pub fn nabla_metric_zero(frame: &FrameManifold, conn: &Connection) -> Result<IdentityReport> {
    let ng = covariant_derivative(conn, &metric_tensor(frame))?;
    Ok(check_tensor_zero("nabla_metric_zero", &ng))
}

/// `R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0`.
pub fn bianchi_first(cb: &CurvatureBundle) -> IdentityReport {
    let r = &cb.riemann;
    check_vectors("bianchi_first", cb.dim(), 3, |i| {
        let (x, y, z) = (i[0], i[1], i[2]);
        r.vector_at(&[x, y, z]) + r.vector_at(&[y, z, x]) + r.vector_at(&[z, x, y])
    })
}

/// `(∇_Z R)(X,Y) + (∇_X R)(Y,Z) + (∇_Y R)(Z,X) = 0`, applied to every `W`.
pub fn bianchi_second(nabla_r: &TensorField) -> IdentityReport {
    check_vectors("bianchi_second", nabla_r.dim(), 4, |i| {
        let (z, x, y, w) = (i[0], i[1], i[2], i[3]);
        nabla_r.vector_at(&[z, x, y, w]) + nabla_r.vector_at(&[x, y, z, w]) + nabla_r.vector_at(&[y, z, x, w])
    })
}

/// `R(X,Y) = -R(Y,X)`, `R(X,Y,Z,W) = -R(X,Y,W,Z)` and
/// `R(X,Y,Z,W) = R(Z,W,X,Y)`.
pub fn curvature_symmetries(cb: &CurvatureBundle) -> IdentityReport {
    let r = &cb.riemann;
    let r4 = &cb.riemann_lowered;
    let d = cb.dim();
    let skew = check_vectors("curvature_symmetries", d, 3, |i| {
        r.vector_at(&[i[0], i[1], i[2]]) + r.vector_at(&[i[1], i[0], i[2]])
    });
    if !skew.pass {
        return skew;
    }
    let last_pair = check_scalars("curvature_symmetries", d, 4, |i| {
        r4.get(&[i[0], i[1], i[2], i[3]]) + r4.get(&[i[0], i[1], i[3], i[2]])
    });
    if !last_pair.pass {
        return last_pair;
    }
    check_scalars("curvature_symmetries", d, 4, |i| {
        r4.get(&[i[0], i[1], i[2], i[3]]) - r4.get(&[i[2], i[3], i[0], i[1]])
    })
}

pub fn ricci_symmetric(cb: &CurvatureBundle) -> IdentityReport {
    check_scalars("ricci_symmetric", cb.dim(), 2, |i| {
        cb.ricci.get(&[i[0], i[1]]) - cb.ricci.get(&[i[1], i[0]])
    })
}

/// `g(QX, Y) = Ric(X,Y)` and `tr Q = scal`.
pub fn ricci_operator_consistent(cb: &CurvatureBundle) -> IdentityReport {
    let d = cb.dim();
    let e = |i| Vector::basis(d, i);
    let lowered = check_scalars("ricci_operator", d, 2, |i| {
        cb.g(&cb.q(&e(i[0])), &e(i[1])) - cb.ricci.get(&[i[0], i[1]])
    });
    if !lowered.pass {
        return lowered;
    }
    check_scalars("ricci_operator", d, 0, |_| cb.ricci_operator_trace() - &cb.scal)
}

/// Sum of `g^{ij} T_{..i..j..}` over one pair of covariant slots.
pub fn metric_trace(cb: &CurvatureBundle, t: &TensorField, slots: (usize, usize)) -> TensorField {
    let d = t.dim();
    let rank = t.valence().rank();
    let (a, b) = slots;
    let out = Valence::new(t.valence().contra, t.valence().cov - 2);
    TensorField::from_fn(d, out, |rest| {
        let mut full = Vec::with_capacity(rank);
        let mut it = rest.iter();
        for slot in 0..rank {
            full.push(if slot == a || slot == b { 0 } else { *it.next().unwrap() });
        }
        let mut acc = Rational::zero();
        for i in 0..d {
            for j in 0..d {
                let gij = &cb.metric_inverse[(i, j)];
                if gij.is_zero() {
                    continue;
                }
                full[a] = i;
                full[b] = j;
                acc += gij * t.get(&full);
            }
        }
        acc
    })
}
