//! Local symmetry conditions and parallelism of the Ricci tensor.

use super::{check_scalars, check_tensor_zero, check_vectors, IdentityReport};
use crate::connection::{covariant_derivative, Connection};
use crate::curvature::CurvatureBundle;
use crate::error::Result;
use crate::paracontact::ParacontactStructure;
use crate::tensor::{TensorField, Vector};

/// `∇R = 0`.
pub fn local_symmetry_test(nabla_r: &TensorField) -> IdentityReport {
    check_tensor_zero("locally_symmetric", nabla_r)
}

/// `φ²((∇_{hW}R)(hX,hY)hZ) = 0` for all frame vectors, `h = φ²`.
pub fn local_phi_symmetry_test(s: &ParacontactStructure, nabla_r: &TensorField) -> IdentityReport {
    let d = s.dim();
    let h = |i| s.h(&Vector::basis(d, i));
    check_vectors("locally_phi_symmetric", d, 4, |i| {
        let (w, x, y, z) = (h(i[0]), h(i[1]), h(i[2]), h(i[3]));
        s.h(&nabla_r.apply(&[&w, &x, &y, &z]))
    })
}

/// `(∇_X Ric)(φY, φZ) = 0` given `∇Ric` (entry `[x, y, z]` is
/// `(∇_{E_x}Ric)(E_y, E_z)`).
pub fn eta_parallel_check(s: &ParacontactStructure, nabla_ric: &TensorField) -> IdentityReport {
    let d = s.dim();
    let e = |i| Vector::basis(d, i);
    check_scalars("eta_parallel_ricci", d, 3, |i| {
        let (x, py, pz) = (e(i[0]), s.phi(&e(i[1])), s.phi(&e(i[2])));
        nabla_ric.eval(&[&x, &py, &pz])
    })
}

/// `(∇_X Ric)(Y,Z) + (∇_Y Ric)(Z,X) + (∇_Z Ric)(X,Y) = 0` given `∇Ric`.
pub fn cyclic_parallel_check(nabla_ric: &TensorField) -> IdentityReport {
    check_scalars("cyclic_parallel_ricci", nabla_ric.dim(), 3, |i| {
        let (x, y, z) = (i[0], i[1], i[2]);
        nabla_ric.get(&[x, y, z]) + nabla_ric.get(&[y, z, x]) + nabla_ric.get(&[z, x, y])
    })
}

pub fn eta_parallel_ricci_test(
    s: &ParacontactStructure,
    conn: &Connection,
    cb: &CurvatureBundle,
) -> Result<IdentityReport> {
    Ok(eta_parallel_check(s, &covariant_derivative(conn, &cb.ricci)?))
}

pub fn cyclic_parallel_ricci_test(conn: &Connection, cb: &CurvatureBundle) -> Result<IdentityReport> {
    Ok(cyclic_parallel_check(&covariant_derivative(conn, &cb.ricci)?))
}
