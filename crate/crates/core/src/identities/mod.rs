//! Verifiers for the curvature identities of quasi-para-Sasakian frames.
//!
//! Every check is multilinear in its arguments, so it is enough to test it
//! on all tuples of frame vectors. Each verifier returns an
//! [`IdentityReport`]; a failing report carries the first basis tuple (in
//! row-major order) where the residual `lhs - rhs` is nonzero, together with
//! the exact residual.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{format_rational, Rational};
use crate::tensor::{index_tuples, TensorField, Vector};

mod bochner;
mod einstein;
mod holomorphic;
mod parallel;
mod qps;
mod semisymmetry;
pub mod structural;
mod three_dim;
mod weyl;

pub use bochner::{pc_bochner, PcBochner};
pub use einstein::{constant_curvature_test, eta_einstein_fit, EtaEinsteinFit};
pub use holomorphic::{compare_curvature, detect_h, phps_model, HolSectionalResult};
pub use parallel::{
    cyclic_parallel_check, cyclic_parallel_ricci_test, eta_parallel_check, eta_parallel_ricci_test,
    local_phi_symmetry_test, local_symmetry_test,
};
pub use qps::{ensure_quasi_para_sasakian, verify_xi_curvature, verify_phi_curvature, verify_structure_consequences};
pub use semisymmetry::{check_ricci_semisymmetry, check_semisymmetry, derivation_action};
pub use three_dim::{three_d_reconstruct, ThreeDimReport};
pub use weyl::{weyl_tensor, weyl_traces_vanish};

/// Where an identity first fails. Indices are one-based frame labels
/// (`1` means `E_1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    /// Component of a vector-valued residual, one-based; `None` for scalar
    /// identities.
    pub component: Option<usize>,
    pub residual: Rational,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.indices.iter().map(|i| format!("E{i}")).collect();
        write!(f, "at ({})", args.join(", "))?;
        if let Some(c) = self.component {
            write!(f, " component E{c}")?;
        }
        write!(f, ": residual {}", format_rational(&self.residual))
    }
}

/// Outcome of one named identity check. `pass` is true exactly when there is
/// no witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        Self {
            name: name.into(),
            pass: witness.is_none(),
            witness,
        }
    }

    pub fn passed(name: impl Into<String>) -> Self {
        Self::from_witness(name, None)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass", self.name),
            Some(w) => write!(f, "{}: FAIL {w}", self.name),
        }
    }
}

fn one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

/// Checks that a vector-valued residual vanishes on every basis tuple.
pub(crate) fn check_vectors(
    name: &str,
    dim: usize,
    arity: usize,
    mut residual: impl FnMut(&[usize]) -> Vector,
) -> IdentityReport {
    let witness = index_tuples(dim, arity).find_map(|idx| {
        residual(&idx).first_nonzero().map(|(c, r)| Witness {
            indices: one_based(&idx),
            component: Some(c + 1),
            residual: r,
        })
    });
    IdentityReport::from_witness(name, witness)
}

/// Checks that a scalar residual vanishes on every basis tuple.
pub(crate) fn check_scalars(
    name: &str,
    dim: usize,
    arity: usize,
    mut residual: impl FnMut(&[usize]) -> Rational,
) -> IdentityReport {
    let witness = index_tuples(dim, arity).find_map(|idx| {
        let r = residual(&idx);
        (!r.is_zero()).then(|| Witness {
            indices: one_based(&idx),
            component: None,
            residual: r,
        })
    });
    IdentityReport::from_witness(name, witness)
}

/// Reports the first nonzero component of a tensor. For tensors with a
/// contravariant part the trailing index is reported as the component.
pub(crate) fn check_tensor_zero(name: &str, t: &TensorField) -> IdentityReport {
    let witness = t.first_nonzero().map(|(idx, r)| {
        let cov = t.valence().cov;
        let component = (t.valence().contra == 1).then(|| idx[cov] + 1);
        Witness {
            indices: one_based(&idx[..cov.min(idx.len())]),
            component,
            residual: r,
        }
    });
    IdentityReport::from_witness(name, witness)
}

/// Non-null horizontal directions: every `φ²E_i`, then every `φ²(E_i + E_j)`.
/// The metric is nondegenerate on the paracontact distribution, so by
/// polarization the list is nonempty whenever that distribution is nonzero.
pub(crate) fn non_null_horizontal(s: &crate::paracontact::ParacontactStructure) -> Vec<Vector> {
    let d = s.dim();
    let e = |i| Vector::basis(d, i);
    let singles = (0..d).map(|i| s.h(&e(i)));
    let pairs = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).map(|(i, j)| s.h(&(e(i) + e(j))));
    singles.chain(pairs).filter(|x| !s.g(x, x).is_zero()).collect()
}

/// Helper view bundling the structure tensors of a frame, so identities can
/// be written close to their textbook form.
pub(crate) struct Ctx<'a> {
    pub s: &'a crate::paracontact::ParacontactStructure,
    pub cb: &'a crate::curvature::CurvatureBundle,
}

impl<'a> Ctx<'a> {
    pub fn new(
        s: &'a crate::paracontact::ParacontactStructure,
        cb: &'a crate::curvature::CurvatureBundle,
    ) -> Self {
        Self { s, cb }
    }

    pub fn dim(&self) -> usize {
        self.s.dim()
    }

    pub fn e(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    pub fn g(&self, x: &Vector, y: &Vector) -> Rational {
        self.cb.g(x, y)
    }

    pub fn phi(&self, x: &Vector) -> Vector {
        self.s.phi(x)
    }

    pub fn eta(&self, x: &Vector) -> Rational {
        self.s.eta(x)
    }

    pub fn xi(&self) -> Vector {
        self.s.xi().clone()
    }

    pub fn r(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.cb.r(x, y, z)
    }

    pub fn r4(&self, x: &Vector, y: &Vector, z: &Vector, w: &Vector) -> Rational {
        self.cb.r4(x, y, z, w)
    }

    pub fn ric(&self, x: &Vector, y: &Vector) -> Rational {
        self.cb.ric(x, y)
    }

    /// `2n` for a `(2n+1)`-dimensional frame.
    pub fn two_n(&self) -> Rational {
        Rational::from_integer((self.dim() as i64 - 1).into())
    }
}
