//! Almost paracontact structures `(φ, ξ, η)` on a frame, their axioms,
//! normality, Lie derivatives along `ξ` and classification.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{ratio, signature, Rational};
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::frame::FrameManifold;
use crate::identities::{check_scalars, check_vectors, IdentityReport};
use crate::tensor::{TensorField, Valence, Vector};

/// `(φ, ξ, η)` with constant components on a frame. `φ` is a `(1,1)` tensor
/// whose entry `[i, m]` is the `E_m` component of `φE_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParacontactStructure {
    base: FrameManifold,
    phi: TensorField,
    xi: Vector,
    eta: Vector,
}

impl ParacontactStructure {
    pub fn new(base: FrameManifold, phi: TensorField, xi: Vector, eta: Vector) -> Result<Self> {
        let d = base.dim();
        if phi.valence() != Valence::new(1, 1) {
            return Err(Error::ValenceMismatch {
                expected: "(1,1)".into(),
                found: phi.valence().to_string(),
            });
        }
        for found in [phi.dim(), xi.dim(), eta.dim()] {
            if found != d {
                return Err(Error::DimensionMismatch { expected: d, found });
            }
        }
        Ok(Self { base, phi, xi, eta })
    }

    pub fn base(&self) -> &FrameManifold {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `n` for a `(2n+1)`-dimensional frame (rounded down for even `d`).
    pub fn n(&self) -> usize {
        (self.dim().saturating_sub(1)) / 2
    }

    pub fn phi_tensor(&self) -> &TensorField {
        &self.phi
    }

    pub fn xi(&self) -> &Vector {
        &self.xi
    }

    pub fn eta_components(&self) -> &Vector {
        &self.eta
    }

    pub fn eta_tensor(&self) -> TensorField {
        TensorField::covector(self.eta.components())
    }

    pub fn phi(&self, x: &Vector) -> Vector {
        self.phi.apply(&[x])
    }

    pub fn eta(&self, x: &Vector) -> Rational {
        self.eta
            .components()
            .iter()
            .zip(x.components())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `h = φ²`, the projection onto `Ker η` along `ξ`.
    pub fn h(&self, x: &Vector) -> Vector {
        self.phi(&self.phi(x))
    }

    pub fn projection(&self) -> TensorField {
        let d = self.dim();
        let images: Vec<Vector> = (0..d).map(|i| self.h(&Vector::basis(d, i))).collect();
        TensorField::from_fn(d, Valence::new(1, 1), |idx| images[idx[0]].0[idx[1]].clone())
    }

    pub fn trace_phi(&self) -> Rational {
        (0..self.dim()).fold(Rational::zero(), |acc, i| acc + self.phi.get(&[i, i]))
    }

    pub fn g(&self, x: &Vector, y: &Vector) -> Rational {
        self.base.g(x, y)
    }

    fn e(&self, i: usize) -> Vector {
        self.base.basis(i)
    }

    /// `(∇_X φ)Y = ∇_X(φY) - φ(∇_X Y)`.
    pub fn nabla_phi(&self, conn: &Connection, x: &Vector, y: &Vector) -> Vector {
        conn.nabla(x, &self.phi(y)) - self.phi(&conn.nabla(x, y))
    }
}

/// Results of the structure axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub phi_xi: IdentityReport,
    pub eta_phi: IdentityReport,
    pub eta_xi: IdentityReport,
    pub phi_squared: IdentityReport,
    pub compatible_metric: IdentityReport,
    pub eta_metric_dual: IdentityReport,
    /// Inertia of `g`, when nondegenerate.
    pub signature: Option<(usize, usize)>,
    pub signature_ok: bool,
}

impl AxiomReport {
    pub fn almost_paracontact(&self) -> bool {
        self.phi_xi.pass && self.eta_phi.pass && self.eta_xi.pass && self.phi_squared.pass
    }

    pub fn all_pass(&self) -> bool {
        self.almost_paracontact()
            && self.compatible_metric.pass
            && self.eta_metric_dual.pass
            && self.signature_ok
    }
}

fn axiom_flags(s: &ParacontactStructure) -> AxiomReport {
    let d = s.dim();
    let xi = s.xi().clone();
    let phi_xi = check_vectors("phi_xi", d, 0, |_| s.phi(&xi));
    let eta_phi = check_scalars("eta_phi", d, 1, |i| s.eta(&s.phi(&s.e(i[0]))));
    let eta_xi = check_scalars("eta_xi", d, 0, |_| s.eta(&xi) - Rational::one());
    let phi_squared = check_vectors("phi_squared", d, 1, |i| {
        let x = s.e(i[0]);
        s.h(&x) - (x.clone() - s.eta(&x) * xi.clone())
    });
    let compatible_metric = check_scalars("compatible_metric", d, 2, |i| {
        let (x, y) = (s.e(i[0]), s.e(i[1]));
        s.g(&s.phi(&x), &s.phi(&y)) + s.g(&x, &y) - s.eta(&x) * s.eta(&y)
    });
    let eta_metric_dual = check_scalars("eta_metric_dual", d, 1, |i| {
        let x = s.e(i[0]);
        s.eta(&x) - s.g(&x, &xi)
    });
    let sig = signature(s.base().metric()).ok();
    let n = s.n();
    let signature_ok = d % 2 == 1 && sig == Some((n + 1, n));
    AxiomReport {
        phi_xi,
        eta_phi,
        eta_xi,
        phi_squared,
        compatible_metric,
        eta_metric_dual,
        signature: sig,
        signature_ok,
    }
}

/// Verifies `φξ = 0`, `η∘φ = 0`, `η(ξ) = 1`, `φ² = id - η⊗ξ`, the
/// compatibility `g(φX,φY) = -g(X,Y) + η(X)η(Y)`, `η = g(·,ξ)` and the
/// signature `(n+1, n)`.
pub fn check_axioms(s: &ParacontactStructure) -> Result<AxiomReport> {
    if s.dim().is_multiple_of(2) {
        return Err(Error::EvenDimension(s.dim()));
    }
    Ok(axiom_flags(s))
}

/// `dη(E_i, E_j) = -½ η([E_i, E_j])` for constant `η`.
pub fn d_eta(s: &ParacontactStructure) -> TensorField {
    let half = ratio(1, 2);
    let d = s.dim();
    TensorField::from_fn(d, Valence::new(0, 2), |idx| {
        -(&half * s.eta(&s.base().bracket_basis(idx[0], idx[1])))
    })
}

/// `[φ,φ]`, `N⁽¹⁾ = [φ,φ] - 2dη⊗ξ` and whether the structure is normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NijenhuisReport {
    pub bracket: TensorField,
    pub n1: TensorField,
    pub normal: IdentityReport,
}

pub fn nijenhuis_normality(s: &ParacontactStructure) -> NijenhuisReport {
    let d = s.dim();
    let f = s.base();
    let de = d_eta(s);
    let torsion = |i: usize, j: usize| {
        let (x, y) = (s.e(i), s.e(j));
        let (px, py) = (s.phi(&x), s.phi(&y));
        s.h(&f.bracket(&x, &y)) + f.bracket(&px, &py)
            - s.phi(&f.bracket(&px, &y))
            - s.phi(&f.bracket(&x, &py))
    };
    let mut bracket = TensorField::zeros(d, Valence::new(1, 2));
    let mut n1 = TensorField::zeros(d, Valence::new(1, 2));
    for i in 0..d {
        for j in 0..d {
            let b = torsion(i, j);
            let two_de = Rational::from_integer(2.into()) * de.get(&[i, j]);
            let n = b.clone() - two_de * s.xi().clone();
            for m in 0..d {
                bracket.set(&[i, j, m], b.0[m].clone());
                n1.set(&[i, j, m], n.0[m].clone());
            }
        }
    }
    let normal = crate::identities::check_tensor_zero("normal", &n1);
    NijenhuisReport { bracket, n1, normal }
}

/// `£_ξ g`, `£_ξ φ`, `£_ξ η` and whether each vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDerivatives {
    pub metric: TensorField,
    pub phi: TensorField,
    pub eta: TensorField,
    pub metric_zero: IdentityReport,
    pub phi_zero: IdentityReport,
    pub eta_zero: IdentityReport,
}

pub fn lie_derivatives_along_xi(s: &ParacontactStructure, conn: &Connection) -> LieDerivatives {
    let d = s.dim();
    let f = s.base();
    let xi = s.xi();
    let metric = TensorField::from_fn(d, Valence::new(0, 2), |idx| {
        let (x, y) = (s.e(idx[0]), s.e(idx[1]));
        s.g(&conn.nabla(&x, xi), &y) + s.g(&x, &conn.nabla(&y, xi))
    });
    let phi_images: Vec<Vector> = (0..d)
        .map(|i| {
            let x = s.e(i);
            f.bracket(xi, &s.phi(&x)) - s.phi(&f.bracket(xi, &x))
        })
        .collect();
    let phi = TensorField::from_fn(d, Valence::new(1, 1), |idx| phi_images[idx[0]].0[idx[1]].clone());
    let eta = TensorField::from_fn(d, Valence::new(0, 1), |idx| -s.eta(&f.bracket(xi, &s.e(idx[0]))));
    LieDerivatives {
        metric_zero: crate::identities::check_tensor_zero("lie_xi_g", &metric),
        phi_zero: crate::identities::check_tensor_zero("lie_xi_phi", &phi),
        eta_zero: crate::identities::check_tensor_zero("lie_xi_eta", &eta),
        metric,
        phi,
        eta,
    }
}

/// Which structure classes a frame belongs to. Every flag carries a witness
/// when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub axioms: AxiomReport,
    /// `g(X,φY) = dη(X,Y)`.
    pub paracontact_metric_pos: IdentityReport,
    /// `dη(X,Y) = -g(X,φY)`.
    pub paracontact_metric_neg: IdentityReport,
    /// `ξ` is Killing.
    pub k_paracontact: IdentityReport,
    /// `(∇_Xφ)Y = -g(X,Y)ξ + η(Y)X`.
    pub para_sasakian: IdentityReport,
    /// `(∇_Xφ)Y = g(X,Y)ξ - η(Y)X`.
    pub quasi_para_sasakian: IdentityReport,
    /// `∇_X ξ = φX`.
    pub nabla_xi_is_phi: IdentityReport,
    pub normal: IdentityReport,
}

impl ClassificationReport {
    pub fn almost_paracontact(&self) -> bool {
        self.axioms.almost_paracontact()
    }

    pub fn compatible_metric(&self) -> bool {
        self.axioms.compatible_metric.pass && self.axioms.eta_metric_dual.pass
    }

    pub fn signature_ok(&self) -> bool {
        self.axioms.signature_ok
    }

    /// Full quasi-para-Sasakian condition: an almost paracontact metric
    /// structure whose `∇φ` has the quasi-para-Sasakian form.
    pub fn is_quasi_para_sasakian(&self) -> bool {
        self.axioms.all_pass() && self.quasi_para_sasakian.pass
    }

    pub fn flags(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("almost_paracontact", self.almost_paracontact()),
            ("compatible_metric", self.compatible_metric()),
            ("signature_ok", self.signature_ok()),
            ("paracontact_metric_pos", self.paracontact_metric_pos.pass),
            ("paracontact_metric_neg", self.paracontact_metric_neg.pass),
            ("k_paracontact", self.k_paracontact.pass),
            ("para_sasakian", self.para_sasakian.pass),
            ("quasi_para_sasakian", self.is_quasi_para_sasakian()),
            ("nabla_xi_is_phi", self.nabla_xi_is_phi.pass),
            ("normal", self.normal.pass),
        ]
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in self.flags() {
            writeln!(f, "{name:>28}: {value}")?;
        }
        Ok(())
    }
}

/// Classifies `s` using the Levi-Civita connection `conn` of its base frame.
pub fn classify(s: &ParacontactStructure, conn: &Connection) -> ClassificationReport {
    let d = s.dim();
    let xi = s.xi().clone();
    let de = d_eta(s);

    let paracontact_metric_pos = check_scalars("paracontact_metric_pos", d, 2, |i| {
        s.g(&s.e(i[0]), &s.phi(&s.e(i[1]))) - de.get(i)
    });
    let paracontact_metric_neg = check_scalars("paracontact_metric_neg", d, 2, |i| {
        de.get(i) + s.g(&s.e(i[0]), &s.phi(&s.e(i[1])))
    });
    let k_paracontact = check_scalars("k_paracontact", d, 2, |i| {
        let (x, y) = (s.e(i[0]), s.e(i[1]));
        s.g(&conn.nabla(&x, &xi), &y) + s.g(&x, &conn.nabla(&y, &xi))
    });
    let para_sasakian = check_vectors("para_sasakian", d, 2, |i| {
        let (x, y) = (s.e(i[0]), s.e(i[1]));
        s.nabla_phi(conn, &x, &y) - (s.eta(&y) * x.clone() - s.g(&x, &y) * xi.clone())
    });
    let quasi_para_sasakian = check_vectors("quasi_para_sasakian", d, 2, |i| {
        let (x, y) = (s.e(i[0]), s.e(i[1]));
        s.nabla_phi(conn, &x, &y) - (s.g(&x, &y) * xi.clone() - s.eta(&y) * x.clone())
    });
    let nabla_xi_is_phi = check_vectors("nabla_xi_is_phi", d, 1, |i| {
        let x = s.e(i[0]);
        conn.nabla(&x, &xi) - s.phi(&x)
    });

    ClassificationReport {
        axioms: axiom_flags(s),
        paracontact_metric_pos,
        paracontact_metric_neg,
        k_paracontact,
        para_sasakian,
        quasi_para_sasakian,
        nabla_xi_is_phi,
        normal: nijenhuis_normality(s).normal,
    }
}
