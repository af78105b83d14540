//! Exact tensor calculus on Lie-group frames carrying an almost paracontact
//! metric structure `(φ, ξ, η, g)`.
//!
//! Every manifold handled here is homogeneous: it is described by a basis of
//! left-invariant vector fields `E_1, …, E_d`, their structure constants and a
//! constant metric. All tensors therefore have constant frame components and
//! every identity reduces to a finite check over basis tuples, carried out in
//! exact rational arithmetic.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals and small dense exact linear algebra.
//! * [`tensor`], [`frame`], [`connection`], [`curvature`]: frames, the
//!   Koszul connection, Riemann/Ricci/scalar curvature.
//! * [`paracontact`]: the structure tensors, axioms and classification.
//! * [`identities`]: verifiers for the curvature identities of
//!   quasi-para-Sasakian manifolds.
//! * [`catalog`]: built-in models and the model file format.
//! * [`report`]: the end-to-end check pipeline behind the CLI.

pub mod algebra;
pub mod catalog;
pub mod connection;
pub mod curvature;
pub mod error;
pub mod frame;
pub mod identities;
pub mod paracontact;
pub mod report;
pub mod tensor;

pub use algebra::{rat, ratio, Matrix, Rational, SymMatrix};
pub use catalog::ModelSpec;
pub use connection::{covariant_derivative, levi_civita, Connection};
pub use curvature::{curvature_bundle, nabla_curvature, sectional_curvature, CurvatureBundle};
pub use error::{Error, Result};
pub use frame::{validate_frame, FrameManifold, FrameReport, FrameViolation};
pub use identities::{IdentityReport, Witness};
pub use paracontact::{ClassificationReport, ParacontactStructure};
pub use tensor::{TensorField, Valence, Vector};
