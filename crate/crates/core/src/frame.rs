//! Lie-algebra frames `{E_1, …, E_d}` with a constant metric.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{invert_symmetric, Rational, SymMatrix};
use crate::error::{Error, Result};
use crate::tensor::{index_tuples, TensorField, Valence, Vector};

/// Basis of left-invariant vector fields with `[E_i, E_j] = c^k_ij E_k` and a
/// constant metric `g_ij = g(E_i, E_j)`.
///
/// Structure constants are a `(1,2)` tensor: the entry at `[i, j, k]` is
/// `c^k_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameManifold {
    structure: TensorField,
    metric: SymMatrix,
}

impl FrameManifold {
    /// Builds a frame from full structure constants. Antisymmetry and the
    /// Jacobi identity are not enforced here; see [`validate_frame`].
    pub fn new(structure: TensorField, metric: SymMatrix) -> Result<Self> {
        if structure.valence() != Valence::new(1, 2) {
            return Err(Error::ValenceMismatch {
                expected: "(1,2)".into(),
                found: structure.valence().to_string(),
            });
        }
        if structure.dim() != metric.dim() {
            return Err(Error::DimensionMismatch {
                expected: metric.dim(),
                found: structure.dim(),
            });
        }
        Ok(Self { structure, metric })
    }

    /// Builds a frame from brackets `[E_i, E_j] ∋ value·E_k` given as
    /// zero-based `(i, j, k, value)`, filling in `c^k_ji = -c^k_ij`.
    pub fn from_brackets(metric: SymMatrix, brackets: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let dim = metric.dim();
        let mut c = TensorField::zeros(dim, Valence::new(1, 2));
        for (i, j, k, value) in brackets {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: (*i).max(*j).max(*k) + 1,
                });
            }
            c.set(&[*i, *j, *k], value.clone());
            c.set(&[*j, *i, *k], -value.clone());
        }
        Self::new(c, metric)
    }

    /// Commutative frame (all brackets zero).
    pub fn abelian(metric: SymMatrix) -> Self {
        let dim = metric.dim();
        Self {
            structure: TensorField::zeros(dim, Valence::new(1, 2)),
            metric,
        }
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn metric(&self) -> &SymMatrix {
        &self.metric
    }

    pub fn structure_constants(&self) -> &TensorField {
        &self.structure
    }

    /// `c^k_ij`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.structure.get(&[i, j, k])
    }

    pub fn g(&self, u: &Vector, v: &Vector) -> Rational {
        self.metric.form(u.components(), v.components())
    }

    pub fn metric_inverse(&self) -> Result<SymMatrix> {
        invert_symmetric(&self.metric)
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// `[E_i, E_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.structure.vector_at(&[i, j])
    }

    /// Bracket of two left-invariant fields with constant components.
    pub fn bracket(&self, u: &Vector, v: &Vector) -> Vector {
        self.structure.apply(&[u, v])
    }

    pub fn with_metric(&self, metric: SymMatrix) -> Result<Self> {
        Self::new(self.structure.clone(), metric)
    }
}

/// A single failed frame condition. Indices are one-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameViolation {
    /// `c^k_ij + c^k_ji != 0`, reported as `(k, i, j)`.
    Antisymmetry { k: usize, i: usize, j: usize },
    /// Cyclic sum `[[E_i,E_j],E_l] + …` has a nonzero `E_n` component.
    Jacobi { n: usize, i: usize, j: usize, l: usize, residual: Rational },
    /// `det g = 0`.
    DegenerateMetric,
}

impl fmt::Display for FrameViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Antisymmetry { k, i, j } => {
                write!(f, "structure constants not antisymmetric at (k,i,j) = ({k},{i},{j})")
            }
            Self::Jacobi { n, i, j, l, residual } => write!(
                f,
                "Jacobi identity fails for (E{i}, E{j}, E{l}): E{n} component {residual}"
            ),
            Self::DegenerateMetric => write!(f, "metric is degenerate (det g = 0)"),
        }
    }
}

/// Outcome of [`validate_frame`]: the first violation of each kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrameReport {
    pub violations: Vec<FrameViolation>,
}

impl FrameReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for FrameReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid frame");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks antisymmetry, the Jacobi identity and nondegeneracy of `g`.
pub fn validate_frame(frame: &FrameManifold) -> FrameReport {
    let d = frame.dim();
    let mut violations = Vec::new();

    let antisym = index_tuples(d, 3).find(|idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        !(frame.c(i, j, k) + frame.c(j, i, k)).is_zero()
    });
    if let Some(idx) = antisym {
        violations.push(FrameViolation::Antisymmetry {
            k: idx[2] + 1,
            i: idx[0] + 1,
            j: idx[1] + 1,
        });
    }

    'jacobi: for idx in index_tuples(d, 3) {
        let (i, j, l) = (idx[0], idx[1], idx[2]);
        for n in 0..d {
            let mut sum = Rational::zero();
            for (a, b, e) in [(i, j, l), (j, l, i), (l, i, j)] {
                for m in 0..d {
                    sum += frame.c(a, b, m) * frame.c(m, e, n);
                }
            }
            if !sum.is_zero() {
                violations.push(FrameViolation::Jacobi {
                    n: n + 1,
                    i: i + 1,
                    j: j + 1,
                    l: l + 1,
                    residual: sum,
                });
                break 'jacobi;
            }
        }
    }

    if frame.metric().determinant().is_zero() {
        violations.push(FrameViolation::DegenerateMetric);
    }

    FrameReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn lorentz_diag() -> SymMatrix {
        SymMatrix::diagonal(&[rat(1), rat(-1), rat(1)])
    }

    #[test]
    fn rotation_brackets_form_a_lie_algebra() {
        let f = FrameManifold::from_brackets(
            lorentz_diag(),
            &[(0, 1, 2, rat(2)), (0, 2, 1, rat(2)), (1, 2, 0, rat(2))],
        )
        .unwrap();
        assert!(validate_frame(&f).is_valid());
        assert_eq!(f.bracket_basis(1, 0), Vector(vec![rat(0), rat(0), rat(-2)]));
    }

    #[test]
    fn abelian_frame_is_valid() {
        assert!(validate_frame(&FrameManifold::abelian(lorentz_diag())).is_valid());
    }

    #[test]
    fn antisymmetry_violation_is_located() {
        let mut c = TensorField::zeros(3, Valence::new(1, 2));
        c.set(&[0, 1, 2], rat(1));
        c.set(&[1, 0, 2], rat(1));
        let f = FrameManifold::new(c, lorentz_diag()).unwrap();
        let report = validate_frame(&f);
        assert_eq!(
            report.violations.first(),
            Some(&FrameViolation::Antisymmetry { k: 3, i: 1, j: 2 })
        );
    }

    #[test]
    fn jacobi_violation_is_detected() {
        // [E1,E2] = E2, [E2,E3] = E1
        let f = FrameManifold::from_brackets(
            SymMatrix::identity(3),
            &[(0, 1, 1, rat(1)), (1, 2, 0, rat(1))],
        )
        .unwrap();
        let report = validate_frame(&f);
        assert!(matches!(report.violations.as_slice(), [FrameViolation::Jacobi { .. }]));
    }

    #[test]
    fn degenerate_metric_is_reported() {
        let g = SymMatrix::diagonal(&[rat(1), rat(0), rat(1)]);
        let report = validate_frame(&FrameManifold::abelian(g));
        assert_eq!(report.violations, vec![FrameViolation::DegenerateMetric]);
        assert!(report.to_string().contains("metric"));
    }
}
