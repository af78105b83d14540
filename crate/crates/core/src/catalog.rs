//! Built-in reference models and the JSON model file format.
//!
//! A model file is a single JSON object; see `docs/model-format.md` for the
//! schema. All frame indices in files are one-based.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::Zero;
use serde::Deserialize;

use crate::algebra::{format_rational, parse_rational, rat, Matrix, Rational, SymMatrix};
use crate::error::{Error, Result};
use crate::frame::{validate_frame, FrameManifold};
use crate::paracontact::ParacontactStructure;
use crate::tensor::{TensorField, Valence, Vector};

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 3] = ["paper_example", "para_heisenberg", "abelian_flat"];

/// Exact description of a frame manifold with almost paracontact data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSpec {
    pub name: String,
    pub dim: usize,
    /// Nonzero `c^k_ij` as one-based `(i, j, k, value)` with `i < j`, sorted.
    pub structure_constants: Vec<(usize, usize, usize, Rational)>,
    pub metric: Vec<Vec<Rational>>,
    /// Matrix of `φ`: column `j` holds the components of `φE_j`.
    pub phi: Vec<Vec<Rational>>,
    pub xi: Vec<Rational>,
    pub eta: Vec<Rational>,
}

/// Looks up a built-in model.
///
/// All three share `g = diag(1,-1,1)`, `φE_1 = E_2`, `φE_2 = E_1`, `φE_3 = 0`
/// and `ξ = E_3`, `η = g(ξ,·)`:
///
/// * `paper_example`: `[E_1,E_2] = 2E_3`, `[E_1,E_3] = 2E_2`, `[E_2,E_3] = 2E_1`,
///   a quasi-para-Sasakian space of constant curvature `-1`;
/// * `para_heisenberg`: only `[E_1,E_2] = 2E_3`, quasi-para-Sasakian with
///   `H = 3` and `scal = 2`;
/// * `abelian_flat`: all brackets zero.
pub fn builtin(name: &str) -> Result<ModelSpec> {
    let brackets: Vec<(usize, usize, usize, Rational)> = match name {
        "paper_example" => vec![(1, 2, 3, rat(2)), (1, 3, 2, rat(2)), (2, 3, 1, rat(2))],
        "para_heisenberg" => vec![(1, 2, 3, rat(2))],
        "abelian_flat" => vec![],
        _ => return Err(Error::UnknownModel(name.to_string())),
    };
    let z = || rat(0);
    Ok(ModelSpec {
        name: name.to_string(),
        dim: 3,
        structure_constants: brackets,
        metric: vec![vec![rat(1), z(), z()], vec![z(), rat(-1), z()], vec![z(), z(), rat(1)]],
        phi: vec![vec![z(), rat(1), z()], vec![rat(1), z(), z()], vec![z(), z(), z()]],
        xi: vec![z(), z(), rat(1)],
        eta: vec![z(), z(), rat(1)],
    })
}

/// Resolves a builtin name, falling back to reading a model file.
pub fn resolve(source: &str) -> Result<ModelSpec> {
    if BUILTIN_NAMES.contains(&source) {
        return builtin(source);
    }
    let path = Path::new(source);
    if path.exists() {
        ModelSpec::load(path)
    } else {
        Err(Error::UnknownModel(source.to_string()))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    name: String,
    dim: usize,
    structure_constants: Vec<(usize, usize, usize, Scalar)>,
    metric: Vec<Vec<Scalar>>,
    phi: Vec<Vec<Scalar>>,
    xi: Vec<Scalar>,
    eta: Vec<Scalar>,
}

fn scalar(value: &Scalar, field: &str) -> Result<Rational> {
    match value {
        Scalar::Int(n) => Ok(rat(*n)),
        Scalar::Text(text) => parse_rational(text).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse {
                location: field.to_string(),
                message,
            },
            other => other,
        }),
    }
}

fn row(values: &[Scalar], dim: usize, field: &str) -> Result<Vec<Rational>> {
    if values.len() != dim {
        return Err(Error::Parse {
            location: field.to_string(),
            message: format!("expected {dim} entries, found {}", values.len()),
        });
    }
    values
        .iter()
        .enumerate()
        .map(|(i, v)| scalar(v, &format!("{field}[{i}]")))
        .collect()
}

fn square(rows: &[Vec<Scalar>], dim: usize, field: &str) -> Result<Vec<Vec<Rational>>> {
    if rows.len() != dim {
        return Err(Error::Parse {
            location: field.to_string(),
            message: format!("expected {dim} rows, found {}", rows.len()),
        });
    }
    rows.iter()
        .enumerate()
        .map(|(i, r)| row(r, dim, &format!("{field}[{i}]")))
        .collect()
}

impl ModelSpec {
    /// Parses a model document. Brackets given as `(j, i, k, v)` with `j > i`
    /// are stored as `(i, j, k, -v)`; listing both orientations of the same
    /// bracket component is a [`Error::DuplicateEntry`].
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let dim = file.dim;
        if dim == 0 {
            return Err(Error::Parse {
                location: "dim".into(),
                message: "dimension must be positive".into(),
            });
        }
        let mut brackets: BTreeMap<(usize, usize, usize), Rational> = BTreeMap::new();
        for (n, (i, j, k, value)) in file.structure_constants.iter().enumerate() {
            let field = format!("structure_constants[{n}]");
            let largest = *i.max(j).max(k);
            if *i == 0 || *j == 0 || *k == 0 {
                return Err(Error::Parse {
                    location: field,
                    message: "indices are one-based".into(),
                });
            }
            if largest > dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: largest,
                });
            }
            if i == j {
                return Err(Error::Parse {
                    location: field,
                    message: format!("[E{i}, E{i}] is always zero"),
                });
            }
            let mut v = scalar(value, &format!("{field}[3]"))?;
            let key = if i < j { (*i, *j, *k) } else { (*j, *i, *k) };
            if i > j {
                v = -v;
            }
            if brackets.insert(key, v).is_some() {
                return Err(Error::DuplicateEntry {
                    i: key.0,
                    j: key.1,
                    k: key.2,
                });
            }
        }
        let spec = ModelSpec {
            name: file.name,
            dim,
            structure_constants: brackets
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|((i, j, k), v)| (i, j, k, v))
                .collect(),
            metric: square(&file.metric, dim, "metric")?,
            phi: square(&file.phi, dim, "phi")?,
            xi: row(&file.xi, dim, "xi")?,
            eta: row(&file.eta, dim, "eta")?,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Reads and parses a model file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    /// Checks that the data describe a valid frame: symmetric nondegenerate
    /// metric and structure constants satisfying the Jacobi identity.
    pub fn validate(&self) -> Result<()> {
        let frame = self.frame()?;
        let report = validate_frame(&frame);
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidFrame(report.to_string()))
        }
    }

    /// The frame manifold, without validation.
    pub fn frame(&self) -> Result<FrameManifold> {
        let metric = Matrix::from_rows(self.metric.clone())
            .and_then(SymMatrix::new)
            .map_err(|e| Error::InvalidFrame(format!("metric: {e}")))?;
        let brackets: Vec<_> = self
            .structure_constants
            .iter()
            .map(|(i, j, k, v)| (i - 1, j - 1, k - 1, v.clone()))
            .collect();
        FrameManifold::from_brackets(metric, &brackets)
    }

    /// The frame together with `(φ, ξ, η)`.
    pub fn structure(&self) -> Result<ParacontactStructure> {
        let frame = self.frame()?;
        let d = self.dim;
        let phi = TensorField::from_fn(d, Valence::new(1, 1), |idx| self.phi[idx[1]][idx[0]].clone());
        ParacontactStructure::new(frame, phi, Vector(self.xi.clone()), Vector(self.eta.clone()))
    }

    /// Canonical file encoding: fixed key order, one matrix row per line,
    /// rationals in lowest terms as strings.
    pub fn to_json(&self) -> String {
        let q = |r: &Rational| format!("\"{}\"", format_rational(r));
        let line = |v: &[Rational]| format!("[{}]", v.iter().map(q).collect::<Vec<_>>().join(", "));
        let block = |rows: &[String]| {
            if rows.is_empty() {
                "[]".to_string()
            } else {
                format!("[\n    {}\n  ]", rows.join(",\n    "))
            }
        };
        let brackets: Vec<String> = self
            .structure_constants
            .iter()
            .map(|(i, j, k, v)| format!("[{i}, {j}, {k}, {}]", q(v)))
            .collect();
        let metric: Vec<String> = self.metric.iter().map(|r| line(r)).collect();
        let phi: Vec<String> = self.phi.iter().map(|r| line(r)).collect();
        let name = serde_json::to_string(&self.name).expect("strings always serialize");

        let mut out = String::new();
        let _ = writeln!(out, "{{");
        let _ = writeln!(out, "  \"name\": {name},");
        let _ = writeln!(out, "  \"dim\": {},", self.dim);
        let _ = writeln!(out, "  \"structure_constants\": {},", block(&brackets));
        let _ = writeln!(out, "  \"metric\": {},", block(&metric));
        let _ = writeln!(out, "  \"phi\": {},", block(&phi));
        let _ = writeln!(out, "  \"xi\": {},", line(&self.xi));
        let _ = writeln!(out, "  \"eta\": {}", line(&self.eta));
        let _ = writeln!(out, "}}");
        out
    }
}
