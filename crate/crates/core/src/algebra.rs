//! Exact scalars and small dense linear algebra over the rationals.
//!
//! Matrices here are desk-sized (dimension well under ten), so everything is
//! stored densely in row-major order and eliminated with plain Gaussian
//! elimination. No rounding ever happens.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let parse_int = |s: &str| {
        s.trim().parse::<BigInt>().map_err(|e| Error::Parse {
            location: format!("`{text}`"),
            message: format!("not a rational: {e}"),
        })
    };
    match trimmed.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (parse_int(p)?, parse_int(q)?);
            if q.is_zero() {
                return Err(Error::Parse {
                    location: format!("`{text}`"),
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(parse_int(trimmed)?)),
    }
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "matrix product dimension mismatch");
        Self::from_fn(self.dim, |i, j| {
            (0..self.dim).fold(Rational::zero(), |acc, k| {
                acc + &self[(i, k)] * &other[(k, j)]
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let factor = &a[r * n + col] / &p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * &a[col * n + j];
                    a[r * n + j] -= delta;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] /= &p;
                inv[(col, j)] /= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    let da = &factor * &a[(col, j)];
                    let di = &factor * &inv[(col, j)];
                    a[(r, j)] -= da;
                    inv[(r, j)] -= di;
                }
            }
        }
        Ok(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.dim + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format_rational(&self[(i, j)]))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Symmetric matrix; symmetry is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix(Matrix);

impl SymMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::InvalidFrame("metric matrix is not symmetric".into()));
        }
        Ok(Self(m))
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Matrix::zeros(entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        Self(m)
    }

    pub fn identity(dim: usize) -> Self {
        Self(Matrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn determinant(&self) -> Rational {
        self.0.determinant()
    }

    /// `Aᵀ · self · A`.
    pub fn congruent(&self, a: &Matrix) -> SymMatrix {
        SymMatrix(a.transpose().mul(&self.0).mul(a))
    }

    /// Bilinear form `uᵀ · self · v`.
    pub fn form(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let n = self.dim();
        let mut acc = Rational::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                acc += &u[i] * &self[(i, j)] * &v[j];
            }
        }
        acc
    }
}

impl Index<(usize, usize)> for SymMatrix {
    type Output = Rational;

    fn index(&self, idx: (usize, usize)) -> &Rational {
        &self.0[idx]
    }
}

/// Exact inverse of a symmetric matrix.
pub fn invert_symmetric(m: &SymMatrix) -> Result<SymMatrix> {
    Ok(SymMatrix(m.0.inverse()?))
}

/// Inertia `(p, q)` of a nondegenerate symmetric matrix, by congruence
/// diagonalisation over the rationals.
///
/// Pivots on the diagonal entry of largest absolute value (lowest index on
/// ties). When the remaining diagonal is entirely zero a hyperbolic pair
/// `[[0, a], [a, 0]]` is split off, contributing one positive and one
/// negative direction.
pub fn signature(m: &SymMatrix) -> Result<(usize, usize)> {
    let mut block = m.0.clone();
    let mut active: Vec<usize> = (0..m.dim()).collect();
    let (mut p, mut q) = (0, 0);

    while !active.is_empty() {
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !block[(i, i)].is_zero())
            .fold(None::<usize>, |best, i| match best {
                Some(b) if block[(b, b)].abs() >= block[(i, i)].abs() => Some(b),
                _ => Some(i),
            });

        if let Some(i) = pivot {
            let d = block[(i, i)].clone();
            if d.is_positive() {
                p += 1;
            } else {
                q += 1;
            }
            active.retain(|&k| k != i);
            let col: Vec<Rational> = active.iter().map(|&k| block[(k, i)].clone()).collect();
            for (a, &k) in active.iter().enumerate() {
                for (b, &l) in active.iter().enumerate() {
                    let delta = &col[a] * &col[b] / &d;
                    block[(k, l)] -= delta;
                }
            }
            continue;
        }

        // all remaining diagonal entries vanish: split a hyperbolic pair
        let (i, j) = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i < j && !block[(i, j)].is_zero())
            .ok_or(Error::SingularMatrix)?;
        let a = block[(i, j)].clone();
        p += 1;
        q += 1;
        active.retain(|&k| k != i && k != j);
        let ci: Vec<Rational> = active.iter().map(|&k| block[(k, i)].clone()).collect();
        let cj: Vec<Rational> = active.iter().map(|&k| block[(k, j)].clone()).collect();
        for (x, &k) in active.iter().enumerate() {
            for (y, &l) in active.iter().enumerate() {
                let delta = (&ci[x] * &cj[y] + &cj[x] * &ci[y]) / &a;
                block[(k, l)] -= delta;
            }
        }
    }
    Ok((p, q))
}
