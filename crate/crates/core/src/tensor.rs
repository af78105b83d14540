//! Dense tensors with constant frame components.
//!
//! Components are stored row-major with the covariant slots first and the
//! contravariant slots last. A `(1,1)` tensor `φ` therefore stores
//! `data[i*d + m]` = the `E_m` component of `φ(E_i)`, and a `(1,3)` curvature
//! tensor stores at `[i, j, k, m]` the `E_m` component of `R(E_i, E_j)E_k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{format_rational, Rational};
use crate::error::{Error, Result};

/// `(contravariant rank, covariant rank)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Valence {
    pub contra: usize,
    pub cov: usize,
}

impl Valence {
    pub const fn new(contra: usize, cov: usize) -> Self {
        Self { contra, cov }
    }

    pub fn rank(self) -> usize {
        self.contra + self.cov
    }
}

impl fmt::Display for Valence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.contra, self.cov)
    }
}

/// Tangent vector in frame components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zeros(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    /// The frame vector `E_i` (zero-based `i`).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    pub fn scaled(&self, s: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    /// First nonzero component as `(index, value)`.
    pub fn first_nonzero(&self) -> Option<(usize, Rational)> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
    }
}

impl Add for Vector {
    type Output = Vector;

    fn add(self, rhs: Vector) -> Vector {
        Vector(self.0.into_iter().zip(rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for Vector {
    type Output = Vector;

    fn sub(self, rhs: Vector) -> Vector {
        Vector(self.0.into_iter().zip(rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector(self.0.into_iter().map(|a| -a).collect())
    }
}

impl Mul<Vector> for Rational {
    type Output = Vector;

    fn mul(self, rhs: Vector) -> Vector {
        rhs.scaled(&self)
    }
}

impl Mul<Vector> for &Rational {
    type Output = Vector;

    fn mul(self, rhs: Vector) -> Vector {
        rhs.scaled(self)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All index tuples of the given rank over `0..dim`, in row-major order.
pub fn index_tuples(dim: usize, rank: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.checked_pow(rank as u32).unwrap_or(0);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; rank];
        for slot in (0..rank).rev() {
            idx[slot] = flat % dim;
            flat /= dim;
        }
        idx
    })
}

/// Left-invariant tensor field with constant frame components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorField {
    dim: usize,
    valence: Valence,
    data: Vec<Rational>,
}

impl TensorField {
    pub fn zeros(dim: usize, valence: Valence) -> Self {
        Self {
            dim,
            valence,
            data: vec![Rational::zero(); dim.pow(valence.rank() as u32)],
        }
    }

    /// Fills components from `f(index)`; the index lists covariant slots
    /// first, then contravariant ones.
    pub fn from_fn(dim: usize, valence: Valence, mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let data = index_tuples(dim, valence.rank()).map(|idx| f(&idx)).collect();
        Self { dim, valence, data }
    }

    pub fn from_components(dim: usize, valence: Valence, data: Vec<Rational>) -> Result<Self> {
        let expected = dim.pow(valence.rank() as u32);
        if data.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: data.len(),
            });
        }
        Ok(Self { dim, valence, data })
    }

    /// Vector field with constant components.
    pub fn vector(v: &Vector) -> Self {
        Self {
            dim: v.dim(),
            valence: Valence::new(1, 0),
            data: v.0.clone(),
        }
    }

    /// Covector with constant components.
    pub fn covector(w: &[Rational]) -> Self {
        Self {
            dim: w.len(),
            valence: Valence::new(0, 1),
            data: w.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn valence(&self) -> Valence {
        self.valence
    }

    pub fn components(&self) -> &[Rational] {
        &self.data
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.valence.rank());
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Rational) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    pub fn get_mut(&mut self, idx: &[usize]) -> &mut Rational {
        let o = self.offset(idx);
        &mut self.data[o]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First nonzero component in row-major order.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, Rational)> {
        index_tuples(self.dim, self.valence.rank())
            .zip(&self.data)
            .find(|(_, x)| !x.is_zero())
            .map(|(idx, x)| (idx, x.clone()))
    }

    pub fn try_sub(&self, other: &TensorField) -> Result<TensorField> {
        self.same_shape(other)?;
        Ok(Self {
            dim: self.dim,
            valence: self.valence,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scaled(&self, s: &Rational) -> TensorField {
        Self {
            dim: self.dim,
            valence: self.valence,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub(crate) fn same_shape(&self, other: &TensorField) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.valence != other.valence {
            return Err(Error::ValenceMismatch {
                expected: self.valence.to_string(),
                found: other.valence.to_string(),
            });
        }
        Ok(())
    }

    /// Contravariant part at a covariant basis tuple, for `(1,q)` tensors.
    pub fn vector_at(&self, cov: &[usize]) -> Vector {
        assert_eq!(self.valence.contra, 1, "vector_at needs a (1,q) tensor");
        let base = cov.iter().fold(0, |acc, &i| acc * self.dim + i) * self.dim;
        Vector(self.data[base..base + self.dim].to_vec())
    }

    /// Evaluates a `(1,q)` tensor on `q` arbitrary vectors.
    pub fn apply(&self, args: &[&Vector]) -> Vector {
        assert_eq!(self.valence.contra, 1, "apply needs a (1,q) tensor");
        assert_eq!(args.len(), self.valence.cov);
        let mut out = Vector::zeros(self.dim);
        self.for_each_weighted(args, |cov, w| {
            let v = self.vector_at(cov);
            for (o, x) in out.0.iter_mut().zip(&v.0) {
                *o += w * x;
            }
        });
        out
    }

    /// Evaluates a `(0,q)` tensor on `q` arbitrary vectors.
    pub fn eval(&self, args: &[&Vector]) -> Rational {
        assert_eq!(self.valence.contra, 0, "eval needs a (0,q) tensor");
        assert_eq!(args.len(), self.valence.cov);
        let mut acc = Rational::zero();
        self.for_each_weighted(args, |cov, w| acc += w * self.get(cov));
        acc
    }

    // Visits every covariant basis tuple with a nonzero product of argument
    // coefficients.
    fn for_each_weighted(&self, args: &[&Vector], mut f: impl FnMut(&[usize], &Rational)) {
        fn walk(
            args: &[&Vector],
            idx: &mut Vec<usize>,
            weight: Rational,
            f: &mut dyn FnMut(&[usize], &Rational),
        ) {
            let slot = idx.len();
            if slot == args.len() {
                f(idx, &weight);
                return;
            }
            for (i, c) in args[slot].0.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                idx.push(i);
                walk(args, idx, &weight * c, f);
                idx.pop();
            }
        }
        walk(args, &mut Vec::with_capacity(args.len()), Rational::one(), &mut f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn component_count_matches_valence() {
        let t = TensorField::zeros(3, Valence::new(1, 3));
        assert_eq!(t.components().len(), 81);
        assert!(TensorField::from_components(3, Valence::new(0, 2), vec![rat(0); 8]).is_err());
    }

    #[test]
    fn apply_is_multilinear() {
        // phi(E1) = E2, phi(E2) = E1
        let phi = TensorField::from_fn(3, Valence::new(1, 1), |idx| match idx {
            [0, 1] | [1, 0] => rat(1),
            _ => rat(0),
        });
        let v = Vector(vec![rat(2), rat(-1), rat(5)]);
        assert_eq!(phi.apply(&[&v]), Vector(vec![rat(-1), rat(2), rat(0)]));
    }

    #[test]
    fn index_tuples_are_row_major() {
        let all: Vec<_> = index_tuples(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn first_nonzero_reports_index() {
        let mut t = TensorField::zeros(2, Valence::new(0, 2));
        assert_eq!(t.first_nonzero(), None);
        t.set(&[1, 0], rat(7));
        assert_eq!(t.first_nonzero(), Some((vec![1, 0], rat(7))));
    }
}
