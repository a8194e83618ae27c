//! Exact integer vectors and matrices.
//!
//! Everything here is computed over `i64` with checked arithmetic: an
//! operation that would overflow returns [`Error::Overflow`] instead of a
//! wrapped value. There is no floating point anywhere in this crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// Exact division; the caller asserts divisibility.
pub(crate) fn div_exact(value: i64, divisor: i64) -> Result<i64> {
    if divisor == 0 {
        return Err(Error::DivisionByZero);
    }
    if value % divisor != 0 {
        return Err(Error::NotDivisible { value, divisor });
    }
    Ok(value / divisor)
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: i64) -> i64 {
    debug_assert!(n >= 0);
    n.isqrt()
}

/// Returns `Some(r)` with `r*r == n`, `r >= 0`, when `n` is a perfect square.
pub fn perfect_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// An integer vector of fixed positive dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector {
    coords: Vec<i64>,
}

impl IntVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(())
    }

    /// Exact inner product.
    pub fn dot(&self, other: &Self) -> Result<i64> {
        self.check_dim(other)?;
        let mut acc = 0i64;
        for (&a, &b) in self.coords.iter().zip(&other.coords) {
            acc = checked_add(acc, checked_mul(a, b)?)?;
        }
        Ok(acc)
    }

    /// Exact squared Euclidean norm.
    pub fn squared_norm(&self) -> Result<i64> {
        self.dot(self)
    }

    /// Gcd of the absolute values of the coordinates; 0 for the zero vector.
    pub fn content(&self) -> i64 {
        self.coords.iter().fold(0, |g, &c| gcd_i64(g, c))
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|&c| checked_mul(c, k))
            .collect::<Result<_>>()?;
        Ok(Self { coords })
    }

    /// Divides every coordinate by `k`, which must divide all of them.
    pub fn divided_exact(&self, k: i64) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|&c| div_exact(c, k))
            .collect::<Result<_>>()?;
        Ok(Self { coords })
    }

    pub fn negated(&self) -> Result<Self> {
        self.scaled(-1)
    }

    /// Canonical representative of the orbit under coordinate permutations
    /// and sign changes: absolute values sorted ascending.
    pub fn canonicalize_signed_perm(&self) -> Self {
        let mut coords: Vec<i64> = self.coords.iter().map(|c| c.abs()).collect();
        coords.sort_unstable();
        Self { coords }
    }

    /// Exact linear combination `sum_k coeff_k * vec_k`.
    pub fn linear_combination(terms: &[(i64, &IntVector)]) -> Result<Self> {
        let first = terms.first().ok_or(Error::EmptyInput)?;
        let dim = first.1.dim();
        let mut coords = vec![0i64; dim];
        for &(k, v) in terms {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
            for (acc, &c) in coords.iter_mut().zip(v.coords()) {
                *acc = checked_add(*acc, checked_mul(k, c)?)?;
            }
        }
        Ok(Self { coords })
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for IntVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("not an integer token: {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntVector::new(coords)
    }
}

/// A rectangular integer matrix stored as rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<IntVector>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyInput)?;
        let dim = first.dim();
        for r in &rows {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.dim(),
                });
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows[0].dim()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i].coords()[j]
    }

    /// The matrix with column `j` (0-based) removed; row order is preserved.
    pub fn delete_column(&self, j: usize) -> Result<Self> {
        let cols = self.col_count();
        if j >= cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: cols,
            });
        }
        if cols == 1 {
            return Err(Error::EmptyInput);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let coords = r
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &v)| v)
                    .collect();
                IntVector::new(coords)
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }

    pub fn column(&self, j: usize) -> Result<IntVector> {
        let cols = self.col_count();
        if j >= cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: cols,
            });
        }
        IntVector::new(self.rows.iter().map(|r| r.coords()[j]).collect())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate value stays integral; the interior divisions are
    /// exact by construction and verified as such.
    pub fn determinant(&self) -> Result<i64> {
        let n = self.row_count();
        if n != self.col_count() {
            return Err(Error::NonSquareMatrix {
                rows: n,
                cols: self.col_count(),
            });
        }
        let mut m: Vec<Vec<i64>> = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        let mut sign = 1i64;
        let mut prev = 1i64;
        for k in 0..n.saturating_sub(1) {
            if m[k][k] == 0 {
                let Some(pivot) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                    return Ok(0);
                };
                m.swap(k, pivot);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = checked_sub(
                        checked_mul(m[i][j], m[k][k])?,
                        checked_mul(m[i][k], m[k][j])?,
                    )?;
                    m[i][j] = div_exact(num, prev)?;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        checked_mul(sign, m[n - 1][n - 1])
    }
}

/// A set of pairwise-orthogonal integer vectors sharing a squared norm.
///
/// Vectors are kept in insertion order so completions can append after the
/// caller's input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoSet {
    vectors: Vec<IntVector>,
    squared_norm: i64,
}

impl OrthoSet {
    pub fn vectors(&self) -> &[IntVector] {
        &self.vectors
    }

    pub fn squared_norm(&self) -> i64 {
        self.squared_norm
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].dim()
    }

    pub fn into_vectors(self) -> Vec<IntVector> {
        self.vectors
    }
}

/// Validates that the given vectors are pairwise orthogonal with a common
/// squared norm, reporting the first violated pair or norm.
pub fn verify_ortho_set(vectors: Vec<IntVector>) -> Result<OrthoSet> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    let dim = first.dim();
    let squared_norm = first.squared_norm()?;
    for v in &vectors {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
    }
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            let dot = vectors[i].dot(&vectors[j])?;
            if dot != 0 {
                return Err(Error::NotOrthogonal { i, j, dot });
            }
        }
    }
    for (i, v) in vectors.iter().enumerate() {
        let n = v.squared_norm()?;
        if n != squared_norm {
            return Err(Error::NormMismatch {
                index: i,
                expected: squared_norm,
                got: n,
            });
        }
    }
    if vectors.len() > dim {
        return Err(Error::CardinalityExceedsDimension {
            count: vectors.len(),
            dim,
        });
    }
    if squared_norm == 0 && vectors.len() > 1 {
        // Zero vectors are mutually "orthogonal"; only the singleton is a set.
        return Err(Error::CardinalityExceedsDimension {
            count: vectors.len(),
            dim: 1,
        });
    }
    Ok(OrthoSet {
        vectors,
        squared_norm,
    })
}

/// Parses the plain-text vector set format: one vector per line of
/// whitespace-separated signed integers, blank lines and `#` comments
/// ignored, all lines of equal arity.
pub fn parse_vector_set(text: &str) -> Result<Vec<IntVector>> {
    let mut vectors: Vec<IntVector> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = IntVector::from_str(line)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        if let Some(first) = vectors.first() {
            if v.dim() != first.dim() {
                return Err(Error::Parse(format!(
                    "line {}: expected {} coordinates, got {}",
                    lineno + 1,
                    first.dim(),
                    v.dim()
                )));
            }
        }
        vectors.push(v);
    }
    if vectors.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(vectors)
}
