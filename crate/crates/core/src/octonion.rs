//! Cayley numbers (octonions) over Z and the cross products they induce.
//!
//! The multiplication convention is fixed entirely by the left-multiplication
//! matrix `C(x)`: the product of two octonions is `C(x) * y` with `y` a
//! column vector. The 7-dimensional binary cross product is the pure block
//! of that matrix, and the 8-dimensional ternary cross product is assembled
//! from `C` by the closed formula below. No other sign convention is used
//! anywhere.

use crate::error::{Error, Result};
use crate::intvec::{
    checked_add, checked_mul, checked_neg, checked_sub, verify_ortho_set, IntMatrix, IntVector,
    OrthoSet,
};

/// An octonion as an integer coordinate vector over the units u0 = 1, .., u7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Octonion {
    pub coords: [i64; 8],
}

impl Octonion {
    pub const ONE: Octonion = Octonion {
        coords: [1, 0, 0, 0, 0, 0, 0, 0],
    };

    pub fn new(coords: [i64; 8]) -> Self {
        Self { coords }
    }

    pub fn unit(j: usize) -> Self {
        let mut coords = [0i64; 8];
        coords[j] = 1;
        Self { coords }
    }

    pub fn from_vector(v: &IntVector) -> Result<Self> {
        if v.dim() != 8 {
            return Err(Error::DimensionMismatch {
                expected: 8,
                got: v.dim(),
            });
        }
        let mut coords = [0i64; 8];
        coords.copy_from_slice(v.coords());
        Ok(Self { coords })
    }

    pub fn to_vector(&self) -> IntVector {
        IntVector::new(self.coords.to_vec()).expect("dim 8")
    }

    pub fn squared_norm(&self) -> Result<i64> {
        let mut acc = 0i64;
        for c in self.coords {
            acc = checked_add(acc, checked_mul(c, c)?)?;
        }
        Ok(acc)
    }

    /// The conjugate (y0, -y1, .., -y7).
    pub fn conj(&self) -> Result<Self> {
        let mut coords = self.coords;
        for c in coords.iter_mut().skip(1) {
            *c = checked_neg(*c)?;
        }
        Ok(Self { coords })
    }
}

/// Entry pattern of the left-multiplication matrix: `(coordinate, sign)`
/// per cell, transcribed row by row.
#[rustfmt::skip]
const CAYLEY_PATTERN: [[(usize, i64); 8]; 8] = [
    [(0, 1), (1, -1), (2, -1), (3, -1), (4, -1), (5, -1), (6, -1), (7, -1)],
    [(1, 1), (0, 1), (4, -1), (7, -1), (2, 1), (6, -1), (5, 1), (3, 1)],
    [(2, 1), (4, 1), (0, 1), (5, -1), (1, -1), (3, 1), (7, -1), (6, 1)],
    [(3, 1), (7, 1), (5, 1), (0, 1), (6, -1), (2, -1), (4, 1), (1, -1)],
    [(4, 1), (2, -1), (1, 1), (6, 1), (0, 1), (7, -1), (3, -1), (5, 1)],
    [(5, 1), (6, 1), (3, -1), (2, 1), (7, 1), (0, 1), (1, -1), (4, -1)],
    [(6, 1), (5, -1), (7, 1), (4, -1), (3, 1), (1, 1), (0, 1), (2, -1)],
    [(7, 1), (3, -1), (6, -1), (1, 1), (5, -1), (4, 1), (2, 1), (0, 1)],
];

fn cayley_entry(x: &Octonion, i: usize, j: usize) -> Result<i64> {
    let (idx, sign) = CAYLEY_PATTERN[i][j];
    checked_mul(sign, x.coords[idx])
}

/// The 8x8 left-multiplication matrix `C(x)`.
pub fn cayley_matrix(x: &Octonion) -> Result<IntMatrix> {
    let rows = (0..8)
        .map(|i| {
            let coords = (0..8)
                .map(|j| cayley_entry(x, i, j))
                .collect::<Result<Vec<_>>>()?;
            IntVector::new(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(rows)
}

fn matrix_vector(m: &IntMatrix, y: &[i64]) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(m.row_count());
    for row in m.rows() {
        let mut acc = 0i64;
        for (&a, &b) in row.coords().iter().zip(y) {
            acc = checked_add(acc, checked_mul(a, b)?)?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// The Cayley product: coordinates of `C(x) * y`.
pub fn cayley_mul(x: &Octonion, y: &Octonion) -> Result<Octonion> {
    let m = cayley_matrix(x)?;
    let out = matrix_vector(&m, &y.coords)?;
    let mut coords = [0i64; 8];
    coords.copy_from_slice(&out);
    Ok(Octonion::new(coords))
}

/// The 7-dimensional cross product `P(v) * w`, with `P(v)` the pure block
/// of `C((0, v))`.
pub fn cross7(v: &IntVector, w: &IntVector) -> Result<IntVector> {
    for u in [v, w] {
        if u.dim() != 7 {
            return Err(Error::DimensionMismatch {
                expected: 7,
                got: u.dim(),
            });
        }
    }
    let mut coords = [0i64; 8];
    coords[1..].copy_from_slice(v.coords());
    let x = Octonion::new(coords);
    let mut out = vec![0i64; 7];
    for i in 1..8 {
        let mut acc = 0i64;
        for j in 1..8 {
            acc = checked_add(
                acc,
                checked_mul(cayley_entry(&x, i, j)?, w.coords()[j - 1])?,
            )?;
        }
        out[i - 1] = acc;
    }
    IntVector::new(out)
}

/// The ternary cross product in dimension 8:
/// `x X y X z = -C(x) C(y*) z + (y.z) x - (z.x) y + (x.y) z`.
pub fn cross8_ternary(x: &IntVector, y: &IntVector, z: &IntVector) -> Result<IntVector> {
    for u in [x, y, z] {
        if u.dim() != 8 {
            return Err(Error::DimensionMismatch {
                expected: 8,
                got: u.dim(),
            });
        }
    }
    let ox = Octonion::from_vector(x)?;
    let oy_star = Octonion::from_vector(y)?.conj()?;
    let cy = cayley_matrix(&oy_star)?;
    let inner = matrix_vector(&cy, z.coords())?;
    let cx = cayley_matrix(&ox)?;
    let head = matrix_vector(&cx, &inner)?;
    let yz = y.dot(z)?;
    let zx = z.dot(x)?;
    let xy = x.dot(y)?;
    let mut coords = Vec::with_capacity(8);
    for (idx, &h) in head.iter().enumerate() {
        let mut acc = checked_neg(h)?;
        acc = checked_add(acc, checked_mul(yz, x.coords()[idx])?)?;
        acc = checked_sub(acc, checked_mul(zx, y.coords()[idx])?)?;
        acc = checked_add(acc, checked_mul(xy, z.coords()[idx])?)?;
        coords.push(acc);
    }
    IntVector::new(coords)
}

fn require_ortho_pair(v: &IntVector, w: &IntVector) -> Result<i64> {
    let set = verify_ortho_set(vec![v.clone(), w.clone()])?;
    Ok(set.squared_norm())
}

/// Extends an orthogonal pair in dimension 7 with a third vector of the
/// same norm, given `N = K1^2 * K2^2` with `K1 | v` and `K2 | w`:
/// the result is `(v/K1) x (w/K2)`.
pub fn complete_pair_d7(v: &IntVector, w: &IntVector, k1: i64, k2: i64) -> Result<IntVector> {
    if k1 <= 0 || k2 <= 0 {
        return Err(Error::Internal("divisors must be positive".into()));
    }
    let n = require_ortho_pair(v, w)?;
    let required = checked_mul(checked_mul(k1, k1)?, checked_mul(k2, k2)?)?;
    if n != required {
        return Err(Error::NormProductMismatch {
            n_squared: n,
            required,
        });
    }
    if v.content() % k1 != 0 {
        return Err(Error::VectorNotDivisible {
            index: 0,
            divisor: k1,
        });
    }
    if w.content() % k2 != 0 {
        return Err(Error::VectorNotDivisible {
            index: 1,
            divisor: k2,
        });
    }
    let u = cross7(&v.divided_exact(k1)?, &w.divided_exact(k2)?)?;
    debug_assert_eq!(u.squared_norm().unwrap(), n);
    debug_assert_eq!(u.dot(v).unwrap(), 0);
    debug_assert_eq!(u.dot(w).unwrap(), 0);
    Ok(u)
}

/// The opportunistic completion path in dimension 7: when the common
/// squared norm is a perfect square and `sqrt(N)` happens to divide
/// `v x w`, the quotient extends the pair. Fails otherwise.
pub fn complete_pair_d7_sqrt(v: &IntVector, w: &IntVector) -> Result<IntVector> {
    let n = require_ortho_pair(v, w)?;
    let root =
        crate::intvec::perfect_sqrt(n).ok_or(Error::NotPerfectSquareNorm { n_squared: n })?;
    if root == 0 {
        return Err(Error::ZeroVector);
    }
    let cross = cross7(v, w)?;
    let u = cross.divided_exact(root)?;
    debug_assert_eq!(u.squared_norm().unwrap(), n);
    Ok(u)
}

/// Extends an orthogonal triple in dimension 8 with a fourth vector of the
/// same norm, given `N = K1 * K2 * K3` with `Kj | vj`:
/// the result is `(v1/K1) x (v2/K2) x (v3/K3)`.
pub fn complete_triple_d8(
    v1: &IntVector,
    v2: &IntVector,
    v3: &IntVector,
    k: [i64; 3],
) -> Result<IntVector> {
    if k.iter().any(|&kj| kj <= 0) {
        return Err(Error::Internal("divisors must be positive".into()));
    }
    let set = verify_ortho_set(vec![v1.clone(), v2.clone(), v3.clone()])?;
    let n = set.squared_norm();
    let required = checked_mul(checked_mul(k[0], k[1])?, k[2])?;
    if n != required {
        return Err(Error::NormProductMismatch {
            n_squared: n,
            required,
        });
    }
    for (index, (v, kj)) in [v1, v2, v3].into_iter().zip(k).enumerate() {
        if v.content() % kj != 0 {
            return Err(Error::VectorNotDivisible { index, divisor: kj });
        }
    }
    let u = cross8_ternary(
        &v1.divided_exact(k[0])?,
        &v2.divided_exact(k[1])?,
        &v3.divided_exact(k[2])?,
    )?;
    debug_assert_eq!(u.squared_norm().unwrap(), n);
    Ok(u)
}

/// Returns the orthogonal set `{s} U {u_j * s : j = 1..7}` of eight vectors
/// in Z^8 built from one seed by left multiplication with the pure units.
pub fn octonion_frame(s: &IntVector) -> Result<OrthoSet> {
    let o = Octonion::from_vector(s)?;
    if s.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut vectors = vec![s.clone()];
    for j in 1..8 {
        vectors.push(cayley_mul(&Octonion::unit(j), &o)?.to_vector());
    }
    verify_ortho_set(vectors)
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn oct() -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8(-30i64..=30).prop_map(Octonion::new)
    }

    fn vec7() -> impl Strategy<Value = IntVector> {
        proptest::collection::vec(-30i64..=30, 7).prop_map(|c| IntVector::new(c).unwrap())
    }

    fn vec8() -> impl Strategy<Value = IntVector> {
        proptest::collection::vec(-20i64..=20, 8).prop_map(|c| IntVector::new(c).unwrap())
    }

    proptest! {
        #[test]
        fn norm_multiplicative(x in oct(), y in oct()) {
            let lhs = cayley_mul(&x, &y).unwrap().squared_norm().unwrap();
            prop_assert_eq!(lhs, x.squared_norm().unwrap() * y.squared_norm().unwrap());
        }

        #[test]
        fn matrix_times_transpose_is_norm_identity(x in oct()) {
            let n = x.squared_norm().unwrap();
            let m = cayley_matrix(&x).unwrap();
            for i in 0..8 {
                for j in 0..8 {
                    let dot = m.rows()[i].dot(&m.rows()[j]).unwrap();
                    prop_assert_eq!(dot, if i == j { n } else { 0 });
                }
            }
        }

        #[test]
        fn cross7_orthogonality_and_norm(a in vec7(), b in vec7()) {
            let c = cross7(&a, &b).unwrap();
            prop_assert_eq!(c.dot(&a).unwrap(), 0);
            prop_assert_eq!(c.dot(&b).unwrap(), 0);
            let ab = a.dot(&b).unwrap();
            prop_assert_eq!(
                c.squared_norm().unwrap() + ab * ab,
                a.squared_norm().unwrap() * b.squared_norm().unwrap()
            );
        }

        #[test]
        fn cross8_orthogonal_to_arguments(x in vec8(), y in vec8(), z in vec8()) {
            let w = cross8_ternary(&x, &y, &z).unwrap();
            prop_assert_eq!(w.dot(&x).unwrap(), 0);
            prop_assert_eq!(w.dot(&y).unwrap(), 0);
            prop_assert_eq!(w.dot(&z).unwrap(), 0);
        }

        #[test]
        fn cross8_norm_on_orthogonal_triples(
            x in oct(),
            rows in proptest::sample::subsequence(vec![0usize,1,2,3,4,5,6,7], 3),
            scales in proptest::array::uniform3(1i64..=3),
        ) {
            prop_assume!(x.squared_norm().unwrap() > 0);
            let m = cayley_matrix(&x).unwrap();
            let triple: Vec<IntVector> = rows
                .iter()
                .zip(scales)
                .map(|(&r, s)| m.rows()[r].scaled(s).unwrap())
                .collect();
            let w = cross8_ternary(&triple[0], &triple[1], &triple[2]).unwrap();
            let expect: i64 = triple
                .iter()
                .map(|t| t.squared_norm().unwrap())
                .product();
            prop_assert_eq!(w.squared_norm().unwrap(), expect);
        }
    }
}
