//! The even subalgebra of the Clifford algebra on n negative generators,
//! modelled over the index set V = {a in F_2^n : a_1 + .. + a_n = 0}.
//!
//! Basis elements e_a are indexed by even-weight bit vectors and multiply by
//! `e_a e_b = S(a,b) e_{a+b}` with the sign `S(a,b) = (-1)^(sum_j sum_{k<=j}
//! a_j b_k)`. Bit vectors are stored with the first tuple coordinate as the
//! most significant bit, so the numeric order of the stored word is the
//! binary-counter order of the tuples; the basis is enumerated in that
//! order.

use crate::error::{Error, Result};
use crate::intvec::{checked_add, checked_mul, verify_ortho_set, IntVector, OrthoSet};

pub const MAX_N: usize = 12;
pub const MIN_SEARCH_N: usize = 3;

/// An element of F_2^n, stored with tuple coordinate x_1 as the most
/// significant of the low n bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    n: usize,
    bits: u16,
}

impl BitVec {
    pub fn new(n: usize, bits: u16) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::UnsupportedSize {
                n,
                min: 1,
                max: MAX_N,
            });
        }
        if u32::from(bits) >= (1u32 << n) {
            return Err(Error::IndexOutOfRange {
                index: bits as usize,
                len: 1 << n,
            });
        }
        Ok(Self { n, bits })
    }

    /// Builds from tuple coordinates (x_1, .., x_n).
    pub fn from_tuple(coords: &[u8]) -> Result<Self> {
        let n = coords.len();
        let mut bits = 0u16;
        for &c in coords {
            bits = (bits << 1) | u16::from(c & 1);
        }
        Self::new(n, bits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u16 {
        self.bits
    }

    /// Tuple coordinate x_j for 1 <= j <= n.
    pub fn coord(&self, j: usize) -> u8 {
        debug_assert!((1..=self.n).contains(&j));
        ((self.bits >> (self.n - j)) & 1) as u8
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn has_even_weight(&self) -> bool {
        self.weight().is_multiple_of(2)
    }

    /// Sum in F_2^n.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self {
            n: self.n,
            bits: self.bits ^ other.bits,
        })
    }

    /// The inner product x . y over F_2.
    pub fn dot(&self, other: &Self) -> Result<u8> {
        self.check_len(other)?;
        Ok(((self.bits & other.bits).count_ones() % 2) as u8)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::BitLengthMismatch {
                a: self.n,
                b: other.n,
            });
        }
        Ok(())
    }

    /// The tuple as a string of 0s and 1s, x_1 first.
    pub fn tuple_string(&self) -> String {
        (1..=self.n)
            .map(|j| char::from(b'0' + self.coord(j)))
            .collect()
    }
}

/// Half the weight, mod 2; defined only on even-weight vectors.
pub fn half_weight_parity(v: &BitVec) -> Result<u8> {
    if !v.has_even_weight() {
        return Err(Error::OddWeight);
    }
    Ok(((v.weight() / 2) % 2) as u8)
}

fn sign_exponent(a: &BitVec, b: &BitVec) -> Result<u32> {
    a.check_len(b)?;
    let mut prefix = 0u32;
    let mut acc = 0u32;
    for j in 1..=a.n {
        prefix += u32::from(b.coord(j));
        if a.coord(j) == 1 {
            acc += prefix;
        }
    }
    Ok(acc)
}

/// The structure sign S(a, b) = (-1)^(sum_j sum_{k<=j} a_j b_k).
pub fn basis_sign(a: &BitVec, b: &BitVec) -> Result<i64> {
    Ok(if sign_exponent(a, b)? % 2 == 0 { 1 } else { -1 })
}

/// All even-weight vectors of length n in numeric order; the basis index
/// set of the even subalgebra. Its cardinality is 2^(n-1).
pub fn basis_index_set(n: usize) -> Result<Vec<BitVec>> {
    if n == 0 || n > MAX_N {
        return Err(Error::UnsupportedSize {
            n,
            min: 1,
            max: MAX_N,
        });
    }
    Ok((0u16..(1 << n))
        .filter(|b| b.count_ones() % 2 == 0)
        .map(|bits| BitVec { n, bits })
        .collect())
}

fn basis_position(v: &BitVec) -> usize {
    (0..v.bits).filter(|b| b.count_ones() % 2 == 0).count()
}

/// An integer element of the even subalgebra: dense coordinates over the
/// even-weight basis in numeric order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    n: usize,
    coeffs: Vec<i64>,
}

impl CliffordElement {
    pub fn new(n: usize, coeffs: Vec<i64>) -> Result<Self> {
        let dim = basis_index_set(n)?.len();
        if coeffs.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: coeffs.len(),
            });
        }
        Ok(Self { n, coeffs })
    }

    pub fn one(n: usize) -> Result<Self> {
        let dim = basis_index_set(n)?.len();
        let mut coeffs = vec![0; dim];
        coeffs[0] = 1;
        Ok(Self { n, coeffs })
    }

    pub fn basis_element(v: &BitVec) -> Result<Self> {
        if !v.has_even_weight() {
            return Err(Error::OddWeight);
        }
        let dim = basis_index_set(v.n)?.len();
        let mut coeffs = vec![0; dim];
        coeffs[basis_position(v)] = 1;
        Ok(Self { n: v.n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn squared_norm(&self) -> Result<i64> {
        let mut acc = 0i64;
        for &c in &self.coeffs {
            acc = checked_add(acc, checked_mul(c, c)?)?;
        }
        Ok(acc)
    }

    pub fn to_vector(&self) -> IntVector {
        IntVector::new(self.coeffs.clone()).expect("nonzero basis dimension")
    }

    /// Bilinear extension of `e_a e_b = S(a,b) e_{a+b}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::BitLengthMismatch {
                a: self.n,
                b: other.n,
            });
        }
        let basis = basis_index_set(self.n)?;
        let pos: std::collections::HashMap<u16, usize> =
            basis.iter().enumerate().map(|(i, b)| (b.bits, i)).collect();
        let mut coeffs = vec![0i64; basis.len()];
        for (ia, a) in basis.iter().enumerate() {
            let ca = self.coeffs[ia];
            if ca == 0 {
                continue;
            }
            for (ib, b) in basis.iter().enumerate() {
                let cb = other.coeffs[ib];
                if cb == 0 {
                    continue;
                }
                let sign = basis_sign(a, b)?;
                let target = pos[&(a.bits ^ b.bits)];
                let term = checked_mul(checked_mul(ca, cb)?, sign)?;
                coeffs[target] = checked_add(coeffs[target], term)?;
            }
        }
        Ok(Self { n: self.n, coeffs })
    }
}

/// The pairwise condition making basis-multiplied frames orthogonal:
/// `s(u) + s(v) + u.v` must be odd for distinct u, v.
pub fn family_pair_condition(u: &BitVec, v: &BitVec) -> Result<bool> {
    u.check_len(v)?;
    if u == v {
        return Err(Error::EqualIndexVectors);
    }
    let parity = half_weight_parity(u)? + half_weight_parity(v)? + u.dot(v)?;
    Ok(parity % 2 == 1)
}

/// Coordinates of the product `e_v * e` for one basis index `v`.
fn left_mul_row(e: &CliffordElement, v: &BitVec, basis: &[BitVec]) -> Result<IntVector> {
    // Coefficient of e_c in e_v * e is S(v, v+c) * lambda_{v+c}.
    let pos: std::collections::HashMap<u16, usize> =
        basis.iter().enumerate().map(|(i, b)| (b.bits, i)).collect();
    let mut coords = Vec::with_capacity(basis.len());
    for c in basis {
        let t = v.xor(c)?;
        let lambda = e.coeffs()[pos[&t.bits]];
        coords.push(checked_mul(basis_sign(v, &t)?, lambda)?);
    }
    IntVector::new(coords)
}

/// The orthogonal family `{ coordinates of e_v * e : v in family }`.
///
/// Every pair of distinct members of `family` must satisfy
/// [`family_pair_condition`]; the rows are returned in the given order as a
/// validated orthogonal set with squared norm equal to that of `e`.
pub fn orthogonal_family(e: &CliffordElement, family: &[BitVec]) -> Result<OrthoSet> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    for (i, u) in family.iter().enumerate() {
        if !u.has_even_weight() {
            return Err(Error::OddWeight);
        }
        for v in &family[i + 1..] {
            if !family_pair_condition(u, v)? {
                return Err(Error::InvalidFamilyPair {
                    u: u.tuple_string(),
                    v: v.tuple_string(),
                });
            }
        }
    }
    let basis = basis_index_set(e.n())?;
    let rows = family
        .iter()
        .map(|v| left_mul_row(e, v, &basis))
        .collect::<Result<Vec<_>>>()?;
    verify_ortho_set(rows)
}

/// Exhaustive search for a maximum-cardinality family: a maximum clique in
/// the graph on even-weight vectors whose edges are the pairs satisfying
/// the orthogonality condition. Branch and bound with a greedy coloring
/// bound; vertices are explored in numeric order and the incumbent is
/// replaced only by strictly larger cliques, so the result is the
/// lexicographically smallest maximum clique.
pub fn search_max_family(n: usize) -> Result<Vec<BitVec>> {
    if !(MIN_SEARCH_N..=MAX_N).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            min: MIN_SEARCH_N,
            max: MAX_N,
        });
    }
    let verts = basis_index_set(n)?;
    let count = verts.len();
    let mut adj = vec![vec![false; count]; count];
    for i in 0..count {
        for j in i + 1..count {
            if family_pair_condition(&verts[i], &verts[j])? {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }

    // Greedy coloring over `cands` in order; the class count bounds the
    // largest clique inside.
    fn coloring_bound(cands: &[usize], adj: &[Vec<bool>]) -> usize {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in cands {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !adj[u][v]))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        classes.len()
    }

    fn extend(current: &mut Vec<usize>, cands: &[usize], adj: &[Vec<bool>], best: &mut Vec<usize>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if cands.is_empty()
            || current.len() + cands.len() <= best.len()
            || current.len() + coloring_bound(cands, adj) <= best.len()
        {
            return;
        }
        for (idx, &v) in cands.iter().enumerate() {
            if current.len() + (cands.len() - idx) <= best.len() {
                break;
            }
            let next: Vec<usize> = cands[idx + 1..]
                .iter()
                .copied()
                .filter(|&u| adj[v][u])
                .collect();
            current.push(v);
            extend(current, &next, adj, best);
            current.pop();
        }
    }

    let all: Vec<usize> = (0..count).collect();
    let mut best = Vec::new();
    extend(&mut Vec::new(), &all, &adj, &mut best);
    Ok(best.into_iter().map(|i| verts[i]).collect())
}
