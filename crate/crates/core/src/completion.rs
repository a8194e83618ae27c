//! The completion engine: extends orthogonal sets of equal-norm integral
//! vectors by dispatching on dimension and cardinality to the constructive
//! results, and assembles block frames for dimensions divisible by 4 or 8.
//!
//! The engine never falls back to search where a construction applies; the
//! only searches here are the bounded seed lookups for block frames and the
//! two-square decompositions.

use crate::census::{first_representation, sum_two_squares};
use crate::error::{Error, Result};
use crate::intvec::{
    checked_mul, div_exact, gcd_i64, isqrt, perfect_sqrt, verify_ortho_set, IntMatrix, IntVector,
    OrthoSet,
};
use crate::octonion::{
    cayley_matrix, cayley_mul, complete_pair_d7, complete_pair_d7_sqrt, complete_triple_d8,
    cross8_ternary, Octonion,
};
use crate::quaternion::{pythagorean_param, unit_frame, PureUnit, Quaternion};

/// How a completion request ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// The added vectors bring the set to a full orthogonal basis.
    Completed,
    /// Vectors were added but the set is still short of a basis.
    PartiallyExtended,
    /// No equal-norm extension exists; the reason is a certificate.
    Impossible,
    /// No constructive route covers this input class.
    NotSupported,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Completed => "completed",
            Status::PartiallyExtended => "partially-extended",
            Status::Impossible => "impossible",
            Status::NotSupported => "not-supported",
        }
    }
}

/// Structured explanation attached to non-completed outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    /// Odd dimension and the squared norm is not a perfect square.
    NonSquareNormOddDim,
    /// The orthogonal complement is a two-coordinate plane and the norm is
    /// not a sum of two squares.
    TwoSquareObstruction,
    /// The covered constructions do not apply to this dimension and
    /// cardinality.
    NoConstructiveRoute { dim: usize, cardinality: usize },
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Reason::NonSquareNormOddDim => {
                write!(f, "squared norm is not a perfect square in odd dimension")
            }
            Reason::TwoSquareObstruction => write!(
                f,
                "completion is confined to two coordinates and the norm is not a sum of two squares"
            ),
            Reason::NoConstructiveRoute { dim, cardinality } => write!(
                f,
                "no constructive route for {cardinality} vectors in dimension {dim}"
            ),
        }
    }
}

/// Result of a completion request. On `Completed`, the input followed by
/// `added` is an orthogonal set of full dimension with the input's norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult {
    pub status: Status,
    pub added: Vec<IntVector>,
    pub reason: Option<Reason>,
}

impl CompletionResult {
    fn completed(added: Vec<IntVector>) -> Self {
        Self {
            status: Status::Completed,
            added,
            reason: None,
        }
    }

    fn partial(added: Vec<IntVector>) -> Self {
        Self {
            status: Status::PartiallyExtended,
            added,
            reason: None,
        }
    }

    fn impossible(reason: Reason) -> Self {
        Self {
            status: Status::Impossible,
            added: Vec::new(),
            reason: Some(reason),
        }
    }

    fn not_supported(dim: usize, cardinality: usize) -> Self {
        Self {
            status: Status::NotSupported,
            added: Vec::new(),
            reason: Some(Reason::NoConstructiveRoute { dim, cardinality }),
        }
    }
}

fn pow_checked(base: i64, exp: u32) -> Result<i64> {
    let mut acc = 1i64;
    for _ in 0..exp {
        acc = checked_mul(acc, base)?;
    }
    Ok(acc)
}

/// Certifies a completed (or partial) result by re-validating the whole set.
fn certify(input: &OrthoSet, added: Vec<IntVector>, full: bool) -> Result<CompletionResult> {
    let mut vectors = input.vectors().to_vec();
    vectors.extend(added.iter().cloned());
    let set = verify_ortho_set(vectors)?;
    if set.squared_norm() != input.squared_norm() {
        return Err(Error::Internal("extension changed the norm".into()));
    }
    if full {
        if set.len() != set.dim() {
            return Err(Error::Internal("completed set is not a full basis".into()));
        }
        Ok(CompletionResult::completed(added))
    } else {
        Ok(CompletionResult::partial(added))
    }
}

fn require_positive_norm(s: &OrthoSet) -> Result<()> {
    if s.squared_norm() <= 0 {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Completes a set of d-1 orthogonal vectors in dimension d.
///
/// For even d the missing vector has coordinates
/// `w_j = (-1)^j det(M_(j)) / N^((d-2)/2)` (j counted from 1), which is
/// always integral. For odd d the same formula applies when N is a perfect
/// square; otherwise no extension exists.
pub fn codim1_complete(s: &OrthoSet) -> Result<CompletionResult> {
    require_positive_norm(s)?;
    let d = s.dim();
    let n = s.squared_norm();
    if s.len() != d - 1 {
        return Err(Error::WrongCardinality {
            expected: d - 1,
            got: s.len(),
        });
    }
    let divisor = if d.is_multiple_of(2) {
        pow_checked(n, (d as u32 - 2) / 2)?
    } else {
        match perfect_sqrt(n) {
            Some(root) => pow_checked(root, d as u32 - 2)?,
            None => return Ok(CompletionResult::impossible(Reason::NonSquareNormOddDim)),
        }
    };
    let m = IntMatrix::from_rows(s.vectors().to_vec())?;
    let mut coords = Vec::with_capacity(d);
    for j in 0..d {
        let det = if d == 2 {
            // Deleting one of two columns leaves the other 1x1 minor.
            m.entry(0, 1 - j)
        } else {
            m.delete_column(j)?.determinant()?
        };
        let sign = if j % 2 == 0 { -1 } else { 1 };
        let w_j = div_exact(checked_mul(sign, det)?, divisor).map_err(|_| {
            Error::Internal(format!(
                "codimension-1 minor {det} not divisible by norm power {divisor}"
            ))
        })?;
        coords.push(w_j);
    }
    let w = IntVector::new(coords)?;
    certify(s, vec![w], true)
}

/// Completes a single nonzero vector of dimension 3 to an orthogonal basis
/// of the same norm, when the squared norm is a perfect square; certifies
/// impossibility otherwise.
///
/// The vector is reduced by its content, parametrized as a conjugated pure
/// unit, and the two companion frame vectors are scaled back up.
pub fn complete_d3(v: &IntVector) -> Result<CompletionResult> {
    if v.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: v.dim(),
        });
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    if perfect_sqrt(v.squared_norm()?).is_none() {
        return Ok(CompletionResult::impossible(Reason::NonSquareNormOddDim));
    }
    let g = v.content();
    let primitive = v.divided_exact(g)?;
    let (q, u) = pythagorean_param(&primitive)?;
    let frame = unit_frame(&q)?;
    let slot = match u {
        PureUnit::I => 0,
        PureUnit::J => 1,
        PureUnit::K => 2,
    };
    if frame.vectors()[slot] != primitive {
        return Err(Error::Internal(
            "parametrized frame does not contain the reduced input".into(),
        ));
    }
    let added = frame
        .vectors()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != slot)
        .map(|(_, w)| w.scaled(g))
        .collect::<Result<Vec<_>>>()?;
    let input = verify_ortho_set(vec![v.clone()])?;
    certify(&input, added, true)
}

fn unit_times(v: &IntVector, u: PureUnit) -> Result<IntVector> {
    let q = Quaternion::from_vector4(v)?;
    Ok(u.quaternion().mul(&q)?.to_vector4())
}

/// Completes any orthogonal set of 1, 2 or 3 equal-norm vectors in
/// dimension 4 to an orthogonal basis. Always succeeds.
///
/// One vector: left multiplication by the three pure units. Three vectors:
/// the codimension-1 formula. Two vectors: the second vector is expressed
/// over the unit-multiple frame of the first as `(l1 a + l2 b + l3 c)/Q`
/// with `l1^2+l2^2+l3^2 = Q^2`; parametrizing `l` as a conjugated unit and
/// conjugating a different unit gives an integral third vector, and the
/// fourth follows from the codimension-1 case.
pub fn complete_d4(s: &OrthoSet) -> Result<CompletionResult> {
    require_positive_norm(s)?;
    if s.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: s.dim(),
        });
    }
    match s.len() {
        1 => {
            let v = &s.vectors()[0];
            let added = PureUnit::ALL
                .iter()
                .map(|&u| unit_times(v, u))
                .collect::<Result<Vec<_>>>()?;
            certify(s, added, true)
        }
        2 => complete_d4_pair(s),
        3 => codim1_complete(s),
        len => Err(Error::WrongCardinality {
            expected: 3,
            got: len,
        }),
    }
}

fn complete_d4_pair(s: &OrthoSet) -> Result<CompletionResult> {
    let n = s.squared_norm();
    let v = &s.vectors()[0];
    let w = &s.vectors()[1];
    let frame: Vec<IntVector> = PureUnit::ALL
        .iter()
        .map(|&u| unit_times(v, u))
        .collect::<Result<_>>()?;
    let dots = frame.iter().map(|f| w.dot(f)).collect::<Result<Vec<_>>>()?;
    let g = dots.iter().fold(n, |acc, &d| gcd_i64(acc, d));
    let ell: Vec<i64> = dots.iter().map(|&d| d / g).collect();
    let q_den = n / g;
    if q_den % 2 == 0 {
        return Err(Error::Internal(
            "reduced frame denominator is even; it must be odd".into(),
        ));
    }
    let ell_norm: i64 = ell.iter().map(|&l| l * l).sum();
    if ell_norm != q_den * q_den {
        return Err(Error::Internal(
            "reduced frame coefficients are not a Pythagorean quadruple".into(),
        ));
    }
    let ell_vec = IntVector::new(ell)?;
    let (q, u) = pythagorean_param(&ell_vec).map_err(|e| match e {
        Error::NotPrimitive { gcd } => {
            Error::Internal(format!("reduced frame coefficients share the factor {gcd}"))
        }
        other => other,
    })?;
    let u_other = PureUnit::ALL
        .into_iter()
        .find(|&x| x != u)
        .expect("three units");
    let k_quat = q.mul(&u_other.quaternion())?.mul(&q.conj()?)?;
    let k = [k_quat.x, k_quat.y, k_quat.z];
    let combo =
        IntVector::linear_combination(&[(k[0], &frame[0]), (k[1], &frame[1]), (k[2], &frame[2])])?;
    let third = combo.divided_exact(q_den).map_err(|_| {
        Error::Internal("third-vector combination is not divisible by the denominator".into())
    })?;
    let widened = verify_ortho_set(vec![v.clone(), w.clone(), third.clone()])?;
    let rest = codim1_complete(&widened)?;
    if rest.status != Status::Completed {
        return Err(Error::Internal(
            "codimension-1 step failed inside the pair case".into(),
        ));
    }
    let mut added = vec![third];
    added.extend(rest.added);
    certify(s, added, true)
}

/// Width of the coordinate blocks used by the block constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockWidth {
    Four,
    Eight,
}

impl BlockWidth {
    pub fn size(&self) -> usize {
        match self {
            BlockWidth::Four => 4,
            BlockWidth::Eight => 8,
        }
    }
}

fn block_frame(seed: &IntVector, width: BlockWidth) -> Result<Vec<IntVector>> {
    match width {
        BlockWidth::Four => {
            let mut frame = vec![seed.clone()];
            for u in PureUnit::ALL {
                frame.push(unit_times(seed, u)?);
            }
            Ok(frame)
        }
        BlockWidth::Eight => {
            let m = cayley_matrix(&Octonion::from_vector(seed)?)?;
            Ok(m.rows().to_vec())
        }
    }
}

/// Builds an orthogonal set of 4 (or 8) vectors of squared norm `n` in
/// dimension `d`, supported on the first coordinate block. The seed must
/// have the block dimension and squared norm `n`; when omitted, the first
/// representation of `n` as a sum of that many squares is used (largest
/// coordinate first).
pub fn extend_blocks(
    d: usize,
    n: i64,
    width: BlockWidth,
    seed: Option<&IntVector>,
) -> Result<OrthoSet> {
    let w = width.size();
    if d == 0 || !d.is_multiple_of(w) {
        return Err(Error::UnsupportedDimension { dim: d });
    }
    if n <= 0 {
        return Err(Error::ZeroVector);
    }
    let seed = match seed {
        Some(s) => {
            if s.dim() != w {
                return Err(Error::DimensionMismatch {
                    expected: w,
                    got: s.dim(),
                });
            }
            if s.squared_norm()? != n {
                return Err(Error::NormMismatch {
                    index: 0,
                    expected: n,
                    got: s.squared_norm()?,
                });
            }
            s.clone()
        }
        None => {
            let rep = first_representation(n, w).ok_or(Error::NoRepresentation { n, d: w })?;
            // Largest coordinate first, so the support sits at the block start.
            let mut coords = rep.coords().to_vec();
            coords.reverse();
            IntVector::new(coords)?
        }
    };
    let frame = block_frame(&seed, width)?;
    let vectors = frame
        .into_iter()
        .map(|f| {
            let mut coords = f.coords().to_vec();
            coords.resize(d, 0);
            IntVector::new(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    verify_ortho_set(vectors)
}

/// For `d = 4k + 2` and a norm that is not a sum of two squares, builds the
/// blocking set of d-2 vectors on the first k four-blocks: its only
/// equal-norm extensions would live on the last two coordinates, so none
/// exist. Returns `None` when the norm is a sum of two squares (no
/// obstruction arises).
pub fn two_square_obstruction(d: usize, n: i64) -> Result<Option<OrthoSet>> {
    if d < 6 || d % 4 != 2 {
        return Err(Error::UnsupportedDimension { dim: d });
    }
    if n <= 0 {
        return Err(Error::ZeroVector);
    }
    if sum_two_squares(n) {
        return Ok(None);
    }
    let blocks = (d - 2) / 4;
    let rep = first_representation(n, 4).ok_or(Error::NoRepresentation { n, d: 4 })?;
    let mut seed_coords = rep.coords().to_vec();
    seed_coords.reverse();
    let seed = IntVector::new(seed_coords)?;
    let frame = block_frame(&seed, BlockWidth::Four)?;
    let mut vectors = Vec::with_capacity(d - 2);
    for block in 0..blocks {
        for f in &frame {
            let mut coords = vec![0i64; d];
            coords[block * 4..block * 4 + 4].copy_from_slice(f.coords());
            vectors.push(IntVector::new(coords)?);
        }
    }
    Ok(Some(verify_ortho_set(vectors)?))
}

/// Extends a single vector in a dimension divisible by 4 (or 8) to 4 (or 8)
/// orthogonal vectors of the same norm by blockwise left multiplication
/// with the quaternion (or octonion) units.
pub fn extend_single_blockwise(v: &IntVector, width: BlockWidth) -> Result<CompletionResult> {
    let w = width.size();
    let d = v.dim();
    if !d.is_multiple_of(w) {
        return Err(Error::UnsupportedDimension { dim: d });
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let blocks = d / w;
    let mut added = Vec::with_capacity(w - 1);
    for mult in 1..w {
        let mut coords = Vec::with_capacity(d);
        for block in 0..blocks {
            let part = IntVector::new(v.coords()[block * w..(block + 1) * w].to_vec())?;
            let image = match width {
                BlockWidth::Four => unit_times(&part, PureUnit::ALL[mult - 1])?,
                BlockWidth::Eight => {
                    cayley_mul(&Octonion::unit(mult), &Octonion::from_vector(&part)?)?.to_vector()
                }
            };
            coords.extend_from_slice(image.coords());
        }
        added.push(IntVector::new(coords)?);
    }
    let input = verify_ortho_set(vec![v.clone()])?;
    certify(&input, added, w == d)
}

/// Positive divisors of `n` in descending order.
fn divisors_desc(n: i64) -> Vec<i64> {
    let n = n.abs().max(1);
    let mut out: Vec<i64> = (1..=isqrt(n))
        .filter(|&k| n % k == 0)
        .flat_map(|k| [k, n / k])
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

fn try_complete_d7(s: &OrthoSet) -> Result<CompletionResult> {
    let v = &s.vectors()[0];
    let w = &s.vectors()[1];
    let n = s.squared_norm();
    for k1 in divisors_desc(v.content()) {
        if n % (k1 * k1) != 0 {
            continue;
        }
        if let Some(k2) = perfect_sqrt(n / (k1 * k1)) {
            if k2 > 0 && w.content() % k2 == 0 {
                let u = complete_pair_d7(v, w, k1, k2)?;
                return certify(s, vec![u], false);
            }
        }
    }
    if let Ok(u) = complete_pair_d7_sqrt(v, w) {
        return certify(s, vec![u], false);
    }
    Ok(CompletionResult::not_supported(7, s.len()))
}

fn try_complete_d8_triple(s: &OrthoSet) -> Result<CompletionResult> {
    let n = s.squared_norm();
    let vs = s.vectors();
    let contents = [vs[0].content(), vs[1].content(), vs[2].content()];
    if contents[0] * contents[1] * contents[2] == n {
        let u = complete_triple_d8(&vs[0], &vs[1], &vs[2], contents)?;
        return certify(s, vec![u], false);
    }
    // Opportunistic path: the raw ternary cross has squared norm N^3, so
    // dividing by N works whenever N divides every coordinate.
    let raw = cross8_ternary(&vs[0], &vs[1], &vs[2])?;
    if let Ok(u) = raw.divided_exact(n) {
        return certify(s, vec![u], false);
    }
    Ok(CompletionResult::not_supported(8, s.len()))
}

/// The two-coordinate complement case: the input spans a coordinate
/// subspace leaving exactly two free coordinates. Extension vectors must be
/// supported there, so completion reduces to writing N as a sum of two
/// squares.
fn try_two_coordinate_complement(s: &OrthoSet) -> Result<Option<CompletionResult>> {
    let d = s.dim();
    let n = s.squared_norm();
    let zero_cols: Vec<usize> = (0..d)
        .filter(|&j| s.vectors().iter().all(|v| v.coords()[j] == 0))
        .collect();
    if zero_cols.len() != 2 {
        return Ok(None);
    }
    let (p, q) = (zero_cols[0], zero_cols[1]);
    let mut decomposition = None;
    for a in 0..=isqrt(n) {
        if let Some(b) = perfect_sqrt(n - a * a) {
            decomposition = Some((a, b));
            break;
        }
    }
    let Some((a, b)) = decomposition else {
        return Ok(Some(CompletionResult::impossible(
            Reason::TwoSquareObstruction,
        )));
    };
    let mut w1 = vec![0i64; d];
    w1[p] = a;
    w1[q] = b;
    let mut w2 = vec![0i64; d];
    w2[p] = -b;
    w2[q] = a;
    let added = vec![IntVector::new(w1)?, IntVector::new(w2)?];
    Ok(Some(certify(s, added, true)?))
}

/// Dispatches a set of equal-norm orthogonal vectors to the applicable
/// completion construction.
pub fn complete(vectors: &[IntVector]) -> Result<CompletionResult> {
    let s = verify_ortho_set(vectors.to_vec())?;
    require_positive_norm(&s)?;
    let d = s.dim();
    let count = s.len();
    if count == d {
        return Ok(CompletionResult::completed(Vec::new()));
    }
    if count == d - 1 {
        return codim1_complete(&s);
    }
    if d == 4 {
        return complete_d4(&s);
    }
    if d == 3 && count == 1 {
        return complete_d3(&s.vectors()[0]);
    }
    if count == d - 2 {
        if let Some(result) = try_two_coordinate_complement(&s)? {
            return Ok(result);
        }
    }
    if count == 1 && d % 8 == 0 {
        return extend_single_blockwise(&s.vectors()[0], BlockWidth::Eight);
    }
    if count == 1 && d % 4 == 0 {
        return extend_single_blockwise(&s.vectors()[0], BlockWidth::Four);
    }
    if d == 7 && count == 2 {
        return try_complete_d7(&s);
    }
    if d == 8 && count == 3 {
        return try_complete_d8_triple(&s);
    }
    Ok(CompletionResult::not_supported(d, count))
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use crate::quaternion::Quaternion;
    use proptest::prelude::*;

    fn quat() -> impl Strategy<Value = Quaternion> {
        (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9)
            .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    proptest! {
        /// Random pairs drawn from products p * u * q, which form
        /// orthogonal 4-frames of squared norm |p|^2 |q|^2.
        #[test]
        fn d4_pair_always_completes(
            p in quat(),
            q in quat(),
            pick in 1usize..4,
        ) {
            prop_assume!(!p.is_zero() && !q.is_zero());
            let units = [
                Quaternion::ONE,
                Quaternion::new(0, 1, 0, 0),
                Quaternion::new(0, 0, 1, 0),
                Quaternion::new(0, 0, 0, 1),
            ];
            let frame: Vec<IntVector> = units
                .iter()
                .map(|u| p.mul(u).unwrap().mul(&q).unwrap().to_vector4())
                .collect();
            let pair = [frame[0].clone(), frame[pick].clone()];
            let r = complete(&pair).unwrap();
            prop_assert_eq!(r.status, Status::Completed);
        }

        #[test]
        fn codim1_even_d_random_frames(p in quat(), drop in 0usize..4) {
            prop_assume!(!p.is_zero());
            let frame = complete_d4(
                &verify_ortho_set(vec![p.to_vector4()]).unwrap()
            ).unwrap();
            let mut vectors = vec![p.to_vector4()];
            vectors.extend(frame.added);
            vectors.remove(drop);
            let s = verify_ortho_set(vectors).unwrap();
            let r = codim1_complete(&s).unwrap();
            prop_assert_eq!(r.status, Status::Completed);
        }
    }
}
