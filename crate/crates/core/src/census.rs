//! Exhaustive desk-scale classification of squared norms in dimension 3:
//! representation enumeration, equal-norm partner search, membership in the
//! extendability classes, and the sum-of-two-squares criterion.
//!
//! All searches are complete within their stated bounds; a returned `None`
//! is a proof of nonexistence, not a timeout. Work is embarrassingly
//! parallel over the norm and merged in ascending order, so results do not
//! depend on the thread count.

use rayon::prelude::*;

use crate::completion::{complete_d3, Status};
use crate::error::{Error, Result};
use crate::intvec::{isqrt, IntVector};

/// Caps on exhaustive searches. The default keeps a full classification run
/// under a few minutes on one core.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest squared norm accepted by the dimension-3 census operations.
    pub max_n: i64,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_n: 5000 }
    }
}

impl Budget {
    pub fn new(max_n: i64) -> Self {
        Self { max_n }
    }

    fn check(&self, requested: i64) -> Result<()> {
        if requested > self.max_n {
            return Err(Error::BudgetExceeded {
                requested,
                budget: self.max_n,
            });
        }
        Ok(())
    }
}

/// Per-representative evidence gathered by [`classify_d3`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An equal-norm orthogonal partner (extension to two vectors).
    Partner(IntVector),
    /// The two vectors completing an orthogonal basis.
    Basis(Vec<IntVector>),
    /// Exhaustive search found no partner.
    NoPartner,
}

/// Classification record for one squared norm in dimension 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: i64,
    pub dim: usize,
    pub reps_canonical: Vec<IntVector>,
    /// Every representative extends to an orthogonal pair.
    pub in_c3_1_2: bool,
    /// Every representative extends to an orthogonal basis.
    pub in_c3_1_3: bool,
    pub witnesses: Vec<(IntVector, Witness)>,
    /// At most one canonical representation; such norms are excluded from
    /// the difference set.
    pub trivial: bool,
}

fn rep_search(n: i64, d: usize, stop_after_first: bool) -> Vec<IntVector> {
    fn go(
        remaining: i64,
        min_coord: i64,
        slots: usize,
        prefix: &mut Vec<i64>,
        out: &mut Vec<IntVector>,
        stop_after_first: bool,
    ) {
        if stop_after_first && !out.is_empty() {
            return;
        }
        if slots == 1 {
            let r = isqrt(remaining);
            if r * r == remaining && r >= min_coord {
                let mut coords = prefix.clone();
                coords.push(r);
                out.push(IntVector::new(coords).expect("nonempty"));
            }
            return;
        }
        // Coordinates are non-decreasing, so the remaining `slots` entries
        // are all >= c; stop once slots * c^2 exceeds the remainder.
        let mut c = min_coord;
        while c * c * (slots as i64) <= remaining {
            prefix.push(c);
            go(
                remaining - c * c,
                c,
                slots - 1,
                prefix,
                out,
                stop_after_first,
            );
            prefix.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    go(n, 0, d, &mut Vec::new(), &mut out, stop_after_first);
    out
}

/// All canonical representatives (nonnegative, ascending coordinates) of
/// vectors in dimension `d` with squared norm `n`, in lexicographic order.
/// The list is complete and duplicate-free.
pub fn enumerate_reps(n: i64, d: usize, budget: &Budget) -> Result<Vec<IntVector>> {
    if n < 0 {
        return Err(Error::NegativeNorm { n });
    }
    if !(1..=8).contains(&d) {
        return Err(Error::UnsupportedDimension { dim: d });
    }
    budget.check(n)?;
    Ok(rep_search(n, d, false))
}

/// The lexicographically first canonical representation, if any; a
/// deterministic seed for block constructions.
pub(crate) fn first_representation(n: i64, d: usize) -> Option<IntVector> {
    rep_search(n, d, true).into_iter().next()
}

/// Exhaustive search for an equal-norm orthogonal partner of a nonzero
/// vector in dimension 3. Any partner has all coordinates bounded by
/// sqrt(N), so the scan is complete and `None` certifies nonexistence.
pub fn find_partner(v: &IntVector, budget: &Budget) -> Result<Option<IntVector>> {
    if v.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: v.dim(),
        });
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = v.squared_norm()?;
    budget.check(n)?;
    let c = v.coords();
    // Pivot on the coordinate of largest magnitude; the other two are
    // scanned in ascending order and the pivot entry is solved exactly.
    let pivot = (0..3)
        .max_by_key(|&i| (c[i].abs(), std::cmp::Reverse(i)))
        .expect("three coordinates");
    let (i1, i2) = match pivot {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let r = isqrt(n);
    for w1 in -r..=r {
        for w2 in -r..=r {
            let partial = c[i1] * w1 + c[i2] * w2;
            if partial % c[pivot] != 0 {
                continue;
            }
            let wp = -partial / c[pivot];
            if w1 * w1 + w2 * w2 + wp * wp == n {
                let mut coords = [0i64; 3];
                coords[i1] = w1;
                coords[i2] = w2;
                coords[pivot] = wp;
                return Ok(Some(IntVector::new(coords.to_vec()).expect("dim 3")));
            }
        }
    }
    Ok(None)
}

/// Classifies one squared norm: which extension classes it belongs to in
/// dimension 3, with per-representative witnesses.
///
/// Norms with no representation at all are reported as non-members with
/// `trivial = true`.
pub fn classify_d3(n: i64, budget: &Budget) -> Result<CensusReport> {
    if n < 0 {
        return Err(Error::NegativeNorm { n });
    }
    budget.check(n)?;
    let reps = enumerate_reps(n, 3, budget)?;
    let trivial = reps.len() <= 1;
    let is_square = isqrt(n) * isqrt(n) == n;
    let mut witnesses = Vec::with_capacity(reps.len());
    // The zero norm is represented only by the zero vector, which admits
    // no equal-norm extension at all.
    let mut in_pair = n > 0 && !reps.is_empty();
    let mut in_basis = in_pair && is_square;
    for rep in &reps {
        if rep.is_zero() {
            witnesses.push((rep.clone(), Witness::NoPartner));
            continue;
        }
        if is_square {
            let completion = complete_d3(rep)?;
            if completion.status == Status::Completed {
                witnesses.push((rep.clone(), Witness::Basis(completion.added)));
                continue;
            }
            in_basis = false;
        }
        match find_partner(rep, budget)? {
            Some(w) => witnesses.push((rep.clone(), Witness::Partner(w))),
            None => {
                in_pair = false;
                in_basis = false;
                witnesses.push((rep.clone(), Witness::NoPartner));
            }
        }
    }
    Ok(CensusReport {
        n,
        dim: 3,
        reps_canonical: reps,
        in_c3_1_2: in_pair,
        in_c3_1_3: in_basis,
        witnesses,
        trivial,
    })
}

/// All non-trivial norms below `limit` belonging to the pair class but not
/// the basis class, ascending.
pub fn difference_set_d3(limit: i64, budget: &Budget) -> Result<Vec<i64>> {
    budget.check(limit.saturating_sub(1))?;
    (1..limit.max(1))
        .into_par_iter()
        .map(|n| {
            let report = classify_d3(n, budget)?;
            Ok((!report.trivial && report.in_c3_1_2 && !report.in_c3_1_3).then_some(n))
        })
        .collect::<Result<Vec<_>>>()
        .map(|hits| hits.into_iter().flatten().collect())
}

/// Whether `n` is a sum of two squares: no prime congruent to 3 mod 4 may
/// divide it to an odd power. Decided by trial division.
pub fn sum_two_squares(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2i64;
    while p * p <= m {
        if m % p == 0 {
            let mut exp = 0u32;
            while m % p == 0 {
                m /= p;
                exp += 1;
            }
            if p % 4 == 3 && exp % 2 == 1 {
                return false;
            }
        }
        p += 1;
    }
    // Any remaining cofactor is prime (or 1) to the first power.
    !(m > 1 && m % 4 == 3)
}

/// Outcome of [`verify_curious`]: the norms below the limit admitting an
/// orthogonal equal-norm pair, and those among them that are not sums of
/// two squares (always empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuriousReport {
    pub limit: i64,
    pub norms_with_pairs: Vec<i64>,
    pub violations: Vec<i64>,
}

/// Checks, for every norm below `limit` admitting an orthogonal pair in
/// dimension 3, that the norm is a sum of two squares.
pub fn verify_curious(limit: i64, budget: &Budget) -> Result<CuriousReport> {
    budget.check(limit.saturating_sub(1))?;
    let norms_with_pairs: Vec<i64> = (1..limit.max(1))
        .into_par_iter()
        .map(|n| {
            for rep in enumerate_reps(n, 3, budget)? {
                if find_partner(&rep, budget)?.is_some() {
                    return Ok(Some(n));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<Option<i64>>>>()?
        .into_iter()
        .flatten()
        .collect();
    let violations = norms_with_pairs
        .iter()
        .copied()
        .filter(|&n| !sum_two_squares(n))
        .collect();
    Ok(CuriousReport {
        limit,
        norms_with_pairs,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(coords: &[i64]) -> IntVector {
        IntVector::new(coords.to_vec()).unwrap()
    }

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_reps(35, 3, &budget()).unwrap(),
            vec![v(&[1, 3, 5])]
        );
        assert_eq!(
            enumerate_reps(18, 3, &budget()).unwrap(),
            vec![v(&[0, 3, 3]), v(&[1, 1, 4])]
        );
        assert!(enumerate_reps(7, 3, &budget()).unwrap().is_empty());
    }

    #[test]
    fn enumerate_budget_guard() {
        assert!(matches!(
            enumerate_reps(6000, 3, &budget()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_reps(5, 9, &budget()),
            Err(Error::UnsupportedDimension { dim: 9 })
        ));
    }

    /// Oracle: triple loop over the full signed cube, canonicalized.
    fn oracle_reps(n: i64) -> Vec<IntVector> {
        let r = isqrt(n);
        let mut out: Vec<IntVector> = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    if a * a + b * b + c * c == n {
                        let canon = v(&[a, b, c]).canonicalize_signed_perm();
                        if !out.contains(&canon) {
                            out.push(canon);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumerate_matches_signed_cube_oracle() {
        for n in [0i64, 1, 2, 18, 35, 49, 98, 117, 169] {
            assert_eq!(enumerate_reps(n, 3, &budget()).unwrap(), oracle_reps(n));
        }
    }

    #[test]
    fn partner_examples() {
        assert_eq!(find_partner(&v(&[1, 3, 5]), &budget()).unwrap(), None);

        let w = find_partner(&v(&[1, 4, 10]), &budget()).unwrap().unwrap();
        assert_eq!(w.squared_norm().unwrap(), 117);
        assert_eq!(w.dot(&v(&[1, 4, 10])).unwrap(), 0);

        let w = find_partner(&v(&[3, 5, 8]), &budget()).unwrap().unwrap();
        assert_eq!(w.squared_norm().unwrap(), 98);
        assert_eq!(w.dot(&v(&[3, 5, 8])).unwrap(), 0);
    }

    #[test]
    fn classify_examples() {
        let n18 = classify_d3(18, &budget()).unwrap();
        assert!(n18.in_c3_1_2 && !n18.in_c3_1_3);
        assert!(!n18.trivial);

        let n49 = classify_d3(49, &budget()).unwrap();
        assert!(n49.in_c3_1_2 && n49.in_c3_1_3);

        let n98 = classify_d3(98, &budget()).unwrap();
        assert!(n98.in_c3_1_2 && !n98.in_c3_1_3);
    }

    #[test]
    fn classify_no_representation() {
        let n7 = classify_d3(7, &budget()).unwrap();
        assert!(n7.reps_canonical.is_empty());
        assert!(!n7.in_c3_1_2 && !n7.in_c3_1_3);
        assert!(n7.trivial);
    }

    #[test]
    fn classify_invariants() {
        for n in 1..=200 {
            let r = classify_d3(n, &budget()).unwrap();
            if r.in_c3_1_3 {
                assert!(r.in_c3_1_2, "basis class must sit inside pair class");
                assert_eq!(isqrt(n) * isqrt(n), n, "basis class requires square N");
            }
        }
    }

    #[test]
    fn classify_is_orbit_invariant() {
        // Partner existence per representative equals partner existence for
        // every signed permutation of it.
        let b = budget();
        for n in [18i64, 35, 49, 98] {
            for rep in enumerate_reps(n, 3, &b).unwrap() {
                let has = find_partner(&rep, &b).unwrap().is_some();
                let c = rep.coords();
                for perm in [
                    [0, 1, 2],
                    [0, 2, 1],
                    [1, 0, 2],
                    [1, 2, 0],
                    [2, 0, 1],
                    [2, 1, 0],
                ] {
                    for signs in 0..8 {
                        let coords: Vec<i64> = (0..3)
                            .map(|i| {
                                let s = if signs >> i & 1 == 1 { -1 } else { 1 };
                                s * c[perm[i]]
                            })
                            .collect();
                        let w = IntVector::new(coords).unwrap();
                        if w.is_zero() {
                            continue;
                        }
                        assert_eq!(find_partner(&w, &b).unwrap().is_some(), has);
                    }
                }
            }
        }
    }

    #[test]
    fn difference_set_examples() {
        let b = budget();
        assert!(difference_set_d3(18, &b).unwrap().is_empty());
        assert_eq!(difference_set_d3(50, &b).unwrap(), vec![18, 45]);
    }

    #[test]
    fn sum_two_squares_examples() {
        assert!(sum_two_squares(18));
        assert!(!sum_two_squares(35));
        assert!(!sum_two_squares(126));
        assert!(sum_two_squares(0));
        assert!(sum_two_squares(1));
        assert!(sum_two_squares(2));
        assert!(!sum_two_squares(3));
        assert!(sum_two_squares(45 * 45));
    }

    #[test]
    fn sum_two_squares_matches_search() {
        for n in 0..=600i64 {
            let direct = (0..=isqrt(n)).any(|a| {
                let rem = n - a * a;
                let b = isqrt(rem);
                b * b == rem
            });
            assert_eq!(sum_two_squares(n), direct, "disagreement at {n}");
        }
    }

    #[test]
    fn curious_small_run() {
        let report = verify_curious(120, &budget()).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.norms_with_pairs.contains(&2));
        assert!(report.norms_with_pairs.contains(&49));
        assert!(!report.norms_with_pairs.contains(&35));
    }

    /// All signed vectors of squared norm n in dimension 3.
    fn sphere(n: i64) -> Vec<IntVector> {
        let r = isqrt(n);
        let mut out = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    if a * a + b * b + c * c == n {
                        out.push(v(&[a, b, c]));
                    }
                }
            }
        }
        out
    }

    /// Independent oracle for basis existence: a full scan over pairs of
    /// sphere points, with no constructive shortcut. Cross-validates the
    /// parametrization path of classify_d3 at small norms.
    #[test]
    fn exhaustive_basis_search_cross_validates_classifier() {
        let b = budget();
        for n in 1i64..=150 {
            let points = sphere(n);
            let report = classify_d3(n, &b).unwrap();
            for rep in &report.reps_canonical {
                let mut found = false;
                'search: for w1 in &points {
                    if w1.dot(rep).unwrap() != 0 {
                        continue;
                    }
                    for w2 in &points {
                        if w2.dot(rep).unwrap() == 0 && w2.dot(w1).unwrap() == 0 {
                            found = true;
                            break 'search;
                        }
                    }
                }
                let constructive = complete_d3(rep).unwrap().status == Status::Completed;
                assert_eq!(
                    constructive, found,
                    "basis existence mismatch for representative {rep} of {n}"
                );
            }
        }
    }
}
