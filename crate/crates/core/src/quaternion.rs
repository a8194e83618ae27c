//! Integral quaternions with all four coefficients in Z.
//!
//! Carries the Hamilton product, the embedding of Z^3 as pure quaternions,
//! rotation frames obtained by conjugation with unit quaternions, the
//! Pythagorean-quadruple parametrization, and the Bezout identity
//! `q1*q + q2*q*u = 2` for a pure unit `u`.

use crate::error::{Error, Result};
use crate::gaussian::{extended_gcd, GaussianInt};
use crate::intvec::{
    checked_add, checked_mul, checked_neg, checked_sub, isqrt, perfect_sqrt, IntVector,
};
use crate::intvec::{verify_ortho_set, OrthoSet};

/// A quaternion `w + x*i + y*j + z*k` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

/// One of the pure quaternion units i, j, k. Each squares to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PureUnit {
    I,
    J,
    K,
}

impl PureUnit {
    pub const ALL: [PureUnit; 3] = [PureUnit::I, PureUnit::J, PureUnit::K];

    pub fn quaternion(self) -> Quaternion {
        match self {
            PureUnit::I => Quaternion::new(0, 1, 0, 0),
            PureUnit::J => Quaternion::new(0, 0, 1, 0),
            PureUnit::K => Quaternion::new(0, 0, 0, 1),
        }
    }
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion {
        w: 1,
        x: 0,
        y: 0,
        z: 0,
    };

    pub fn new(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self { w, x, y, z }
    }

    pub fn is_zero(&self) -> bool {
        self.w == 0 && self.x == 0 && self.y == 0 && self.z == 0
    }

    pub fn squared_norm(&self) -> Result<i64> {
        let mut acc = 0i64;
        for c in [self.w, self.x, self.y, self.z] {
            acc = checked_add(acc, checked_mul(c, c)?)?;
        }
        Ok(acc)
    }

    pub fn conj(&self) -> Result<Self> {
        Ok(Self::new(
            self.w,
            checked_neg(self.x)?,
            checked_neg(self.y)?,
            checked_neg(self.z)?,
        ))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Self::new(
            checked_add(self.w, o.w)?,
            checked_add(self.x, o.x)?,
            checked_add(self.y, o.y)?,
            checked_add(self.z, o.z)?,
        ))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        Ok(Self::new(
            checked_sub(self.w, o.w)?,
            checked_sub(self.x, o.x)?,
            checked_sub(self.y, o.y)?,
            checked_sub(self.z, o.z)?,
        ))
    }

    pub fn scaled(&self, k: i64) -> Result<Self> {
        Ok(Self::new(
            checked_mul(self.w, k)?,
            checked_mul(self.x, k)?,
            checked_mul(self.y, k)?,
            checked_mul(self.z, k)?,
        ))
    }

    /// Exact Hamilton product under i^2 = j^2 = k^2 = ijk = -1.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        let (a0, a1, a2, a3) = (self.w, self.x, self.y, self.z);
        let (b0, b1, b2, b3) = (o.w, o.x, o.y, o.z);
        let term = |p: i64, q: i64| checked_mul(p, q);
        let w = checked_sub(
            checked_sub(checked_sub(term(a0, b0)?, term(a1, b1)?)?, term(a2, b2)?)?,
            term(a3, b3)?,
        )?;
        let x = checked_sub(
            checked_add(checked_add(term(a0, b1)?, term(a1, b0)?)?, term(a2, b3)?)?,
            term(a3, b2)?,
        )?;
        let y = checked_add(
            checked_add(checked_sub(term(a0, b2)?, term(a1, b3)?)?, term(a2, b0)?)?,
            term(a3, b1)?,
        )?;
        let z = checked_add(
            checked_sub(checked_add(term(a0, b3)?, term(a1, b2)?)?, term(a2, b1)?)?,
            term(a3, b0)?,
        )?;
        Ok(Self::new(w, x, y, z))
    }

    /// The coefficients of a quaternion as a vector in Z^4.
    pub fn to_vector4(&self) -> IntVector {
        IntVector::new(vec![self.w, self.x, self.y, self.z]).expect("dim 4")
    }

    pub fn from_vector4(v: &IntVector) -> Result<Self> {
        if v.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                got: v.dim(),
            });
        }
        let c = v.coords();
        Ok(Self::new(c[0], c[1], c[2], c[3]))
    }

    /// Whether the four coefficients have no common factor greater than 1.
    pub fn is_primitive(&self) -> bool {
        self.to_vector4().content() == 1
    }
}

/// Embeds a vector of Z^3 as the pure quaternion `a1*i + a2*j + a3*k`.
pub fn embed_vec3(a: &IntVector) -> Result<Quaternion> {
    if a.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: a.dim(),
        });
    }
    let c = a.coords();
    Ok(Quaternion::new(0, c[0], c[1], c[2]))
}

/// Extracts the pure part as a vector of Z^3; the real part must vanish.
fn pure_part(q: &Quaternion) -> Result<IntVector> {
    if q.w != 0 {
        return Err(Error::Internal(format!(
            "expected a pure quaternion, real part is {}",
            q.w
        )));
    }
    Ok(IntVector::new(vec![q.x, q.y, q.z]).expect("dim 3"))
}

/// Splits the product of two pure quaternions into `-dot + cross`:
/// returns the usual dot and cross products of the embedded vectors.
pub fn dot_cross(a: &IntVector, b: &IntVector) -> Result<(i64, IntVector)> {
    let qa = embed_vec3(a)?;
    let qb = embed_vec3(b)?;
    let p = qa.mul(&qb)?;
    let d = checked_neg(p.w)?;
    let cross = IntVector::new(vec![p.x, p.y, p.z]).expect("dim 3");
    debug_assert_eq!(d, a.dot(b).unwrap());
    Ok((d, cross))
}

/// Conjugates the embedded vector: the pure part of `q * q_a * conj(q)`.
/// The squared norm of the result is `|q|^4 * |a|^2`, exactly.
pub fn rotate_vector(q: &Quaternion, a: &IntVector) -> Result<IntVector> {
    let qa = embed_vec3(a)?;
    let rotated = q.mul(&qa)?.mul(&q.conj()?)?;
    // The real part vanishes identically; kept as a self-check.
    pure_part(&rotated)
}

/// The three vectors obtained by conjugating the units i, j, k with `q`.
/// They are pairwise orthogonal of squared norm `|q|^4`.
pub fn unit_frame(q: &Quaternion) -> Result<OrthoSet> {
    if q.is_zero() {
        return Err(Error::ZeroVector);
    }
    let qc = q.conj()?;
    let mut vectors = Vec::with_capacity(3);
    for u in PureUnit::ALL {
        let p = q.mul(&u.quaternion())?.mul(&qc)?;
        vectors.push(pure_part(&p)?);
    }
    verify_ortho_set(vectors)
}

/// Solves `q * u * conj(q) = q_a` for a primitive `a` whose squared norm is
/// a perfect square `n^2`, with `|q|^2 = n`.
///
/// The search enumerates quaternions of squared norm `n` in a fixed order
/// (leading coefficient descending from floor(sqrt(n)), the remaining three
/// ascending) and the units in order i, j, k, returning the first match, so
/// the witness is deterministic.
pub fn pythagorean_param(a: &IntVector) -> Result<(Quaternion, PureUnit)> {
    if a.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: a.dim(),
        });
    }
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n_squared = a.squared_norm()?;
    let n = perfect_sqrt(n_squared).ok_or(Error::NotPerfectSquareNorm { n_squared })?;
    let content = a.content();
    if content != 1 {
        return Err(Error::NotPrimitive { gcd: content });
    }
    let qa = embed_vec3(a)?;
    let mut a0 = isqrt(n);
    while a0 >= 0 {
        let rem1 = n - a0 * a0;
        let r1 = isqrt(rem1);
        for a1 in -r1..=r1 {
            let rem2 = rem1 - a1 * a1;
            let r2 = isqrt(rem2);
            for a2 in -r2..=r2 {
                let rem3 = rem2 - a2 * a2;
                let Some(r3) = perfect_sqrt(rem3) else {
                    continue;
                };
                let mut last = i64::MIN;
                for a3 in [-r3, r3] {
                    if a3 == last {
                        continue;
                    }
                    last = a3;
                    let q = Quaternion::new(a0, a1, a2, a3);
                    let qc = q.conj()?;
                    for u in PureUnit::ALL {
                        if q.mul(&u.quaternion())?.mul(&qc)? == qa {
                            return Ok((q, u));
                        }
                    }
                }
            }
        }
        a0 -= 1;
    }
    // Unreachable for valid inputs: every primitive Pythagorean quadruple
    // arises from conjugating one of the three units.
    Err(Error::Internal(format!(
        "no quaternion of squared norm {n} parametrizes {a}"
    )))
}

/// The algebra map induced by the cyclic permutation i -> j -> k -> i,
/// acting on coefficients as (w, x, y, z) -> (w, z, x, y).
pub fn cycle_units(q: &Quaternion) -> Quaternion {
    Quaternion::new(q.w, q.z, q.x, q.y)
}

fn cycle_units_inv(q: &Quaternion) -> Quaternion {
    Quaternion::new(q.w, q.y, q.z, q.x)
}

/// Solves `q1 * q + q2 * q * u = 2` for integral quaternions `q1`, `q2`,
/// given that `q * u * conj(q)` is primitive.
///
/// For `u = i` the construction splits `q` into the Gaussian pieces
/// `q - i*q*i = 2(a+bi)` and `-j*q + k*q*i = 2(c-di)`, runs the extended
/// gcd in `Z[i]` (the pieces are coprime exactly when the conjugated unit is
/// primitive), and reassembles the cofactors. The cases u = j, k reduce to
/// u = i through the cyclic unit permutation.
pub fn bezout_pair(q: &Quaternion, u: PureUnit) -> Result<(Quaternion, Quaternion)> {
    let conjugated = q.mul(&u.quaternion())?.mul(&q.conj()?)?;
    let gcd = conjugated.to_vector4().content();
    if gcd != 1 {
        return Err(Error::NotPrimitive { gcd });
    }
    let (q1, q2) = match u {
        PureUnit::I => bezout_pair_unit_i(q)?,
        PureUnit::J => {
            let (p1, p2) = bezout_pair_unit_i(&cycle_units_inv(q))?;
            (cycle_units(&p1), cycle_units(&p2))
        }
        PureUnit::K => {
            let (p1, p2) = bezout_pair_unit_i(&cycle_units(q))?;
            (cycle_units_inv(&p1), cycle_units_inv(&p2))
        }
    };
    let two = Quaternion::new(2, 0, 0, 0);
    let lhs = q1.mul(q)?.add(&q2.mul(q)?.mul(&u.quaternion())?)?;
    if lhs != two {
        return Err(Error::Internal(
            "bezout cofactors do not satisfy q1*q + q2*q*u = 2".into(),
        ));
    }
    Ok((q1, q2))
}

fn bezout_pair_unit_i(q: &Quaternion) -> Result<(Quaternion, Quaternion)> {
    // q - i*q*i = 2(a+bi) and -j*q + k*q*i = 2(c-di).
    let first = GaussianInt::new(q.w, q.x);
    let second = GaussianInt::new(q.y, checked_neg(q.z)?);
    let (g, s, t) = extended_gcd(&first, &second)?;
    if g.norm()? != 1 {
        return Err(Error::Internal(
            "gaussian pieces of a primitive conjugate are not coprime".into(),
        ));
    }
    // Scale the cofactors by the unit inverse so that s'*x + t'*y = 1.
    let g_inv = g.conj()?;
    let s = g_inv.mul(&s)?;
    let t = g_inv.mul(&t)?;
    let (cap_a, cap_b) = (s.re, s.im);
    let (cap_c, cap_d) = (t.re, checked_neg(t.im)?);
    let q1 = Quaternion::new(cap_a, cap_b, checked_neg(cap_c)?, cap_d);
    let q2 = Quaternion::new(cap_b, checked_neg(cap_a)?, cap_d, cap_c);
    Ok((q1, q2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v3(coords: [i64; 3]) -> IntVector {
        IntVector::new(coords.to_vec()).unwrap()
    }

    const I: Quaternion = Quaternion {
        w: 0,
        x: 1,
        y: 0,
        z: 0,
    };
    const J: Quaternion = Quaternion {
        w: 0,
        x: 0,
        y: 1,
        z: 0,
    };
    const K: Quaternion = Quaternion {
        w: 0,
        x: 0,
        y: 0,
        z: 1,
    };

    #[test]
    fn unit_relations() {
        assert_eq!(I.mul(&J).unwrap(), K);
        assert_eq!(J.mul(&I).unwrap(), K.scaled(-1).unwrap());
        assert_eq!(I.mul(&I).unwrap(), Quaternion::new(-1, 0, 0, 0));
        assert_eq!(
            I.mul(&J).unwrap().mul(&K).unwrap(),
            Quaternion::new(-1, 0, 0, 0)
        );
        let q = Quaternion::new(3, -1, 4, 2);
        assert_eq!(q.mul(&Quaternion::ONE).unwrap(), q);
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_vec3(&v3([1, 0, 0])).unwrap(), I);
        assert_eq!(
            embed_vec3(&v3([2, 3, 6])).unwrap(),
            Quaternion::new(0, 2, 3, 6)
        );
        assert_eq!(
            embed_vec3(&v3([0, 0, 0])).unwrap(),
            Quaternion::new(0, 0, 0, 0)
        );
    }

    #[test]
    fn dot_cross_examples() {
        let (d, c) = dot_cross(&v3([1, 0, 0]), &v3([0, 1, 0])).unwrap();
        assert_eq!((d, c), (0, v3([0, 0, 1])));

        let (d, c) = dot_cross(&v3([1, 2, 3]), &v3([1, 2, 3])).unwrap();
        assert_eq!((d, c), (14, v3([0, 0, 0])));

        let (d, c) = dot_cross(&v3([2, 3, 6]), &v3([3, -6, 2])).unwrap();
        assert_eq!((d, c), (0, v3([42, 14, -21])));
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(
            rotate_vector(&Quaternion::ONE, &v3([5, -2, 7])).unwrap(),
            v3([5, -2, 7])
        );
        assert_eq!(rotate_vector(&I, &v3([0, 1, 0])).unwrap(), v3([0, -1, 0]));
    }

    #[test]
    fn rotate_norm_contract() {
        let q = Quaternion::new(2, -3, 1, 5);
        let a = v3([4, -1, 7]);
        let b = rotate_vector(&q, &a).unwrap();
        let n = q.squared_norm().unwrap();
        assert_eq!(b.squared_norm().unwrap(), n * n * a.squared_norm().unwrap());
    }

    #[test]
    fn unit_frame_examples() {
        let f = unit_frame(&Quaternion::ONE).unwrap();
        assert_eq!(f.vectors(), &[v3([1, 0, 0]), v3([0, 1, 0]), v3([0, 0, 1])]);

        let f = unit_frame(&Quaternion::new(1, 1, 1, 1)).unwrap();
        assert_eq!(f.squared_norm(), 16);
        assert_eq!(f.len(), 3);

        assert_eq!(
            unit_frame(&Quaternion::new(0, 0, 0, 0)),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn pythagorean_examples() {
        assert_eq!(
            pythagorean_param(&v3([1, 0, 0])).unwrap(),
            (Quaternion::ONE, PureUnit::I)
        );

        let a = v3([2, 3, 6]);
        let (q, u) = pythagorean_param(&a).unwrap();
        assert_eq!(q.squared_norm().unwrap(), 7);
        let back = q
            .mul(&u.quaternion())
            .unwrap()
            .mul(&q.conj().unwrap())
            .unwrap();
        assert_eq!(back, embed_vec3(&a).unwrap());

        assert_eq!(
            pythagorean_param(&v3([1, 4, 10])),
            Err(Error::NotPerfectSquareNorm { n_squared: 117 })
        );
        assert_eq!(
            pythagorean_param(&v3([2, 4, 4])),
            Err(Error::NotPrimitive { gcd: 2 })
        );
    }

    #[test]
    fn cycle_preserves_products() {
        assert_eq!(cycle_units(&I), J);
        assert_eq!(cycle_units(&J), K);
        assert_eq!(cycle_units(&K), I);
        let p = Quaternion::new(2, -1, 3, 5);
        let q = Quaternion::new(-4, 2, 0, 7);
        assert_eq!(
            cycle_units(&p.mul(&q).unwrap()),
            cycle_units(&p).mul(&cycle_units(&q)).unwrap()
        );
        assert_eq!(cycle_units_inv(&cycle_units(&p)), p);
    }

    #[test]
    fn bezout_examples() {
        let (q1, q2) = bezout_pair(&Quaternion::ONE, PureUnit::I).unwrap();
        assert_eq!(q1, Quaternion::ONE);
        assert_eq!(q2, Quaternion::new(0, -1, 0, 0));

        // 1+i+j conjugates every unit to a primitive vector; the identity
        // q1*q + q2*q*u = 2 is checked inside bezout_pair.
        let q = Quaternion::new(1, 1, 1, 0);
        for u in PureUnit::ALL {
            bezout_pair(&q, u).unwrap();
        }
    }

    #[test]
    fn bezout_rejects_diagonal_conjugation() {
        // 1+i+j+k rotates each unit onto 4 times another unit, so the
        // primitivity hypothesis fails for every u.
        let q = Quaternion::new(1, 1, 1, 1);
        for u in PureUnit::ALL {
            assert_eq!(bezout_pair(&q, u), Err(Error::NotPrimitive { gcd: 4 }));
        }
    }

    #[test]
    fn bezout_rejects_imprimitive() {
        // 2*i*conj(2) = 4i is not primitive.
        let q = Quaternion::new(2, 0, 0, 0);
        assert_eq!(
            bezout_pair(&q, PureUnit::I),
            Err(Error::NotPrimitive { gcd: 4 })
        );
    }

    #[test]
    fn param_then_frame_contains_input_exhaustive() {
        // Every primitive vector whose norm is an integer at most 40 is a
        // member of the frame its parametrization generates.
        for n in 1i64..=40 {
            let n2 = n * n;
            let r = n;
            for a1 in -r..=r {
                for a2 in -r..=r {
                    let rem = n2 - a1 * a1 - a2 * a2;
                    if rem < 0 {
                        continue;
                    }
                    let Some(a3r) = crate::intvec::perfect_sqrt(rem) else {
                        continue;
                    };
                    let mut last = i64::MIN;
                    for a3 in [-a3r, a3r] {
                        if a3 == last {
                            continue;
                        }
                        last = a3;
                        let a = v3([a1, a2, a3]);
                        if a.is_zero() || a.content() != 1 {
                            continue;
                        }
                        let (q, _) = pythagorean_param(&a).unwrap();
                        let frame = unit_frame(&q).unwrap();
                        assert!(
                            frame.vectors().contains(&a),
                            "frame of {a} misses the input"
                        );
                        assert_eq!(frame.squared_norm(), n2);
                    }
                }
            }
        }
    }
}
