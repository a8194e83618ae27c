//! Exact arithmetic in the Gaussian integers `Z[i]`.
//!
//! Provides the Euclidean division and extended gcd needed by the quaternion
//! Bezout construction. Division rounds each coordinate of the exact
//! quotient to a nearest integer, ties toward minus infinity, which keeps
//! the remainder norm at most half the divisor norm.

use crate::error::{Error, Result};
use crate::intvec::{checked_add, checked_mul, checked_neg, checked_sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };

    pub fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn norm(&self) -> Result<i64> {
        checked_add(
            checked_mul(self.re, self.re)?,
            checked_mul(self.im, self.im)?,
        )
    }

    pub fn conj(&self) -> Result<Self> {
        Ok(Self::new(self.re, checked_neg(self.im)?))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            checked_add(self.re, other.re)?,
            checked_add(self.im, other.im)?,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::new(
            checked_sub(self.re, other.re)?,
            checked_sub(self.im, other.im)?,
        ))
    }

    /// Exact product in `Z[i]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let re = checked_sub(
            checked_mul(self.re, other.re)?,
            checked_mul(self.im, other.im)?,
        )?;
        let im = checked_add(
            checked_mul(self.re, other.im)?,
            checked_mul(self.im, other.re)?,
        )?;
        Ok(Self::new(re, im))
    }
}

/// Nearest integer to `p/q` (`q > 0`), ties broken toward minus infinity.
fn round_nearest_half_down(p: i64, q: i64) -> Result<i64> {
    debug_assert!(q > 0);
    // ceil((2p - q) / (2q)) realizes round-half-down for integer p, q.
    let num = checked_sub(checked_mul(2, p)?, q)?;
    let den = checked_mul(2, q)?;
    Ok(checked_add(num, checked_sub(den, 1)?)?.div_euclid(den))
}

/// Euclidean division: returns `(q, r)` with `x = q*y + r` and
/// `norm(r) <= norm(y) / 2`.
pub fn div_rem(x: &GaussianInt, y: &GaussianInt) -> Result<(GaussianInt, GaussianInt)> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let denom = y.norm()?;
    let num = x.mul(&y.conj()?)?;
    let q = GaussianInt::new(
        round_nearest_half_down(num.re, denom)?,
        round_nearest_half_down(num.im, denom)?,
    );
    let r = x.sub(&q.mul(y)?)?;
    debug_assert!(2 * r.norm().unwrap() <= denom);
    Ok((q, r))
}

/// Extended Euclidean algorithm: returns `(g, s, t)` with `s*x + t*y = g`
/// and `g` dividing both inputs. When `x` and `y` are coprime, `g` is a
/// unit (norm 1). The gcd is not normalized to a canonical associate.
pub fn extended_gcd(
    x: &GaussianInt,
    y: &GaussianInt,
) -> Result<(GaussianInt, GaussianInt, GaussianInt)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (*x, *y);
    let (mut s0, mut s1) = (GaussianInt::ONE, GaussianInt::ZERO);
    let (mut t0, mut t1) = (GaussianInt::ZERO, GaussianInt::ONE);
    while !r1.is_zero() {
        let (q, r) = div_rem(&r0, &r1)?;
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s0.sub(&q.mul(&s1)?)?);
        (t0, t1) = (t1, t0.sub(&q.mul(&t1)?)?);
    }
    Ok((r0, s0, t0))
}
