//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Field`]. Two families of
//! implementations ship with the crate: arbitrary-precision rationals
//! ([`Q`](crate::Q), i.e. `BigRational`) and prime fields [`Fp`] with the
//! modulus fixed at compile time.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact commutative field.
///
/// Arithmetic goes through owned operators; implementations are expected to
/// be cheap to clone for finite fields and "reasonably" cheap for rationals.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// 0 for ℚ, p for F_p.
    fn characteristic() -> u64;

    fn from_i64(v: i64) -> Self;

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// A square root inside the field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Integer power, negative exponents invert. Panics on `0^(-k)`.
    fn pow_i(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow_u(e as u64)
        } else {
            self.inv()
                .expect("negative power of zero")
                .pow_u(e.unsigned_abs())
        }
    }

    /// Rank of a dense row-major matrix. Plain Gaussian elimination; the
    /// rational implementation overrides this with fraction-free elimination.
    fn rank_of(rows: Vec<Vec<Self>>) -> usize {
        gauss_rank(rows)
    }

    /// Determinant of a square matrix given by rows.
    fn det_of(rows: Vec<Vec<Self>>) -> Self {
        gauss_det(rows)
    }
}

pub(crate) fn gauss_rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in (rank + 1)..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..ncols {
                let sub = factor.clone() * rows[rank][c].clone();
                rows[r][c] = rows[r][c].clone() - sub;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

pub(crate) fn gauss_det<F: Field>(mut rows: Vec<Vec<F>>) -> F {
    let n = rows.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return F::zero();
        };
        if piv != col {
            rows.swap(piv, col);
            det = -det;
        }
        det = det * rows[col][col].clone();
        let inv = rows[col][col].inv().expect("nonzero pivot");
        for r in (col + 1)..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..n {
                let sub = factor.clone() * rows[col][c].clone();
                rows[r][c] = rows[r][c].clone() - sub;
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Rationals

impl Field for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn rank_of(rows: Vec<Vec<Self>>) -> usize {
        let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|r| integer_row(&r).0).collect();
        bareiss_rank(rows)
    }

    fn det_of(rows: Vec<Vec<Self>>) -> Self {
        let mut scale = BigInt::one();
        let int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                let (row, l) = integer_row(r);
                scale *= l;
                row
            })
            .collect();
        BigRational::new(bareiss_det(int_rows), scale)
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = row
        .iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect();
    (ints, l)
}

/// Fraction-free (Bareiss) rank of an integer matrix.
pub(crate) fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in (rank + 1)..nrows {
            for c in (col + 1)..ncols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for r in (k + 1)..n {
            for c in (k + 1)..n {
                let v = &a[k][k] * &a[r][c] - &a[r][k] * &a[k][c];
                a[r][c] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

// ---------------------------------------------------------------------------
// Prime fields

/// Element of F_P, stored reduced to `[0, P)`. `P` must be an odd prime
/// below 2^32 (products are formed in `u64`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// All field elements in increasing order of representative.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(Fp)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<const P: u64> Field for Fp<P> {
    fn characteristic() -> u64 {
        P
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow_u(P - 2))
        }
    }

    fn sqrt(&self) -> Option<Self> {
        crate::modp::sqrt_mod(self.0, P).map(Fp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn rationals_are_normalised() {
        let x = q(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn fp_reduces_into_range() {
        type F = Fp<13>;
        assert_eq!(F::new(-1).value(), 12);
        assert_eq!(F::new(27).value(), 1);
        assert_eq!((F::new(4) * F::new(4)).value(), 3);
        assert_eq!(F::new(4).pow_u(6), F::one());
    }

    #[test]
    fn sqrt_in_q_and_fp() {
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt(), None);
        assert_eq!(q(-1, 1).sqrt(), None);
        let r = Fp::<13>::new(10).sqrt().unwrap();
        assert_eq!(r * r, Fp::<13>::new(10));
        assert_eq!(Fp::<5>::new(2).sqrt(), None);
    }

    #[test]
    fn bareiss_matches_gauss() {
        let rows = vec![
            vec![q(1, 2), q(2, 3), q(1, 1)],
            vec![q(1, 1), q(4, 3), q(2, 1)],
            vec![q(0, 1), q(1, 1), q(5, 7)],
        ];
        assert_eq!(Q::rank_of(rows.clone()), gauss_rank(rows.clone()));
        assert_eq!(Q::det_of(rows.clone()), gauss_det(rows));
    }
}
