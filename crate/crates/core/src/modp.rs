//! Arithmetic modulo a prime chosen at run time.
//!
//! [`Fp`](crate::Fp) fixes its modulus at compile time, which is the right
//! shape for exhaustive small-field tests. The evidence routines (separating
//! invariants, secant tests, Hensel lifting) need primes picked while running,
//! so they use these plain `u64` helpers instead. All moduli are odd primes
//! below 2^63; products go through `u128`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Q;

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue.
pub fn inv(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(pow(a, p - 2, p))
    }
}

pub fn from_i64(v: i64, p: u64) -> u64 {
    (v as i128).rem_euclid(p as i128) as u64
}

pub fn from_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.try_into().expect("residue fits in u64")
}

/// Reduction of a rational; `None` when p divides the denominator.
pub fn from_q(v: &Q, p: u64) -> Option<u64> {
    let d = from_bigint(v.denom(), p);
    let n = from_bigint(v.numer(), p);
    inv(d, p).map(|di| mul(n, di, p))
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Smallest primes above `lower` with `p ≡ 1 (mod k)`.
pub fn primes_congruent_one(lower: u64, k: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = lower + 1;
    while out.len() < count {
        if c % k.max(1) == 1 % k.max(1) && is_prime(c) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Tonelli-Shanks square root.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow(z, q, p);
    let mut t = pow(a, q, p);
    let mut r = pow(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul(tt, tt, p);
            i += 1;
        }
        let b = pow(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mul(b, b, p);
        t = mul(t, c, p);
        r = mul(r, b, p);
    }
    Some(r)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The smallest residue of exact multiplicative order `k`, if `k | p − 1`.
pub fn element_of_order(k: u64, p: u64) -> Option<u64> {
    if k == 0 || (p - 1) % k != 0 {
        return None;
    }
    if k == 1 {
        return Some(1);
    }
    let pf = prime_factors(k);
    (2..p).find(|&g| pow(g, k, p) == 1 && pf.iter().all(|&f| pow(g, k / f, p) != 1))
}

/// Determinant of a square matrix of residues.
pub fn det(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut d = 1 % p;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            d = neg(d, p);
        }
        d = mul(d, a[col][col], p);
        let iv = inv(a[col][col], p).unwrap();
        for r in (col + 1)..n {
            if a[r][col] == 0 {
                continue;
            }
            let f = mul(a[r][col], iv, p);
            for c in col..n {
                a[r][c] = sub(a[r][c], mul(f, a[col][c], p), p);
            }
        }
    }
    d
}

/// Dense univariate polynomials over F_p, coefficients from low to high
/// degree, always trimmed of leading zeros.
pub mod poly {
    use super::*;

    pub type P = Vec<u64>;

    pub fn trim(mut a: P) -> P {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn deg(a: &[u64]) -> i64 {
        a.len() as i64 - 1
    }

    pub fn add_p(a: &[u64], b: &[u64], p: u64) -> P {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
                .collect(),
        )
    }

    pub fn sub_p(a: &[u64], b: &[u64], p: u64) -> P {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
                .collect(),
        )
    }

    pub fn mul_p(a: &[u64], b: &[u64], p: u64) -> P {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = add(out[i + j], mul(x, y, p), p);
            }
        }
        trim(out)
    }

    pub fn scale(a: &[u64], c: u64, p: u64) -> P {
        trim(a.iter().map(|&x| mul(x, c, p)).collect())
    }

    pub fn monic(a: &[u64], p: u64) -> P {
        match a.last() {
            None => vec![],
            Some(&lc) => scale(a, inv(lc, p).unwrap(), p),
        }
    }

    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (P, P) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (vec![], trim(r));
        }
        let lc_inv = inv(*b.last().unwrap(), p).unwrap();
        let mut q = vec![0u64; r.len() - b.len() + 1];
        for i in (0..q.len()).rev() {
            let c = mul(r[i + b.len() - 1], lc_inv, p);
            q[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = sub(r[i + j], mul(c, bj, p), p);
            }
        }
        r.truncate(b.len() - 1);
        (trim(q), trim(r))
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> P {
        divrem(a, b, p).1
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> P {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        monic(&a, p)
    }

    pub fn deriv(a: &[u64], p: u64) -> P {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
    }

    /// `base^e mod f`.
    pub fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> P {
        let mut acc = rem(&[1], f, p);
        let mut b = rem(base, f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul_p(&acc, &b, p), f, p);
            }
            b = rem(&mul_p(&b, &b, p), f, p);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in F_p, sorted. The zero polynomial has no defined root
    /// set and yields the empty list; callers check for it.
    pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
        let f = monic(&trim(f.to_vec()), p);
        if deg(&f) < 1 {
            return vec![];
        }
        // product of the distinct linear factors: gcd(f, x^p - x)
        let xp = powmod(&[0, 1], p, &f, p);
        let g = gcd(&f, &sub_p(&xp, &[0, 1], p), p);
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        split(g, p, &mut rng, &mut out);
        out.sort_unstable();
        out
    }

    fn split(g: P, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
        match deg(&g) {
            d if d < 1 => {}
            1 => out.push(neg(g[0], p)),
            _ => loop {
                let a = rng.random_range(0..p);
                let h = powmod(&[a, 1], (p - 1) / 2, &g, p);
                let h = gcd(&g, &sub_p(&h, &[1], p), p);
                let dh = deg(&h);
                if dh >= 1 && dh < deg(&g) {
                    let other = divrem(&g, &h, p).0;
                    split(h, p, rng, out);
                    split(other, p, rng, out);
                    break;
                }
            },
        }
    }

    /// Multiplicity of the root `r` in the nonzero polynomial `f`.
    pub fn root_multiplicity(f: &[u64], r: u64, p: u64) -> usize {
        let lin = vec![neg(r, p), 1];
        let mut f = trim(f.to_vec());
        let mut m = 0;
        while !f.is_empty() {
            let (q, rr) = divrem(&f, &lin, p);
            if !rr.is_empty() {
                break;
            }
            f = q;
            m += 1;
        }
        m
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> P {
        let n = xs.len();
        let mut out = vec![0u64; n];
        for i in 0..n {
            let mut basis = vec![1u64];
            let mut denom = 1u64;
            for j in 0..n {
                if i == j {
                    continue;
                }
                basis = mul_p(&basis, &[neg(xs[j], p), 1], p);
                denom = mul(denom, sub(xs[i], xs[j], p), p);
            }
            let c = mul(ys[i], inv(denom, p).expect("distinct nodes"), p);
            for (k, &b) in basis.iter().enumerate() {
                out[k] = add(out[k], mul(b, c, p), p);
            }
        }
        trim(out)
    }
}

/// Symmetric residue in (−m/2, m/2].
pub fn symmetric(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Rational reconstruction: a fraction n/d with |n|, d ≤ sqrt(m/2) and
/// n ≡ v·d (mod m), if one exists.
pub fn rational_reconstruction(v: &BigInt, m: &BigInt) -> Option<Q> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), v.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Q::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_orders() {
        assert!(is_prime(1_000_003));
        assert!(!is_prime(1_000_001));
        assert_eq!(next_prime(10_000), 10_007);
        assert_eq!(primes_congruent_one(12, 6, 2), vec![13, 19]);
        let z = element_of_order(6, 13).unwrap();
        assert_eq!(pow(z, 6, 13), 1);
        assert_ne!(pow(z, 2, 13), 1);
        assert_ne!(pow(z, 3, 13), 1);
        assert_eq!(element_of_order(5, 13), None);
    }

    #[test]
    fn tonelli_shanks() {
        let p = 1_000_033u64; // ≡ 1 mod 16
        for a in 1..200u64 {
            if let Some(r) = sqrt_mod(a, p) {
                assert_eq!(mul(r, r, p), a);
            }
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        let p = 10_007;
        let mut f = vec![1u64];
        for r in [3u64, 5, 5, 9000] {
            f = poly::mul_p(&f, &[neg(r, p), 1], p);
        }
        assert_eq!(poly::roots(&f, p), vec![3, 5, 9000]);
        assert_eq!(poly::root_multiplicity(&f, 5, p), 2);
        // x^2 + 1 has no roots when p ≡ 3 mod 4
        assert!(poly::roots(&[1, 0, 1], 10_007).is_empty());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = 101;
        let f = vec![4u64, 0, 7, 1];
        let xs: Vec<u64> = (1..=4).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| poly::eval(&f, x, p)).collect();
        assert_eq!(poly::interpolate(&xs, &ys, p), f);
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_000_007u64);
        let v = Q::new((-3).into(), 7.into());
        let r = from_q(&v, 1_000_000_007).unwrap();
        assert_eq!(rational_reconstruction(&BigInt::from(r), &m), Some(v));
    }
}
