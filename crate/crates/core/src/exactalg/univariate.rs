//! Dense univariate polynomials, coefficients stored from low to high degree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Field;
use crate::{modp, Q};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<F> {
    c: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: vec![] }
    }

    pub fn one() -> Self {
        UniPoly { c: vec![F::one()] }
    }

    pub fn constant(v: F) -> Self {
        Self::new(vec![v])
    }

    /// `x - r`.
    pub fn linear_root(r: F) -> Self {
        Self::new(vec![-r, F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.c.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, x: &F) -> F {
        self.c
            .iter()
            .rev()
            .fold(F::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.c.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().inv().unwrap())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut r = self.c.clone();
        let inv = d.lc().inv().unwrap();
        let mut q = vec![F::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let f = r[i + dd].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[i + j] = r[i + j].clone() - f.clone() * b.clone();
            }
            q[i] = f;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    /// f / gcd(f, f'), monic. Valid in characteristic 0 or above the degree.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Multiplicity of `r` as a root of a nonzero polynomial.
    pub fn root_multiplicity(&self, r: &F) -> usize {
        let lin = Self::linear_root(r.clone());
        let mut f = self.clone();
        let mut m = 0;
        while !f.is_zero() {
            let (q, rem) = f.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            f = q;
            m += 1;
        }
        m
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(xs: &[F], ys: &[F]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let mut out = Self::zero();
        for i in 0..xs.len() {
            let mut basis = Self::one();
            let mut denom = F::one();
            for j in 0..xs.len() {
                if i != j {
                    basis = basis.mul(&Self::linear_root(xs[j].clone()));
                    denom = denom * (xs[i].clone() - xs[j].clone());
                }
            }
            out = out.add(&basis.scale(&(ys[i].clone() / denom)));
        }
        out
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| match i {
                0 => format!("{a}"),
                1 => format!("{a}*x"),
                _ => format!("{a}*x^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Primitive integer polynomial proportional to a rational one.
pub fn primitive_integer(f: &UniPoly<Q>) -> Vec<BigInt> {
    let l = f
        .c
        .iter()
        .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let ints: Vec<BigInt> = f.c.iter().map(|a| a.numer() * (&l / a.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|a| a / &g).collect()
}

fn eval_int_mod(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, a| (acc * x + a).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

impl UniPoly<Q> {
    /// Distinct rational roots with their multiplicities, in increasing order.
    ///
    /// Roots of the squarefree part are found modulo a prime of good
    /// reduction, lifted p-adically until rational reconstruction is
    /// guaranteed to succeed for every genuine root, then checked exactly.
    pub fn rational_roots(&self) -> Vec<(Q, usize)> {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut out = Vec::new();
        let mut f = self.clone();
        let zero_mult = self.c.iter().take_while(|a| a.is_zero()).count();
        if zero_mult > 0 {
            out.push((Q::zero(), zero_mult));
            f = Self::new(self.c[zero_mult..].to_vec());
        }
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let g = f.squarefree_part();
        let gi = primitive_integer(&g);
        for r in integer_poly_rational_roots(&gi) {
            let m = f.root_multiplicity(&r);
            debug_assert!(m > 0);
            out.push((r, m));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

/// Rational roots of a squarefree integer polynomial with nonzero constant
/// term.
fn integer_poly_rational_roots(g: &[BigInt]) -> Vec<Q> {
    let deg = g.len() - 1;
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        return vec![Q::new(-g[0].clone(), g[1].clone())];
    }
    let lc = g[deg].abs();
    let c0 = g[0].abs();
    // any root a/b in lowest terms has |a| | c0 and b | lc
    let bound = lc.clone().max(c0);
    let target: BigInt = &bound * &bound * 2u32 + 1u32;

    let mut p = 1_000_000_000u64;
    let (p, roots) = loop {
        p = modp::next_prime(p);
        let gp: Vec<u64> = modp::poly::trim(g.iter().map(|a| modp::from_bigint(a, p)).collect());
        if gp.len() != g.len() {
            continue;
        }
        let d = modp::poly::deriv(&gp, p);
        if modp::poly::gcd(&gp, &d, p).len() != 1 {
            continue;
        }
        break (p, modp::poly::roots(&gp, p));
    };

    let dg: Vec<BigInt> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, a)| a * BigInt::from(i))
        .collect();
    let mut out = Vec::new();
    for r0 in roots {
        let mut m = BigInt::from(p);
        let mut r = BigInt::from(r0);
        while m < target {
            let m2 = &m * &m;
            let fr = eval_int_mod(g, &r, &m2);
            let dr = eval_int_mod(&dg, &r, &m2);
            let Some(di) = mod_inverse(&dr, &m2) else {
                break;
            };
            r = (r - fr * di).mod_floor(&m2);
            m = m2;
        }
        if let Some(cand) = modp::rational_reconstruction(&r, &m) {
            let poly = UniPoly::new(g.iter().map(|a| Q::from_integer(a.clone())).collect());
            if poly.eval(&cand).is_zero() {
                out.push(cand);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, qr, QUniPoly};

    fn from_roots(rs: &[(Q, u32)]) -> QUniPoly {
        rs.iter().fold(QUniPoly::one(), |acc, (r, m)| {
            acc.mul(&QUniPoly::linear_root(r.clone()).pow(*m))
        })
    }

    #[test]
    fn divrem_and_gcd() {
        let a = from_roots(&[(qi(1), 2), (qi(3), 1)]);
        let b = from_roots(&[(qi(1), 1), (qi(-2), 1)]);
        assert_eq!(a.gcd(&b), QUniPoly::linear_root(qi(1)));
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn rational_roots_found_exactly() {
        let f = from_roots(&[(qr(2, 3), 3), (qr(-7, 5), 1), (qi(0), 2)])
            .mul(&QUniPoly::new(vec![qi(1), qi(0), qi(1)]))
            .scale(&qr(11, 4));
        let roots = f.rational_roots();
        assert_eq!(roots, vec![(qr(-7, 5), 1), (qi(0), 2), (qr(2, 3), 3)]);
        assert!(QUniPoly::new(vec![qi(-2), qi(0), qi(1)]).rational_roots().is_empty());
    }

    #[test]
    fn large_root() {
        let big = Q::new(BigInt::from(123_456_789_012i64), BigInt::from(97_531));
        let f = from_roots(&[(big.clone(), 1), (qi(5), 1)]).mul(&QUniPoly::new(vec![qi(3), qi(1), qi(1)]));
        let roots: Vec<Q> = f.rational_roots().into_iter().map(|r| r.0).collect();
        assert_eq!(roots, vec![qi(5), big]);
    }

    #[test]
    fn interpolation() {
        let f = QUniPoly::new(vec![qi(1), qr(1, 2), qi(-3)]);
        let xs: Vec<Q> = (0..3).map(qi).collect();
        let ys: Vec<Q> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(QUniPoly::interpolate(&xs, &ys), f);
    }
}
