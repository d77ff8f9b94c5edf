//! Brute-force references for tensor rank over small prime fields.

use crate::exactalg::linalg::rank_of_vectors;
use crate::modp;
use crate::tensors::Tensor222n;
use crate::Fp;

fn encode<const P: u64>(v: &[u64]) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * P as usize + x as usize)
}

/// Every tensor of `F_P`-rank at most two in `F_P^2 ⊗ F_P^2 ⊗ F_P^{m+1}`,
/// found by adding all pairs of rank-one tensors.
pub struct RankTwoTable<const P: u64> {
    m: usize,
    bits: Vec<u64>,
}

fn nonzero_vectors(p: u64, len: usize) -> Vec<Vec<u64>> {
    let total = p.pow(len as u32);
    (1..total)
        .map(|mut c| {
            (0..len)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect()
        })
        .collect()
}

impl<const P: u64> RankTwoTable<P> {
    pub fn new(m: usize) -> Self {
        let len = 4 * (m + 1);
        let size = (P as usize).pow(len as u32);
        let mut bits = vec![0u64; size.div_ceil(64)];
        // projective representatives for the first two factors
        let proj: Vec<Vec<u64>> = nonzero_vectors(P, 2)
            .into_iter()
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .collect();
        let cs = nonzero_vectors(P, m + 1);
        let mut ones: Vec<Vec<u64>> = Vec::new();
        for a in &proj {
            for b in &proj {
                for c in &cs {
                    let mut t = vec![0u64; len];
                    for i in 0..2 {
                        for j in 0..2 {
                            for (k, &ck) in c.iter().enumerate() {
                                t[(2 * i + j) * (m + 1) + k] = modp::mul(modp::mul(a[i], b[j], P), ck, P);
                            }
                        }
                    }
                    ones.push(t);
                }
            }
        }
        let mut set = |code: usize| bits[code / 64] |= 1 << (code % 64);
        set(0);
        let mut s = vec![0u64; len];
        for (i, x) in ones.iter().enumerate() {
            set(encode::<P>(x));
            for y in &ones[i..] {
                for k in 0..len {
                    s[k] = modp::add(x[k], y[k], P);
                }
                set(encode::<P>(&s));
            }
        }
        RankTwoTable { m, bits }
    }

    pub fn contains(&self, t: &Tensor222n<Fp<P>>) -> bool {
        assert_eq!(t.m(), self.m, "table built for another shape");
        let v: Vec<u64> = t.to_vector().iter().map(|x| x.value()).collect();
        let code = encode::<P>(&v);
        self.bits[code / 64] >> (code % 64) & 1 == 1
    }
}

/// `a + b r` with `r^2 = nr` for a nonresidue `nr`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Quad {
    a: u64,
    b: u64,
}

fn qmul(x: Quad, y: Quad, nr: u64, p: u64) -> Quad {
    let bb = modp::mul(modp::mul(x.b, y.b, p), nr, p);
    Quad {
        a: modp::add(modp::mul(x.a, y.a, p), bb, p),
        b: modp::add(modp::mul(x.a, y.b, p), modp::mul(x.b, y.a, p), p),
    }
}

fn qsub(x: Quad, y: Quad, p: u64) -> Quad {
    Quad {
        a: modp::sub(x.a, y.a, p),
        b: modp::sub(x.b, y.b, p),
    }
}

fn qadd(x: Quad, y: Quad, p: u64) -> Quad {
    Quad {
        a: modp::add(x.a, y.a, p),
        b: modp::add(x.b, y.b, p),
    }
}

/// Over `F_{P^2}`, scans every member of the slice pencil and reports
/// whether at least two projectively distinct members are singular, i.e.
/// the pencil is spanned by rank-one matrices. Needs flattening rank two.
pub fn pencil_splits_over_quadratic_extension<const P: u64>(t: &Tensor222n<Fp<P>>) -> bool {
    let p = P;
    let nr = (2..p).find(|&x| modp::sqrt_mod(x, p).is_none()).expect("odd prime has a nonresidue");
    let flat = |s: &[[Fp<P>; 2]; 2]| vec![s[0][0], s[0][1], s[1][0], s[1][1]];
    let slices = t.slices();
    let Some(ai) = slices.iter().position(|s| flat(s).iter().any(|x| x.value() != 0)) else {
        return false;
    };
    let Some(bi) = slices.iter().position(|s| rank_of_vectors(&[flat(&slices[ai]), flat(s)]) == 2) else {
        return false;
    };
    let lift = |x: Fp<P>| Quad { a: x.value(), b: 0 };
    let (a, b) = (&slices[ai], &slices[bi]);
    let det_at = |x: Quad, y: Quad| {
        let e = |i: usize, j: usize| qadd(qmul(x, lift(a[i][j]), nr, p), qmul(y, lift(b[i][j]), nr, p), p);
        qsub(qmul(e(0, 0), e(1, 1), nr, p), qmul(e(0, 1), e(1, 0), nr, p), p)
    };
    let zero = Quad { a: 0, b: 0 };
    let one = Quad { a: 1, b: 0 };
    let mut singular = usize::from(det_at(zero, one) == zero);
    for ya in 0..p {
        for yb in 0..p {
            if det_at(one, Quad { a: ya, b: yb }) == zero {
                singular += 1;
            }
        }
    }
    singular >= 2
}
