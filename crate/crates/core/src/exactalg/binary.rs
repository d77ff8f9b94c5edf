//! Binary forms `Σ c_i s0^{d-i} s1^i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::binomial;
use super::linalg::Matrix;
use super::scalar::Field;
use super::univariate::UniPoly;
use crate::{Error, Result, Q};

/// A binary form of degree `coeffs.len() - 1`; the zero form keeps its
/// formal degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm<F> {
    c: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(c: Vec<F>) -> Self {
        assert!(!c.is_empty(), "binary form needs at least one coefficient");
        BinaryForm { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| F::from_i64(v)).collect())
    }

    pub fn zero(d: usize) -> Self {
        Self::new(vec![F::zero(); d + 1])
    }

    /// `a s0 + b s1`.
    pub fn linear(a: F, b: F) -> Self {
        Self::new(vec![a, b])
    }

    /// The linear form `b s0 - a s1`, vanishing at `[a:b]`.
    pub fn vanishing_at(a: &F, b: &F) -> Self {
        Self::new(vec![b.clone(), -a.clone()])
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn eval(&self, s0: &F, s1: &F) -> F {
        let d = self.degree();
        // Horner in both variables: Σ c_i s0^{d-i} s1^i
        let mut acc = F::zero();
        let mut p0 = Vec::with_capacity(d + 1);
        p0.push(F::one());
        for k in 0..d {
            p0.push(p0[k].clone() * s0.clone());
        }
        let mut p1 = F::one();
        for i in 0..=d {
            acc = acc + self.c[i].clone() * p0[d - i].clone() * p1.clone();
            p1 = p1 * s1.clone();
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "adding forms of different degree");
        Self::new(self.c.iter().zip(&o.c).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.degree(), o.degree(), "subtracting forms of different degree");
        Self::new(self.c.iter().zip(&o.c).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.c.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
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

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::new(vec![F::one()]), |acc, _| acc.mul(self))
    }

    pub fn partial_s0(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(0);
        }
        Self::new(
            (0..d)
                .map(|i| self.c[i].clone() * F::from_i64((d - i) as i64))
                .collect(),
        )
    }

    pub fn partial_s1(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=d)
                .map(|i| self.c[i].clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    /// Dehomogenization at `s0 = 1`: a polynomial in `y = s1/s0`.
    pub fn dehomogenize(&self) -> UniPoly<F> {
        UniPoly::new(self.c.clone())
    }

    /// Homogenizes a polynomial in `y = s1/s0` to formal degree `d`.
    pub fn homogenize(u: &UniPoly<F>, d: usize) -> Self {
        assert!(u.degree().is_none_or(|k| k <= d), "degree exceeds formal degree");
        Self::new((0..=d).map(|i| u.coeff(i)).collect())
    }

    /// Multiplicity of the root `[0:1]`, i.e. the power of `s0` dividing the
    /// form.
    pub fn multiplicity_at_infinity(&self) -> usize {
        self.c.iter().rev().take_while(|x| x.is_zero()).count()
    }

    /// Greatest common divisor, normalized so that its dehomogenization is
    /// monic. `gcd(0, g) = g` (normalized).
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalized();
        }
        if o.is_zero() {
            return self.normalized();
        }
        let k = self.multiplicity_at_infinity().min(o.multiplicity_at_infinity());
        let u = self.dehomogenize().gcd(&o.dehomogenize());
        let du = u.degree().unwrap_or(0);
        Self::homogenize(&u, du + k)
    }

    fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let u = self.dehomogenize();
        self.scale(&u.lc().inv().unwrap())
    }

    /// Exact quotient, if `o` divides `self`.
    pub fn exact_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() || o.degree() > self.degree() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.degree() - o.degree()));
        }
        if self.multiplicity_at_infinity() < o.multiplicity_at_infinity() {
            return None;
        }
        let (q, r) = self.dehomogenize().divrem(&o.dehomogenize());
        if !r.is_zero() {
            return None;
        }
        Some(Self::homogenize(&q, self.degree() - o.degree()))
    }

    /// No repeated factor over the algebraic closure. Requires
    /// characteristic 0 or larger than the degree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.multiplicity_at_infinity() > 1 {
            return false;
        }
        let u = self.dehomogenize();
        u.degree().unwrap_or(0) == 0 || u.gcd(&u.derivative()).degree() == Some(0)
    }

    /// Determinant of the Sylvester matrix at the formal degrees. With this
    /// convention `res(s0, s1) = 1`.
    pub fn resultant(&self, o: &Self) -> F {
        F::det_of(sylvester_rows(&self.c, &o.c))
    }

    /// `c1² − 4 c0 c2` for a quadratic form.
    pub fn quadratic_discriminant(&self) -> F {
        assert_eq!(self.degree(), 2, "quadratic discriminant of a non-quadratic form");
        self.c[1].clone() * self.c[1].clone() - F::from_i64(4) * self.c[0].clone() * self.c[2].clone()
    }

    /// The catalecticant (Hankel) matrix of size (d−r+1)×(r+1) whose kernel
    /// consists of the degree-r forms apolar to this one.
    pub fn catalecticant(&self, r: usize) -> Matrix<F> {
        let d = self.degree();
        assert!(r <= d);
        let a: Vec<F> = (0..=d)
            .map(|i| self.c[i].clone() / F::from_i64(binomial(d as u64, i as u64) as i64))
            .collect();
        let rows = (0..=d - r)
            .map(|j| (0..=r).map(|l| a[j + l].clone()).collect())
            .collect();
        Matrix::from_rows(rows, r + 1)
    }

    /// Waring rank over the algebraic closure, degree at most 8.
    ///
    /// The apolar ideal of a binary form of degree d is generated by two
    /// forms of degrees r and d+2−r; the rank is r when the lower generator
    /// is squarefree and d+2−r otherwise.
    pub fn waring_rank(&self) -> Result<usize> {
        let d = self.degree();
        if d > 8 {
            return Err(Error::Unsupported(format!("binary form rank for degree {d} > 8")));
        }
        if self.is_zero() {
            return Err(Error::Invalid("rank of the zero form".into()));
        }
        let ch = F::characteristic();
        if ch != 0 && ch as usize <= d {
            return Err(Error::Unsupported(format!(
                "rank in characteristic {ch} for degree {d}"
            )));
        }
        if d == 0 {
            return Ok(1);
        }
        for r in 1..=d {
            let ker = self.catalecticant(r).nullspace();
            match ker.len() {
                0 => continue,
                1 => {
                    let g = BinaryForm::new(ker[0].clone());
                    return Ok(if g.is_squarefree() { r } else { d + 2 - r });
                }
                _ => return Ok(r),
            }
        }
        unreachable!("the catalecticant at r = d always has a kernel")
    }
}

pub(crate) fn sylvester_rows<F: Field>(f: &[F], g: &[F]) -> Vec<Vec<F>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![F::zero(); size];
        for (j, c) in f.iter().enumerate() {
            r[i + j] = c.clone();
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![F::zero(); size];
        for (j, c) in g.iter().enumerate() {
            r[i + j] = c.clone();
        }
        rows.push(r);
    }
    rows
}

impl<F: Field> fmt::Display for BinaryForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut parts = Vec::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut m = Vec::new();
            match d - i {
                0 => {}
                1 => m.push("s0".to_string()),
                e => m.push(format!("s0^{e}")),
            }
            match i {
                0 => {}
                1 => m.push("s1".to_string()),
                e => m.push(format!("s1^{e}")),
            }
            parts.push(if m.is_empty() {
                c.to_string()
            } else if c.is_one() {
                m.join("*")
            } else {
                format!("{c}*{}", m.join("*"))
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A projective root `[a:b]` with coprime integer coordinates, the last
/// nonzero one positive.
pub type BinaryRoot = [Q; 2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// Sorted by multiplicity (descending), then by the affine value b/a
    /// (ascending), with `[0:1]` last among equal multiplicities.
    pub roots: Vec<(BinaryRoot, usize)>,
    /// The remaining factor with no rational root; the product of
    /// `vanishing_at(root)^mult` over all roots times this equals the input.
    pub residual: BinaryForm<Q>,
}

pub(crate) fn normalize_root(y: &Q) -> BinaryRoot {
    // [1 : y] scaled to coprime integers
    let (n, d) = (y.numer().clone(), y.denom().clone());
    if n.is_zero() {
        return [Q::one(), Q::zero()];
    }
    let s = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    [Q::from_integer(&d * &s), Q::from_integer(n.abs())]
}

/// Normalizes an arbitrary nonzero rational pair representing a point of P¹.
pub fn normalize_point(a: &Q, b: &Q) -> BinaryRoot {
    if a.is_zero() {
        return [Q::zero(), Q::one()];
    }
    normalize_root(&(b / a))
}

impl BinaryForm<Q> {
    /// All rational roots with multiplicities, plus the residual factor.
    pub fn rational_roots(&self) -> RationalRoots {
        assert!(!self.is_zero(), "roots of the zero form");
        let k_inf = self.multiplicity_at_infinity();
        let u = self.dehomogenize();
        let mut roots: Vec<(BinaryRoot, usize, Option<Q>)> = u
            .rational_roots()
            .into_iter()
            .map(|(y, m)| (normalize_root(&y), m, Some(y)))
            .collect();
        if k_inf > 0 {
            roots.push(([Q::zero(), Q::one()], k_inf, None));
        }
        roots.sort_by(|a, b| {
            b.1.cmp(&a.1).then_with(|| match (&a.2, &b.2) {
                (Some(x), Some(y)) => x.cmp(y),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => std::cmp::Ordering::Equal,
            })
        });
        let mut residual = self.clone();
        for (r, m, _) in &roots {
            let lin = BinaryForm::vanishing_at(&r[0], &r[1]);
            for _ in 0..*m {
                residual = residual.exact_div(&lin).expect("root factor divides");
            }
        }
        RationalRoots {
            roots: roots.into_iter().map(|(r, m, _)| (r, m)).collect(),
            residual,
        }
    }

    /// Clears denominators and content (sign kept).
    pub fn primitive(&self) -> Self {
        let l = self.c.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> = self.c.iter().map(|a| a.numer() * (&l / a.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        if g.is_zero() {
            return self.clone();
        }
        Self::new(ints.into_iter().map(|a| Q::from_integer(a / &g)).collect())
    }
}

#[cfg(test)]
mod tests {
    use crate::{qi, QBinaryForm};

    fn bf(c: &[i64]) -> QBinaryForm {
        QBinaryForm::from_i64(c)
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(bf(&[1, 0]).resultant(&bf(&[0, 1])), qi(1));
        assert_eq!(bf(&[1, 0, -1]).resultant(&bf(&[1, -1])), qi(0));
        assert_eq!(bf(&[1, 0, 1]).resultant(&bf(&[1, 0, -1])), qi(4));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(bf(&[1, 0, 0, 0]).waring_rank().unwrap(), 1);
        assert_eq!(bf(&[1, 0, 0, 1]).waring_rank().unwrap(), 2);
        assert_eq!(bf(&[0, 0, 1, 0]).waring_rank().unwrap(), 3);
        assert!(bf(&[1; 10]).waring_rank().is_err());
        // s0^2 s1^2 has rank 3; a generic quartic has rank 3
        assert_eq!(bf(&[0, 0, 1, 0, 0]).waring_rank().unwrap(), 3);
        assert_eq!(bf(&[1, 0, 0, 0, 1]).waring_rank().unwrap(), 2);
    }

    #[test]
    fn roots_examples() {
        let r = bf(&[0, 1, 0, 0]).rational_roots();
        assert_eq!(
            r.roots,
            vec![([qi(0), qi(1)], 2), ([qi(1), qi(0)], 1)]
        );
        assert_eq!(r.residual.degree(), 0);

        let r = bf(&[1, 0, 1]).rational_roots();
        assert!(r.roots.is_empty());
        assert_eq!(r.residual.degree(), 2);

        let f = bf(&[1, -2]).pow(3).mul(&bf(&[1, 1]).pow(2));
        let r = f.rational_roots();
        assert_eq!(r.roots, vec![([qi(2), qi(1)], 3), ([qi(-1), qi(1)], 2)]);
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = bf(&[1, -1]).mul(&bf(&[1, 0])); // (s0 - s1) s0
        let g = bf(&[1, 0]).pow(2);
        assert_eq!(f.gcd(&g), bf(&[1, 0]));
        assert!(f.is_squarefree());
        assert!(!g.is_squarefree());
        assert!(!bf(&[1, 0, 0]).is_squarefree());
        assert!(bf(&[0, 1]).is_squarefree());
    }
}
