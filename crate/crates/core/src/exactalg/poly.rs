//! Sparse multivariate polynomials whose variables come in blocks, one block
//! per projective factor (or a single block for a weighted space).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use super::scalar::Field;
use super::{q_from_str, q_to_string};
use crate::{Error, Result, Q};

/// Exponents of a monomial, one vector per variable block.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector {
    blocks: Vec<Vec<u32>>,
}

impl ExponentVector {
    pub fn new(blocks: Vec<Vec<u32>>) -> Self {
        ExponentVector { blocks }
    }

    pub fn one(shape: &[usize]) -> Self {
        ExponentVector {
            blocks: shape.iter().map(|&n| vec![0; n]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn block_degrees(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.iter().sum()).collect()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.blocks
            .iter()
            .flatten()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    fn mul(&self, other: &Self) -> Self {
        ExponentVector {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }
}

impl Ord for ExponentVector {
    /// Descending graded lex within each block, blocks compared in
    /// declaration order: the "largest" monomial sorts first.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            let o = db.cmp(&da).then_with(|| b.cmp(a));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.blocks.len().cmp(&other.blocks.len())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

const BLOCK_LETTERS: &[char] = &['x', 'y', 'z', 'w', 'u', 'v'];

fn var_name(shape_len: usize, block: usize, idx: usize) -> String {
    if shape_len == 1 {
        format!("x{idx}")
    } else if block < BLOCK_LETTERS.len() {
        format!("{}{idx}", BLOCK_LETTERS[block])
    } else {
        format!("x{block}_{idx}")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            for (i, &e) in block.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(var_name(self.blocks.len(), b, i)),
                    _ => parts.push(format!("{}^{e}", var_name(self.blocks.len(), b, i))),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A polynomial with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F> {
    shape: Vec<usize>,
    terms: BTreeMap<ExponentVector, F>,
}

impl<F: Field> Polynomial<F> {
    /// The zero polynomial on blocks of the given sizes (number of variables
    /// per block, i.e. `n_i + 1` for a factor `P^{n_i}`).
    pub fn zero(shape: Vec<usize>) -> Self {
        Polynomial {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(shape: Vec<usize>, c: F) -> Self {
        let mut p = Self::zero(shape);
        let e = ExponentVector::one(&p.shape);
        p.add_term(e, c);
        p
    }

    pub fn monomial(shape: Vec<usize>, c: F, exps: Vec<Vec<u32>>) -> Result<Self> {
        let e = ExponentVector::new(exps);
        if e.shape() != shape {
            return Err(Error::ShapeMismatch(format!(
                "exponent blocks {:?} vs polynomial shape {:?}",
                e.shape(),
                shape
            )));
        }
        let mut p = Self::zero(shape);
        p.add_term(e, c);
        Ok(p)
    }

    /// The variable with index `idx` in block `block`.
    pub fn var(shape: Vec<usize>, block: usize, idx: usize) -> Self {
        let mut e = ExponentVector::one(&shape);
        e.blocks[block][idx] = 1;
        let mut p = Self::zero(shape);
        p.add_term(e, F::one());
        p
    }

    pub fn from_terms(
        shape: Vec<usize>,
        terms: impl IntoIterator<Item = (ExponentVector, F)>,
    ) -> Result<Self> {
        let mut p = Self::zero(shape);
        for (e, c) in terms {
            if e.shape() != p.shape {
                return Err(Error::ShapeMismatch(format!(
                    "term {e} has block shape {:?}, expected {:?}",
                    e.shape(),
                    p.shape
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.shape.clone());
        }
        Polynomial {
            shape: self.shape.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::constant(self.shape.clone(), F::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        let mut out = Polynomial::zero(self.shape.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    fn check_point(&self, point: &[Vec<F>]) -> Result<()> {
        let shape: Vec<usize> = point.iter().map(Vec::len).collect();
        if shape != self.shape {
            return Err(Error::ShapeMismatch(format!(
                "point shape {shape:?} vs polynomial shape {:?}",
                self.shape
            )));
        }
        Ok(())
    }

    /// Evaluates at a point given as one coordinate vector per block.
    pub fn eval(&self, point: &[Vec<F>]) -> Result<F> {
        self.check_point(point)?;
        let tables = power_tables(std::slice::from_ref(self), point);
        Ok(eval_with(self, &tables))
    }

    /// Common per-block degree of all terms.
    pub fn multidegree(&self) -> Result<Vec<u32>> {
        self.common_degree(|e| e.block_degrees(), |d| format!("{d:?}"))
    }

    /// Common weighted degree of all terms (single weighted block).
    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        if self.shape.len() != 1 || self.shape[0] != weights.len() {
            return Err(Error::ShapeMismatch(format!(
                "weights of length {} vs polynomial shape {:?}",
                weights.len(),
                self.shape
            )));
        }
        self.common_degree(|e| e.weighted_degree(weights), |d| d.to_string())
    }

    fn common_degree<D: PartialEq>(
        &self,
        deg: impl Fn(&ExponentVector) -> D,
        show: impl Fn(&D) -> String,
    ) -> Result<D> {
        let mut it = self.terms.keys();
        let first = it
            .next()
            .ok_or_else(|| Error::Invalid("degree of the zero polynomial".into()))?;
        let d0 = deg(first);
        for e in it {
            let d = deg(e);
            if d != d0 {
                return Err(Error::NotHomogeneous {
                    first: first.to_string(),
                    first_degree: show(&d0),
                    second: e.to_string(),
                    second_degree: show(&d),
                });
            }
        }
        Ok(d0)
    }
}

/// Powers of every coordinate up to the largest exponent any of `polys` uses.
pub(crate) fn power_tables<F: Field>(polys: &[Polynomial<F>], point: &[Vec<F>]) -> Vec<Vec<Vec<F>>> {
    let mut maxe: Vec<Vec<u32>> = point.iter().map(|b| vec![0; b.len()]).collect();
    for p in polys {
        for e in p.terms.keys() {
            for (b, block) in e.blocks.iter().enumerate() {
                for (i, &x) in block.iter().enumerate() {
                    maxe[b][i] = maxe[b][i].max(x);
                }
            }
        }
    }
    point
        .iter()
        .zip(&maxe)
        .map(|(block, me)| {
            block
                .iter()
                .zip(me)
                .map(|(x, &m)| {
                    let mut t = Vec::with_capacity(m as usize + 1);
                    t.push(F::one());
                    for k in 0..m as usize {
                        t.push(t[k].clone() * x.clone());
                    }
                    t
                })
                .collect()
        })
        .collect()
}

pub(crate) fn eval_with<F: Field>(p: &Polynomial<F>, tables: &[Vec<Vec<F>>]) -> F {
    let mut acc = F::zero();
    for (e, c) in &p.terms {
        let mut t = c.clone();
        for (b, block) in e.blocks.iter().enumerate() {
            for (i, &x) in block.iter().enumerate() {
                if x > 0 {
                    t = t * tables[b][i][x as usize].clone();
                }
            }
        }
        acc = acc + t;
    }
    acc
}

/// Evaluates several polynomials at one point, sharing the power tables.
pub fn eval_many<F: Field>(polys: &[Polynomial<F>], point: &[Vec<F>]) -> Result<Vec<F>> {
    if let Some(p) = polys.first() {
        p.check_point(point)?;
    }
    let tables = power_tables(polys, point);
    polys
        .iter()
        .map(|p| {
            p.check_point(point)?;
            Ok(eval_with(p, &tables))
        })
        .collect()
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        assert_eq!(self.shape, rhs.shape, "adding polynomials of different shapes");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        assert_eq!(self.shape, rhs.shape, "subtracting polynomials of different shapes");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        assert_eq!(self.shape, rhs.shape, "multiplying polynomials of different shapes");
        let mut out = Polynomial::zero(self.shape.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Self) -> Polynomial<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono = e.to_string();
            if c.is_one() && mono != "1" {
                write!(f, "{mono}")?;
            } else if mono == "1" {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Polynomial<Q> {
    /// `{"blocks":[..], "terms":[{"c":"num/den","e":[[..],..]}, ..]}` with
    /// terms in the canonical order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"c": q_to_string(c), "e": e.blocks}))
            .collect();
        json!({"blocks": self.shape, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("polynomial: {m}"));
        let shape: Vec<usize> = serde_json::from_value(
            v.get("blocks").cloned().ok_or_else(|| bad("missing blocks"))?,
        )?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let c = match t.get("c") {
                Some(Value::String(s)) => q_from_str(s)?,
                Some(Value::Number(n)) => q_from_str(&n.to_string())?,
                _ => return Err(bad("term without coefficient")),
            };
            let e: Vec<Vec<u32>> =
                serde_json::from_value(t.get("e").cloned().ok_or_else(|| bad("term without exponents"))?)?;
            out.push((ExponentVector::new(e), c));
        }
        Self::from_terms(shape, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, QPoly};

    fn x(shape: &[usize], b: usize, i: usize) -> QPoly {
        QPoly::var(shape.to_vec(), b, i)
    }

    #[test]
    fn evaluation_examples() {
        let s = [2];
        let p = &x(&s, 0, 0) * &x(&s, 0, 1);
        assert_eq!(p.eval(&[vec![qi(1), qi(1)]]).unwrap(), qi(1));

        let w = [4];
        let p = x(&w, 0, 0).pow(30);
        let v = p.eval(&[vec![qi(2), qi(0), qi(0), qi(0)]]).unwrap();
        assert_eq!(v, qi(1 << 30));

        let p = &x(&w, 0, 1).pow(5) + &(&x(&w, 0, 0).pow(20) * &x(&w, 0, 2));
        assert_eq!(p.eval(&[vec![qi(1), qi(1), qi(1), qi(0)]]).unwrap(), qi(2));
        assert!(p.eval(&[vec![qi(1), qi(1)]]).is_err());
    }

    #[test]
    fn degrees() {
        let s = [2, 2];
        let p = &x(&s, 0, 0) * &x(&s, 1, 0).pow(2);
        assert_eq!(p.multidegree().unwrap(), vec![1, 2]);

        let w = [4];
        let weights = [1, 6, 10, 15];
        let p = &(&x(&w, 0, 0).pow(20) * &x(&w, 0, 2)) + &x(&w, 0, 1).pow(5);
        assert_eq!(p.weighted_degree(&weights).unwrap(), 30);

        let p = &(&x(&s, 0, 0) * &x(&s, 1, 0)) + &x(&s, 0, 0).pow(2);
        assert!(matches!(p.multidegree(), Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn term_order_and_json_roundtrip() {
        let s = [2, 2];
        let p = &(&x(&s, 0, 1) * &x(&s, 1, 0)) + &(&x(&s, 0, 0) * &x(&s, 1, 1)).scale(&crate::qr(-3, 2));
        let first = p.terms().next().unwrap().0.clone();
        assert_eq!(first.blocks(), &[vec![1, 0], vec![0, 1]]);
        let j = p.to_json();
        assert_eq!(j["terms"][0]["c"], "-3/2");
        assert_eq!(QPoly::from_json(&j).unwrap(), p);
        assert_eq!(p.to_string(), "-3/2*x0*y1 + x1*y0");
    }

    #[test]
    fn cancellation_removes_terms() {
        let s = [2];
        let a = x(&s, 0, 0);
        assert!((&a - &a).is_zero());
    }
}
