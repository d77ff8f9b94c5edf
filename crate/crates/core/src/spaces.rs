//! Source spaces and exact point equivalence.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::exactalg::linalg::rank_of_vectors;
use crate::exactalg::{q_from_str, q_to_string};
use crate::{rng, Error, Field, Result, Q};

/// A product of projective spaces `P^{n_1} × … × P^{n_r}` or a weighted
/// projective space `P(q_0, …, q_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpaceDescriptor {
    Product { dims: Vec<usize> },
    Weighted { weights: Vec<u64> },
}

impl SpaceDescriptor {
    pub fn product(dims: &[usize]) -> Self {
        SpaceDescriptor::Product { dims: dims.to_vec() }
    }

    pub fn weighted(weights: &[u64]) -> Self {
        SpaceDescriptor::Weighted {
            weights: weights.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            SpaceDescriptor::Product { dims } => {
                if dims.is_empty() || dims.contains(&0) {
                    return Err(Error::Invalid(format!("product dims must be positive: {dims:?}")));
                }
            }
            SpaceDescriptor::Weighted { weights } => {
                if weights.len() < 2 || weights.contains(&0) {
                    return Err(Error::Invalid(format!(
                        "weights must be positive, at least two: {weights:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Number of coordinates per block.
    pub fn shape(&self) -> Vec<usize> {
        match self {
            SpaceDescriptor::Product { dims } => dims.iter().map(|n| n + 1).collect(),
            SpaceDescriptor::Weighted { weights } => vec![weights.len()],
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            SpaceDescriptor::Product { dims } => dims.iter().sum(),
            SpaceDescriptor::Weighted { weights } => weights.len() - 1,
        }
    }

    pub fn num_coords(&self) -> usize {
        self.shape().iter().sum()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("descriptor serializes")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let s: SpaceDescriptor = serde_json::from_value(v.clone())?;
        s.validate()?;
        Ok(s)
    }
}

impl fmt::Display for SpaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceDescriptor::Product { dims } => {
                let parts: Vec<String> = dims.iter().map(|n| format!("P^{n}")).collect();
                write!(f, "{}", parts.join(" x "))
            }
            SpaceDescriptor::Weighted { weights } => {
                let parts: Vec<String> = weights.iter().map(u64::to_string).collect();
                write!(f, "P({})", parts.join(","))
            }
        }
    }
}

/// Coordinates of a point, one vector per block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint<F> {
    blocks: Vec<Vec<F>>,
}

impl<F: Field> ProjectivePoint<F> {
    /// Fails if some block is identically zero.
    pub fn new(blocks: Vec<Vec<F>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Invalid("point without blocks".into()));
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.iter().all(|x| x.is_zero()) {
                return Err(Error::Invalid(format!("block {i} of the point is zero")));
            }
        }
        Ok(ProjectivePoint { blocks })
    }

    pub fn single(coords: Vec<F>) -> Result<Self> {
        Self::new(vec![coords])
    }

    pub fn from_i64(blocks: &[&[i64]]) -> Result<Self> {
        Self::new(
            blocks
                .iter()
                .map(|b| b.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn blocks(&self) -> &[Vec<F>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<F>> {
        self.blocks
    }

    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn coords(&self) -> impl Iterator<Item = &F> {
        self.blocks.iter().flatten()
    }

    /// Zero pattern as a flat mask (true = coordinate is zero).
    pub fn zero_mask(&self) -> Vec<bool> {
        self.coords().map(|x| x.is_zero()).collect()
    }

    /// Each block scaled so that its first nonzero coordinate is 1.
    pub fn canonical(&self) -> Self {
        ProjectivePoint {
            blocks: self
                .blocks
                .iter()
                .map(|b| {
                    let lead = b.iter().find(|x| !x.is_zero()).unwrap().clone();
                    let inv = lead.inv().unwrap();
                    b.iter().map(|x| x.clone() * inv.clone()).collect()
                })
                .collect(),
        }
    }

    /// `t^{q_i} x_i` for a single weighted block.
    pub fn weighted_rescale(&self, weights: &[u64], t: &F) -> Self {
        ProjectivePoint {
            blocks: vec![self.blocks[0]
                .iter()
                .zip(weights)
                .map(|(x, &q)| x.clone() * t.pow_u(q))
                .collect()],
        }
    }

    /// Block `b` multiplied by `t`.
    pub fn scale_block(&self, b: usize, t: &F) -> Self {
        let mut out = self.clone();
        for x in &mut out.blocks[b] {
            *x = x.clone() * t.clone();
        }
        out
    }
}

impl<F: Field> fmt::Display for ProjectivePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let c: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("[{}]", c.join(":"))
            })
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl ProjectivePoint<Q> {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.blocks
                .iter()
                .map(|b| Value::Array(b.iter().map(|x| Value::String(q_to_string(x))).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("point must be a list of coordinate lists".into());
        let blocks = v.as_array().ok_or_else(bad)?;
        let mut out = Vec::new();
        for b in blocks {
            let coords = b.as_array().ok_or_else(bad)?;
            let mut row = Vec::new();
            for c in coords {
                row.push(match c {
                    Value::String(s) => q_from_str(s)?,
                    Value::Number(n) => q_from_str(&n.to_string())?,
                    _ => return Err(bad()),
                });
            }
            out.push(row);
        }
        Self::new(out)
    }
}

fn check_shape<F: Field>(space: &SpaceDescriptor, p: &ProjectivePoint<F>) -> Result<()> {
    if p.shape() != space.shape() {
        return Err(Error::ShapeMismatch(format!(
            "point shape {:?} does not match {space} (shape {:?})",
            p.shape(),
            space.shape()
        )));
    }
    Ok(())
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Coefficients `a_i` with `Σ a_i q_i = gcd(q)`.
pub fn bezout(qs: &[u64]) -> (u64, Vec<i64>) {
    let mut g = qs[0] as i64;
    let mut coef = vec![1i64];
    for &q in &qs[1..] {
        let (g2, u, v) = ext_gcd(g, q as i64);
        for c in &mut coef {
            *c *= u;
        }
        coef.push(v);
        g = g2;
    }
    (g as u64, coef)
}

/// Whether `x` and `y` are the same point of `space`.
///
/// Product spaces: blockwise proportionality. Weighted spaces: there is a
/// `t ≠ 0` over the algebraic closure with `y_i = t^{q_i} x_i`. With ratios
/// `r_i = y_i/x_i` on the common support, `g` the gcd of the support weights
/// and `Σ a_i q_i = g`, such a `t` exists iff `r_j = s^{q_j/g}` for all `j`,
/// where `s = Π r_i^{a_i}` (then `t^g = s`).
pub fn equivalent_points<F: Field>(
    space: &SpaceDescriptor,
    x: &ProjectivePoint<F>,
    y: &ProjectivePoint<F>,
) -> Result<bool> {
    check_shape(space, x)?;
    check_shape(space, y)?;
    match space {
        SpaceDescriptor::Product { .. } => Ok(x
            .blocks
            .iter()
            .zip(&y.blocks)
            .all(|(a, b)| rank_of_vectors(&[a.clone(), b.clone()]) == 1)),
        SpaceDescriptor::Weighted { weights } => {
            let (xs, ys) = (&x.blocks[0], &y.blocks[0]);
            let mut ratios = Vec::new();
            let mut qs = Vec::new();
            for i in 0..xs.len() {
                match (xs[i].is_zero(), ys[i].is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        ratios.push(ys[i].clone() / xs[i].clone());
                        qs.push(weights[i]);
                    }
                    _ => return Ok(false),
                }
            }
            let (g, a) = bezout(&qs);
            let s = ratios
                .iter()
                .zip(&a)
                .fold(F::one(), |acc, (r, &e)| acc * r.pow_i(e));
            Ok(ratios
                .iter()
                .zip(&qs)
                .all(|(r, &q)| *r == s.pow_u(q / g)))
        }
    }
}

/// Images in an ordinary projective space are equal iff proportional.
pub fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    a.len() == b.len() && rank_of_vectors(&[a.to_vec(), b.to_vec()]) <= 1
}

/// A coordinate zero pattern (true = forced zero), flattened over blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub mask: Vec<bool>,
}

impl Stratum {
    pub fn generic(space: &SpaceDescriptor) -> Self {
        Stratum {
            mask: vec![false; space.num_coords()],
        }
    }

    pub fn label(&self, space: &SpaceDescriptor) -> String {
        let mut out = String::new();
        let mut off = 0;
        for (b, n) in space.shape().into_iter().enumerate() {
            if b > 0 {
                out.push('x');
            }
            out.push('[');
            for i in 0..n {
                out.push(if self.mask[off + i] { '0' } else { '*' });
            }
            out.push(']');
            off += n;
        }
        out
    }
}

fn block_patterns(n: usize, weighted: bool) -> Vec<Vec<bool>> {
    let mut out: Vec<Vec<bool>> = Vec::new();
    if weighted && n <= 6 {
        for m in 1u32..(1 << n) {
            out.push((0..n).map(|i| m & (1 << i) == 0).collect());
        }
        out.reverse();
        return out;
    }
    // windows k..=m of nonzero coordinates (prefix and suffix zeros)
    for k in 0..n {
        for m in k..n {
            out.push((0..n).map(|i| i < k || i > m).collect());
        }
    }
    // a single interior zero
    for i in 1..n.saturating_sub(1) {
        out.push((0..n).map(|j| j == i).collect());
    }
    let mut seen = Vec::new();
    out.retain(|p| {
        if seen.contains(p) {
            false
        } else {
            seen.push(p.clone());
            true
        }
    });
    out
}

/// Zero patterns that sampling should cover: the generic stratum first, then
/// coordinate hyperplanes and their intersections (prefix/suffix windows in
/// each projective factor; every support for small weighted spaces).
pub fn strata(space: &SpaceDescriptor) -> Vec<Stratum> {
    let shape = space.shape();
    let weighted = matches!(space, SpaceDescriptor::Weighted { .. });
    let per_block: Vec<Vec<Vec<bool>>> = shape.iter().map(|&n| block_patterns(n, weighted)).collect();
    let total: usize = per_block.iter().map(Vec::len).product();
    let mut out = Vec::new();
    if total <= 2000 {
        let mut idx = vec![0usize; per_block.len()];
        loop {
            let mask: Vec<bool> = idx
                .iter()
                .enumerate()
                .flat_map(|(b, &i)| per_block[b][i].clone())
                .collect();
            out.push(Stratum { mask });
            let mut b = per_block.len();
            loop {
                if b == 0 {
                    return dedup_generic_first(out, space);
                }
                b -= 1;
                idx[b] += 1;
                if idx[b] < per_block[b].len() {
                    break;
                }
                idx[b] = 0;
            }
        }
    }
    // one block varies, the others stay generic
    for (b, pats) in per_block.iter().enumerate() {
        for p in pats {
            let mut mask = Vec::new();
            for (c, &n) in shape.iter().enumerate() {
                if c == b {
                    mask.extend(p.iter().copied());
                } else {
                    mask.extend(std::iter::repeat_n(false, n));
                }
            }
            out.push(Stratum { mask });
        }
    }
    dedup_generic_first(out, space)
}

fn dedup_generic_first(mut v: Vec<Stratum>, space: &SpaceDescriptor) -> Vec<Stratum> {
    let g = Stratum::generic(space);
    v.retain(|s| *s != g);
    let mut out = vec![g];
    for s in v {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// A random rational point with heights bounded by `h`; masked coordinates
/// are exactly zero, the others are nonzero.
pub fn sample_point<R: Rng>(
    space: &SpaceDescriptor,
    h: i64,
    mask: Option<&[bool]>,
    rng: &mut R,
) -> Result<ProjectivePoint<Q>> {
    let shape = space.shape();
    let n = space.num_coords();
    let generic = vec![false; n];
    let mask = mask.unwrap_or(&generic);
    if mask.len() != n {
        return Err(Error::Invalid(format!(
            "mask has {} entries, space has {n} coordinates",
            mask.len()
        )));
    }
    let mut blocks = Vec::with_capacity(shape.len());
    let mut off = 0;
    for (b, &len) in shape.iter().enumerate() {
        let m = &mask[off..off + len];
        if m.iter().all(|&z| z) {
            return Err(Error::Invalid(format!("mask zeroes every coordinate of block {b}")));
        }
        blocks.push(
            m.iter()
                .map(|&z| {
                    if z {
                        Q::from_integer(0.into())
                    } else {
                        rng::nonzero_rational(rng, h)
                    }
                })
                .collect(),
        );
        off += len;
    }
    ProjectivePoint::new(blocks)
}

/// A random point where each coordinate is independently zero with
/// probability 1/4 (resampled until every block is nonzero).
pub fn sample_point_sparse<R: Rng>(space: &SpaceDescriptor, h: i64, rng: &mut R) -> ProjectivePoint<Q> {
    loop {
        let blocks: Vec<Vec<Q>> = space
            .shape()
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        if rng.random_range(0..4) == 0 {
                            Q::from_integer(0.into())
                        } else {
                            rng::rational(rng, h)
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(p) = ProjectivePoint::new(blocks) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, QPoint};

    fn wp(w: &[u64]) -> SpaceDescriptor {
        SpaceDescriptor::weighted(w)
    }

    fn pt(c: &[i64]) -> QPoint {
        QPoint::from_i64(&[c]).unwrap()
    }

    #[test]
    fn weighted_examples() {
        let s = wp(&[1, 6, 10, 15]);
        assert!(equivalent_points(&s, &pt(&[1, 1, 1, 1]), &pt(&[1, 1, 1, 1])).unwrap());
        let s = wp(&[2, 3]);
        assert!(equivalent_points(&s, &pt(&[1, 1]), &pt(&[4, 8])).unwrap());
        assert!(!equivalent_points(&s, &pt(&[1, 1]), &pt(&[4, 9])).unwrap());
        // t = -1 acts by (-1)^q
        assert!(equivalent_points(&s, &pt(&[1, 1]), &pt(&[1, -1])).unwrap());
        // t with t^2 = 2 is not rational but exists over C
        assert!(equivalent_points(&s, &pt(&[1, 0]), &pt(&[2, 0])).unwrap());
        assert!(!equivalent_points(&s, &pt(&[1, 0]), &pt(&[1, 1])).unwrap());
    }

    #[test]
    fn product_equivalence() {
        let s = SpaceDescriptor::product(&[1, 2]);
        let x = QPoint::from_i64(&[&[1, 2], &[0, 1, 3]]).unwrap();
        let y = QPoint::from_i64(&[&[-2, -4], &[0, 5, 15]]).unwrap();
        let z = QPoint::from_i64(&[&[-2, -4], &[1, 5, 15]]).unwrap();
        assert!(equivalent_points(&s, &x, &y).unwrap());
        assert!(!equivalent_points(&s, &x, &z).unwrap());
        assert!(equivalent_points(&s, &x, &pt(&[1, 2])).is_err());
    }

    #[test]
    fn sampling_respects_masks() {
        let mut r = rng::trial_rng(0, 0);
        let s = SpaceDescriptor::product(&[1]);
        let p = sample_point(&s, 100, None, &mut r).unwrap();
        assert!(p.coords().all(|x| x.numer().magnitude() <= &100u32.into()));
        let s = SpaceDescriptor::product(&[1, 2]);
        let p = sample_point(&s, 100, Some(&[true, false, false, false, false]), &mut r).unwrap();
        assert_eq!(p.blocks()[0][0], qi(0));
        assert!(sample_point(&s, 100, Some(&[true, true, false, false, false]), &mut r).is_err());
        let s = wp(&[1, 6, 10, 15]);
        let p = sample_point(&s, 100, Some(&[true, false, false, false]), &mut r).unwrap();
        assert_eq!(p.blocks()[0][0], qi(0));
    }

    #[test]
    fn strata_cover_hyperplanes() {
        let s = SpaceDescriptor::product(&[1, 3]);
        let st = strata(&s);
        assert_eq!(st[0], Stratum::generic(&s));
        assert!(st.iter().any(|t| t.mask == vec![true, false, true, false, false, true]));
        let w = wp(&[1, 6, 10, 15]);
        assert_eq!(strata(&w).len(), 15);
        assert!(strata(&w).iter().any(|t| t.label(&w) == "[0***]"));
    }
}
