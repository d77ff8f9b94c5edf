//! Rank and border-rank decisions for `2 × 2 × (m+1)` tensors, secant-span
//! tests, and secant tests for rational space curves.

mod curve;

pub use curve::{
    point_on_curve, point_on_secant, PrimeEvidence, PrimeOutcome, RationalCurveP3, SecantMode, SecantVerdict,
    SecantWitness,
};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::exactalg::linalg::rank_of_vectors;
use crate::exactalg::{q_from_str, q_to_string};
use crate::{Error, Field, Matrix, QBinaryForm, Result, Q};

/// An element of `F^2 ⊗ F^2 ⊗ F^{m+1}`; slice `c` holds the coefficients of
/// `e_a ⊗ e_b ⊗ e_c` as a 2×2 matrix indexed `[a][b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor222n<F> {
    m: usize,
    slices: Vec<[[F; 2]; 2]>,
}

/// `a ⊗ b ⊗ c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneTerm<F> {
    pub a: [F; 2],
    pub b: [F; 2],
    pub c: Vec<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankTwoWitness<F> {
    /// Two rank-one summands over the working field.
    Split([RankOneTerm<F>; 2]),
    /// The pencil's determinant has distinct roots only over a quadratic
    /// extension; the nonsquare discriminant certifies rank two there.
    ExtensionOnly { discriminant: F },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankDecision<F> {
    Zero,
    RankOne(RankOneTerm<F>),
    RankTwo(RankTwoWitness<F>),
    /// Border rank two, rank three.
    Border2Rank3,
    BorderAtLeast3,
}

impl<F> RankDecision<F> {
    pub fn name(&self) -> &'static str {
        match self {
            RankDecision::Zero => "Zero",
            RankDecision::RankOne(_) => "RankOne",
            RankDecision::RankTwo(_) => "RankTwo",
            RankDecision::Border2Rank3 => "Border2Rank3",
            RankDecision::BorderAtLeast3 => "BorderAtLeast3",
        }
    }

    /// Rank at most two over the algebraic closure.
    pub fn rank_at_most_two(&self) -> bool {
        matches!(self, RankDecision::Zero | RankDecision::RankOne(_) | RankDecision::RankTwo(_))
    }

    pub fn border_rank_at_most_two(&self) -> bool {
        !matches!(self, RankDecision::BorderAtLeast3)
    }
}

fn det2<F: Field>(a: &[[F; 2]; 2]) -> F {
    a[0][0].clone() * a[1][1].clone() - a[0][1].clone() * a[1][0].clone()
}

fn flat<F: Field>(a: &[[F; 2]; 2]) -> Vec<F> {
    vec![a[0][0].clone(), a[0][1].clone(), a[1][0].clone(), a[1][1].clone()]
}

fn comb<F: Field>(x: &F, a: &[[F; 2]; 2], y: &F, b: &[[F; 2]; 2]) -> [[F; 2]; 2] {
    let e = |i: usize, j: usize| x.clone() * a[i][j].clone() + y.clone() * b[i][j].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `u vᵀ` for a nonzero singular 2×2 matrix.
fn split_rank_one<F: Field>(a: &[[F; 2]; 2]) -> ([F; 2], [F; 2]) {
    let r = if a[0].iter().any(|x| !x.is_zero()) { 0 } else { 1 };
    let v = a[r].clone();
    let col = if !v[0].is_zero() { 0 } else { 1 };
    let inv = v[col].inv().expect("nonzero pivot");
    let u = [a[0][col].clone() * inv.clone(), a[1][col].clone() * inv];
    (u, v)
}

impl<F: Field> Tensor222n<F> {
    pub fn new(m: usize, slices: Vec<[[F; 2]; 2]>) -> Result<Self> {
        if slices.len() != m + 1 {
            return Err(Error::ShapeMismatch(format!(
                "m = {m} needs {} slices, got {}",
                m + 1,
                slices.len()
            )));
        }
        Ok(Tensor222n { m, slices })
    }

    pub fn zero(m: usize) -> Self {
        let z = || [[F::zero(), F::zero()], [F::zero(), F::zero()]];
        Tensor222n {
            m,
            slices: (0..=m).map(|_| z()).collect(),
        }
    }

    /// `e_a ⊗ e_b ⊗ e_c`.
    pub fn basis(m: usize, a: usize, b: usize, c: usize) -> Self {
        let mut t = Self::zero(m);
        t.slices[c][a][b] = F::one();
        t
    }

    pub fn rank_one(a: &[F; 2], b: &[F; 2], c: &[F]) -> Result<Self> {
        let m = c.len().checked_sub(1).ok_or_else(|| Error::Invalid("empty third factor".into()))?;
        let slices = c
            .iter()
            .map(|w| {
                let e = |i: usize, j: usize| a[i].clone() * b[j].clone() * w.clone();
                [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
            })
            .collect();
        Ok(Tensor222n { m, slices })
    }

    /// Inverse of [`Tensor222n::to_vector`].
    pub fn from_vector(m: usize, v: &[F]) -> Result<Self> {
        if v.len() != 4 * (m + 1) {
            return Err(Error::ShapeMismatch(format!("vector of length {} for m = {m}", v.len())));
        }
        let mut t = Self::zero(m);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..=m {
                    t.slices[c][a][b] = v[(2 * a + b) * (m + 1) + c].clone();
                }
            }
        }
        Ok(t)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn slices(&self) -> &[[[F; 2]; 2]] {
        &self.slices
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &F {
        &self.slices[c][a][b]
    }

    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(|s| s.iter().flatten().all(F::is_zero))
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |x, y| x + y)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |x, y| x - y)
    }

    pub fn scale(&self, s: &F) -> Self {
        self.zip(self, |x, _| x * s.clone())
    }

    fn zip(&self, o: &Self, f: impl Fn(F, F) -> F) -> Self {
        assert_eq!(self.m, o.m, "tensor shapes differ");
        let slices = self
            .slices
            .iter()
            .zip(&o.slices)
            .map(|(a, b)| {
                let e = |i: usize, j: usize| f(a[i][j].clone(), b[i][j].clone());
                [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
            })
            .collect();
        Tensor222n { m: self.m, slices }
    }

    /// Coordinates indexed `(2a + b)(m + 1) + c`.
    pub fn to_vector(&self) -> Vec<F> {
        let mut v = Vec::with_capacity(4 * (self.m + 1));
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..=self.m {
                    v.push(self.slices[c][a][b].clone());
                }
            }
        }
        v
    }

    /// The 4 × (m+1) matrix whose columns are the vectorized slices.
    pub fn flattening(&self) -> Matrix<F> {
        let rows: Vec<Vec<F>> = (0..4)
            .map(|r| (0..=self.m).map(|c| self.slices[c][r / 2][r % 2].clone()).collect())
            .collect();
        Matrix::from_rows(rows, self.m + 1)
    }

    /// Rank of `F^{m+1*} → F^2 ⊗ F^2`.
    pub fn flattening_rank(&self) -> usize {
        self.flattening().rank()
    }

    /// Writes every slice as `α C_0 + β C_1` for independent matrices `C_i`.
    fn coefficients_in(&self, c0: &[[F; 2]; 2], c1: &[[F; 2]; 2]) -> (Vec<F>, Vec<F>) {
        let (p, q) = (flat(c0), flat(c1));
        // an invertible 2×2 minor of [p q]
        let (i, j) = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .find(|&(i, j)| !(p[i].clone() * q[j].clone() - p[j].clone() * q[i].clone()).is_zero())
            .expect("independent matrices");
        let det = p[i].clone() * q[j].clone() - p[j].clone() * q[i].clone();
        let dinv = det.inv().unwrap();
        let mut al = Vec::new();
        let mut be = Vec::new();
        for s in &self.slices {
            let v = flat(s);
            al.push((v[i].clone() * q[j].clone() - v[j].clone() * q[i].clone()) * dinv.clone());
            be.push((p[i].clone() * v[j].clone() - p[j].clone() * v[i].clone()) * dinv.clone());
        }
        (al, be)
    }

    pub fn rank_decision(&self) -> RankDecision<F> {
        let fr = self.flattening_rank();
        if fr >= 3 {
            return RankDecision::BorderAtLeast3;
        }
        if fr == 0 {
            return RankDecision::Zero;
        }
        let first = self
            .slices
            .iter()
            .position(|s| s.iter().flatten().any(|x| !x.is_zero()))
            .unwrap();
        let a = self.slices[first].clone();
        if fr == 1 {
            // t = A ⊗ w
            let fa = flat(&a);
            let piv = fa.iter().position(|x| !x.is_zero()).unwrap();
            let inv = fa[piv].inv().unwrap();
            let w: Vec<F> = self.slices.iter().map(|s| flat(s)[piv].clone() * inv.clone()).collect();
            if det2(&a).is_zero() {
                let (u, v) = split_rank_one(&a);
                return RankDecision::RankOne(RankOneTerm { a: u, b: v, c: w });
            }
            let e0 = [F::one(), F::zero()];
            let e1 = [F::zero(), F::one()];
            return RankDecision::RankTwo(RankTwoWitness::Split([
                RankOneTerm {
                    a: e0,
                    b: a[0].clone(),
                    c: w.clone(),
                },
                RankOneTerm {
                    a: e1,
                    b: a[1].clone(),
                    c: w,
                },
            ]));
        }
        let b = self
            .slices
            .iter()
            .find(|s| rank_of_vectors(&[flat(&a), flat(s)]) == 2)
            .unwrap()
            .clone();
        // det(xA + yB) = qa x^2 + qb xy + qc y^2
        let qa = det2(&a);
        let qc = det2(&b);
        let qb = a[0][0].clone() * b[1][1].clone() + a[1][1].clone() * b[0][0].clone()
            - a[0][1].clone() * b[1][0].clone()
            - a[1][0].clone() * b[0][1].clone();
        let (m1, m2) = if qa.is_zero() && qb.is_zero() && qc.is_zero() {
            (a.clone(), b.clone())
        } else {
            let disc = qb.clone() * qb.clone() - F::from_i64(4) * qa.clone() * qc.clone();
            if disc.is_zero() {
                return RankDecision::Border2Rank3;
            }
            let Some(s) = disc.sqrt() else {
                return RankDecision::RankTwo(RankTwoWitness::ExtensionOnly { discriminant: disc });
            };
            let roots: [(F, F); 2] = if !qa.is_zero() {
                let two_a = F::from_i64(2) * qa.clone();
                [
                    (-qb.clone() + s.clone(), two_a.clone()),
                    (-qb.clone() - s, two_a),
                ]
            } else {
                [(F::one(), F::zero()), (-qc.clone(), qb.clone())]
            };
            (
                comb(&roots[0].0, &a, &roots[0].1, &b),
                comb(&roots[1].0, &a, &roots[1].1, &b),
            )
        };
        let (al, be) = self.coefficients_in(&m1, &m2);
        let (u1, v1) = split_rank_one(&m1);
        let (u2, v2) = split_rank_one(&m2);
        RankDecision::RankTwo(RankTwoWitness::Split([
            RankOneTerm { a: u1, b: v1, c: al },
            RankOneTerm { a: u2, b: v2, c: be },
        ]))
    }
}

impl<F: Field> RankOneTerm<F> {
    pub fn tensor(&self) -> Tensor222n<F> {
        Tensor222n::rank_one(&self.a, &self.b, &self.c).expect("nonempty third factor")
    }
}

impl<F: Field> RankDecision<F> {
    /// Re-checks the witness: summands add up to `t` and the flattening
    /// rank agrees with the class.
    pub fn verify(&self, t: &Tensor222n<F>) -> bool {
        let fr = t.flattening_rank();
        match self {
            RankDecision::Zero => t.is_zero(),
            RankDecision::RankOne(term) => fr == 1 && term.tensor() == *t,
            RankDecision::RankTwo(RankTwoWitness::Split([p, q])) => fr <= 2 && p.tensor().add(&q.tensor()) == *t,
            RankDecision::RankTwo(RankTwoWitness::ExtensionOnly { discriminant }) => {
                fr == 2 && !discriminant.is_zero() && discriminant.sqrt().is_none()
            }
            RankDecision::Border2Rank3 => fr == 2,
            RankDecision::BorderAtLeast3 => fr >= 3,
        }
    }
}

impl Tensor222n<Q> {
    pub fn to_json(&self) -> Value {
        let s: Vec<Value> = self
            .slices
            .iter()
            .map(|sl| {
                json!([
                    [q_to_string(&sl[0][0]), q_to_string(&sl[0][1])],
                    [q_to_string(&sl[1][0]), q_to_string(&sl[1][1])]
                ])
            })
            .collect();
        json!({"m": self.m, "slices": s})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let m = v
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("tensor: missing integer m".into()))? as usize;
        let sl = v
            .get("slices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("tensor: missing slices".into()))?;
        let scalar = |x: &Value| -> Result<Q> {
            match x {
                Value::String(s) => q_from_str(s),
                Value::Number(n) => q_from_str(&n.to_string()),
                _ => Err(Error::Parse(format!("tensor entry {x} is not a number"))),
            }
        };
        let mut slices = Vec::new();
        for s in sl {
            let rows = s.as_array().filter(|r| r.len() == 2);
            let rows = rows.ok_or_else(|| Error::Parse("tensor slice must be 2x2".into()))?;
            let mut out: [[Q; 2]; 2] = Default::default();
            for (i, r) in rows.iter().enumerate() {
                let r = r
                    .as_array()
                    .filter(|r| r.len() == 2)
                    .ok_or_else(|| Error::Parse("tensor slice must be 2x2".into()))?;
                out[i] = [scalar(&r[0])?, scalar(&r[1])?];
            }
            slices.push(out);
        }
        Tensor222n::new(m, slices)
    }
}

pub fn rank_decision_json(d: &RankDecision<Q>) -> Value {
    let term = |t: &RankOneTerm<Q>| {
        let s = |v: &[Q]| v.iter().map(q_to_string).collect::<Vec<_>>();
        json!({"a": s(&t.a), "b": s(&t.b), "c": s(&t.c)})
    };
    match d {
        RankDecision::RankOne(t) => json!({"decision": d.name(), "summands": [term(t)]}),
        RankDecision::RankTwo(RankTwoWitness::Split([p, q])) => {
            json!({"decision": d.name(), "summands": [term(p), term(q)]})
        }
        RankDecision::RankTwo(RankTwoWitness::ExtensionOnly { discriminant }) => json!({
            "decision": d.name(),
            "exists_over": "quadratic extension only",
            "discriminant": q_to_string(discriminant),
        }),
        _ => json!({"decision": d.name()}),
    }
}

/// Does the line (or point) spanned by `p` and `q` meet `span(w)`?
pub fn secant_span_meets_subspace<F: Field>(p: &Tensor222n<F>, q: &Tensor222n<F>, w: &[Tensor222n<F>]) -> bool {
    let pq = rank_of_vectors(&[p.to_vector(), q.to_vector()]);
    let wv: Vec<Vec<F>> = w.iter().map(Tensor222n::to_vector).collect();
    let dw = rank_of_vectors(&wv);
    let mut all = vec![p.to_vector(), q.to_vector()];
    all.extend(wv);
    pq > 0 && rank_of_vectors(&all) < pq + dw
}

/// Outcome of the componentwise test for a point `v ⊕ w` of
/// `P(Sym^3 ⊕ Sym^2)` against the secant locus of the image of `P(2,2,3,3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wps2233Certificate {
    pub cubic_rank: Option<usize>,
    pub conic_rank: Option<usize>,
    /// `v ⊕ w` lies off the secant locus.
    pub outside: bool,
}

/// The point is outside exactly when some nonzero component is off the
/// secant locus of its rational normal curve. The conic's secants fill the
/// plane, so only a cubic of rank three can certify.
pub fn wps2233_certificate(v: &QBinaryForm, w: &QBinaryForm) -> Result<Wps2233Certificate> {
    if v.degree() != 3 || w.degree() != 2 {
        return Err(Error::Invalid("expected a binary cubic and a binary quadratic".into()));
    }
    if v.is_zero() && w.is_zero() {
        return Err(Error::Invalid("the zero vector is not a point".into()));
    }
    let cubic_rank = if v.is_zero() { None } else { Some(v.waring_rank()?) };
    let conic_rank = if w.is_zero() { None } else { Some(w.waring_rank()?) };
    let outside = cubic_rank.is_some_and(|r| r > 2) || conic_rank.is_some_and(|r| r > 2);
    Ok(Wps2233Certificate {
        cubic_rank,
        conic_rank,
        outside,
    })
}

/// `s0 s1^2 ⊕ 0` is off the secant locus.
pub fn wps2233_point_outside_secant() -> bool {
    let v = QBinaryForm::from_i64(&[0, 0, 1, 0]);
    let w = QBinaryForm::zero(2);
    wps2233_certificate(&v, &w).is_ok_and(|c| c.outside)
}

/// The projection centre used for the `P^2 × P^2 → P^8` map, as coefficients
/// of `T0^2 T1 + T1^2 T2 + T2^2 T0` in the descending cubic monomial basis.
pub fn tangential_p2p2_centre() -> Vec<Q> {
    cubic_in_basis(&[([2, 1, 0], 1), ([0, 2, 1], 1), ([1, 0, 2], 1)])
}

/// `T0^2 T1 + T1^2 T2 + T2^2 T1` in the same basis.
pub fn tangential_p2p2_alternative_centre() -> Vec<Q> {
    cubic_in_basis(&[([2, 1, 0], 1), ([0, 2, 1], 1), ([0, 1, 2], 1)])
}

fn cubic_in_basis(terms: &[([u32; 3], i64)]) -> Vec<Q> {
    let basis = crate::constructions::monomials_desc(3, 3);
    basis
        .iter()
        .map(|e| {
            terms
                .iter()
                .find(|(t, _)| t.as_slice() == e.as_slice())
                .map_or(Q::from_integer(0.into()), |(_, c)| Q::from_integer((*c).into()))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CentreReport {
    /// Each printed section, as a functional on cubic coefficients.
    pub functionals: Vec<Vec<Q>>,
    pub independent: bool,
    pub centre_annihilated: bool,
    pub alternative_annihilated: bool,
    pub secant_samples: u64,
    /// Sampled pairs of tangential points whose span contains the centre.
    pub secant_hits: u64,
}

impl CentreReport {
    pub fn ok(&self) -> bool {
        self.independent && self.centre_annihilated && self.secant_hits == 0
    }
}

/// Reads the nine printed sections as functionals on the ten cubic
/// coefficients, checks they cut out exactly the centre, and samples pairs
/// of points of the tangential variety for secants through it.
pub fn check_tangential_p2p2_centre(samples: u64, seed: u64, height: i64) -> Result<CentreReport> {
    use crate::exactalg::poly::eval_many;
    use rayon::prelude::*;
    let full = crate::constructions::tangential_p2p2_full_sections();
    let printed = crate::constructions::build_tangential_p2p2()?.sections;
    // coefficient vectors of the full sections over their monomials
    let mut monos: Vec<crate::ExponentVector> = Vec::new();
    for f in &full {
        for (e, _) in f.terms() {
            if !monos.contains(e) {
                monos.push(e.clone());
            }
        }
    }
    let coords = |f: &crate::QPoly| -> Vec<Q> { monos.iter().map(|e| f.coefficient(e)).collect() };
    // solve Σ λ_j coords(full_j) = coords(printed_i)
    let a = Matrix::from_rows(full.iter().map(coords).collect(), monos.len()).transpose();
    let mut functionals = Vec::new();
    for p in &printed {
        if p.terms().any(|(e, _)| !monos.contains(e)) {
            return Err(Error::Invalid("printed section outside the span of the full sections".into()));
        }
        let rhs = coords(p);
        let mut aug = a.to_rows();
        for (r, v) in aug.iter_mut().zip(&rhs) {
            r.push(v.clone());
        }
        let aug = Matrix::from_rows(aug, full.len() + 1);
        let (r, piv) = aug.rref();
        if piv.contains(&full.len()) {
            return Err(Error::Invalid("printed section outside the span of the full sections".into()));
        }
        let mut lam = vec![Q::from_integer(0.into()); full.len()];
        for (row, &c) in piv.iter().enumerate() {
            lam[c] = r.get(row, full.len()).clone();
        }
        functionals.push(lam);
    }
    let dot = |l: &[Q], v: &[Q]| l.iter().zip(v).fold(Q::from_integer(0.into()), |s, (a, b)| s + a * b);
    let centre = tangential_p2p2_centre();
    let alt = tangential_p2p2_alternative_centre();
    let independent = rank_of_vectors(&functionals) == functionals.len();
    let centre_annihilated = functionals.iter().all(|l| dot(l, &centre).is_zero());
    let alternative_annihilated = functionals.iter().all(|l| dot(l, &alt).is_zero());
    let space = crate::SpaceDescriptor::product(&[2, 2]);
    let hits: u64 = crate::rng::with_pool(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| {
                let mut r = crate::rng::trial_rng(seed, i);
                let p1 = crate::spaces::sample_point_sparse(&space, height, &mut r);
                let p2 = crate::spaces::sample_point_sparse(&space, height, &mut r);
                let z1 = eval_many(&full, p1.blocks()).unwrap();
                let z2 = eval_many(&full, p2.blocks()).unwrap();
                let pair = rank_of_vectors(&[z1.clone(), z2.clone()]);
                u64::from(pair == 2 && rank_of_vectors(&[z1, z2, centre.clone()]) == 2)
            })
            .sum()
    });
    Ok(CentreReport {
        functionals,
        independent,
        centre_annihilated,
        alternative_annihilated,
        secant_samples: samples,
        secant_hits: hits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, Fp};

    fn e(m: usize, a: usize, b: usize, c: usize) -> Tensor222n<Q> {
        Tensor222n::basis(m, a, b, c)
    }

    fn w_state() -> Tensor222n<Q> {
        e(1, 0, 0, 1).add(&e(1, 0, 1, 0)).add(&e(1, 1, 0, 0))
    }

    #[test]
    fn flattening_examples() {
        assert_eq!(Tensor222n::<Q>::zero(1).flattening_rank(), 0);
        assert_eq!(e(1, 0, 0, 0).add(&e(1, 1, 1, 1)).flattening_rank(), 2);
        assert_eq!(w_state().flattening_rank(), 2);
    }

    #[test]
    fn decisions() {
        let t = e(1, 0, 0, 0);
        assert_eq!(t.rank_decision().name(), "RankOne");
        let t = e(1, 0, 0, 0).add(&e(1, 1, 1, 1));
        let d = t.rank_decision();
        assert_eq!(d.name(), "RankTwo");
        assert!(d.verify(&t));
        assert_eq!(w_state().rank_decision(), RankDecision::Border2Rank3);
        // x^2 + y^2 pencil: distinct roots only over Q(i)
        let t = Tensor222n::new(1, vec![[[qi(1), qi(0)], [qi(0), qi(1)]], [[qi(0), qi(-1)], [qi(1), qi(0)]]]).unwrap();
        let d = t.rank_decision();
        assert!(matches!(d, RankDecision::RankTwo(RankTwoWitness::ExtensionOnly { .. })));
        assert!(d.verify(&t));
        let t3 = Tensor222n::<Fp<5>>::new(1, vec![[[Fp::new(1), Fp::new(0)], [Fp::new(0), Fp::new(1)]], [[Fp::new(0), Fp::new(-1)], [Fp::new(1), Fp::new(0)]]]).unwrap();
        let d = t3.rank_decision();
        assert!(matches!(d, RankDecision::RankTwo(RankTwoWitness::Split(_))));
        assert!(d.verify(&t3));
    }

    #[test]
    fn secant_spans() {
        let p = e(1, 0, 0, 0);
        assert!(secant_span_meets_subspace(&p, &p, &[p.clone()]));
        assert!(!secant_span_meets_subspace(&p, &e(1, 1, 1, 1), &[e(1, 0, 1, 0)]));
        let p = e(1, 0, 0, 1);
        let q = e(1, 0, 1, 0).add(&e(1, 1, 0, 0)).scale(&qi(-1));
        assert!(secant_span_meets_subspace(&p, &q, &[w_state()]));
    }

    #[test]
    fn json_roundtrip() {
        let t = w_state();
        assert_eq!(Tensor222n::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn wps2233() {
        assert!(wps2233_point_outside_secant());
        let c = wps2233_certificate(&QBinaryForm::from_i64(&[1, 0, 0, 1]), &QBinaryForm::zero(2)).unwrap();
        assert!(!c.outside);
        let c = wps2233_certificate(&QBinaryForm::zero(3), &QBinaryForm::from_i64(&[0, 1, 0])).unwrap();
        assert!(!c.outside);
        assert_eq!(c.conic_rank, Some(2));
    }

    #[test]
    fn tangential_centre() {
        let r = check_tangential_p2p2_centre(50, 0, 10).unwrap();
        assert!(r.independent);
        assert!(r.centre_annihilated);
        assert!(!r.alternative_annihilated);
        assert_eq!(r.secant_hits, 0);
    }
}
