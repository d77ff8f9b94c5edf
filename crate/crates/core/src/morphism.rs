//! Morphisms to projective space given by sections of a common degree, and
//! randomized verification of injectivity.

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::Zero;
use rand::seq::IndexedRandom;
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exactalg::poly::eval_many;
use crate::exactalg::q_to_string;
use crate::spaces::{equivalent_points, proportional, sample_point, strata, Stratum};
use crate::{constructions, rng, Error, Field, QPoint, QPoly, Result, SpaceDescriptor, Q};

/// Per-block degrees on a product, one weighted degree on a weighted space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Multidegree {
    Product(Vec<u32>),
    Weighted(u64),
}

impl Multidegree {
    pub fn to_json(&self) -> Value {
        match self {
            Multidegree::Product(v) => json!(v),
            Multidegree::Weighted(d) => json!(d),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n
                .as_u64()
                .map(Multidegree::Weighted)
                .ok_or_else(|| Error::Parse("weighted degree must be a nonnegative integer".into())),
            Value::Array(_) => Ok(Multidegree::Product(serde_json::from_value(v.clone())?)),
            _ => Err(Error::Parse("multidegree must be an integer or a list".into())),
        }
    }
}

impl std::fmt::Display for Multidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Multidegree::Product(v) => {
                let p: Vec<String> = v.iter().map(u32::to_string).collect();
                write!(f, "({})", p.join(","))
            }
            Multidegree::Weighted(d) => write!(f, "{d}"),
        }
    }
}

/// What a decoder recovers from an image point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    /// A source point, compared up to source equivalence.
    Point(QPoint),
    /// On the hyperplane `x0 = 0` of a weighted space: the point
    /// `[x_1^{a_1} : … : x_n^{a_n}]` of ordinary projective space, where
    /// `a_i = lcm(q_1..q_n)/q_i`.
    PowerCoordinates(Vec<Q>),
}

impl std::fmt::Display for Decoded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Decoded::Point(p) => write!(f, "{p}"),
            Decoded::PowerCoordinates(v) => {
                let c: Vec<String> = v.iter().map(q_to_string).collect();
                write!(f, "powers[{}]", c.join(":"))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: SpaceDescriptor,
    pub multidegree: Multidegree,
    pub sections: Vec<QPoly>,
    pub label: String,
    /// `builtin:<name>`; parameters are read back from the morphism itself.
    pub decoder: Option<String>,
}

impl Morphism {
    /// Validates shapes and homogeneity and infers the multidegree.
    pub fn new(
        source: SpaceDescriptor,
        sections: Vec<QPoly>,
        label: impl Into<String>,
        decoder: Option<String>,
    ) -> Result<Self> {
        source.validate()?;
        let first = sections
            .iter()
            .find(|s| !s.is_zero())
            .ok_or_else(|| Error::Invalid("a morphism needs a nonzero section".into()))?;
        let multidegree = match &source {
            SpaceDescriptor::Product { .. } => Multidegree::Product(first.multidegree()?),
            SpaceDescriptor::Weighted { weights } => Multidegree::Weighted(first.weighted_degree(weights)?),
        };
        let m = Morphism {
            source,
            multidegree,
            sections,
            label: label.into(),
            decoder,
        };
        m.validate()?;
        Ok(m)
    }

    /// Every section has the source shape and the stated multidegree.
    pub fn validate(&self) -> Result<()> {
        self.source.validate()?;
        if self.sections.is_empty() {
            return Err(Error::Invalid("a morphism needs at least one section".into()));
        }
        let shape = self.source.shape();
        for (i, s) in self.sections.iter().enumerate() {
            if s.shape() != shape.as_slice() {
                return Err(Error::ShapeMismatch(format!(
                    "section {i} has block shape {:?}, source {} has {:?}",
                    s.shape(),
                    self.source,
                    shape
                )));
            }
            if s.is_zero() {
                continue;
            }
            let ok = match (&self.source, &self.multidegree) {
                (SpaceDescriptor::Product { .. }, Multidegree::Product(d)) => s.multidegree()? == *d,
                (SpaceDescriptor::Weighted { weights }, Multidegree::Weighted(d)) => {
                    s.weighted_degree(weights)? == *d
                }
                _ => {
                    return Err(Error::Invalid(
                        "multidegree kind does not match the source kind".into(),
                    ))
                }
            };
            if !ok {
                return Err(Error::Invalid(format!(
                    "section {i} does not have multidegree {}",
                    self.multidegree
                )));
            }
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.sections.len() - 1
    }

    /// Image coordinates; errors if every section vanishes.
    pub fn evaluate(&self, x: &QPoint) -> Result<Vec<Q>> {
        let v = eval_many(&self.sections, x.blocks())?;
        if v.iter().all(|c| c.is_zero()) {
            return Err(Error::BaseLocusHit(x.to_string()));
        }
        Ok(v)
    }

    pub fn decode(&self, z: &[Q]) -> Result<Decoded> {
        let name = self
            .decoder
            .as_deref()
            .ok_or_else(|| Error::Decode(format!("{} has no decoder", self.label)))?;
        if z.len() != self.sections.len() {
            return Err(Error::ShapeMismatch(format!(
                "image has {} coordinates, target has {}",
                z.len(),
                self.sections.len()
            )));
        }
        constructions::decode_builtin(name, self, z)
    }

    /// Does the decoder output describe `x`?
    pub fn decoded_matches(&self, d: &Decoded, x: &QPoint) -> Result<bool> {
        match d {
            Decoded::Point(p) => equivalent_points(&self.source, p, x),
            Decoded::PowerCoordinates(pw) => {
                let SpaceDescriptor::Weighted { weights } = &self.source else {
                    return Ok(false);
                };
                let xs = &x.blocks()[0];
                if !xs[0].is_zero() || pw.len() != xs.len() - 1 {
                    return Ok(false);
                }
                let powers = power_coordinates(weights, xs);
                Ok(proportional(pw, &powers) && !pw.iter().all(|c| c.is_zero()))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source.to_json(),
            "multidegree": self.multidegree.to_json(),
            "sections": self.sections.iter().map(QPoly::to_json).collect::<Vec<_>>(),
            "label": self.label,
            "decoder": self.decoder,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let get = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("morphism: missing {k}")));
        let source = SpaceDescriptor::from_json(get("source")?)?;
        let multidegree = Multidegree::from_json(get("multidegree")?)?;
        let sections = get("sections")?
            .as_array()
            .ok_or_else(|| Error::Parse("morphism: sections must be a list".into()))?
            .iter()
            .map(QPoly::from_json)
            .collect::<Result<Vec<_>>>()?;
        let label = v.get("label").and_then(Value::as_str).unwrap_or("").to_string();
        let decoder = match v.get("decoder") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            _ => return Err(Error::Parse("morphism: decoder must be a string or null".into())),
        };
        let m = Morphism {
            source,
            multidegree,
            sections,
            label,
            decoder,
        };
        m.validate()?;
        Ok(m)
    }
}

/// `lcm` of a list of positive integers.
pub fn lcm_all(v: &[u64]) -> u64 {
    v.iter()
        .fold(1u64, |acc, &q| num_integer::Integer::lcm(&acc, &q))
}

/// `(x_i^{d/q_i})_{i≥1}` with `d = lcm(q_1..q_n)`.
pub fn power_coordinates(weights: &[u64], xs: &[Q]) -> Vec<Q> {
    let d = lcm_all(&weights[1..]);
    xs[1..]
        .iter()
        .zip(&weights[1..])
        .map(|(x, &q)| x.pow_u(d / q))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvidenceLevel {
    /// A decoder inverted every sampled image.
    DecoderCertified,
    /// Only randomized search; absence of collisions is not a proof.
    Sampled,
}

impl EvidenceLevel {
    pub fn as_str(self) -> &'static str {
        match self {
            EvidenceLevel::DecoderCertified => "decoder-certified",
            EvidenceLevel::Sampled => "sampled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripFailure {
    pub point: QPoint,
    pub image: Option<Vec<Q>>,
    pub decoded: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub label: String,
    pub trials: u64,
    pub seed: u64,
    pub height: i64,
    pub strata_covered: Vec<String>,
    /// Pairs with proportional images but inequivalent sources.
    pub collisions: Vec<(QPoint, QPoint)>,
    /// Points at which every section vanishes.
    pub base_locus_hits: Vec<QPoint>,
    /// Equivalent pairs whose images are not proportional.
    pub scaling_failures: Vec<(QPoint, QPoint)>,
    pub roundtrip_trials: u64,
    pub roundtrip_failures: Vec<RoundtripFailure>,
    pub evidence: EvidenceLevel,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    fn empty(m: &Morphism, trials: u64, seed: u64, height: i64) -> Self {
        VerificationReport {
            label: m.label.clone(),
            trials,
            seed,
            height,
            strata_covered: vec![],
            collisions: vec![],
            base_locus_hits: vec![],
            scaling_failures: vec![],
            roundtrip_trials: 0,
            roundtrip_failures: vec![],
            evidence: EvidenceLevel::Sampled,
            elapsed_ms: 0,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.collisions.is_empty()
            && self.base_locus_hits.is_empty()
            && self.scaling_failures.is_empty()
            && self.roundtrip_failures.is_empty()
    }

    pub fn to_json(&self, with_time: bool) -> Value {
        let pair = |(a, b): &(QPoint, QPoint)| json!([a.to_json(), b.to_json()]);
        let mut v = json!({
            "label": self.label,
            "trials": self.trials,
            "seed": self.seed,
            "height": self.height,
            "strata_covered": self.strata_covered,
            "collisions": self.collisions.iter().map(pair).collect::<Vec<_>>(),
            "base_locus_hits": self.base_locus_hits.iter().map(QPoint::to_json).collect::<Vec<_>>(),
            "scaling_failures": self.scaling_failures.iter().map(pair).collect::<Vec<_>>(),
            "roundtrip_trials": self.roundtrip_trials,
            "roundtrip_failures": self.roundtrip_failures.iter().map(|f| json!({
                "point": f.point.to_json(),
                "image": f.image.as_ref().map(|z| z.iter().map(q_to_string).collect::<Vec<_>>()),
                "decoded": f.decoded,
                "reason": f.reason,
            })).collect::<Vec<_>>(),
            "evidence": self.evidence.as_str(),
            "clean": self.is_clean(),
        });
        if with_time {
            v["elapsed_ms"] = json!(self.elapsed_ms as u64);
        }
        v
    }
}

#[derive(Default)]
struct TrialOutcome {
    strata: Vec<usize>,
    collision: Option<(QPoint, QPoint)>,
    base: Vec<QPoint>,
    scaling: Option<(QPoint, QPoint)>,
}

fn sample_in<R: Rng>(m: &Morphism, st: &[Stratum], idx: usize, h: i64, r: &mut R) -> QPoint {
    sample_point(&m.source, h, Some(&st[idx].mask), r).expect("strata leave every block nonzero")
}

fn perturb_signs<R: Rng>(x: &QPoint, r: &mut R) -> QPoint {
    let mut blocks = x.blocks().to_vec();
    let n: usize = blocks.iter().map(Vec::len).sum();
    let flip: u64 = r.random_range(1..(1u64 << n.min(20)));
    let mut k = 0;
    for b in &mut blocks {
        for c in b.iter_mut() {
            if flip & (1 << k.min(63)) != 0 {
                *c = -c.clone();
            }
            k += 1;
        }
    }
    QPoint::new(blocks).expect("sign flips keep blocks nonzero")
}

fn swap_coords<R: Rng>(x: &QPoint, r: &mut R) -> QPoint {
    let mut blocks = x.blocks().to_vec();
    let choices: Vec<usize> = (0..blocks.len()).filter(|&b| blocks[b].len() >= 2).collect();
    if let Some(&b) = choices.choose(r) {
        let n = blocks[b].len();
        let i = r.random_range(0..n);
        let mut j = r.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        blocks[b].swap(i, j);
    }
    QPoint::new(blocks).expect("swaps keep blocks nonzero")
}

fn rescale<R: Rng>(m: &Morphism, x: &QPoint, h: i64, r: &mut R) -> QPoint {
    match &m.source {
        SpaceDescriptor::Product { .. } => {
            let mut y = x.clone();
            for b in 0..x.blocks().len() {
                y = y.scale_block(b, &rng::nonzero_rational(r, h));
            }
            y
        }
        SpaceDescriptor::Weighted { weights } => {
            let t = rng::nonzero_rational(r, h.min(5));
            x.weighted_rescale(weights, &t)
        }
    }
}

fn one_trial(m: &Morphism, st: &[Stratum], seed: u64, i: u64, h: i64) -> TrialOutcome {
    let mut r = rng::trial_rng(seed, i);
    let mut out = TrialOutcome::default();
    let pick = |r: &mut rand_chacha::ChaCha8Rng| r.random_range(0..st.len());
    let (x, y, equivalent_by_construction) = match i % 6 {
        0 => {
            let x = sample_in(m, st, 0, h, &mut r);
            let y = sample_in(m, st, 0, h, &mut r);
            out.strata = vec![0];
            (x, y, false)
        }
        1 => {
            let s = pick(&mut r);
            out.strata = vec![s];
            (sample_in(m, st, s, h, &mut r), sample_in(m, st, s, h, &mut r), false)
        }
        2 => {
            let s1 = pick(&mut r);
            let s2 = pick(&mut r);
            out.strata = vec![s1, s2];
            (sample_in(m, st, s1, h, &mut r), sample_in(m, st, s2, h, &mut r), false)
        }
        3 => {
            let s = pick(&mut r);
            out.strata = vec![s];
            let x = sample_in(m, st, s, h, &mut r);
            let y = perturb_signs(&x, &mut r);
            (x, y, false)
        }
        4 => {
            let s = pick(&mut r);
            out.strata = vec![s];
            let x = sample_in(m, st, s, h, &mut r);
            let y = swap_coords(&x, &mut r);
            (x, y, false)
        }
        _ => {
            let s = pick(&mut r);
            out.strata = vec![s];
            let x = sample_in(m, st, s, h, &mut r);
            let y = rescale(m, &x, h, &mut r);
            (x, y, true)
        }
    };
    let fx = m.evaluate(&x);
    let fy = m.evaluate(&y);
    if fx.is_err() {
        out.base.push(x.clone());
    }
    if fy.is_err() {
        out.base.push(y.clone());
    }
    if let (Ok(a), Ok(b)) = (fx, fy) {
        let same_image = proportional(&a, &b);
        if equivalent_by_construction {
            if !same_image {
                out.scaling = Some((x, y));
            }
        } else if same_image && !equivalent_points(&m.source, &x, &y).unwrap_or(false) {
            out.collision = Some((x, y));
        }
    }
    out
}

/// Samples `trials` pairs mixing unconstrained pairs, pairs in a common
/// stratum, pairs in different strata, sign flips, coordinate swaps and
/// rescalings (which must give equal images), and records every violation.
pub fn collision_search(m: &Morphism, trials: u64, seed: u64, height: i64) -> VerificationReport {
    let start = Instant::now();
    let st = strata(&m.source);
    let outcomes: Vec<TrialOutcome> = rng::with_pool(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| one_trial(m, &st, seed, i, height))
            .collect()
    });
    let mut rep = VerificationReport::empty(m, trials, seed, height);
    let mut covered = BTreeSet::new();
    for o in outcomes {
        covered.extend(o.strata);
        rep.collisions.extend(o.collision);
        rep.base_locus_hits.extend(o.base);
        rep.scaling_failures.extend(o.scaling);
    }
    rep.strata_covered = covered.into_iter().map(|i| st[i].label(&m.source)).collect();
    rep.elapsed_ms = start.elapsed().as_millis();
    rep
}

fn roundtrip_one(m: &Morphism, st: &[Stratum], seed: u64, i: u64, h: i64) -> Option<RoundtripFailure> {
    let mut r = rng::trial_rng(seed, i);
    let s = (i as usize) % st.len();
    let x = sample_in(m, st, s, h, &mut r);
    let z = match m.evaluate(&x) {
        Ok(z) => z,
        Err(e) => {
            return Some(RoundtripFailure {
                point: x,
                image: None,
                decoded: None,
                reason: e.to_string(),
            })
        }
    };
    match m.decode(&z) {
        Err(e) => Some(RoundtripFailure {
            point: x,
            image: Some(z),
            decoded: None,
            reason: e.to_string(),
        }),
        Ok(d) => match m.decoded_matches(&d, &x) {
            Ok(true) => None,
            Ok(false) => Some(RoundtripFailure {
                point: x,
                image: Some(z),
                decoded: Some(d.to_string()),
                reason: "decoded point is not equivalent to the source point".into(),
            }),
            Err(e) => Some(RoundtripFailure {
                point: x,
                image: Some(z),
                decoded: Some(d.to_string()),
                reason: e.to_string(),
            }),
        },
    }
}

/// Decodes the images of `trials` points cycling through every stratum.
pub fn roundtrip_check(m: &Morphism, trials: u64, seed: u64, height: i64) -> VerificationReport {
    let start = Instant::now();
    let st = strata(&m.source);
    let mut rep = VerificationReport::empty(m, 0, seed, height);
    rep.roundtrip_trials = trials;
    if m.decoder.is_none() {
        rep.roundtrip_failures.push(RoundtripFailure {
            point: QPoint::new(m.source.shape().iter().map(|&n| vec![Q::from_integer(1.into()); n]).collect())
                .expect("all-ones point"),
            image: None,
            decoded: None,
            reason: "morphism has no decoder".into(),
        });
        return rep;
    }
    let fails: Vec<Option<RoundtripFailure>> = rng::with_pool(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| roundtrip_one(m, &st, seed, i, height))
            .collect()
    });
    rep.roundtrip_failures = fails.into_iter().flatten().collect();
    let used = (trials as usize).min(st.len());
    rep.strata_covered = st[..used].iter().map(|s| s.label(&m.source)).collect();
    if rep.roundtrip_failures.is_empty() {
        rep.evidence = EvidenceLevel::DecoderCertified;
    }
    rep.elapsed_ms = start.elapsed().as_millis();
    rep
}

/// Collision search, plus a round-trip check when a decoder is attached.
/// A clean round trip with collisions in the same run is reported as a
/// failure too (the decoder would have separated them).
pub fn verify(m: &Morphism, trials: u64, seed: u64, height: i64) -> VerificationReport {
    let mut rep = collision_search(m, trials, seed, height);
    if m.decoder.is_some() {
        let rt = roundtrip_check(m, trials, rng::derive_seed(seed, "roundtrip"), height);
        rep.roundtrip_trials = rt.roundtrip_trials;
        rep.roundtrip_failures = rt.roundtrip_failures;
        rep.elapsed_ms += rt.elapsed_ms;
        if rep.roundtrip_failures.is_empty() {
            rep.evidence = EvidenceLevel::DecoderCertified;
            for (x, y) in &rep.collisions {
                let decoded = m
                    .evaluate(x)
                    .and_then(|z| m.decode(&z))
                    .map(|d| d.to_string())
                    .ok();
                rep.roundtrip_failures.push(RoundtripFailure {
                    point: y.clone(),
                    image: m.evaluate(y).ok(),
                    decoded,
                    reason: "collision found although every sampled round trip succeeded".into(),
                });
            }
            if !rep.collisions.is_empty() {
                rep.evidence = EvidenceLevel::Sampled;
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    fn square_map() -> Morphism {
        let s = vec![2];
        Morphism::new(
            SpaceDescriptor::product(&[1]),
            vec![QPoly::var(s.clone(), 0, 0).pow(2), QPoly::var(s, 0, 1).pow(2)],
            "square",
            None,
        )
        .unwrap()
    }

    #[test]
    fn square_map_collides() {
        let m = square_map();
        let a = QPoint::from_i64(&[&[1, 1]]).unwrap();
        let b = QPoint::from_i64(&[&[1, -1]]).unwrap();
        assert!(proportional(&m.evaluate(&a).unwrap(), &m.evaluate(&b).unwrap()));
        let rep = collision_search(&m, 600, 0, 100);
        assert!(!rep.collisions.is_empty());
        assert!(rep.scaling_failures.is_empty());
    }

    #[test]
    fn identity_roundtrip() {
        let s = vec![3];
        let m = Morphism::new(
            SpaceDescriptor::product(&[2]),
            (0..3).map(|i| QPoly::var(s.clone(), 0, i)).collect(),
            "identity",
            Some("builtin:identity".into()),
        )
        .unwrap();
        let rep = roundtrip_check(&m, 200, 1, 100);
        assert!(rep.is_clean(), "{:?}", rep.roundtrip_failures);
        assert_eq!(rep.evidence, EvidenceLevel::DecoderCertified);
        let x = QPoint::from_i64(&[&[0, 0, 1]]).unwrap();
        let j = m.to_json();
        assert_eq!(Morphism::from_json(&j).unwrap(), m);
        assert_eq!(m.evaluate(&x).unwrap(), vec![qi(0), qi(0), qi(1)]);
    }

    #[test]
    fn base_locus_detected() {
        let s = vec![2];
        let m = Morphism::new(
            SpaceDescriptor::product(&[1]),
            vec![&QPoly::var(s.clone(), 0, 0) * &QPoly::var(s.clone(), 0, 1), QPoly::var(s, 0, 0).pow(2)],
            "with base point",
            None,
        )
        .unwrap();
        let x = QPoint::from_i64(&[&[0, 1]]).unwrap();
        assert!(matches!(m.evaluate(&x), Err(Error::BaseLocusHit(_))));
        let rep = collision_search(&m, 120, 0, 10);
        assert!(!rep.base_locus_hits.is_empty());
    }

    #[test]
    fn inhomogeneous_sections_rejected() {
        let s = vec![2];
        let r = Morphism::new(
            SpaceDescriptor::product(&[1]),
            vec![QPoly::var(s.clone(), 0, 0), QPoly::var(s, 0, 1).pow(2)],
            "bad",
            None,
        );
        assert!(r.is_err());
    }
}
