//! The acceptance checks, runnable from tests and from the command line.

pub mod oracle;

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::constructions::{self as cons, Family, FamilyParams};
use crate::graphgadget::{self as gg, EdgeWeighting, GadgetGraph};
use crate::morphism::{collision_search, roundtrip_check};
use crate::sepinv::{self, CyclicAction};
use crate::tensors::{self, RankDecision, RankTwoWitness, RationalCurveP3, SecantMode, SecantVerdict, Tensor222n};
use crate::{qi, rng, Fp, QBinaryForm, QPoly, Result, Q};

use oracle::{pencil_splits_over_quadratic_extension, RankTwoTable};

/// `(id, key, name)` for every criterion; the key also selects it.
pub const CRITERIA: [(u8, &str, &str); 8] = [
    (1, "table", "construction table ambient dimensions"),
    (2, "collisions", "collision search"),
    (3, "roundtrip", "decoder round trips"),
    (4, "graphgadget", "graph gadget"),
    (5, "rank", "rank decision vs brute force"),
    (6, "secant", "secant facts"),
    (7, "sepinv", "separating invariants"),
    (8, "bounds", "upper bounds with certificates"),
];

/// Accepts a criterion number or key.
pub fn parse_criterion(s: &str) -> Option<u8> {
    let s = s.trim();
    CRITERIA
        .iter()
        .find(|(id, key, _)| s == *key || s.parse::<u8>().ok() == Some(*id))
        .map(|c| c.0)
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {} [{}] {}: {} ({} ms)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed_ms
        )
    }

    pub fn to_json(&self, with_time: bool) -> Value {
        let mut v = json!({"id": self.id, "name": self.name, "passed": self.passed, "detail": self.detail});
        if with_time {
            v["elapsed_ms"] = json!(self.elapsed_ms);
        }
        v
    }
}

/// Sample sizes; [`SuiteConfig::full`] matches the acceptance targets.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub height: i64,
    pub collision_trials: u64,
    /// Per-construction time budget for the collision search.
    pub collision_budget_ms: u128,
    pub roundtrip_trials: u64,
    pub gadget_max_m: usize,
    pub flattening_trials: u64,
    pub theorem_trials: u64,
    pub rank_samples: u64,
    pub secant_points: u64,
    pub separation_trials: u64,
    pub cone_trials: u64,
}

impl SuiteConfig {
    pub fn full() -> Self {
        SuiteConfig {
            seed: 0,
            height: 100,
            collision_trials: 10_000,
            collision_budget_ms: 60_000,
            roundtrip_trials: 1_000,
            gadget_max_m: 10,
            flattening_trials: 10_000,
            theorem_trials: 1_000,
            rank_samples: 10_000,
            secant_points: 100,
            separation_trials: 100_000,
            cone_trials: 2_000,
        }
    }

    /// Small samples for smoke runs; same code paths.
    pub fn quick() -> Self {
        SuiteConfig {
            collision_trials: 300,
            roundtrip_trials: 100,
            gadget_max_m: 4,
            flattening_trials: 300,
            theorem_trials: 60,
            rank_samples: 1_000,
            secant_points: 8,
            separation_trials: 3_000,
            cone_trials: 300,
            ..SuiteConfig::full()
        }
    }
}

/// A construction with the target dimension it has to reach, computed
/// here from the parameters rather than by the construction code.
#[derive(Clone, Debug)]
pub struct TableCase {
    pub family: Family,
    pub params: FamilyParams,
    pub target: usize,
}

impl TableCase {
    pub fn label(&self) -> String {
        let p = &self.params;
        let mut parts = Vec::new();
        if !p.weights.is_empty() {
            parts.push(format!("weights={:?}", p.weights));
        }
        if !p.dvec.is_empty() {
            parts.push(format!("dvec={:?}", p.dvec));
        }
        for (name, v) in [("k", p.k), ("m", p.m.map(|x| x as u64)), ("n", p.n.map(|x| x as u64)), ("d", p.d.map(u64::from))] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        format!("{}({})", self.family, parts.join(","))
    }
}

const WEIGHT_SETS: [&[u64]; 3] = [&[1, 6, 10, 15], &[1, 2, 3], &[1, 5, 5]];

fn case(family: Family, params: FamilyParams, target: usize) -> TableCase {
    TableCase { family, params, target }
}

/// Every construction with a promised target dimension.
pub fn table_cases(max_graph_m: usize) -> Vec<TableCase> {
    let mut v = vec![case(
        Family::WpsPhi1,
        FamilyParams { weights: vec![1, 6, 10, 15], ..Default::default() },
        4,
    )];
    for w in WEIGHT_SETS {
        for k in [2, 3] {
            let n = w.len() - 1;
            v.push(case(Family::WpsPhik, FamilyParams { weights: w.to_vec(), k: Some(k), ..Default::default() }, 2 * n));
        }
    }
    for n in [2, 3, 4] {
        for k in [2, 3] {
            v.push(case(Family::PnDuf, FamilyParams { n: Some(n), k: Some(k), ..Default::default() }, 2 * (n - 1)));
        }
    }
    for n in 1..=3 {
        for d in 1..=3 {
            v.push(case(Family::P1Pn, FamilyParams { n: Some(n), d: Some(d), ..Default::default() }, 2 * (n + 1)));
        }
    }
    for m in 1..=max_graph_m {
        v.push(case(Family::P1P1PmGraph, FamilyParams { m: Some(m), ..Default::default() }, 2 * (m + 2)));
    }
    v.push(case(Family::TangentialP1P1, FamilyParams::default(), 3));
    v.push(case(Family::TangentialP2P2, FamilyParams::default(), 8));
    for d in 3..=5 {
        v.push(case(Family::P1P1DegD, FamilyParams { d: Some(d), ..Default::default() }, 4));
    }
    v
}

/// Constructions whose decoders are exercised.
pub fn roundtrip_cases() -> Vec<(Family, FamilyParams)> {
    let mut v = Vec::new();
    for w in WEIGHT_SETS {
        v.push((Family::WpsPhi1, FamilyParams { weights: w.to_vec(), ..Default::default() }));
        for k in 1..=3 {
            v.push((Family::WpsPhik, FamilyParams { weights: w.to_vec(), k: Some(k), ..Default::default() }));
        }
    }
    for n in 1..=3 {
        for d in 1..=3 {
            v.push((Family::P1Pn, FamilyParams { n: Some(n), d: Some(d), ..Default::default() }));
        }
    }
    for d in 3..=5 {
        v.push((Family::P1P1DegD, FamilyParams { d: Some(d), ..Default::default() }));
    }
    for dvec in [vec![1, 2], vec![1, 3], vec![1, 2, 4]] {
        v.push((Family::ChowVeronese, FamilyParams { m: Some(1), dvec, ..Default::default() }));
    }
    v
}

fn label_of(f: Family, p: &FamilyParams) -> String {
    case(f, p.clone(), 0).label()
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: &[String], ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { passed: true, detail: ok_detail }
    } else {
        let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
        Outcome {
            passed: false,
            detail: format!("{} failure(s): {}", failures.len(), shown.join("; ")),
        }
    }
}

fn ambient_dims(cfg: &SuiteConfig) -> Outcome {
    let cases = table_cases(cfg.gadget_max_m.max(10));
    let mut fails = Vec::new();
    for c in &cases {
        match cons::build(c.family, &c.params) {
            Ok(m) => {
                let promised = cons::expected_ambient(c.family, &c.params).unwrap_or(usize::MAX);
                if m.ambient_dim() != c.target || promised != c.target {
                    fails.push(format!("{}: built P^{}, listed P^{}, want P^{}", c.label(), m.ambient_dim(), promised, c.target));
                }
            }
            Err(e) => fails.push(format!("{}: {e}", c.label())),
        }
    }
    outcome(&fails, format!("{} constructions at their target dimension", cases.len()))
}

fn collisions(cfg: &SuiteConfig) -> Outcome {
    let cases = table_cases(cfg.gadget_max_m);
    let mut fails = Vec::new();
    let mut slowest = (String::new(), 0u128);
    for c in &cases {
        let m = match cons::build(c.family, &c.params) {
            Ok(m) => m,
            Err(e) => {
                fails.push(format!("{}: {e}", c.label()));
                continue;
            }
        };
        let r = collision_search(&m, cfg.collision_trials, cfg.seed, cfg.height);
        if !r.collisions.is_empty() || !r.base_locus_hits.is_empty() || !r.scaling_failures.is_empty() {
            fails.push(format!(
                "{}: {} collisions, {} base-locus hits, {} scaling failures",
                c.label(),
                r.collisions.len(),
                r.base_locus_hits.len(),
                r.scaling_failures.len()
            ));
        }
        if r.elapsed_ms > cfg.collision_budget_ms {
            fails.push(format!("{}: {} ms over budget", c.label(), r.elapsed_ms));
        }
        if r.elapsed_ms >= slowest.1 {
            slowest = (c.label(), r.elapsed_ms);
        }
    }
    outcome(
        &fails,
        format!(
            "{} constructions x {} pairs clean, slowest {} at {} ms",
            cases.len(),
            cfg.collision_trials,
            slowest.0,
            slowest.1
        ),
    )
}

fn roundtrips(cfg: &SuiteConfig) -> Outcome {
    let cases = roundtrip_cases();
    let mut fails = Vec::new();
    for (f, p) in &cases {
        let label = label_of(*f, p);
        match cons::build(*f, p) {
            Ok(m) => {
                let r = roundtrip_check(&m, cfg.roundtrip_trials, cfg.seed, cfg.height);
                if let Some(first) = r.roundtrip_failures.first() {
                    fails.push(format!("{label}: {} of {} failed, first: {}", r.roundtrip_failures.len(), cfg.roundtrip_trials, first.reason));
                }
            }
            Err(e) => fails.push(format!("{label}: {e}")),
        }
    }
    outcome(&fails, format!("{} decoders x {} samples round-trip", cases.len(), cfg.roundtrip_trials))
}

fn random_weighting(g: &GadgetGraph, seed: u64, i: u64) -> EdgeWeighting<Q> {
    let mut r = rng::trial_rng(seed, i);
    // sparse weightings reach the lower-rank strata
    let mut draw = |n: usize| -> Vec<Q> {
        (0..n)
            .map(|_| if r.random_bool(0.3) { qi(0) } else { rng::rational(&mut r, 10) })
            .collect()
    };
    let w1 = draw(g.e1.len());
    let w2 = draw(g.e2.len());
    EdgeWeighting::new(g, w1, w2).expect("lengths match the graph")
}

/// Random sparse weightings failing the flattening correspondence.
pub fn flattening_failures(g: &GadgetGraph, trials: u64, seed: u64) -> usize {
    let seed = rng::derive_seed(seed, &format!("flattening {}", g.m));
    rng::with_pool(|| {
        (0..trials)
            .into_par_iter()
            .filter(|&i| !gg::check_flattening_correspondence(g, &random_weighting(g, seed, i)))
            .count()
    })
}

fn gadget(cfg: &SuiteConfig) -> Outcome {
    let mut fails = Vec::new();
    for m in 1..=cfg.gadget_max_m {
        let (g, w) = match gg::build_gadget::<Q>(m) {
            Ok(x) => x,
            Err(e) => {
                fails.push(format!("m={m}: {e}"));
                continue;
            }
        };
        let (d1, d2, d) = w.dims();
        if (d1, d2, d) != (m, m - 1, 2 * m - 1) {
            fails.push(format!("m={m}: dims {d1}, {d2}, {d}"));
        }
        let bad = flattening_failures(&g, cfg.flattening_trials, cfg.seed);
        if bad > 0 {
            fails.push(format!("m={m}: {bad} flattening mismatches"));
        }
        match gg::check_theorem_samples(m, cfg.theorem_trials, cfg.seed, 20) {
            Ok(r) if r.is_clean() => {}
            Ok(r) => fails.push(format!("m={m}: theorem samples {}", r.to_json())),
            Err(e) => fails.push(format!("m={m}: {e}")),
        }
        match gg::check_corollary_annihilation(m) {
            Ok(true) => {}
            Ok(false) => fails.push(format!("m={m}: sections do not annihilate W")),
            Err(e) => fails.push(format!("m={m}: {e}")),
        }
    }
    outcome(
        &fails,
        format!(
            "m=1..{}: dims exact, {} flattening checks and {} samples per branch clean, annihilation exact",
            cfg.gadget_max_m, cfg.flattening_trials, cfg.theorem_trials
        ),
    )
}

fn random_fp<const P: u64, R: Rng>(r: &mut R) -> Fp<P> {
    Fp::new(r.random_range(0..P as i64))
}

fn random_rank_one<const P: u64, R: Rng>(m: usize, r: &mut R) -> Tensor222n<Fp<P>> {
    let a = [random_fp(r), random_fp(r)];
    let b = [random_fp(r), random_fp(r)];
    let c: Vec<Fp<P>> = (0..=m).map(|_| random_fp(r)).collect();
    Tensor222n::rank_one(&a, &b, &c).expect("nonempty third factor")
}

/// Rotates through uniform tensors, sums of random rank-one tensors and
/// tensors whose slices lie in a random pencil.
fn sample_tensor<const P: u64, R: Rng>(m: usize, i: u64, r: &mut R) -> Tensor222n<Fp<P>> {
    match i % 4 {
        0 => {
            let v: Vec<Fp<P>> = (0..4 * (m + 1)).map(|_| random_fp(r)).collect();
            Tensor222n::from_vector(m, &v).expect("length matches")
        }
        1 => random_rank_one(m, r).add(&random_rank_one(m, r)),
        2 => random_rank_one(m, r),
        _ => {
            let a: Vec<Fp<P>> = (0..4).map(|_| random_fp(r)).collect();
            let b: Vec<Fp<P>> = (0..4).map(|_| random_fp(r)).collect();
            let slices = (0..=m)
                .map(|_| {
                    let (x, y) = (random_fp::<P, R>(r), random_fp::<P, R>(r));
                    let e = |k: usize| x * a[k] + y * b[k];
                    [[e(0), e(1)], [e(2), e(3)]]
                })
                .collect();
            Tensor222n::new(m, slices).expect("m+1 slices")
        }
    }
}

/// Compares one decision with the table. Rank two over the quadratic
/// extension only must be absent from the table and split over `F_{P^2}`.
fn agrees<const P: u64>(table: &RankTwoTable<P>, t: &Tensor222n<Fp<P>>) -> std::result::Result<(), String> {
    let d = t.rank_decision();
    if !d.verify(t) {
        return Err(format!("{} witness does not verify", d.name()));
    }
    let brute = table.contains(t);
    let (claimed, ext_ok) = match &d {
        RankDecision::Zero | RankDecision::RankOne(_) | RankDecision::RankTwo(RankTwoWitness::Split(_)) => (true, true),
        RankDecision::RankTwo(RankTwoWitness::ExtensionOnly { .. }) => (false, pencil_splits_over_quadratic_extension(t)),
        RankDecision::Border2Rank3 | RankDecision::BorderAtLeast3 => (false, true),
    };
    if claimed != brute || !ext_ok {
        let v: Vec<u64> = t.to_vector().iter().map(|x| x.value()).collect();
        return Err(format!("{:?}: decision {} vs brute force {}", v, d.name(), brute));
    }
    Ok(())
}

/// Exhaustive agreement over `F_3` for `2×2×2`.
pub fn rank_oracle_exhaustive_f3() -> std::result::Result<u64, String> {
    let table = RankTwoTable::<3>::new(1);
    let mut count = 0;
    for code in 0..3u64.pow(8) {
        let v: Vec<Fp<3>> = (0..8).map(|k| Fp::new(((code / 3u64.pow(k)) % 3) as i64)).collect();
        agrees(&table, &Tensor222n::from_vector(1, &v).expect("eight entries"))?;
        count += 1;
    }
    Ok(count)
}

/// Sampled agreement over `F_5` for `2×2×3`.
pub fn rank_oracle_sampled_f5(samples: u64, seed: u64) -> std::result::Result<u64, String> {
    let table = RankTwoTable::<5>::new(2);
    let seed = rng::derive_seed(seed, "rank oracle f5");
    rng::with_pool(|| {
        (0..samples).into_par_iter().try_for_each(|i| {
            let mut r = rng::trial_rng(seed, i);
            agrees(&table, &sample_tensor::<5, _>(2, i, &mut r))
        })
    })?;
    Ok(samples)
}

fn rank_oracle(cfg: &SuiteConfig) -> Outcome {
    let mut fails = Vec::new();
    let mut counts = (0, 0);
    match rank_oracle_exhaustive_f3() {
        Ok(n) => counts.0 = n,
        Err(e) => fails.push(format!("F_3: {e}")),
    }
    match rank_oracle_sampled_f5(cfg.rank_samples, cfg.seed) {
        Ok(n) => counts.1 = n,
        Err(e) => fails.push(format!("F_5: {e}")),
    }
    outcome(&fails, format!("{} tensors over F_3 and {} over F_5 agree", counts.0, counts.1))
}

fn random_point_p3(seed: u64, i: u64, h: i64) -> Vec<Q> {
    let mut r = rng::trial_rng(seed, i);
    loop {
        let p: Vec<Q> = (0..4).map(|_| rng::rational(&mut r, h)).collect();
        if p.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return p;
        }
    }
}

fn secants(cfg: &SuiteConfig) -> Outcome {
    let mut fails = Vec::new();
    let quintic = RationalCurveP3::quintic();
    let seed = rng::derive_seed(cfg.seed, "quintic points");
    let verdicts: Vec<(u64, Result<SecantVerdict>)> = rng::with_pool(|| {
        (0..cfg.secant_points)
            .into_par_iter()
            .map(|i| (i, tensors::point_on_secant(&quintic, &random_point_p3(seed, i, cfg.height), SecantMode::ModularEvidence)))
            .collect()
    });
    let mut rational = 0;
    for (i, v) in verdicts {
        match v {
            Ok(SecantVerdict::OnHonestSecant(w)) => {
                if matches!(w, tensors::SecantWitness::Rational { .. }) {
                    rational += 1;
                }
            }
            Ok(other) => fails.push(format!("quintic point {i}: {}", other.name())),
            Err(e) => fails.push(format!("quintic point {i}: {e}")),
        }
    }
    match tensors::point_on_secant(&RationalCurveP3::twisted_cubic(), &[qi(0), qi(1), qi(0), qi(0)], SecantMode::ModularEvidence) {
        Ok(SecantVerdict::NotOnSecant { .. }) => {}
        Ok(v) => fails.push(format!("twisted cubic [0:1:0:0]: {}", v.name())),
        Err(e) => fails.push(format!("twisted cubic [0:1:0:0]: {e}")),
    }
    match QBinaryForm::from_i64(&[0, 1, 0, 0]).waring_rank() {
        Ok(3) => {}
        Ok(r) => fails.push(format!("rank of s0^2 s1 is {r}")),
        Err(e) => fails.push(format!("rank of s0^2 s1: {e}")),
    }
    if !tensors::wps2233_point_outside_secant() {
        fails.push("P(2,2,3,3) point not certified outside the secant variety".into());
    }
    outcome(
        &fails,
        format!(
            "{} quintic points on honest secants ({} with rational witnesses); twisted cubic, binary rank and P(2,2,3,3) facts hold",
            cfg.secant_points, rational
        ),
    )
}

fn monomial(e: &[u32]) -> QPoly {
    QPoly::monomial(vec![e.len()], qi(1), vec![e.to_vec()]).expect("one block")
}

fn separation(cfg: &SuiteConfig) -> Outcome {
    let mut fails = Vec::new();
    let weights = [2, 2, 3, 3];
    for (name, set) in [("E", sepinv::z6_six_element_set()), ("F", sepinv::z6_generators())] {
        match sepinv::separates_over_primes(6, &weights, &set, None, cfg.separation_trials, cfg.seed) {
            Ok(reps) => {
                for r in reps.iter().filter(|r| !r.is_clean()) {
                    fails.push(format!("set {name} mod {}: {}", r.p, r.to_json(false)));
                }
            }
            Err(e) => fails.push(format!("set {name}: {e}")),
        }
    }
    let control = (|| -> Result<Option<String>> {
        let p = sepinv::default_primes(3)[0];
        let a = CyclicAction::new(3, &[1, 2], p)?;
        let set = sepinv::z3_control();
        let r = sepinv::separates(&a, &set, 1_000, cfg.seed)?;
        let Some(w) = r.separation_violations.first() else {
            return Ok(Some("control separated every sampled pair".into()));
        };
        let vals = |x: &[u64]| -> Result<Vec<u64>> { Ok(set.reduce(p)?.iter().map(|f| f.eval(x, p)).collect()) };
        if vals(&w.v)? != vals(&w.w)? || a.same_orbit(&w.v, &w.w) {
            return Ok(Some(format!("control witness {:?}, {:?} does not check out", w.v, w.w)));
        }
        Ok(None)
    })();
    match control {
        Ok(None) => {}
        Ok(Some(msg)) => fails.push(msg),
        Err(e) => fails.push(format!("control: {e}")),
    }
    let phi1 = cons::build_wps_phi1(&[1, 6, 10, 15]).map(|m| m.sections);
    let phik = cons::build_wps_phik(&[1, 2, 3], 2).map(|m| m.sections);
    let cone_cases: Vec<(&str, Vec<u64>, u64, Result<Vec<QPoly>>)> = vec![
        ("veronese", vec![1, 1], 2, Ok(vec![monomial(&[2, 0]), monomial(&[1, 1]), monomial(&[0, 2])])),
        ("squares", vec![1, 1], 2, Ok(vec![monomial(&[2, 0]), monomial(&[0, 2])])),
        ("phi1(1,6,10,15)", vec![1, 6, 10, 15], 1, phi1),
        ("phik(1,2,3),k=2", vec![1, 2, 3], 2, phik),
    ];
    let mut comparable = 0;
    for (name, w, k, secs) in cone_cases {
        match secs.and_then(|s| sepinv::cone_projective_consistency(&w, k, &s, cfg.cone_trials, cfg.seed, None)) {
            Ok(r) if r.consistent() => comparable += r.comparable,
            Ok(r) => fails.push(format!("cone {name}: {}", r.to_json())),
            Err(e) => fails.push(format!("cone {name}: {e}")),
        }
    }
    outcome(
        &fails,
        format!(
            "E and F separate at {} trials over 3 primes; control fails with a witness; cone verdicts agree on {} comparable pairs",
            cfg.separation_trials, comparable
        ),
    )
}

fn substitution(cfg: &SuiteConfig) -> Outcome {
    let cases = table_cases(cfg.gadget_max_m);
    let mut fails = Vec::new();
    let mut certified = 0;
    for c in &cases {
        let label = c.label();
        let m = match cons::build(c.family, &c.params) {
            Ok(m) => m,
            Err(e) => {
                fails.push(format!("{label}: {e}"));
                continue;
            }
        };
        let dim = m.source.dimension();
        if m.ambient_dim() != c.target || c.target > 2 * dim + 1 {
            fails.push(format!("{label}: P^{} from dimension {dim}", m.ambient_dim()));
        }
        if m.decoder.is_some() {
            let r = roundtrip_check(&m, cfg.roundtrip_trials, cfg.seed, cfg.height);
            if r.roundtrip_failures.is_empty() {
                certified += 1;
            } else {
                fails.push(format!("{label}: {} round-trip failures", r.roundtrip_failures.len()));
            }
            continue;
        }
        let certificate = match c.family {
            Family::TangentialP2P2 => tensors::check_tangential_p2p2_centre(cfg.theorem_trials, cfg.seed, 20).map(|r| r.ok()),
            Family::P1P1PmGraph => gg::check_corollary_annihilation(c.params.m.unwrap_or(1)),
            _ => Ok(false),
        };
        match certificate {
            Ok(true) => certified += 1,
            Ok(false) => fails.push(format!("{label}: no injectivity certificate")),
            Err(e) => fails.push(format!("{label}: {e}")),
        }
    }
    outcome(&fails, format!("{certified} of {} constructions reach their bound with a certificate", cases.len()))
}

/// Runs one criterion by id.
pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> Option<CriterionResult> {
    let (_, _, name) = *CRITERIA.iter().find(|(i, _, _)| *i == id)?;
    let start = Instant::now();
    let o = match id {
        1 => ambient_dims(cfg),
        2 => collisions(cfg),
        3 => roundtrips(cfg),
        4 => gadget(cfg),
        5 => rank_oracle(cfg),
        6 => secants(cfg),
        7 => separation(cfg),
        _ => substitution(cfg),
    };
    Some(CriterionResult {
        id,
        name,
        passed: o.passed,
        detail: o.detail,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Runs the selected criteria (all when `only` is empty) in order.
pub fn run_suite(only: &[u8], cfg: &SuiteConfig) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter(|(id, _, _)| only.is_empty() || only.contains(id))
        .filter_map(|(id, _, _)| run_criterion(*id, cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f3_table_membership() {
        let table = RankTwoTable::<3>::new(1);
        let w_state = {
            let mut t = Tensor222n::<Fp<3>>::basis(1, 0, 0, 1);
            t = t.add(&Tensor222n::basis(1, 0, 1, 0));
            t.add(&Tensor222n::basis(1, 1, 0, 0))
        };
        assert!(!table.contains(&w_state));
        assert!(table.contains(&Tensor222n::basis(1, 0, 0, 0).add(&Tensor222n::basis(1, 1, 1, 1))));
    }

    #[test]
    fn quick_suite_runs() {
        let cfg = SuiteConfig::quick();
        for r in run_suite(&[1, 5], &cfg) {
            assert!(r.passed, "{}", r.line());
        }
    }
}
