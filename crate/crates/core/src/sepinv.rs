//! Separating invariants of diagonal cyclic actions over prime fields, and
//! the affine-cone versus projective cross-check for weighted projective
//! morphisms.
//!
//! Everything runs over `F_p` with `p ≡ 1 (mod k)`, so all roots of unity
//! involved are in the field and orbit tests are exact. Separation of
//! `F_p`-points is evidence for separation over `C`, and a violation is an
//! exact falsification.

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exactalg::poly::Polynomial;
use crate::modp::{self, poly as pp};
use crate::rng::{derive_seed, trial_rng, with_pool};
use crate::spaces::bezout;
use crate::{Error, QPoly, Result};

/// `ξ · x = (ξ^{q_0} x_0, …, ξ^{q_n} x_n)` for `ξ` in the `k`-th roots of
/// unity of `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    pub k: u64,
    pub weights: Vec<u64>,
    pub p: u64,
    pub zeta: u64,
}

impl CyclicAction {
    /// Uses the smallest residue of exact order `k`.
    pub fn new(k: u64, weights: &[u64], p: u64) -> Result<Self> {
        let zeta = modp::element_of_order(k, p)
            .ok_or_else(|| Error::Hypothesis(format!("F_{p} has no element of order {k}")))?;
        Self::with_zeta(k, weights, p, zeta)
    }

    pub fn with_zeta(k: u64, weights: &[u64], p: u64, zeta: u64) -> Result<Self> {
        if k == 0 || weights.is_empty() {
            return Err(Error::Invalid("need k >= 1 and at least one weight".into()));
        }
        if !modp::is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        let order_ok = modp::pow(zeta, k, p) == 1 && (1..k).all(|j| modp::pow(zeta, j, p) != 1);
        if !order_ok {
            return Err(Error::Hypothesis(format!("{zeta} does not have order {k} mod {p}")));
        }
        Ok(CyclicAction {
            k,
            weights: weights.to_vec(),
            p,
            zeta,
        })
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// `ζ^j · v`.
    pub fn act(&self, j: u64, v: &[u64]) -> Vec<u64> {
        v.iter()
            .zip(&self.weights)
            .map(|(&x, &q)| modp::mul(x, modp::pow(self.zeta, (j * q) % self.k, self.p), self.p))
            .collect()
    }

    pub fn same_orbit(&self, v: &[u64], w: &[u64]) -> bool {
        (0..self.k).any(|j| self.act(j, v) == w)
    }
}

/// The smallest three primes above `10^6` with `p ≡ 1 (mod k)`.
pub fn default_primes(k: u64) -> Vec<u64> {
    modp::primes_congruent_one(1_000_000, k, 3)
}

/// A polynomial over `F_p` as a list of `(exponents, coefficient)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub terms: Vec<(Vec<u32>, u64)>,
}

impl ModPoly {
    pub fn from_q(f: &QPoly, p: u64) -> Result<Self> {
        if f.shape().len() != 1 {
            return Err(Error::ShapeMismatch("invariants live on a single block of variables".into()));
        }
        let mut terms = Vec::new();
        for (e, c) in f.terms() {
            let c = modp::from_q(c, p).ok_or_else(|| Error::Invalid(format!("{p} divides a denominator of {f}")))?;
            if c != 0 {
                terms.push((e.blocks()[0].clone(), c));
            }
        }
        Ok(ModPoly { terms })
    }

    pub fn eval(&self, x: &[u64], p: u64) -> u64 {
        self.terms.iter().fold(0, |acc, (e, c)| {
            let t = e
                .iter()
                .zip(x)
                .fold(*c, |t, (&ei, &xi)| modp::mul(t, modp::pow(xi, ei as u64, p), p));
            modp::add(acc, t, p)
        })
    }

    /// Coefficients of `X ↦ f(x with x_i = X)`, low degree first.
    fn restrict(&self, x: &[u64], i: usize, p: u64) -> pp::P {
        let deg = self.terms.iter().map(|(e, _)| e[i]).max().unwrap_or(0) as usize;
        let mut out = vec![0u64; deg + 1];
        for (e, c) in &self.terms {
            let t = e
                .iter()
                .zip(x)
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(*c, |t, (_, (&ej, &xj))| modp::mul(t, modp::pow(xj, ej as u64, p), p));
            out[e[i] as usize] = modp::add(out[e[i] as usize], t, p);
        }
        pp::trim(out)
    }
}

/// A candidate separating set, kept over ℚ and reduced per prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSet {
    pub nvars: usize,
    pub polys: Vec<QPoly>,
}

impl InvariantSet {
    pub fn new(polys: Vec<QPoly>) -> Result<Self> {
        let nvars = match polys.first() {
            Some(f) if f.shape().len() == 1 => f.shape()[0],
            Some(_) => return Err(Error::ShapeMismatch("invariants live on a single block of variables".into())),
            None => return Err(Error::Invalid("empty invariant set".into())),
        };
        if polys.iter().any(|f| f.shape() != [nvars]) {
            return Err(Error::ShapeMismatch("invariants use different variable counts".into()));
        }
        Ok(InvariantSet { nvars, polys })
    }

    /// Every term satisfies `Σ q_i e_i ≡ 0 (mod k)`.
    pub fn validate(&self, k: u64, weights: &[u64]) -> Result<()> {
        if weights.len() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "{} weights for {} variables",
                weights.len(),
                self.nvars
            )));
        }
        for f in &self.polys {
            for (e, _) in f.terms() {
                if e.weighted_degree(weights) % k != 0 {
                    return Err(Error::Hypothesis(format!("term {e} of {f} is not invariant")));
                }
            }
        }
        Ok(())
    }

    pub fn reduce(&self, p: u64) -> Result<Vec<ModPoly>> {
        self.polys.iter().map(|f| ModPoly::from_q(f, p)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({"polys": self.polys.iter().map(QPoly::to_json).collect::<Vec<_>>()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .get("polys")
            .and_then(Value::as_array)
            .or_else(|| v.as_array())
            .ok_or_else(|| Error::Parse("invariant set: expected {\"polys\": [...]}".into()))?;
        Self::new(arr.iter().map(QPoly::from_json).collect::<Result<_>>()?)
    }
}

fn monomial(e: &[u32]) -> QPoly {
    Polynomial::monomial(vec![e.len()], crate::qi(1), vec![e.to_vec()]).expect("one block")
}

/// `x0^i x1^{3-i}` for `i = 0..3` and `x2^j x3^{2-j}` for `j = 0..2`.
pub fn z6_generators() -> InvariantSet {
    let mut v: Vec<QPoly> = (0..=3).map(|i| monomial(&[i, 3 - i, 0, 0])).collect();
    v.extend((0..=2).map(|j| monomial(&[0, 0, j, 2 - j])));
    InvariantSet::new(v).unwrap()
}

/// `{f0, f1, f2 + f3, g0, g1, g2}` built from [`z6_generators`].
pub fn z6_six_element_set() -> InvariantSet {
    let f = z6_generators().polys;
    InvariantSet::new(vec![
        f[0].clone(),
        f[1].clone(),
        &f[2] + &f[3],
        f[4].clone(),
        f[5].clone(),
        f[6].clone(),
    ])
    .unwrap()
}

/// `{x0^3}` for `Z_3` acting by `diag(ξ, ξ^2)`; misses the second coordinate.
pub fn z3_control() -> InvariantSet {
    InvariantSet::new(vec![monomial(&[3, 0])]).unwrap()
}

/// All monomials of weighted degree `≡ 0 (mod k)` and standard degree `deg`.
pub fn invariant_monomials(k: u64, weights: &[u64], deg: u32) -> InvariantSet {
    let polys = crate::constructions::monomials_desc(weights.len(), deg)
        .into_iter()
        .filter(|e| e.iter().zip(weights).map(|(&a, &q)| a as u64 * q).sum::<u64>() % k == 0)
        .map(|e| monomial(&e))
        .collect();
    InvariantSet::new(polys).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub v: Vec<u64>,
    pub w: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct SeparationReport {
    pub p: u64,
    pub k: u64,
    pub zeta: u64,
    pub trials: u64,
    pub pairs_checked: u64,
    /// Equal values on different orbits.
    pub separation_violations: Vec<PairWitness>,
    /// Different values on one orbit; a sign of a non-invariant set.
    pub invariance_violations: Vec<PairWitness>,
    pub elapsed_ms: u128,
}

impl SeparationReport {
    pub fn is_clean(&self) -> bool {
        self.separation_violations.is_empty() && self.invariance_violations.is_empty()
    }

    pub fn to_json(&self, with_time: bool) -> Value {
        let ws = |v: &[PairWitness]| -> Vec<Value> { v.iter().take(10).map(|x| json!({"v": x.v, "w": x.w})).collect() };
        let mut out = json!({
            "prime": self.p,
            "k": self.k,
            "zeta": self.zeta,
            "trials": self.trials,
            "pairs_checked": self.pairs_checked,
            "separation_violations": self.separation_violations.len(),
            "invariance_violations": self.invariance_violations.len(),
            "separation_examples": ws(&self.separation_violations),
            "invariance_examples": ws(&self.invariance_violations),
            "evidence": "F_p points only",
        });
        if with_time {
            out["elapsed_ms"] = json!(self.elapsed_ms);
        }
        out
    }
}

#[derive(Default)]
struct Tally {
    pairs: u64,
    sep: Vec<PairWitness>,
    inv: Vec<PairWitness>,
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.pairs += o.pairs;
        self.sep.extend(o.sep);
        self.inv.extend(o.inv);
        self
    }
}

fn random_point<R: Rng>(n: usize, p: u64, sparse: bool, rng: &mut R) -> Vec<u64> {
    loop {
        let v: Vec<u64> = (0..n)
            .map(|_| {
                if sparse && rng.random_range(0..4) == 0 {
                    0
                } else {
                    rng.random_range(0..p)
                }
            })
            .collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

fn check_pair(a: &CyclicAction, fs: &[ModPoly], v: &[u64], w: &[u64], t: &mut Tally) {
    t.pairs += 1;
    let eq = fs.iter().all(|f| f.eval(v, a.p) == f.eval(w, a.p));
    let orbit = a.same_orbit(v, w);
    if eq && !orbit {
        t.sep.push(PairWitness {
            v: v.to_vec(),
            w: w.to_vec(),
        });
    } else if orbit && !eq {
        t.inv.push(PairWitness {
            v: v.to_vec(),
            w: w.to_vec(),
        });
    }
}

/// Samples pairs and reports separation and invariance violations.
///
/// Trials cycle through: random pairs; pairs where `w` solves
/// `f(w) = f(v)` in one coordinate for the first few invariants;
/// coordinatewise twists of `v` by independent `k`-th roots of unity; and
/// the whole orbit of a random point.
pub fn separates(a: &CyclicAction, set: &InvariantSet, trials: u64, seed: u64) -> Result<SeparationReport> {
    set.validate(a.k, &a.weights)?;
    let fs = set.reduce(a.p)?;
    let n = a.nvars();
    let start = Instant::now();
    let seed = derive_seed(seed, &format!("sepinv-{}", a.p));
    let tally = with_pool(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut r = trial_rng(seed, i);
                let mut t = Tally::default();
                let v = random_point(n, a.p, true, &mut r);
                match i % 4 {
                    0 => {
                        let w = random_point(n, a.p, true, &mut r);
                        check_pair(a, &fs, &v, &w, &mut t);
                    }
                    1 => {
                        let which = (i / 4) as usize % fs.len().min(3);
                        let mut w = random_point(n, a.p, true, &mut r);
                        let c = r.random_range(0..n);
                        // make the one-variable restriction of f agree with f(v)
                        let mut g = fs[which].restrict(&w, c, a.p);
                        let target = fs[which].eval(&v, a.p);
                        if g.is_empty() {
                            g.push(0);
                        }
                        g[0] = modp::sub(g[0], target, a.p);
                        for x in pp::roots(&g, a.p) {
                            w[c] = x;
                            if w.iter().any(|&y| y != 0) {
                                check_pair(a, &fs, &v, &w, &mut t);
                            }
                        }
                    }
                    2 => {
                        let w: Vec<u64> = v
                            .iter()
                            .map(|&x| modp::mul(x, modp::pow(a.zeta, r.random_range(0..a.k), a.p), a.p))
                            .collect();
                        check_pair(a, &fs, &v, &w, &mut t);
                    }
                    _ => {
                        for j in 0..a.k {
                            let w = a.act(j, &v);
                            check_pair(a, &fs, &v, &w, &mut t);
                        }
                    }
                }
                t
            })
            .reduce(Tally::default, Tally::merge)
    });
    Ok(SeparationReport {
        p: a.p,
        k: a.k,
        zeta: a.zeta,
        trials,
        pairs_checked: tally.pairs,
        separation_violations: tally.sep,
        invariance_violations: tally.inv,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// [`separates`] over each of `primes` (default: [`default_primes`]).
pub fn separates_over_primes(
    k: u64,
    weights: &[u64],
    set: &InvariantSet,
    primes: Option<&[u64]>,
    trials: u64,
    seed: u64,
) -> Result<Vec<SeparationReport>> {
    let ps = primes.map_or_else(|| default_primes(k), <[u64]>::to_vec);
    ps.iter()
        .map(|&p| separates(&CyclicAction::new(k, weights, p)?, set, trials, seed))
        .collect()
}

#[derive(Clone, Debug)]
pub struct MinimalityReport {
    /// For each dropped index, a separation violation of the remaining set.
    pub dropped: Vec<(usize, Option<PairWitness>)>,
}

/// Tries every subset with one element removed and looks for a violation.
/// Finding none proves nothing.
pub fn drop_one_search(a: &CyclicAction, set: &InvariantSet, trials: u64, seed: u64) -> Result<MinimalityReport> {
    let mut dropped = Vec::new();
    for i in 0..set.polys.len() {
        let mut polys = set.polys.clone();
        polys.remove(i);
        if polys.is_empty() {
            dropped.push((i, None));
            continue;
        }
        let r = separates(a, &InvariantSet::new(polys)?, trials, seed)?;
        dropped.push((i, r.separation_violations.into_iter().next()));
    }
    Ok(MinimalityReport { dropped })
}

/// `t · v = (t^{q_i} v_i)`.
fn weighted_scale(weights: &[u64], t: u64, v: &[u64], p: u64) -> Vec<u64> {
    v.iter()
        .zip(weights)
        .map(|(&x, &q)| modp::mul(x, modp::pow(t, q, p), p))
        .collect()
}

/// Whether `w = t · v` for some `t` in the algebraic closure of `F_p`.
pub fn weighted_equivalent(weights: &[u64], v: &[u64], w: &[u64], p: u64) -> bool {
    let mut ratios = Vec::new();
    let mut qs = Vec::new();
    for i in 0..v.len() {
        match (v[i] == 0, w[i] == 0) {
            (true, true) => {}
            (false, false) => {
                ratios.push(modp::mul(w[i], modp::inv(v[i], p).unwrap(), p));
                qs.push(weights[i]);
            }
            _ => return false,
        }
    }
    if qs.is_empty() {
        return true;
    }
    let (g, a) = bezout(&qs);
    let s = ratios.iter().zip(&a).fold(1u64, |acc, (&r, &e)| {
        let base = if e < 0 { modp::inv(r, p).unwrap() } else { r };
        modp::mul(acc, modp::pow(base, e.unsigned_abs(), p), p)
    });
    ratios.iter().zip(&qs).all(|(&r, &q)| r == modp::pow(s, q / g, p))
}

#[derive(Clone, Debug)]
pub struct ConeReport {
    pub weights: Vec<u64>,
    /// Weighted degree of the sections; the group is `μ_degree`.
    pub degree: u64,
    pub prime: u64,
    pub pairs: u64,
    pub comparable: u64,
    /// Proportional images whose ratio has no `degree`-th root in `F_p`.
    pub not_liftable: u64,
    pub base_locus_hits: u64,
    pub affine_violations: Vec<PairWitness>,
    pub projective_violations: Vec<PairWitness>,
    pub discrepancies: Vec<PairWitness>,
}

impl ConeReport {
    pub fn consistent(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let ws = |v: &[PairWitness]| -> Vec<Value> { v.iter().take(10).map(|x| json!({"v": x.v, "w": x.w})).collect() };
        json!({
            "weights": self.weights,
            "degree": self.degree,
            "prime": self.prime,
            "pairs": self.pairs,
            "comparable": self.comparable,
            "not_liftable": self.not_liftable,
            "base_locus_hits": self.base_locus_hits,
            "affine_violations": self.affine_violations.len(),
            "projective_violations": self.projective_violations.len(),
            "affine_examples": ws(&self.affine_violations),
            "projective_examples": ws(&self.projective_violations),
            "discrepancies": ws(&self.discrepancies),
            "consistent": self.consistent(),
        })
    }
}

#[derive(Default)]
struct ConeTally {
    pairs: u64,
    comparable: u64,
    not_liftable: u64,
    base: u64,
    aff: Vec<PairWitness>,
    proj: Vec<PairWitness>,
    disc: Vec<PairWitness>,
}

impl ConeTally {
    fn merge(mut self, o: ConeTally) -> ConeTally {
        self.pairs += o.pairs;
        self.comparable += o.comparable;
        self.not_liftable += o.not_liftable;
        self.base += o.base;
        self.aff.extend(o.aff);
        self.proj.extend(o.proj);
        self.disc.extend(o.disc);
        self
    }
}

/// Compares, pair by pair, the affine verdict (some `t·v` has the same
/// values as `w` without lying in its `μ_N`-orbit) with the projective
/// verdict (proportional images of inequivalent points), where `N` is the
/// weighted degree of `sections`.
pub fn cone_projective_consistency(
    weights: &[u64],
    k: u64,
    sections: &[QPoly],
    trials: u64,
    seed: u64,
    prime: Option<u64>,
) -> Result<ConeReport> {
    let m = crate::morphism::Morphism::new(
        crate::SpaceDescriptor::weighted(weights),
        sections.to_vec(),
        "cone check",
        None,
    )?;
    let n_deg = match m.multidegree {
        crate::morphism::Multidegree::Weighted(d) => d,
        _ => unreachable!("weighted source"),
    };
    let lcm = crate::morphism::lcm_all(weights);
    if n_deg != k * lcm {
        return Err(Error::Hypothesis(format!(
            "sections have degree {n_deg}, expected k * lcm(weights) = {}",
            k * lcm
        )));
    }
    let p = prime.unwrap_or_else(|| default_primes(n_deg)[0]);
    if (p - 1) % n_deg != 0 {
        return Err(Error::Hypothesis(format!("{p} is not 1 mod {n_deg}")));
    }
    let mu = CyclicAction::new(n_deg, weights, p)?;
    let fs: Vec<ModPoly> = sections.iter().map(|f| ModPoly::from_q(f, p)).collect::<Result<_>>()?;
    let n = weights.len();
    let seed = derive_seed(seed, "cone");
    let t = with_pool(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut r = trial_rng(seed, i);
                let mut t = ConeTally::default();
                let v = random_point(n, p, true, &mut r);
                let w = match i % 3 {
                    0 => random_point(n, p, true, &mut r),
                    1 => weighted_scale(weights, r.random_range(1..p), &v, p),
                    _ => {
                        // independent roots of unity per coordinate, then a scaling
                        let tw: Vec<u64> = v
                            .iter()
                            .map(|&x| modp::mul(x, modp::pow(mu.zeta, r.random_range(0..n_deg), p), p))
                            .collect();
                        weighted_scale(weights, r.random_range(1..p), &tw, p)
                    }
                };
                t.pairs += 1;
                let fv: Vec<u64> = fs.iter().map(|f| f.eval(&v, p)).collect();
                let fw: Vec<u64> = fs.iter().map(|f| f.eval(&w, p)).collect();
                if fv.iter().all(|&x| x == 0) || fw.iter().all(|&x| x == 0) {
                    t.base += 1;
                    return t;
                }
                let piv = fv.iter().position(|&x| x != 0).unwrap();
                let c = modp::mul(fw[piv], modp::inv(fv[piv], p).unwrap(), p);
                let proportional = fv.iter().zip(&fw).all(|(&a, &b)| modp::mul(a, c, p) == b);
                let pair = PairWitness { v: v.clone(), w: w.clone() };
                let projective = proportional && !weighted_equivalent(weights, &v, &w, p);
                let affine = if proportional {
                    // λ with λ^N = c
                    let mut g = vec![0u64; n_deg as usize + 1];
                    g[0] = modp::neg(c, p);
                    g[n_deg as usize] = 1;
                    match pp::roots(&g, p).first() {
                        None => {
                            t.not_liftable += 1;
                            if projective {
                                t.proj.push(pair);
                            }
                            return t;
                        }
                        Some(&lam) => {
                            let vl = weighted_scale(weights, lam, &v, p);
                            debug_assert!(fs.iter().all(|f| f.eval(&vl, p) == f.eval(&w, p)));
                            !mu.same_orbit(&vl, &w)
                        }
                    }
                } else {
                    false
                };
                t.comparable += 1;
                if affine {
                    t.aff.push(pair.clone());
                }
                if projective {
                    t.proj.push(pair.clone());
                }
                if affine != projective {
                    t.disc.push(pair);
                }
                t
            })
            .reduce(ConeTally::default, ConeTally::merge)
    });
    Ok(ConeReport {
        weights: weights.to_vec(),
        degree: n_deg,
        prime: p,
        pairs: t.pairs,
        comparable: t.comparable,
        not_liftable: t.not_liftable,
        base_locus_hits: t.base,
        affine_violations: t.aff,
        projective_violations: t.proj,
        discrepancies: t.disc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_examples() {
        let a = CyclicAction::with_zeta(6, &[2, 2, 3, 3], 13, 4).unwrap();
        assert!(a.same_orbit(&[1, 1, 1, 1], &[1, 1, 1, 1]));
        assert!(a.same_orbit(&[1, 1, 1, 1], &[3, 3, 12, 12]));
        assert!(!a.same_orbit(&[1, 0, 0, 0], &[2, 0, 0, 0]));
        assert!(CyclicAction::with_zeta(6, &[2, 2, 3, 3], 13, 3).is_err());
    }

    #[test]
    fn z6_sets_separate() {
        let a = CyclicAction::new(6, &[2, 2, 3, 3], default_primes(6)[0]).unwrap();
        for s in [z6_generators(), z6_six_element_set()] {
            let r = separates(&a, &s, 4000, 0).unwrap();
            assert!(r.is_clean(), "{:?}", r.to_json(false));
        }
    }

    #[test]
    fn control_fails() {
        let a = CyclicAction::new(3, &[1, 2], default_primes(3)[0]).unwrap();
        let r = separates(&a, &z3_control(), 200, 0).unwrap();
        assert!(!r.separation_violations.is_empty());
        assert!(r.invariance_violations.is_empty());
    }

    #[test]
    fn non_invariant_rejected() {
        let s = InvariantSet::new(vec![monomial(&[1, 0])]).unwrap();
        assert!(s.validate(3, &[1, 2]).is_err());
    }

    #[test]
    fn cone_examples() {
        let q = |e: &[u32]| monomial(e);
        let r = cone_projective_consistency(&[1, 1], 2, &[q(&[2, 0]), q(&[1, 1]), q(&[0, 2])], 600, 0, None).unwrap();
        assert!(r.consistent() && r.affine_violations.is_empty() && r.projective_violations.is_empty());
        let r = cone_projective_consistency(&[1, 1], 2, &[q(&[2, 0]), q(&[0, 2])], 600, 0, None).unwrap();
        assert!(r.consistent());
        assert!(!r.affine_violations.is_empty() && !r.projective_violations.is_empty());
        let phi = crate::constructions::build_wps_phi1(&[1, 6, 10, 15]).unwrap().sections;
        let r = cone_projective_consistency(&[1, 6, 10, 15], 1, &phi, 600, 0, None).unwrap();
        assert!(r.consistent() && r.projective_violations.is_empty(), "{}", r.to_json());
    }

    #[test]
    fn weighted_equivalence_mod_p() {
        let p = 13;
        assert!(weighted_equivalent(&[2, 2], &[1, 1], &[12, 12], p));
        assert!(!weighted_equivalent(&[1, 1], &[1, 1], &[1, 12], p));
        assert!(weighted_equivalent(&[1, 2], &[1, 1], &[2, 4], p));
    }
}
