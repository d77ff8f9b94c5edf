//! The graph `Γ_m` on vertices `0..=m`, its edge weightings, and the tensor
//! subspace `W = W_1 + W_2 ⊂ C^2 ⊗ C^2 ⊗ C^{m+1}` whose annihilator gives
//! the `P^1 × P^1 × P^m → P^{2m+4}` morphism.

use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exactalg::linalg::rank_of_vectors;
use crate::rng::{derive_seed, nonzero_rational, rational, trial_rng, with_pool};
use crate::tensors::{secant_span_meets_subspace, RankDecision, Tensor222n};
use crate::{Error, Field, Matrix, QPoly, Result, Q};

/// `E_2` in path order: `(0,m), (m,1), (1,m-1), (m-1,2), …`.
pub fn e2_edges(m: usize) -> Vec<(usize, usize)> {
    let first = m / 2;
    let second = m.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(first + second);
    for i in 0..first.max(second) {
        if i < first {
            out.push((i, m - i));
        }
        if i < second {
            out.push((m - i, i + 1));
        }
    }
    out
}

pub fn e1_edges(m: usize) -> Vec<(usize, usize)> {
    (0..m).map(|i| (i, i + 1)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetGraph {
    pub m: usize,
    pub e1: Vec<(usize, usize)>,
    pub e2: Vec<(usize, usize)>,
}

fn is_directed_path(edges: &[(usize, usize)]) -> bool {
    let mut seen = std::collections::HashSet::new();
    if let Some(&(a, _)) = edges.first() {
        seen.insert(a);
    }
    edges.windows(2).all(|w| w[0].1 == w[1].0) && edges.iter().all(|&(_, b)| seen.insert(b))
}

impl GadgetGraph {
    pub fn new(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::Hypothesis("the gadget graph needs m >= 1".into()));
        }
        let g = GadgetGraph {
            m,
            e1: e1_edges(m),
            e2: e2_edges(m),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.m;
        if self.e1.len() != m || self.e2.len() != m - 1 {
            return Err(Error::Invalid(format!(
                "edge counts {} and {} for m = {m}",
                self.e1.len(),
                self.e2.len()
            )));
        }
        if !is_directed_path(&self.e1) || !is_directed_path(&self.e2) {
            return Err(Error::Invalid("edge sets are not directed paths".into()));
        }
        Ok(())
    }

    /// `⌈m/2⌉`, the vertex with no `E_2` edge.
    pub fn special_vertex(&self) -> usize {
        self.m.div_ceil(2)
    }

    pub fn num_edges(&self) -> usize {
        self.e1.len() + self.e2.len()
    }
}

/// Weights on `E_1` and `E_2`, in the order of the graph's edge lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWeighting<F> {
    pub w1: Vec<F>,
    pub w2: Vec<F>,
}

impl<F: Field> EdgeWeighting<F> {
    pub fn new(g: &GadgetGraph, w1: Vec<F>, w2: Vec<F>) -> Result<Self> {
        if w1.len() != g.e1.len() || w2.len() != g.e2.len() {
            return Err(Error::ShapeMismatch(format!(
                "weighting has {}+{} entries, graph has {}+{} edges",
                w1.len(),
                w2.len(),
                g.e1.len(),
                g.e2.len()
            )));
        }
        Ok(EdgeWeighting { w1, w2 })
    }

    pub fn zero(g: &GadgetGraph) -> Self {
        EdgeWeighting {
            w1: vec![F::zero(); g.e1.len()],
            w2: vec![F::zero(); g.e2.len()],
        }
    }

    /// Indicator of `E_1` edge `idx` (`second = false`) or `E_2` edge `idx`.
    pub fn indicator(g: &GadgetGraph, second: bool, idx: usize) -> Self {
        let mut w = Self::zero(g);
        if second {
            w.w2[idx] = F::one();
        } else {
            w.w1[idx] = F::one();
        }
        w
    }

    pub fn is_zero(&self) -> bool {
        self.w1.iter().chain(&self.w2).all(F::is_zero)
    }
}

/// `(in E_1, out E_1, in E_2, out E_2)` total weights at vertex `k`.
pub fn psi<F: Field>(g: &GadgetGraph, k: usize, w: &EdgeWeighting<F>) -> [F; 4] {
    let mut out = [F::zero(), F::zero(), F::zero(), F::zero()];
    for (edges, ws, base) in [(&g.e1, &w.w1, 0), (&g.e2, &w.w2, 2)] {
        for (&(i, j), x) in edges.iter().zip(ws) {
            if j == k {
                out[base] = out[base].clone() + x.clone();
            }
            if i == k {
                out[base + 1] = out[base + 1].clone() + x.clone();
            }
        }
    }
    out
}

pub fn psi_matrix<F: Field>(g: &GadgetGraph, w: &EdgeWeighting<F>) -> Matrix<F> {
    Matrix::from_rows((0..=g.m).map(|k| psi(g, k, w).to_vec()).collect(), 4)
}

pub fn dim_zw<F: Field>(g: &GadgetGraph, w: &EdgeWeighting<F>) -> usize {
    psi_matrix(g, w).rank()
}

/// `u_{i,j} = e0⊗e0⊗e_j + e0⊗e1⊗e_i + e1⊗e0⊗e_i`.
pub fn u_tensor<F: Field>(m: usize, i: usize, j: usize) -> Tensor222n<F> {
    Tensor222n::basis(m, 0, 0, j)
        .add(&Tensor222n::basis(m, 0, 1, i))
        .add(&Tensor222n::basis(m, 1, 0, i))
}

/// `v_{i,j} = e1⊗e0⊗e_j + e1⊗e1⊗e_i + e0⊗e0⊗e_i`.
pub fn v_tensor<F: Field>(m: usize, i: usize, j: usize) -> Tensor222n<F> {
    Tensor222n::basis(m, 1, 0, j)
        .add(&Tensor222n::basis(m, 1, 1, i))
        .add(&Tensor222n::basis(m, 0, 0, i))
}

#[derive(Clone, Debug)]
pub struct GadgetSubspace<F> {
    pub w1: Vec<Tensor222n<F>>,
    pub w2: Vec<Tensor222n<F>>,
}

impl<F: Field> GadgetSubspace<F> {
    pub fn basis(&self) -> Vec<Tensor222n<F>> {
        self.w1.iter().chain(&self.w2).cloned().collect()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        let r = |ts: &[Tensor222n<F>]| rank_of_vectors(&ts.iter().map(Tensor222n::to_vector).collect::<Vec<_>>());
        (r(&self.w1), r(&self.w2), r(&self.basis()))
    }
}

pub fn build_gadget<F: Field>(m: usize) -> Result<(GadgetGraph, GadgetSubspace<F>)> {
    let g = GadgetGraph::new(m)?;
    let sub = GadgetSubspace {
        w1: g.e1.iter().map(|&(i, j)| u_tensor(m, i, j)).collect(),
        w2: g.e2.iter().map(|&(i, j)| v_tensor(m, i, j)).collect(),
    };
    let (d1, d2, d) = sub.dims();
    if d1 != m || d2 != m - 1 || d != 2 * m - 1 {
        return Err(Error::Invalid(format!("gadget dimensions {d1}, {d2}, {d} for m = {m}")));
    }
    Ok((g, sub))
}

/// `Σ_{E_1} w u + Σ_{E_2} w v`.
pub fn phi<F: Field>(g: &GadgetGraph, w: &EdgeWeighting<F>) -> Tensor222n<F> {
    let m = g.m;
    let mut t = Tensor222n::zero(m);
    for (&(i, j), x) in g.e1.iter().zip(&w.w1) {
        t = t.add(&u_tensor(m, i, j).scale(x));
    }
    for (&(i, j), x) in g.e2.iter().zip(&w.w2) {
        t = t.add(&v_tensor(m, i, j).scale(x));
    }
    t
}

/// Slice `k` of `Φ(w)` mapped through `(S00 − S11, S01, S10 − S01, S11)`.
fn slice_to_psi<F: Field>(s: &[[F; 2]; 2]) -> [F; 4] {
    [
        s[0][0].clone() - s[1][1].clone(),
        s[0][1].clone(),
        s[1][0].clone() - s[0][1].clone(),
        s[1][1].clone(),
    ]
}

/// Checks that the basis change sends every slice of `Φ(w)` to `Ψ_k(w)` and
/// that `dim Z_w` equals the flattening rank.
pub fn check_flattening_correspondence<F: Field>(g: &GadgetGraph, w: &EdgeWeighting<F>) -> bool {
    let t = phi(g, w);
    let slices_match = t
        .slices()
        .iter()
        .enumerate()
        .all(|(k, s)| slice_to_psi(s) == psi(g, k, w));
    slices_match && dim_zw(g, w) == t.flattening_rank()
}

#[derive(Clone, Debug, Default)]
pub struct BranchStats {
    pub checked: u64,
    pub violations: Vec<String>,
}

impl BranchStats {
    fn merge(mut self, o: BranchStats) -> Self {
        self.checked += o.checked;
        self.violations.extend(o.violations);
        self
    }

    fn one(ok: bool, witness: impl FnOnce() -> String) -> Self {
        BranchStats {
            checked: 1,
            violations: if ok { vec![] } else { vec![witness()] },
        }
    }

    pub fn to_json(&self) -> Value {
        let shown: Vec<&String> = self.violations.iter().take(10).collect();
        json!({"checked": self.checked, "violations": self.violations.len(), "examples": shown})
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub m: usize,
    pub trials: u64,
    pub seed: u64,
    /// Both components nonzero: flattening rank at least three.
    pub mixed: BranchStats,
    /// One component only: border rank two, rank three.
    pub single: BranchStats,
    /// Secant lines of the Segre variety avoid `W`.
    pub secants: BranchStats,
    /// Points of the Segre variety avoid `W`.
    pub points: BranchStats,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        [&self.mixed, &self.single, &self.secants, &self.points]
            .iter()
            .all(|b| b.violations.is_empty())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "trials": self.trials,
            "seed": self.seed,
            "mixed_flattening_rank": self.mixed.to_json(),
            "single_border_rank": self.single.to_json(),
            "secant_avoidance": self.secants.to_json(),
            "point_avoidance": self.points.to_json(),
            "clean": self.is_clean(),
        })
    }
}

fn nonzero_vec<R: Rng>(len: usize, h: i64, rng: &mut R) -> Vec<Q> {
    loop {
        let v: Vec<Q> = (0..len).map(|_| rational(rng, h)).collect();
        if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
            return v;
        }
    }
}

fn random_rank_one<R: Rng>(m: usize, h: i64, rng: &mut R) -> ([Q; 2], [Q; 2], Vec<Q>) {
    let a: [Q; 2] = nonzero_vec(2, h, rng).try_into().unwrap();
    let b: [Q; 2] = nonzero_vec(2, h, rng).try_into().unwrap();
    (a, b, nonzero_vec(m + 1, h, rng))
}

fn rank_one(f: &([Q; 2], [Q; 2], Vec<Q>)) -> Tensor222n<Q> {
    Tensor222n::rank_one(&f.0, &f.1, &f.2).unwrap()
}

/// Secant and point avoidance for any subspace `span(w)`: random pairs of
/// rank-one tensors, pairs sharing one or two factors, and every pair of
/// basis rank-one tensors.
pub fn secant_avoidance(
    m: usize,
    w: &[Tensor222n<Q>],
    trials: u64,
    seed: u64,
    height: i64,
) -> (BranchStats, BranchStats) {
    let sec_seed = derive_seed(seed, "gadget-secants");
    let pt_seed = derive_seed(seed, "gadget-points");
    let show = |t: &Tensor222n<Q>| t.to_json().to_string();
    with_pool(|| {
        let sampled = (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut r = trial_rng(sec_seed, i);
                let p = random_rank_one(m, height, &mut r);
                let mut q = random_rank_one(m, height, &mut r);
                // structured pairs share Segre factors
                match i % 4 {
                    1 => q.0 = p.0.clone(),
                    2 => {
                        q.0 = p.0.clone();
                        q.1 = p.1.clone();
                    }
                    3 => {
                        q.1 = p.1.clone();
                        q.2 = p.2.clone();
                    }
                    _ => {}
                }
                let (tp, tq) = (rank_one(&p), rank_one(&q));
                BranchStats::one(!secant_span_meets_subspace(&tp, &tq, w), || {
                    format!("span of {} and {} meets W", show(&tp), show(&tq))
                })
            })
            .reduce(BranchStats::default, BranchStats::merge);
        let basis: Vec<Tensor222n<Q>> = (0..2)
            .flat_map(|a| (0..2).flat_map(move |b| (0..=m).map(move |c| Tensor222n::basis(m, a, b, c))))
            .collect();
        let structured = (0..basis.len())
            .into_par_iter()
            .map(|i| {
                (i + 1..basis.len())
                    .map(|j| {
                        BranchStats::one(!secant_span_meets_subspace(&basis[i], &basis[j], w), || {
                            format!("span of {} and {} meets W", show(&basis[i]), show(&basis[j]))
                        })
                    })
                    .fold(BranchStats::default(), BranchStats::merge)
            })
            .reduce(BranchStats::default, BranchStats::merge);
        // e_a⊗e_b⊗e_c ± e_a'⊗e_b'⊗e_c' with distinct factors everywhere
        let signed = (0..=m)
            .into_par_iter()
            .map(|c| {
                let mut st = BranchStats::default();
                for c2 in (0..=m).filter(|&c2| c2 != c) {
                    let p = Tensor222n::basis(m, 0, 0, c);
                    let q = Tensor222n::basis(m, 1, 1, c2).scale(&Q::from_i64(-1));
                    st = st.merge(BranchStats::one(!secant_span_meets_subspace(&p, &q, w), || {
                        format!("span of {} and {} meets W", show(&p), show(&q))
                    }));
                }
                st
            })
            .reduce(BranchStats::default, BranchStats::merge);
        let points = (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut r = trial_rng(pt_seed, i);
                let t = rank_one(&random_rank_one(m, height, &mut r));
                BranchStats::one(!secant_span_meets_subspace(&t, &t, w), || format!("{} lies in W", show(&t)))
            })
            .reduce(BranchStats::default, BranchStats::merge);
        (sampled.merge(structured).merge(signed), points)
    })
}

/// Sampled consequences of the subspace theorem for `Γ_m`.
pub fn check_theorem_samples(m: usize, trials: u64, seed: u64, height: i64) -> Result<TheoremReport> {
    let (g, sub) = build_gadget::<Q>(m)?;
    let height = height.max(1);
    let mix_seed = derive_seed(seed, "gadget-mixed");
    let one_seed = derive_seed(seed, "gadget-single");
    let (mixed, single) = with_pool(|| {
        let mixed = (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut r = trial_rng(mix_seed, i);
                if m < 2 {
                    return BranchStats::default();
                }
                let w = EdgeWeighting {
                    w1: nonzero_vec(g.e1.len(), height, &mut r),
                    w2: nonzero_vec(g.e2.len(), height, &mut r),
                };
                let t = phi(&g, &w);
                let fr = t.flattening_rank();
                BranchStats::one(fr >= 3, || format!("flattening rank {fr} at w = {w:?}"))
            })
            .reduce(BranchStats::default, BranchStats::merge);
        let single = (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut r = trial_rng(one_seed, i);
                let second = m >= 2 && i % 2 == 1;
                let mut w = EdgeWeighting::zero(&g);
                // every other trial uses a single edge
                if i % 4 < 2 {
                    let n = if second { g.e2.len() } else { g.e1.len() };
                    let idx = r.random_range(0..n);
                    let x = nonzero_rational(&mut r, height);
                    if second {
                        w.w2[idx] = x;
                    } else {
                        w.w1[idx] = x;
                    }
                } else if second {
                    w.w2 = nonzero_vec(g.e2.len(), height, &mut r);
                } else {
                    w.w1 = nonzero_vec(g.e1.len(), height, &mut r);
                }
                let d = phi(&g, &w).rank_decision();
                BranchStats::one(d == RankDecision::Border2Rank3, || {
                    format!("decision {} at w = {w:?}", d.name())
                })
            })
            .reduce(BranchStats::default, BranchStats::merge);
        (mixed, single)
    });
    let (secants, points) = secant_avoidance(m, &sub.basis(), trials, seed, height);
    Ok(TheoremReport {
        m,
        trials,
        seed,
        mixed,
        single,
        secants,
        points,
    })
}

/// A trilinear form in `x_a y_b z_c` as a vector indexed `(2a + b)(m+1) + c`.
pub fn trilinear_functional(m: usize, f: &QPoly) -> Result<Vec<Q>> {
    if f.shape() != [2, 2, m + 1] {
        return Err(Error::ShapeMismatch(format!("section shape {:?} for m = {m}", f.shape())));
    }
    let mut v = vec![Q::from_i64(0); 4 * (m + 1)];
    for (e, c) in f.terms() {
        let b = e.blocks();
        let pos = |blk: &[u32]| -> Result<usize> {
            match (blk.iter().sum::<u32>(), blk.iter().position(|&x| x == 1)) {
                (1, Some(i)) => Ok(i),
                _ => Err(Error::Invalid(format!("section term {e} is not trilinear"))),
            }
        };
        let (a, bb, cc) = (pos(&b[0])?, pos(&b[1])?, pos(&b[2])?);
        v[(2 * a + bb) * (m + 1) + cc] = c.clone();
    }
    Ok(v)
}

#[derive(Clone, Debug)]
pub struct AnnihilationReport {
    pub m: usize,
    pub count: usize,
    pub expected: usize,
    pub annihilates: bool,
    pub independent: bool,
    /// `(section index, basis index)` pairs with nonzero pairing.
    pub failures: Vec<(usize, usize)>,
}

impl AnnihilationReport {
    pub fn ok(&self) -> bool {
        self.annihilates && self.independent && self.count == self.expected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "functionals": self.count,
            "expected": self.expected,
            "annihilates_W": self.annihilates,
            "independent": self.independent,
            "failures": self.failures.iter().take(10).collect::<Vec<_>>(),
            "ok": self.ok(),
        })
    }
}

/// Pairs each section with the spanning set of `W`.
pub fn check_annihilation(m: usize, sections: &[QPoly]) -> Result<AnnihilationReport> {
    let (_, sub) = build_gadget::<Q>(m)?;
    let fs: Vec<Vec<Q>> = sections
        .iter()
        .map(|f| trilinear_functional(m, f))
        .collect::<Result<_>>()?;
    let basis: Vec<Vec<Q>> = sub.basis().iter().map(Tensor222n::to_vector).collect();
    let mut failures = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let s = f.iter().zip(b).fold(Q::from_i64(0), |acc, (x, y)| acc + x * y);
            if !num_traits::Zero::is_zero(&s) {
                failures.push((i, j));
            }
        }
    }
    Ok(AnnihilationReport {
        m,
        count: fs.len(),
        expected: 2 * m + 5,
        annihilates: failures.is_empty(),
        independent: rank_of_vectors(&fs) == fs.len(),
        failures,
    })
}

/// The form with the sign of its leading term reversed.
pub fn flip_first_sign(f: &QPoly) -> QPoly {
    let terms: Vec<_> = f
        .terms()
        .enumerate()
        .map(|(i, (e, c))| (e.clone(), if i == 0 { -c.clone() } else { c.clone() }))
        .collect();
    QPoly::from_terms(f.shape().to_vec(), terms).expect("same shape")
}

pub fn check_corollary_annihilation(m: usize) -> Result<bool> {
    Ok(check_annihilation(m, &crate::constructions::p1p1pm_sections(m))?.ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    #[test]
    fn graph_examples() {
        let g = GadgetGraph::new(2).unwrap();
        assert_eq!(g.e1, vec![(0, 1), (1, 2)]);
        assert_eq!(g.e2, vec![(0, 2)]);
        assert_eq!(GadgetGraph::new(6).unwrap().e2, vec![(0, 6), (6, 1), (1, 5), (5, 2), (2, 4)]);
        assert_eq!(GadgetGraph::new(7).unwrap().e2.len(), 6);
        for m in 1..=12 {
            let g = GadgetGraph::new(m).unwrap();
            let k = g.special_vertex();
            assert!(g.e2.iter().all(|&(i, j)| i != k && j != k), "m = {m}");
            let (_, sub) = build_gadget::<Q>(m).unwrap();
            assert_eq!(sub.dims().2, 2 * m - 1);
        }
    }

    #[test]
    fn psi_examples() {
        let g = GadgetGraph::new(2).unwrap();
        let w = EdgeWeighting::<Q>::indicator(&g, false, 0);
        assert_eq!(psi(&g, 0, &w), [qi(0), qi(1), qi(0), qi(0)]);
        assert_eq!(psi(&g, 1, &w), [qi(1), qi(0), qi(0), qi(0)]);
        assert_eq!(dim_zw(&g, &w), 2);
        let w = EdgeWeighting::<Q>::indicator(&g, true, 0);
        assert_eq!(psi(&g, 0, &w), [qi(0), qi(0), qi(0), qi(1)]);
        assert_eq!(psi(&g, 2, &w), [qi(0), qi(0), qi(1), qi(0)]);
        assert_eq!(psi(&g, 1, &w), [qi(0), qi(0), qi(0), qi(0)]);
        assert_eq!(dim_zw(&g, &EdgeWeighting::<Q>::zero(&g)), 0);
    }

    #[test]
    fn phi_examples() {
        let g = GadgetGraph::new(2).unwrap();
        let t = phi(&g, &EdgeWeighting::<Q>::indicator(&g, true, 0));
        let want = Tensor222n::basis(2, 1, 0, 2)
            .add(&Tensor222n::basis(2, 1, 1, 0))
            .add(&Tensor222n::basis(2, 0, 0, 0));
        assert_eq!(t, want);
        assert!(phi(&g, &EdgeWeighting::<Q>::zero(&g)).is_zero());
        let all = EdgeWeighting::new(&g, vec![qi(1), qi(1)], vec![qi(1)]).unwrap();
        assert!(check_flattening_correspondence(&g, &all));
    }

    #[test]
    fn theorem_small() {
        let r = check_theorem_samples(2, 200, 1, 5).unwrap();
        assert!(r.is_clean(), "{:?}", r.to_json());
    }

    #[test]
    fn control_subspace_is_caught() {
        let w = vec![Tensor222n::basis(2, 0, 0, 0).sub(&Tensor222n::basis(2, 1, 1, 1))];
        let (sec, _) = secant_avoidance(2, &w, 10, 0, 3);
        assert!(!sec.violations.is_empty());
    }

    #[test]
    fn annihilation() {
        for m in 1..=6 {
            assert!(check_corollary_annihilation(m).unwrap(), "m = {m}");
        }
        let mut s = crate::constructions::p1p1pm_sections(3);
        s[3] = flip_first_sign(&s[3]);
        assert!(!check_annihilation(3, &s).unwrap().ok());
    }
}
