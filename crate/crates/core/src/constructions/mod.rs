//! Builders for the explicit morphism families, with their hypotheses,
//! target dimensions and decoders.

mod decoders;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

pub use decoders::{decode_builtin, decode_duf};

use crate::exactalg::binomial;
use crate::morphism::Morphism;
use crate::{Error, QPoly, Result, SpaceDescriptor, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    SegreVeronese,
    ChowVeronese,
    TangentialP1P1,
    TangentialP2P2,
    P1P1DegD,
    WpsPhi1,
    WpsPhik,
    P1Pn,
    P1P1PmGraph,
    PnDuf,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::SegreVeronese,
        Family::ChowVeronese,
        Family::TangentialP1P1,
        Family::TangentialP2P2,
        Family::P1P1DegD,
        Family::WpsPhi1,
        Family::WpsPhik,
        Family::P1Pn,
        Family::P1P1PmGraph,
        Family::PnDuf,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::SegreVeronese => "segre_veronese",
            Family::ChowVeronese => "chow_veronese",
            Family::TangentialP1P1 => "tangential_p1p1",
            Family::TangentialP2P2 => "tangential_p2p2",
            Family::P1P1DegD => "p1p1_deg_d",
            Family::WpsPhi1 => "wps_phi1",
            Family::WpsPhik => "wps_phik",
            Family::P1Pn => "p1pn",
            Family::P1P1PmGraph => "p1p1pm_graph",
            Family::PnDuf => "pn_duf",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Numeric parameters; each family reads the fields it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub dims: Vec<usize>,
    pub degrees: Vec<u32>,
    pub weights: Vec<u64>,
    pub dvec: Vec<u32>,
    pub k: Option<u64>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub d: Option<u32>,
}

fn need<T: Copy>(v: Option<T>, name: &str, family: Family) -> Result<T> {
    v.ok_or_else(|| Error::Invalid(format!("{family} needs --{name}")))
}

/// Row of the family table.
#[derive(Clone, Debug)]
pub struct FamilyInfo {
    pub family: Family,
    pub params: &'static str,
    pub source: &'static str,
    pub target: &'static str,
    pub decoder: &'static str,
    pub claim: &'static str,
}

pub fn family_table() -> Vec<FamilyInfo> {
    use Family::*;
    let row = |family, params, source, target, decoder, claim| FamilyInfo {
        family,
        params,
        source,
        target,
        decoder,
        claim,
    };
    vec![
        row(SegreVeronese, "dims, degrees", "P^n1 x .. x P^nr", "P^(prod C(ni+di,di) - 1)", "when all di = 1",
            "all monomials of a multidegree embed the product"),
        row(ChowVeronese, "m, dvec", "(P^m)^r", "P^(C(m+D,m) - 1)", "m = 1",
            "products of powers of linear forms are injective when disjoint subset sums of dvec differ"),
        row(TangentialP1P1, "-", "P^1 x P^1", "P^3", "yes",
            "T-coefficients of (x.T)(y.T)^2 give an injection into P^3 by O(1,2)"),
        row(TangentialP2P2, "-", "P^2 x P^2", "P^8", "no",
            "projection of the tangential fourfold from a point off its secant variety: injection into P^8"),
        row(P1P1DegD, "d >= 3", "P^1 x P^1", "P^4", "yes",
            "five T-coefficients of (x.T)(y.T)^d give an injection by O(1,d)"),
        row(WpsPhi1, "weights", "P(1,q1,..,qn)", "P^(n+1)", "yes",
            "triangular degree-lcm sections inject the weighted space"),
        row(WpsPhik, "weights, k", "P(1,q1,..,qn)", "P^2n", "yes",
            "degree k*lcm sections inject the weighted space into P^2n"),
        row(P1Pn, "n, d", "P^1 x P^n", "P^(2(n+1))", "yes",
            "O(d,1) sections from T^(d+1) and TS^d coefficients are injective"),
        row(P1P1PmGraph, "m", "P^1 x P^1 x P^m", "P^(2(m+2))", "no (annihilator check)",
            "trilinear forms annihilating the graph subspace W avoid the secant locus"),
        row(PnDuf, "n >= 2, k >= 2", "P^(n-1)", "P^(2(n-1))", "yes",
            "sums of x_i^(k-1) x_j along anti-diagonals inject projective space"),
    ]
}

/// Builds a family member from parameters.
pub fn build(family: Family, p: &FamilyParams) -> Result<Morphism> {
    match family {
        Family::SegreVeronese => {
            let degrees = if p.degrees.is_empty() {
                vec![1; p.dims.len()]
            } else {
                p.degrees.clone()
            };
            build_segre_veronese(&p.dims, &degrees)
        }
        Family::ChowVeronese => build_chow_veronese(need(p.m, "m", family)?, &p.dvec),
        Family::TangentialP1P1 => build_tangential_p1p1(),
        Family::TangentialP2P2 => build_tangential_p2p2(),
        Family::P1P1DegD => build_p1p1_deg_d(need(p.d, "d", family)?),
        Family::WpsPhi1 => build_wps_phi1(&p.weights),
        Family::WpsPhik => build_wps_phik(&p.weights, need(p.k, "k", family)?),
        Family::P1Pn => build_p1pn(need(p.n, "n", family)?, need(p.d, "d", family)?),
        Family::P1P1PmGraph => build_p1p1pm_graph(need(p.m, "m", family)?),
        Family::PnDuf => build_pn_duf(need(p.n, "n", family)?, need(p.k, "k", family)?),
    }
}

/// The target dimension each family promises.
pub fn expected_ambient(family: Family, p: &FamilyParams) -> Result<usize> {
    Ok(match family {
        Family::SegreVeronese => {
            let degrees = if p.degrees.is_empty() {
                vec![1; p.dims.len()]
            } else {
                p.degrees.clone()
            };
            p.dims
                .iter()
                .zip(&degrees)
                .map(|(&n, &d)| binomial(n as u64 + d as u64, d as u64) as usize)
                .product::<usize>()
                - 1
        }
        Family::ChowVeronese => {
            let m = need(p.m, "m", family)? as u64;
            let big_d: u64 = p.dvec.iter().map(|&d| d as u64).sum();
            binomial(m + big_d, m) as usize - 1
        }
        Family::TangentialP1P1 => 3,
        Family::TangentialP2P2 => 8,
        Family::P1P1DegD => 4,
        Family::WpsPhi1 => p.weights.len(),
        Family::WpsPhik => {
            if need(p.k, "k", family)? == 1 {
                p.weights.len()
            } else {
                2 * (p.weights.len() - 1)
            }
        }
        Family::P1Pn => 2 * (need(p.n, "n", family)? + 1),
        Family::P1P1PmGraph => 2 * (need(p.m, "m", family)? + 2),
        Family::PnDuf => 2 * (need(p.n, "n", family)? - 1),
    })
}

/// Families meant as small injections; their targets obey `2·dim + 1`.
pub fn is_small_injection(family: Family) -> bool {
    !matches!(family, Family::SegreVeronese | Family::ChowVeronese)
}

fn var(shape: &[usize], b: usize, i: usize) -> QPoly {
    QPoly::var(shape.to_vec(), b, i)
}

fn mono(shape: &[usize], c: i64, exps: Vec<Vec<u32>>) -> QPoly {
    QPoly::monomial(shape.to_vec(), Q::from_integer(c.into()), exps).expect("exponents match shape")
}

/// Exponent vectors of `nvars` variables and total degree `deg`, in
/// descending lexicographic order (`x0^deg` first).
pub fn monomials_desc(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for e in (0..=deg).rev() {
        for mut rest in monomials_desc(nvars - 1, deg - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Multiplies `Π (Σ_j x_{b,j} T_j)^{e_b}` over the given blocks and groups the
/// result by the exponent of `T`.
fn expand_linear_powers(src_shape: &[usize], factors: &[(usize, u32)], nt: usize) -> BTreeMap<Vec<u32>, QPoly> {
    let mut ext = src_shape.to_vec();
    ext.push(nt);
    let tb = src_shape.len();
    let mut prod = QPoly::constant(ext.clone(), Q::from_integer(1.into()));
    for &(b, e) in factors {
        let mut lin = QPoly::zero(ext.clone());
        for j in 0..nt {
            lin = &lin + &(&var(&ext, b, j) * &var(&ext, tb, j));
        }
        prod = &prod * &lin.pow(e);
    }
    let mut groups: BTreeMap<Vec<u32>, Vec<(crate::ExponentVector, Q)>> = BTreeMap::new();
    for (ev, c) in prod.terms() {
        let blocks = ev.blocks();
        groups
            .entry(blocks[tb].clone())
            .or_default()
            .push((crate::ExponentVector::new(blocks[..tb].to_vec()), c.clone()));
    }
    groups
        .into_iter()
        .map(|(t, terms)| (t, QPoly::from_terms(src_shape.to_vec(), terms).expect("source shape")))
        .collect()
}

fn coefficient_sections(
    src_shape: &[usize],
    factors: &[(usize, u32)],
    nt: usize,
    wanted: &[Vec<u32>],
) -> Vec<QPoly> {
    let groups = expand_linear_powers(src_shape, factors, nt);
    wanted
        .iter()
        .map(|t| groups.get(t).cloned().unwrap_or_else(|| QPoly::zero(src_shape.to_vec())))
        .collect()
}

pub fn build_segre_veronese(dims: &[usize], degrees: &[u32]) -> Result<Morphism> {
    if dims.is_empty() || dims.len() != degrees.len() || dims.contains(&0) || degrees.contains(&0) {
        return Err(Error::Hypothesis(format!(
            "segre_veronese needs matching positive dims and degrees, got {dims:?} and {degrees:?}"
        )));
    }
    let shape: Vec<usize> = dims.iter().map(|n| n + 1).collect();
    let per_block: Vec<Vec<Vec<u32>>> = shape
        .iter()
        .zip(degrees)
        .map(|(&n, &d)| monomials_desc(n, d))
        .collect();
    let mut sections = Vec::new();
    let mut idx = vec![0usize; shape.len()];
    'outer: loop {
        let exps: Vec<Vec<u32>> = idx.iter().enumerate().map(|(b, &i)| per_block[b][i].clone()).collect();
        sections.push(mono(&shape, 1, exps));
        let mut b = shape.len();
        loop {
            if b == 0 {
                break 'outer;
            }
            b -= 1;
            idx[b] += 1;
            if idx[b] < per_block[b].len() {
                break;
            }
            idx[b] = 0;
        }
    }
    let decoder = degrees.iter().all(|&d| d == 1).then(|| "builtin:segre".to_string());
    Morphism::new(
        SpaceDescriptor::product(dims),
        sections,
        format!("segre_veronese dims={dims:?} degrees={degrees:?}"),
        decoder,
    )
}

/// `Ok(None)` when all disjoint subset pairs of `dvec` have different sums,
/// otherwise the first clashing pair `(I, J)` as 1-based index sets.
pub fn subset_sum_clash(dvec: &[u32]) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let r = dvec.len();
    if r > 20 {
        return Err(Error::Unsupported(format!("subset sums for {r} > 20 entries")));
    }
    if dvec.contains(&0) {
        return Err(Error::Invalid("dvec entries must be positive".into()));
    }
    let mut seen: BTreeMap<u64, u32> = BTreeMap::new();
    for mask in 0u32..(1 << r) {
        let s: u64 = (0..r).filter(|i| mask & (1 << i) != 0).map(|i| dvec[i] as u64).sum();
        if let Some(&a) = seen.get(&s) {
            let set = |m: u32| (0..r).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect::<Vec<_>>();
            return Ok(Some((set(a & !mask), set(mask & !a))));
        }
        seen.insert(s, mask);
    }
    Ok(None)
}

pub fn distinct_subset_sums(dvec: &[u32]) -> Result<bool> {
    Ok(subset_sum_clash(dvec)?.is_none())
}

pub fn build_chow_veronese(m: usize, dvec: &[u32]) -> Result<Morphism> {
    if m == 0 || dvec.is_empty() {
        return Err(Error::Hypothesis("chow_veronese needs m >= 1 and a nonempty dvec".into()));
    }
    if let Some((i, j)) = subset_sum_clash(dvec)? {
        return Err(Error::SubsetSumClash { i, j });
    }
    let r = dvec.len();
    let shape = vec![m + 1; r];
    let big_d: u32 = dvec.iter().sum();
    let factors: Vec<(usize, u32)> = dvec.iter().copied().enumerate().collect();
    let sections = coefficient_sections(&shape, &factors, m + 1, &monomials_desc(m + 1, big_d));
    let decoder = (m == 1).then(|| "builtin:chow_veronese".to_string());
    Morphism::new(
        SpaceDescriptor::product(&vec![m; r]),
        sections,
        format!("chow_veronese m={m} dvec={dvec:?}"),
        decoder,
    )
}

pub fn build_tangential_p1p1() -> Result<Morphism> {
    let s = [2, 2];
    let sections = vec![
        mono(&s, 1, vec![vec![1, 0], vec![2, 0]]),
        &mono(&s, 1, vec![vec![0, 1], vec![2, 0]]) + &mono(&s, 2, vec![vec![1, 0], vec![1, 1]]),
        &mono(&s, 2, vec![vec![0, 1], vec![1, 1]]) + &mono(&s, 1, vec![vec![1, 0], vec![0, 2]]),
        mono(&s, 1, vec![vec![0, 1], vec![0, 2]]),
    ];
    Morphism::new(
        SpaceDescriptor::product(&[1, 1]),
        sections,
        "tangential_p1p1",
        Some("builtin:tangential_p1p1".into()),
    )
}

pub fn build_tangential_p2p2() -> Result<Morphism> {
    let s = [3, 3];
    // x_a y_b y_c with coefficient c
    let t = |c: i64, a: usize, b: usize, cc: usize| {
        let mut x = vec![0; 3];
        x[a] = 1;
        let mut y = vec![0; 3];
        y[b] += 1;
        y[cc] += 1;
        mono(&s, c, vec![x, y])
    };
    let sum = |ts: Vec<QPoly>| ts.into_iter().fold(QPoly::zero(s.to_vec()), |a, b| &a + &b);
    let sections = vec![
        t(1, 0, 0, 0),
        t(1, 1, 1, 1),
        t(1, 2, 2, 2),
        sum(vec![t(1, 0, 1, 1), t(2, 1, 0, 1)]),
        sum(vec![t(1, 1, 2, 2), t(2, 2, 1, 2)]),
        sum(vec![t(1, 2, 0, 0), t(2, 0, 0, 2)]),
        sum(vec![t(2, 0, 1, 2), t(2, 1, 0, 2), t(2, 2, 0, 1)]),
        sum(vec![t(1, 1, 0, 0), t(-1, 2, 1, 1), t(2, 0, 0, 1), t(-2, 1, 1, 2)]),
        sum(vec![t(1, 1, 0, 0), t(-1, 0, 2, 2), t(2, 0, 0, 1), t(-2, 2, 0, 2)]),
    ];
    Morphism::new(SpaceDescriptor::product(&[2, 2]), sections, "tangential_p2p2", None)
}

/// The ten `T`-coefficients of `(x·T)(y·T)^2` on `P^2 × P^2`, in descending
/// lexicographic order of the cubic monomials in `T`.
pub fn tangential_p2p2_full_sections() -> Vec<QPoly> {
    coefficient_sections(&[3, 3], &[(0, 1), (1, 2)], 3, &monomials_desc(3, 3))
}

pub fn build_p1p1_deg_d(d: u32) -> Result<Morphism> {
    if d < 3 {
        return Err(Error::Hypothesis(format!("p1p1_deg_d needs d >= 3, got {d}")));
    }
    let wanted = vec![vec![d + 1, 0], vec![d, 1], vec![d - 1, 2], vec![1, d], vec![0, d + 1]];
    let sections = coefficient_sections(&[2, 2], &[(0, 1), (1, d)], 2, &wanted);
    Morphism::new(
        SpaceDescriptor::product(&[1, 1]),
        sections,
        format!("p1p1_deg_d d={d}"),
        Some("builtin:p1p1_deg_d".into()),
    )
}

/// `lcm(q_1..q_n)`, after checking `q_0 = 1` and that every triple of
/// distinct indices has that lcm.
pub fn check_wps_hypothesis(weights: &[u64]) -> Result<u64> {
    let n = weights.len().saturating_sub(1);
    if n < 1 {
        return Err(Error::Hypothesis("need weights q0, q1, .., qn with n >= 1".into()));
    }
    if weights.contains(&0) {
        return Err(Error::Hypothesis(format!("weights must be positive: {weights:?}")));
    }
    if weights[0] != 1 {
        return Err(Error::Hypothesis(format!("q0 must be 1, got {}", weights[0])));
    }
    let d = crate::morphism::lcm_all(&weights[1..]);
    for i in 0..=n {
        for j in i + 1..=n {
            for l in j + 1..=n {
                let t = weights[i].lcm(&weights[j]).lcm(&weights[l]);
                if t != d {
                    return Err(Error::Hypothesis(format!(
                        "lcm(q{i},q{j},q{l}) = lcm({},{},{}) = {t} differs from d = {d}",
                        weights[i], weights[j], weights[l]
                    )));
                }
            }
        }
    }
    Ok(d)
}

pub fn build_wps_phi1(weights: &[u64]) -> Result<Morphism> {
    let d = check_wps_hypothesis(weights)?;
    let n = weights.len() - 1;
    let s = [n + 1];
    let x = |exps: &[(usize, u64)]| {
        let mut e = vec![0u32; n + 1];
        for &(i, p) in exps {
            e[i] += p as u32;
        }
        mono(&s, 1, vec![e])
    };
    let a = |i: usize| d / weights[i];
    let mut sections = vec![x(&[(0, d)]), x(&[(0, d - weights[1]), (1, 1)])];
    for i in 2..=n {
        sections.push(&x(&[(i - 1, a(i - 1))]) + &x(&[(0, d - weights[i]), (i, 1)]));
    }
    sections.push(x(&[(n, a(n))]));
    Morphism::new(
        SpaceDescriptor::weighted(weights),
        sections,
        format!("wps_phi1 weights={weights:?}"),
        Some("builtin:wps_phi1".into()),
    )
}

/// For `k = 1` this is [`build_wps_phi1`].
pub fn build_wps_phik(weights: &[u64], k: u64) -> Result<Morphism> {
    if k == 0 {
        return Err(Error::Hypothesis("k must be positive".into()));
    }
    if k == 1 {
        return build_wps_phi1(weights);
    }
    let d = check_wps_hypothesis(weights)?;
    let n = weights.len() - 1;
    let s = [n + 1];
    let a = |i: usize| if i == 0 { d } else { d / weights[i] };
    let b = |i: usize, j: usize| weights[i].lcm(&weights[j]) / weights[i];
    let mut sections = Vec::with_capacity(2 * n + 1);
    for l in 0..=2 * n {
        let mut f = QPoly::zero(s.to_vec());
        for i in 0..=l / 2 {
            let j = l - i;
            if j > n {
                continue;
            }
            let mut e = vec![0u32; n + 1];
            e[i] += (k * a(i) - b(i, j)) as u32;
            e[j] += b(j, i) as u32;
            f = &f + &mono(&s, 1, vec![e]);
        }
        sections.push(f);
    }
    Morphism::new(
        SpaceDescriptor::weighted(weights),
        sections,
        format!("wps_phik weights={weights:?} k={k}"),
        Some("builtin:wps_phik".into()),
    )
}

pub fn build_p1pn(n: usize, d: u32) -> Result<Morphism> {
    if n < 1 || d < 1 {
        return Err(Error::Hypothesis(format!("p1pn needs n, d >= 1, got n={n} d={d}")));
    }
    let s = [2, n + 1];
    let xy = |c: i64, x0: u32, i: usize| {
        let mut y = vec![0; n + 1];
        y[i] = 1;
        mono(&s, c, vec![vec![x0, d - x0], y])
    };
    // coefficient of T S^d in (x0 T + x1 S)^d (y_i T + y_{i+1} S), i = -1..n
    let g = |i: isize| {
        let mut f = QPoly::zero(s.to_vec());
        if i >= 0 && (i as usize) <= n {
            f = &f + &xy(1, 0, i as usize);
        }
        if i + 1 >= 0 && ((i + 1) as usize) <= n {
            f = &f + &xy(d as i64, 1, (i + 1) as usize);
        }
        f
    };
    let mut sections: Vec<QPoly> = (0..=n).map(|i| xy(1, d, i)).collect();
    sections.push(g(n as isize));
    sections.push(g(-1));
    for i in 0..n {
        sections.push(g(i as isize));
    }
    Morphism::new(
        SpaceDescriptor::product(&[1, n]),
        sections,
        format!("p1pn n={n} d={d}"),
        Some("builtin:p1pn".into()),
    )
}

/// The three trilinear monomial coordinates `x_a y_b z_c` in the order used
/// by [`crate::tensors::Tensor222n`] flattening: index `(2a + b)(m+1) + c`.
fn xyz(m: usize, a: usize, b: usize, c: usize) -> QPoly {
    let s = [2, 2, m + 1];
    let mut x = vec![0; 2];
    x[a] = 1;
    let mut y = vec![0; 2];
    y[b] = 1;
    let mut z = vec![0; m + 1];
    z[c] = 1;
    mono(&s, 1, vec![x, y, z])
}

/// A basis of the annihilator of the gadget subspace, as trilinear forms.
pub fn p1p1pm_sections(m: usize) -> Vec<QPoly> {
    let e2 = crate::graphgadget::e2_edges(m);
    let k = m.div_ceil(2);
    let k2 = if m % 2 == 0 { k + 1 } else { k - 1 };
    let f = |a, b, c| xyz(m, a, b, c);
    let zero = QPoly::zero(vec![2, 2, m + 1]);
    let mut out = vec![f(0, 1, m), f(1, 1, k), f(1, 1, k2)];
    for c in 0..=m {
        let mut g = f(0, 0, c);
        if c >= 1 {
            g = &g - &f(0, 1, c - 1);
        }
        if let Some(&(_, j)) = e2.iter().find(|e| e.0 == c) {
            let mut h = f(1, 0, j);
            if j < m {
                h = &h - &f(0, 1, j);
            }
            g = &g - &h;
        }
        out.push(g);
    }
    for &(i, j) in &e2 {
        let mut g = &f(1, 1, i) - &f(1, 0, j);
        if j < m {
            g = &g + &f(0, 1, j);
        }
        out.push(g);
    }
    for c in [0, k] {
        let mut g = &zero + &f(1, 0, c);
        if c < m {
            g = &g - &f(0, 1, c);
        }
        out.push(g);
    }
    out
}

pub fn build_p1p1pm_graph(m: usize) -> Result<Morphism> {
    if m < 1 {
        return Err(Error::Hypothesis("p1p1pm_graph needs m >= 1".into()));
    }
    Morphism::new(
        SpaceDescriptor::product(&[1, 1, m]),
        p1p1pm_sections(m),
        format!("p1p1pm_graph m={m}"),
        None,
    )
}

/// Sections `Σ_{i+j=ℓ, i≤j} x_i^{k-1} x_j` for `ℓ = 2..2n` on `P^{n-1}`
/// (coordinates `x_1..x_n`, stored as indices `0..n-1`).
pub fn duf_sections(n: usize, k: u64) -> Vec<QPoly> {
    let s = [n];
    (2..=2 * n)
        .map(|l| {
            let mut f = QPoly::zero(s.to_vec());
            for i in 1..=l / 2 {
                let j = l - i;
                if j > n {
                    continue;
                }
                let mut e = vec![0u32; n];
                e[i - 1] += (k - 1) as u32;
                e[j - 1] += 1;
                f = &f + &mono(&s, 1, vec![e]);
            }
            f
        })
        .collect()
}

pub fn build_pn_duf(n: usize, k: u64) -> Result<Morphism> {
    if n < 2 || k < 2 {
        return Err(Error::Hypothesis(format!("pn_duf needs n >= 2 and k >= 2, got n={n} k={k}")));
    }
    Morphism::new(
        SpaceDescriptor::product(&[n - 1]),
        duf_sections(n, k),
        format!("pn_duf n={n} k={k}"),
        Some("builtin:pn_duf".into()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::Multidegree;
    use crate::{qi, QPoint};

    fn ev(m: &Morphism, p: &[&[i64]]) -> Vec<Q> {
        m.evaluate(&QPoint::from_i64(p).unwrap()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn segre_counts() {
        assert_eq!(build_segre_veronese(&[1, 1, 1], &[1, 1, 1]).unwrap().sections.len(), 8);
        assert_eq!(build_segre_veronese(&[1], &[2]).unwrap().ambient_dim(), 2);
        assert_eq!(build_segre_veronese(&[2, 2], &[1, 2]).unwrap().ambient_dim(), 17);
    }

    #[test]
    fn subset_sums() {
        assert!(distinct_subset_sums(&[1, 2]).unwrap());
        assert!(!distinct_subset_sums(&[1, 1]).unwrap());
        assert!(distinct_subset_sums(&[1, 2, 4]).unwrap());
        assert_eq!(subset_sum_clash(&[1, 1]).unwrap(), Some((vec![1], vec![2])));
        assert_eq!(subset_sum_clash(&[1, 2, 3]).unwrap(), Some((vec![1, 2], vec![3])));
        assert!(matches!(build_chow_veronese(1, &[1, 1]), Err(Error::SubsetSumClash { .. })));
    }

    #[test]
    fn chow_veronese_basis_point() {
        let m = build_chow_veronese(1, &[1, 2]).unwrap();
        assert_eq!(ev(&m, &[&[1, 0], &[0, 1]]), ints(&[0, 0, 1, 0]));
        assert_eq!(m.sections, build_tangential_p1p1().unwrap().sections);
    }

    #[test]
    fn tangential_values() {
        let t = build_tangential_p1p1().unwrap();
        assert_eq!(ev(&t, &[&[1, 0], &[0, 1]]), ints(&[0, 0, 1, 0]));
        assert_eq!(ev(&t, &[&[1, 0], &[1, 0]]), ints(&[1, 0, 0, 0]));
        assert_eq!(ev(&t, &[&[0, 1], &[1, 0]]), ints(&[0, 1, 0, 0]));
        let t2 = build_tangential_p2p2().unwrap();
        assert_eq!(t2.sections.len(), 9);
        assert_eq!(t2.multidegree, Multidegree::Product(vec![1, 2]));
    }

    #[test]
    fn p1p1_deg_d_values() {
        let m = build_p1p1_deg_d(3).unwrap();
        assert_eq!(ev(&m, &[&[1, 0], &[1, 0]]), ints(&[1, 0, 0, 0, 0]));
        assert_eq!(ev(&m, &[&[0, 1], &[0, 1]]), ints(&[0, 0, 0, 0, 1]));
        assert_eq!(ev(&m, &[&[1, 1], &[1, 1]]), ints(&[1, 4, 6, 4, 1]));
        assert!(build_p1p1_deg_d(2).is_err());
    }

    #[test]
    fn wps_phi1_example() {
        let m = build_wps_phi1(&[1, 6, 10, 15]).unwrap();
        assert_eq!(m.sections.len(), 5);
        assert_eq!(m.multidegree, Multidegree::Weighted(30));
        let shown: Vec<String> = m.sections.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["x0^30", "x0^24*x1", "x0^20*x2 + x1^5", "x0^15*x3 + x2^3", "x3^2"]);
        assert_eq!(ev(&m, &[&[1, 0, 0, 0]]), ints(&[1, 0, 0, 0, 0]));
        assert_eq!(ev(&m, &[&[1, 1, 1, 1]]), ints(&[1, 1, 2, 2, 1]));
        let m = build_wps_phi1(&[1, 2, 2]).unwrap();
        assert_eq!(m.ambient_dim(), 3);
        assert!(matches!(build_wps_phi1(&[1, 2, 3, 4]), Err(Error::Hypothesis(_))));
        assert!(matches!(build_wps_phi1(&[2, 3]), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn wps_phik_small() {
        for k in 2..5 {
            let m = build_wps_phik(&[1, 1], k).unwrap();
            let shown: Vec<String> = m.sections.iter().map(|s| s.to_string()).collect();
            let mid = if k == 2 { "x0*x1".to_string() } else { format!("x0^{}*x1", k - 1) };
            assert_eq!(shown, [format!("x0^{k}"), mid, format!("x1^{k}")]);
        }
        let m = build_wps_phik(&[1, 6, 10, 15], 3).unwrap();
        assert_eq!(m.ambient_dim(), 6);
        assert_eq!(m.multidegree, Multidegree::Weighted(90));
    }

    #[test]
    fn p1pn_values() {
        let m = build_p1pn(1, 2).unwrap();
        assert_eq!(ev(&m, &[&[1, 1], &[1, 0]]), ints(&[1, 0, 0, 2, 1]));
        let m = build_p1pn(2, 1).unwrap();
        let z = ev(&m, &[&[0, 1], &[0, 0, 1]]);
        assert!(z[..3].iter().all(|c| *c == qi(0)));
        assert_eq!(z[3], qi(1));
        assert_eq!(build_p1pn(3, 2).unwrap().sections.len(), 9);
    }

    #[test]
    fn duf_shapes() {
        let m = build_pn_duf(2, 3).unwrap();
        let shown: Vec<String> = m.sections.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["x0^3", "x0^2*x1", "x1^3"]);
        assert_eq!(ev(&m, &[&[1, 0]]), ints(&[1, 0, 0]));
    }

    #[test]
    fn p1p1pm_counts() {
        for m in 1..8 {
            let g = build_p1p1pm_graph(m).unwrap();
            assert_eq!(g.sections.len(), 2 * m + 5);
            assert_eq!(g.multidegree, Multidegree::Product(vec![1, 1, 1]));
        }
    }

    #[test]
    fn table_dims_match() {
        let p = FamilyParams {
            weights: vec![1, 6, 10, 15],
            k: Some(2),
            ..Default::default()
        };
        let m = build(Family::WpsPhik, &p).unwrap();
        assert_eq!(m.ambient_dim(), expected_ambient(Family::WpsPhik, &p).unwrap());
        assert_eq!(family_table().len(), Family::ALL.len());
    }
}
