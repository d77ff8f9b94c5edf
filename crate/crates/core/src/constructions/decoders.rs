//! Inverse maps for the families that have one. Every decoder re-evaluates
//! its answer and rejects inputs outside the image.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::duf_sections;
use crate::exactalg::poly::eval_many;
use crate::morphism::{lcm_all, Decoded, Morphism, Multidegree};
use crate::spaces::proportional;
use crate::{BinaryForm, Error, Field, QPoint, Result, SpaceDescriptor, Q};

fn qn(v: u64) -> Q {
    Q::from_integer(v.into())
}

fn not_in_image(what: &str) -> Error {
    Error::Decode(format!("point is not in the image of {what}"))
}

fn product_params(m: &Morphism) -> Result<(Vec<usize>, Vec<u32>)> {
    match (&m.source, &m.multidegree) {
        (SpaceDescriptor::Product { dims }, Multidegree::Product(d)) => Ok((dims.clone(), d.clone())),
        _ => Err(Error::Decode(format!("{} is not defined on a product", m.label))),
    }
}

fn weighted_params(m: &Morphism) -> Result<(Vec<u64>, u64)> {
    match (&m.source, &m.multidegree) {
        (SpaceDescriptor::Weighted { weights }, Multidegree::Weighted(d)) => Ok((weights.clone(), *d)),
        _ => Err(Error::Decode(format!("{} is not defined on a weighted space", m.label))),
    }
}

/// Runs the decoder named `builtin:<name>` on the image point `z`.
pub fn decode_builtin(name: &str, m: &Morphism, z: &[Q]) -> Result<Decoded> {
    let short = name
        .strip_prefix("builtin:")
        .ok_or_else(|| Error::Decode(format!("unknown decoder handle {name:?}")))?;
    if z.iter().all(Q::is_zero) {
        return Err(Error::Decode("the zero vector is not a projective point".into()));
    }
    let decoded = match short {
        "identity" => {
            let (dims, _) = product_params(m)?;
            if dims.len() != 1 {
                return Err(Error::Decode("identity decoder needs a single factor".into()));
            }
            Decoded::Point(QPoint::single(z.to_vec())?)
        }
        "segre" => Decoded::Point(decode_segre(&product_params(m)?.0, z)?),
        "chow_veronese" | "tangential_p1p1" => {
            let (dims, dvec) = product_params(m)?;
            if dims.iter().any(|&n| n != 1) {
                return Err(Error::Decode("binary factorization needs factors P^1".into()));
            }
            Decoded::Point(decode_binary_product(&dvec, z)?)
        }
        "p1p1_deg_d" => {
            let (_, deg) = product_params(m)?;
            Decoded::Point(decode_p1p1(deg[1], z)?)
        }
        "p1pn" => {
            let (dims, deg) = product_params(m)?;
            Decoded::Point(decode_p1pn(dims[1], deg[0], z)?)
        }
        "pn_duf" => {
            let (dims, deg) = product_params(m)?;
            Decoded::Point(QPoint::single(decode_duf(dims[0] + 1, deg[0] as u64, z)?)?)
        }
        "wps_phi1" => {
            let (w, _) = weighted_params(m)?;
            decode_phi1(&w, z)?
        }
        "wps_phik" => {
            let (w, deg) = weighted_params(m)?;
            let d = lcm_all(&w[1..]);
            decode_phik(&w, deg / d, z)?
        }
        other => return Err(Error::Decode(format!("unknown builtin decoder {other:?}"))),
    };
    if let Decoded::Point(p) = &decoded {
        let back = eval_many(&m.sections, p.blocks())?;
        if !proportional(&back, z) || back.iter().all(Q::is_zero) {
            return Err(not_in_image(&m.label));
        }
    }
    Ok(decoded)
}

/// Rank-one reconstruction of `x^(1) ⊗ … ⊗ x^(r)`.
fn decode_segre(dims: &[usize], z: &[Q]) -> Result<QPoint> {
    let shape: Vec<usize> = dims.iter().map(|n| n + 1).collect();
    let mut strides = vec![1usize; shape.len()];
    for b in (0..shape.len().saturating_sub(1)).rev() {
        strides[b] = strides[b + 1] * shape[b + 1];
    }
    let first = z.iter().position(|c| !c.is_zero()).expect("nonzero input");
    let idx: Vec<usize> = (0..shape.len()).map(|b| (first / strides[b]) % shape[b]).collect();
    let blocks = (0..shape.len())
        .map(|b| {
            (0..shape[b])
                .map(|j| z[first - idx[b] * strides[b] + j * strides[b]].clone())
                .collect()
        })
        .collect();
    QPoint::new(blocks)
}

/// Splits the binary form with coefficients `z` into linear factors and
/// assigns each root to the unique set of blocks whose degrees sum to its
/// multiplicity.
fn decode_binary_product(dvec: &[u32], z: &[Q]) -> Result<QPoint> {
    let r = dvec.len();
    let f = BinaryForm::new(z.to_vec());
    let rr = f.rational_roots();
    let split: usize = rr.roots.iter().map(|(_, k)| k).sum();
    if split != f.degree() {
        return Err(Error::Decode("image form does not split into rational linear factors".into()));
    }
    let mut blocks: Vec<Option<Vec<Q>>> = vec![None; r];
    for (root, mult) in &rr.roots {
        let mask = (1u32..(1 << r)).find(|&mask| {
            (0..r).all(|i| mask & (1 << i) == 0 || blocks[i].is_none())
                && (0..r)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| dvec[i] as usize)
                    .sum::<usize>()
                    == *mult
        });
        let mask = mask.ok_or_else(|| not_in_image("the product of powers"))?;
        for (i, b) in blocks.iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                // x0 s0 + x1 s1 vanishes at [a:b] for x = [b : -a]
                *b = Some(vec![root[1].clone(), -root[0].clone()]);
            }
        }
    }
    let blocks: Option<Vec<Vec<Q>>> = blocks.into_iter().collect();
    QPoint::new(blocks.ok_or_else(|| not_in_image("the product of powers"))?)
}

fn decode_p1p1(d: u32, z: &[Q]) -> Result<QPoint> {
    let dq = qn(d as u64);
    let one = Q::one();
    let zero = Q::zero();
    let pt = |x: [Q; 2], y: [Q; 2]| QPoint::new(vec![x.to_vec(), y.to_vec()]);
    if !z[0].is_zero() {
        let b_ = &z[1] / &z[0];
        let c_ = &b_ * &b_ - qn(2) * &z[2] / &z[0];
        // candidate (x1/x0, y1/y0)
        let mut cands: Vec<(Q, Q)> = Vec::new();
        if z[4].is_zero() {
            if z[3].is_zero() {
                cands.push((b_.clone(), zero.clone()));
            } else {
                cands.push((zero.clone(), &b_ / &dq));
            }
        } else {
            let a_ = &z[3] / &z[4];
            let d1 = &dq + &one;
            let den = (&dq - &one) * (&d1 * &d1 - &a_ * &b_);
            if !den.is_zero() {
                let y = (&dq * &d1 * &b_ - &a_ * (&b_ * &b_ - &c_)) / den;
                cands.push((&b_ - &dq * &y, y));
            }
            // d(d+1) y^2 - 2 d B y + B^2 - C = 0
            let qa = &dq * &d1;
            let qb = -qn(2) * &dq * &b_;
            let qc = &b_ * &b_ - &c_;
            let disc = &qb * &qb - qn(4) * &qa * &qc;
            if let Some(s) = disc.sqrt() {
                for sg in [s.clone(), -s] {
                    let y = (-&qb + sg) / (qn(2) * &qa);
                    cands.push((&b_ - &dq * &y, y));
                }
            }
        }
        let sections = super::build_p1p1_deg_d(d)?.sections;
        for (a, b) in cands {
            let p = pt([one.clone(), a], [one.clone(), b])?;
            let back = eval_many(&sections, p.blocks())?;
            if proportional(&back, z) {
                return Ok(p);
            }
        }
        return Err(not_in_image("p1p1_deg_d"));
    }
    if !z[1].is_zero() {
        return pt([zero.clone(), one.clone()], [one, &z[2] / (dq * &z[1])]);
    }
    pt([z[3].clone(), z[4].clone()], [zero, one])
}

fn decode_p1pn(n: usize, d: u32, z: &[Q]) -> Result<QPoint> {
    let y: Vec<Q> = z[..=n].to_vec();
    let zero = Q::zero();
    let one = Q::one();
    // G_i = x1^d y_i + d x0 x1^{d-1} y_{i+1} sits at: G_n -> n+1, G_{-1} -> n+2, G_i -> n+3+i
    let g = |i: isize| -> Q {
        match i {
            -1 => z[n + 2].clone(),
            i if i as usize == n => z[n + 1].clone(),
            i => z[n + 3 + i as usize].clone(),
        }
    };
    if y.iter().all(Q::is_zero) {
        let mut yy = vec![zero.clone(); n + 1];
        yy[n] = z[n + 1].clone();
        yy[..n].clone_from_slice(&z[n + 3..]);
        return QPoint::new(vec![vec![zero, one], yy]);
    }
    let k = y.iter().position(|c| !c.is_zero()).unwrap();
    let m = y.iter().rposition(|c| !c.is_zero()).unwrap();
    let gk = g(k as isize - 1);
    let x1 = if gk.is_zero() {
        zero
    } else {
        qn(d as u64) * (&y[k] / &y[m]) * g(m as isize) / gk
    };
    QPoint::new(vec![vec![one, x1], y])
}

/// Inverse of the anti-diagonal sums on `P^{n-1}`: triangular on `x_1 ≠ 0`,
/// recursing into `V(x_1)`.
pub fn decode_duf(n: usize, k: u64, z: &[Q]) -> Result<Vec<Q>> {
    if z.len() != 2 * n - 1 {
        return Err(Error::Decode(format!("expected {} coordinates, got {}", 2 * n - 1, z.len())));
    }
    if n == 1 {
        if z[0].is_zero() {
            return Err(not_in_image("pn_duf"));
        }
        return Ok(vec![Q::one()]);
    }
    if z[0].is_zero() {
        if !z[1].is_zero() {
            return Err(not_in_image("pn_duf"));
        }
        let mut rest = decode_duf(n - 1, k, &z[2..])?;
        rest.insert(0, Q::zero());
        return Ok(rest);
    }
    let mut x = vec![Q::one(); n];
    for j in 2..=n {
        // coordinate ℓ = j+1 is x_j plus terms in x_2..x_{j-1}
        let mut v = &z[j - 1] / &z[0];
        for i in 2..=(j + 1) / 2 {
            let jj = j + 1 - i;
            v -= x[i - 1].pow_u(k - 1) * &x[jj - 1];
        }
        x[j - 1] = v;
    }
    Ok(x)
}

fn decode_phi1(w: &[u64], z: &[Q]) -> Result<Decoded> {
    let n = w.len() - 1;
    let d = lcm_all(&w[1..]);
    let a = |i: usize| d / w[i];
    if !z[0].is_zero() {
        let mut x = vec![Q::one(); n + 1];
        x[1] = &z[1] / &z[0];
        for i in 2..=n {
            x[i] = &z[i] / &z[0] - x[i - 1].pow_u(a(i - 1));
        }
        return Ok(Decoded::Point(QPoint::single(x)?));
    }
    // on V(x0): z_1 = [q_1 = d] X_1, z_i = X_{i-1} + [q_i = d] X_i, z_{n+1} = X_n
    let full = |i: usize| w[i] == d;
    let mut xs = vec![Q::zero(); n + 1];
    xs[n] = z[n + 1].clone();
    for i in (2..=n).rev() {
        let t = if full(i) { xs[i].clone() } else { Q::zero() };
        xs[i - 1] = &z[i] - t;
    }
    let z1 = if full(1) { xs[1].clone() } else { Q::zero() };
    if z1 != z[1] || xs[1..].iter().all(Q::is_zero) {
        return Err(not_in_image("wps_phi1"));
    }
    Ok(Decoded::PowerCoordinates(xs[1..].to_vec()))
}

fn decode_phik(w: &[u64], k: u64, z: &[Q]) -> Result<Decoded> {
    let n = w.len() - 1;
    let d = lcm_all(&w[1..]);
    let a = |i: usize| d / w[i];
    let b = |i: usize, j: usize| w[i].lcm(&w[j]) / w[i];
    if !z[0].is_zero() {
        let mut x = vec![Q::one(); n + 1];
        for l in 1..=n {
            let mut v = &z[l] / &z[0];
            for i in 1..=l / 2 {
                let j = l - i;
                v -= x[i].pow_u(k * a(i) - b(i, j)) * x[j].pow_u(b(j, i));
            }
            x[l] = v;
        }
        return Ok(Decoded::Point(QPoint::single(x)?));
    }
    if !z[1].is_zero() {
        return Err(not_in_image("wps_phik"));
    }
    // V(x0): the remaining coordinates are the anti-diagonal sums of X_i = x_i^{a_i}
    let xs = decode_duf(n, k, &z[2..])?;
    let back = eval_many(&duf_sections(n, k), &[xs.clone()])?;
    if !proportional(&back, &z[2..]) {
        return Err(not_in_image("wps_phik"));
    }
    Ok(Decoded::PowerCoordinates(xs))
}

#[cfg(test)]
mod tests {
    use crate::constructions::*;
    use crate::morphism::{roundtrip_check, Decoded};
    use crate::{qi, QPoint};

    fn round(m: &crate::morphism::Morphism, p: &[&[i64]]) {
        let x = QPoint::from_i64(p).unwrap();
        let z = m.evaluate(&x).unwrap();
        let d = m.decode(&z).unwrap();
        assert!(m.decoded_matches(&d, &x).unwrap(), "{} at {x}: got {d}", m.label);
    }

    #[test]
    fn phi1_example_decodes() {
        let m = build_wps_phi1(&[1, 6, 10, 15]).unwrap();
        let z: Vec<_> = [1, 1, 2, 2, 1].iter().map(|&v| qi(v)).collect();
        assert_eq!(
            m.decode(&z).unwrap(),
            Decoded::Point(QPoint::from_i64(&[&[1, 1, 1, 1]]).unwrap())
        );
        round(&m, &[&[0, 1, 1, 1]]);
        round(&m, &[&[0, 0, 2, -1]]);
    }

    #[test]
    fn p1pn_example_decodes() {
        let m = build_p1pn(1, 2).unwrap();
        let z: Vec<_> = [1, 0, 0, 2, 1].iter().map(|&v| qi(v)).collect();
        assert_eq!(
            m.decode(&z).unwrap(),
            Decoded::Point(QPoint::from_i64(&[&[1, 1], &[1, 0]]).unwrap())
        );
        round(&build_p1pn(3, 2).unwrap(), &[&[0, 1], &[0, 2, 0, 3]]);
        round(&build_p1pn(3, 1).unwrap(), &[&[2, 0], &[0, 2, 0, 0]]);
    }

    #[test]
    fn p1p1_special_points() {
        let m = build_p1p1_deg_d(4).unwrap();
        for p in [
            [[1, 0], [1, 0]],
            [[0, 1], [0, 1]],
            [[1, 1], [1, 1]],
            [[1, 0], [1, 3]],
            [[1, 2], [1, 0]],
            [[0, 1], [2, 5]],
            [[3, -1], [0, 1]],
        ] {
            round(&m, &[&p[0], &p[1]]);
        }
    }

    #[test]
    fn chow_and_tangential_decode() {
        round(&build_tangential_p1p1().unwrap(), &[&[1, 2], &[1, 2]]);
        round(&build_tangential_p1p1().unwrap(), &[&[0, 1], &[3, -2]]);
        round(&build_chow_veronese(1, &[1, 2, 4]).unwrap(), &[&[1, 1], &[1, 1], &[2, 3]]);
        let m = build_tangential_p1p1().unwrap();
        assert!(m.decode(&[qi(1), qi(0), qi(1), qi(0)]).is_err());
    }

    #[test]
    fn duf_and_segre_roundtrip() {
        for (n, k) in [(2, 2), (3, 2), (4, 3)] {
            let m = build_pn_duf(n, k).unwrap();
            let rep = roundtrip_check(&m, 200, 3, 20);
            assert!(rep.is_clean(), "{:?}", rep.roundtrip_failures);
        }
        let m = build_segre_veronese(&[1, 2], &[1, 1]).unwrap();
        let rep = roundtrip_check(&m, 200, 3, 20);
        assert!(rep.is_clean(), "{:?}", rep.roundtrip_failures);
    }

    #[test]
    fn phik_roundtrip_small() {
        let m = build_wps_phik(&[1, 2, 3], 2).unwrap();
        let rep = roundtrip_check(&m, 300, 5, 10);
        assert!(rep.is_clean(), "{:?}", rep.roundtrip_failures);
    }
}
