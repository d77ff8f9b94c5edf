//! Library answers checked against independent brute-force computations.

use std::collections::HashSet;

use injekt::modp;
use injekt::sepinv::weighted_equivalent;
use injekt::spaces::bezout;
use injekt::{qi, BinaryForm, Fp, Matrix, QMatrix};
use proptest::prelude::*;

fn det_laplace(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] as i128 * det_laplace(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// Largest k with a nonzero k×k minor.
fn rank_by_minors(m: &[Vec<i64>]) -> usize {
    (1..=4)
        .rev()
        .find(|&k| {
            subsets(4, k).iter().any(|rows| {
                subsets(4, k).iter().any(|cols| {
                    let sub: Vec<Vec<i64>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect();
                    det_laplace(&sub) != 0
                })
            })
        })
        .unwrap_or(0)
}

fn low_rank(a: Vec<i64>, b: Vec<i64>, r: usize) -> Vec<Vec<i64>> {
    (0..4)
        .map(|i| (0..4).map(|j| (0..r).map(|k| a[i * 4 + k] * b[k * 4 + j]).sum()).collect())
        .collect()
}

proptest! {
    #[test]
    fn rank_matches_minors(a in prop::collection::vec(-3i64..=3, 16), b in prop::collection::vec(-3i64..=3, 16), r in 0usize..=4) {
        let m = low_rank(a, b, r);
        let q: QMatrix = Matrix::from_i64(&m);
        prop_assert_eq!(q.rank(), rank_by_minors(&m));
        if rank_by_minors(&m) == 4 {
            prop_assert_eq!(q.det(), qi(det_laplace(&m) as i64));
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        f in prop::collection::vec(0i64..101, 2..5),
        g in prop::collection::vec(0i64..101, 2..5),
        common in prop::collection::vec(0i64..101, 2),
        shared in any::<bool>(),
    ) {
        type F = Fp<101>;
        let form = |c: &[i64]| BinaryForm::<F>::new(c.iter().map(|&x| F::new(x)).collect());
        let (mut a, mut b) = (form(&f), form(&g));
        let l = form(&common);
        prop_assume!(!a.is_zero() && !b.is_zero() && !l.is_zero());
        if shared {
            a = a.mul(&l);
            b = b.mul(&l);
        }
        let gcd_deg = a.gcd(&b).degree();
        prop_assert_eq!(num_traits::Zero::is_zero(&a.resultant(&b)), gcd_deg > 0);
    }

    #[test]
    fn weighted_equivalence_matches_search(
        v in prop::collection::vec(0u64..13, 3),
        t in 1u64..13,
        noise in prop::collection::vec(0u64..13, 3),
        scaled in any::<bool>(),
    ) {
        let p = 13;
        let weights = [1u64, 2, 3];
        let w: Vec<u64> = if scaled {
            v.iter().zip(&weights).map(|(&x, &q)| modp::mul(x, modp::pow(t, q, p), p)).collect()
        } else {
            noise
        };
        let found = (1..p).any(|s| v.iter().zip(&weights).zip(&w).all(|((&x, &q), &y)| modp::mul(x, modp::pow(s, q, p), p) == y));
        let closure = weighted_equivalent(&weights, &v, &w, p);
        // a scalar in F_p is a scalar in the closure
        prop_assert!(!found || closure);
        // with support weights of gcd one, the scalar is forced into F_p
        let support: Vec<u64> = (0..3).filter(|&i| v[i] != 0).map(|i| weights[i]).collect();
        if !support.is_empty() && bezout(&support).0 == 1 {
            prop_assert_eq!(found, closure);
        }
    }
}

/// `a + b i` in `F_25 = F_5[i] / (i^2 - 2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct F25(u64, u64);

impl F25 {
    fn mul(self, o: F25) -> F25 {
        let p = 5;
        F25(
            (self.0 * o.0 + 2 * self.1 * o.1) % p,
            (self.0 * o.1 + self.1 * o.0) % p,
        )
    }
    fn add(self, o: F25) -> F25 {
        F25((self.0 + o.0) % 5, (self.1 + o.1) % 5)
    }
    fn sub(self, o: F25) -> F25 {
        F25((self.0 + 5 - o.0) % 5, (self.1 + 5 - o.1) % 5)
    }
    fn all() -> Vec<F25> {
        (0..25).map(|c| F25(c % 5, c / 5)).collect()
    }
}

type Cubic = [F25; 4];

fn cube_term(a: F25, b: F25, lambda: F25) -> Cubic {
    let binom = [1, 3, 3, 1];
    let pw = |x: F25, e: usize| (0..e).fold(F25(1, 0), |acc, _| acc.mul(x));
    std::array::from_fn(|i| lambda.mul(F25(binom[i], 0)).mul(pw(a, 3 - i)).mul(pw(b, i)))
}

fn add_c(x: &Cubic, y: &Cubic) -> Cubic {
    std::array::from_fn(|i| x[i].add(y[i]))
}

fn sub_c(x: &Cubic, y: &Cubic) -> Cubic {
    std::array::from_fn(|i| x[i].sub(y[i]))
}

#[test]
fn cubic_rank_over_f5_matches_f25_search() {
    let zero = F25(0, 0);
    let mut points: Vec<(F25, F25)> = F25::all().into_iter().map(|b| (F25(1, 0), b)).collect();
    points.push((zero, F25(1, 0)));
    let terms: Vec<Cubic> = points
        .iter()
        .flat_map(|&(a, b)| F25::all().into_iter().filter(|&l| l != zero).map(move |l| cube_term(a, b, l)))
        .collect();
    let ones: HashSet<Cubic> = terms.iter().copied().collect();
    let mut twos: HashSet<Cubic> = HashSet::new();
    for x in &terms {
        for y in &terms {
            twos.insert(add_c(x, y));
        }
    }
    let search_rank = |f: &Cubic| -> usize {
        if ones.contains(f) {
            1
        } else if twos.contains(f) {
            2
        } else if terms.iter().any(|t| twos.contains(&sub_c(f, t))) {
            3
        } else {
            4
        }
    };
    for code in 1..625u64 {
        let c: Vec<u64> = (0..4).map(|i| (code / 5u64.pow(i)) % 5).collect();
        let form = BinaryForm::<Fp<5>>::new(c.iter().map(|&x| Fp::new(x as i64)).collect());
        let lifted: Cubic = std::array::from_fn(|i| F25(c[i], 0));
        assert_eq!(form.waring_rank().unwrap(), search_rank(&lifted), "cubic {c:?}");
    }
}

#[test]
fn rank_oracle_f3_exhaustive() {
    assert_eq!(injekt::suite::rank_oracle_exhaustive_f3(), Ok(6561));
}

#[test]
fn rank_oracle_f5_sampled() {
    assert_eq!(injekt::suite::rank_oracle_sampled_f5(2_000, 11), Ok(2_000));
}
