use injekt::constructions as cons;
use injekt::exactalg::{q_from_str, q_to_string};
use injekt::graphgadget::GadgetGraph;
use injekt::sepinv::CyclicAction;
use injekt::spaces::{proportional, sample_point_sparse};
use injekt::tensors::Tensor222n;
use injekt::{qi, qr, rng, ExponentVector, QBinaryForm, QPoly, SpaceDescriptor, Q};
use proptest::prelude::*;

fn poly3(terms: &[(u32, u32, u32, i64)]) -> QPoly {
    QPoly::from_terms(
        vec![3],
        terms.iter().map(|&(a, b, c, k)| (ExponentVector::new(vec![vec![a, b, c]]), qi(k))).collect::<Vec<_>>(),
    )
    .unwrap()
}

fn term() -> impl Strategy<Value = (u32, u32, u32, i64)> {
    (0u32..3, 0u32..3, 0u32..3, -5i64..=5)
}

proptest! {
    #[test]
    fn polynomial_ops_commute_with_evaluation(
        f in prop::collection::vec(term(), 0..6),
        g in prop::collection::vec(term(), 0..6),
        x in prop::collection::vec(-4i64..=4, 3),
    ) {
        let (f, g) = (poly3(&f), poly3(&g));
        let pt = vec![x.iter().map(|&v| qi(v)).collect::<Vec<Q>>()];
        let fx = f.eval(&pt).unwrap();
        let gx = g.eval(&pt).unwrap();
        prop_assert_eq!((&f * &g).eval(&pt).unwrap(), fx.clone() * gx.clone());
        prop_assert_eq!((&f + &g).eval(&pt).unwrap(), fx.clone() + gx.clone());
        prop_assert_eq!((&f - &g).eval(&pt).unwrap(), fx - gx);
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn rationals_print_and_parse(n in -10_000i64..10_000, d in 1i64..10_000) {
        let q = qr(n, d);
        prop_assert_eq!(q_from_str(&q_to_string(&q)).unwrap(), q);
    }

    #[test]
    fn binary_gcd_divides(a in prop::collection::vec(-6i64..=6, 2..5), b in prop::collection::vec(-6i64..=6, 2..5), l in prop::collection::vec(-3i64..=3, 2)) {
        let f = QBinaryForm::from_i64(&a).mul(&QBinaryForm::from_i64(&l));
        let g = QBinaryForm::from_i64(&b).mul(&QBinaryForm::from_i64(&l));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let h = f.gcd(&g);
        prop_assert!(f.exact_div(&h).is_some() && g.exact_div(&h).is_some());
        prop_assert!(h.degree() >= usize::from(!QBinaryForm::from_i64(&l).is_zero()));
    }

    #[test]
    fn sections_transform_under_rescaling(seed in any::<u64>(), t in prop::sample::select(vec![-3i64, -2, 2, 5, 7])) {
        let t = qi(t);
        let cases = [
            cons::build_p1pn(2, 2).unwrap(),
            cons::build_p1p1_deg_d(3).unwrap(),
            cons::build_wps_phi1(&[1, 2, 3]).unwrap(),
            cons::build_wps_phik(&[1, 5, 5], 2).unwrap(),
        ];
        let mut r = rng::trial_rng(seed, 0);
        for m in &cases {
            let x = sample_point_sparse(&m.source, 20, &mut r);
            let y = match &m.source {
                SpaceDescriptor::Weighted { weights } => x.weighted_rescale(weights, &t),
                SpaceDescriptor::Product { .. } => x.scale_block(0, &t).scale_block(x.blocks().len() - 1, &t),
            };
            let (a, b) = (m.evaluate(&x), m.evaluate(&y));
            prop_assert!(a.is_ok() && b.is_ok(), "base point hit on {}", m.label);
            prop_assert!(proportional(&a.unwrap(), &b.unwrap()), "{}", m.label);
        }
    }

    #[test]
    fn decoder_recovers_source_points(seed in any::<u64>()) {
        let m = cons::build_wps_phi1(&[1, 6, 10, 15]).unwrap();
        let mut r = rng::trial_rng(seed, 1);
        let x = sample_point_sparse(&m.source, 30, &mut r);
        let d = m.decode(&m.evaluate(&x).unwrap()).unwrap();
        prop_assert!(m.decoded_matches(&d, &x).unwrap());
    }

    #[test]
    fn rank_decisions_carry_valid_witnesses(m in 1usize..=3, v in prop::collection::vec(-2i64..=2, 16), scale in 1i64..=4) {
        let v: Vec<Q> = v.iter().take(4 * (m + 1)).map(|&x| qi(x)).collect();
        let t = Tensor222n::from_vector(m, &v).unwrap();
        let d = t.rank_decision();
        prop_assert!(d.verify(&t), "{} on {:?}", d.name(), v);
        prop_assert_eq!(Tensor222n::<Q>::from_json(&t.to_json()).unwrap(), t.clone());
        prop_assert_eq!(t.scale(&qi(scale)).rank_decision().name(), d.name());
    }

    #[test]
    fn orbits_are_equivalence_classes(a in prop::collection::vec(0u64..13, 4), j in 0u64..6, k in 0u64..6) {
        let act = CyclicAction::with_zeta(6, &[2, 2, 3, 3], 13, 4).unwrap();
        let b = act.act(j, &a);
        let c = act.act(k, &b);
        prop_assert!(act.same_orbit(&a, &a));
        prop_assert!(act.same_orbit(&b, &a));
        prop_assert!(act.same_orbit(&a, &c));
    }

    #[test]
    fn gadget_graph_shape(m in 1usize..40) {
        let g = GadgetGraph::new(m).unwrap();
        g.validate().unwrap();
        prop_assert_eq!((g.e1.len(), g.e2.len()), (m, m - 1));
        let s = g.special_vertex();
        prop_assert!(g.e2.iter().all(|&(u, v)| u != s && v != s));
    }
}
