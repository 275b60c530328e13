use proptest::prelude::*;
use scavenger_core::cycles::{find_5cycle, gen_vectors, validate_5cycle};
use scavenger_core::graph::build_graph;
use scavenger_core::hunts::{
    greedy_hunt, verify_certificate, verify_points, Certificate, CertificateKind, GreedyConfig,
};
use scavenger_core::numtheory::{antipodal_dist_sq, phi_criteria, t_values};
use scavenger_core::{QPoint3, Rational};

fn third(n: i64) -> Rational {
    Rational::new(n.into(), 3.into())
}

fn points() -> impl Strategy<Value = Vec<QPoint3>> {
    prop::collection::vec((-12i64..=12, -12i64..=12, -12i64..=12), 1..24).prop_map(|v| {
        v.into_iter()
            .map(|(a, b, c)| QPoint3::new(third(a), third(b), third(c)))
            .collect()
    })
}

fn t_in_t() -> impl Strategy<Value = u64> {
    let ts: Vec<u64> = t_values(200).collect();
    prop::sample::select(ts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_exactly_the_distance(pts in points(), t in prop::sample::select(vec![2u64, 3, 6, 10, 22])) {
        let tq = Rational::from_integer(t.into());
        let (g, _) = build_graph(&pts, &tq).unwrap();
        let v = g.vertices();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                prop_assert_eq!(g.structure().has_edge(i, j), v[i].dist_sq(&v[j]) == tq);
            }
        }
    }

    #[test]
    fn verifying_a_certificate_equals_verifying_its_points(pts in points(), t in prop::sample::select(vec![2u64, 6, 22])) {
        let cert = Certificate::new(CertificateKind::DirectChromatic, t, pts.clone());
        let reparsed = Certificate::parse(&cert.to_string()).unwrap();
        let direct = verify_points(&pts, t).unwrap();
        prop_assert_eq!(verify_certificate(&reparsed).unwrap(), direct);
    }

    #[test]
    fn pools_have_the_norm(t in t_in_t(), use_three in any::<bool>(), h in 1u64..12) {
        let dens: &[u64] = if use_three { &[1, 3] } else { &[1] };
        let pool = gen_vectors(t, dens, h).unwrap();
        let tq = Rational::from_integer(t.into());
        prop_assert!(pool.vectors().all(|v| v.norm_sq() == tq));
    }

    #[test]
    fn found_cycles_validate(t in t_in_t()) {
        let pool = gen_vectors(t, &[1, 3], 20).unwrap();
        if let Some(c) = find_5cycle(&pool) {
            prop_assert!(validate_5cycle(&c, &Rational::from_integer(t.into())).is_ok());
        }
    }

    /// A circle radius m/n with n = 2 (mod 4) always has a closing antipodal distance.
    #[test]
    fn antipodal_distance_of_half_odd_radius(m in 1i64..2000, p in (0i64..500).prop_map(|k| 2 * k + 1)) {
        let radius_sq = Rational::new(m.into(), (2 * p).into());
        prop_assume!(radius_sq.denom() % 4u32 == 2u32.into());
        let d = antipodal_dist_sq(&radius_sq).unwrap();
        prop_assert!(phi_criteria(&d).unwrap(), "{} from {}", d, radius_sq);
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let cycles: Vec<_> = [10u64, 22, 58, 130]
                .iter()
                .map(|&t| find_5cycle(&gen_vectors(t, &[1, 3], 30).unwrap()))
                .collect();
            let seed: Vec<QPoint3> = ["0 0 0", "14/3 1/3 1/3", "19/3 -1/3 14/3", "6 0 0", "3 3 2"]
                .iter()
                .map(|s| QPoint3::parse(s).unwrap())
                .collect();
            let greedy = greedy_hunt(22, &seed, &GreedyConfig::default()).unwrap();
            (cycles, greedy)
        })
    };
    assert_eq!(run(1), run(4));
}
