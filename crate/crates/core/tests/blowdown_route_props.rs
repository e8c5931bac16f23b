use num_rational::Ratio;
use proptest::prelude::*;
use sfcontact::blowdown_route::{
    d_bound_check, decide_route, decide_route_report, parse_delta_sequences, replay_blowdowns, run_trace,
    triangle_configuration, CaseTag, IterationInput, Obstruction, RouteVerdict,
};
use sfcontact::exact_cf::{neg_cf_expand, reverse_cf, riemenschneider_dual};
use sfcontact::realizability::verify_certificate;
use sfcontact::scalar::binom2;
use sfcontact::seifert::GammaVector;
use sfcontact::BigInt;

type R = Ratio<i64>;

fn gv(g: &[(i64, i64)]) -> GammaVector<i64> {
    GammaVector::new(g.iter().map(|&(n, d)| R::new(n, d)).collect()).unwrap()
}

/// `n`/`m` sequences of the requested lengths with `cᵢ = −1` for every
/// `i < k`, so the leg heads stay `(−1)`-spheres up to stage `k`.
fn chained(free_n: &[i64], free_m: &[i64], len_n: usize, len_m: usize, k: usize) -> (Vec<i64>, Vec<i64>) {
    let mut n = vec![0i64; len_n];
    let mut m = vec![0i64; len_m];
    for i in 1..=len_n.max(len_m) {
        let (fn_, fm) = (free_n[(i - 1) % free_n.len()], free_m[(i - 1) % free_m.len()]);
        if i % 2 == 1 {
            if i <= len_n {
                n[i - 1] = fn_;
            }
            if i <= len_m {
                // c_i = −(m − n) + 2 = −1  ⟺  m = n + 3
                m[i - 1] = if i < k && i <= len_n { n[i - 1] + 3 } else { 3 + fm };
            }
        } else {
            if i <= len_m {
                m[i - 1] = fm;
            }
            if i <= len_n {
                // c_i = (m − n) + 2 = −1  ⟺  n = m + 3
                n[i - 1] = if i < k && i <= len_m { m[i - 1] + 3 } else { 3 + fn_ };
            }
        }
    }
    (n, m)
}

#[test]
fn triangle_replay() {
    let mut checked = 0;
    for d in 3..=8i64 {
        for n1 in 0..=3i64 {
            for m2 in 0..=3i64 {
                for n2 in [3, 4, m2 + 3] {
                    let inp = IterationInput::new(vec![n1, n2, 0], vec![n1 + 3, m2, 3, 0], d).unwrap();
                    let tri = triangle_configuration(&inp).unwrap();
                    let g0 = &tri.graph;
                    assert_eq!(g0.vertex(tri.top).unwrap().selfint, -d + 1);
                    assert_eq!(g0.vertex(tri.m_chain[0]).unwrap().selfint, -(n1 + 3) + 1);
                    assert_eq!(g0.vertex(tri.n_chain[0]).unwrap().selfint, -1);

                    let states = replay_blowdowns(&inp).unwrap();
                    // stage 1: n₁ + 1 blow-downs on the δ₁ side
                    let g1 = &states[1].graph;
                    let m_head = tri.m_chain[0];
                    let n_head = tri.n_chain[n1 as usize + 1];
                    assert_eq!(g1.vertex(tri.top).unwrap().selfint, -d + n1 + 2);
                    assert_eq!(g1.vertex(m_head).unwrap().selfint, -(n1 + 3) + n1 + 2);
                    assert_eq!(g1.vertex(n_head).unwrap().selfint, -n2 + 1);
                    assert_eq!(g1.multiplicity(tri.top, m_head), n1 + 2);
                    assert_eq!(g1.multiplicity(tri.top, n_head), 1);
                    assert_eq!(g1.multiplicity(m_head, n_head), 1);
                    assert_eq!(g1.vertex(tri.top).unwrap().genus, 0);

                    // stage 2: m₂ + 1 blow-downs on the δ₂ side
                    let g2 = &states[2].graph;
                    let m_head = tri.m_chain[m2 as usize + 1];
                    assert_eq!(g2.vertex(tri.top).unwrap().selfint, -d + n1 + 2 + (m2 + 1) * (n1 + 2).pow(2));
                    assert_eq!(g2.vertex(m_head).unwrap().selfint, -3 + 1);
                    assert_eq!(g2.vertex(n_head).unwrap().selfint, -n2 + m2 + 2);
                    assert_eq!(g2.multiplicity(tri.top, m_head), n1 + 2);
                    assert_eq!(g2.multiplicity(tri.top, n_head), (m2 + 1) * (n1 + 2) + 1);
                    assert_eq!(g2.vertex(tri.top).unwrap().genus, (m2 + 1) * binom2(&(n1 + 2)));
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 6 * 4 * 4 * 3);
}

fn arb_input() -> impl Strategy<Value = IterationInput<i64>> {
    (0usize..=3, 1usize..=3, prop::collection::vec(0i64..=6, 7), prop::collection::vec(0i64..=6, 7), 3i64..=50)
        .prop_map(|(p, q, ns, ms, d)| {
            let n: Vec<i64> = (0..2 * p + 1).map(|i| if i % 2 == 0 { ns[i] } else { ns[i].max(3) }).collect();
            let m: Vec<i64> = (0..2 * q).map(|i| if i % 2 == 0 { ms[i].max(3) } else { ms[i] }).collect();
            IterationInput::new(n, m, d).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn conserved_quantity(inp in arb_input()) {
        let trace = run_trace(&inp);
        prop_assert_eq!(trace.len(), inp.last_index() + 2);
        for s in &trace {
            prop_assert_eq!(s.conserved(), inp.d() - 1);
        }
        // d > p + q at every stage  ⟺  2g − 2 − x ≥ 0 at every stage
        let by_genus = trace.iter().all(|s| 2 * s.genus - 2 - s.x >= 0);
        prop_assert_eq!(d_bound_check(&trace, inp.d()), by_genus);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn engine_agrees_with_recurrence(
        p in 0usize..=2, q in 1usize..=2,
        free_n in prop::collection::vec(0i64..=3, 5),
        free_m in prop::collection::vec(0i64..=3, 4),
        d in 3i64..=40,
    ) {
        let (n, m) = chained(&free_n, &free_m, 2 * p + 1, 2 * q, usize::MAX);
        let inp = IterationInput::new(n.clone(), m.clone(), d).unwrap();
        let trace = run_trace(&inp);
        let blow_downs: i64 = (0..=inp.last_index())
            .map(|i| if i % 2 == 0 { inp.n(i + 1) + 1 } else { inp.m(i + 1) + 1 })
            .sum();
        prop_assume!(blow_downs <= 30);
        let observed = replay_blowdowns(&inp).unwrap();
        prop_assert_eq!(observed.len(), trace.len());
        for o in &observed {
            let s = &trace[o.stage];
            prop_assert_eq!((o.x, o.genus), (s.x, s.genus), "stage {}", o.stage);
            if let Some(p) = o.p { prop_assert_eq!(p, s.p); }
            if let Some(q) = o.q { prop_assert_eq!(q, s.q); }
        }
    }

    /// Even `k`: `(p_k + q_k)/p_k = [m_k+3, 2^(m_(k−1)−3), …, m₂+3, 2^(m₁−2)]`.
    #[test]
    fn numerator_link_even_full(
        free_n in prop::collection::vec(0i64..=4, 5),
        free_m in prop::collection::vec(0i64..=4, 4),
        half in 1usize..=2,
    ) {
        let k = 2 * half;
        let (n, m) = chained(&free_n, &free_m, 5, 4, k);
        let inp = IterationInput::new(n, m, 100).unwrap();
        let s = &run_trace(&inp)[k];
        let rho = inp.m_prefix_cf(k).unwrap();
        prop_assert_eq!(R::new(s.p + s.q, s.p), reverse_cf(&rho).eval());
    }

    /// Odd `k`: `p_k + q_k` is the numerator of the `n`-prefix fraction.
    #[test]
    fn numerator_link_odd_numerator(
        free_n in prop::collection::vec(0i64..=4, 5),
        free_m in prop::collection::vec(0i64..=4, 4),
        half in 0usize..=1,
    ) {
        let k = 2 * half + 1;
        let (n, m) = chained(&free_n, &free_m, 5, 4, k);
        let inp = IterationInput::new(n, m, 100).unwrap();
        let s = &run_trace(&inp)[k];
        prop_assert_eq!(s.p + s.q, *inp.n_prefix_cf(k).unwrap().eval().numer());
    }

    /// Odd `k`, stronger form with `p_k` in the denominator.
    #[test]
    fn numerator_link_odd_full(
        free_n in prop::collection::vec(0i64..=4, 5),
        free_m in prop::collection::vec(0i64..=4, 4),
        half in 0usize..=1,
    ) {
        let k = 2 * half + 1;
        let (n, m) = chained(&free_n, &free_m, 5, 4, k);
        let inp = IterationInput::new(n, m, 100).unwrap();
        let s = &run_trace(&inp)[k];
        prop_assert_eq!(R::new(s.p + s.q, s.p), reverse_cf(&inp.n_prefix_cf(k).unwrap()).eval());
    }

    #[test]
    fn delta_sequences_round_trip(inp in arb_input()) {
        let delta1 = inp.delta1_cf().unwrap().eval();
        let delta2 = inp.delta2_cf().unwrap().eval();
        prop_assert!(delta1 > R::from_integer(1) && delta1 <= R::from_integer(2));
        prop_assert!(delta2 > R::from_integer(2));
        let d = *inp.d();
        // Γ = (1/δ₁, 1/δ₂, 1/δ₃) with δ₃ = [d] = d ≥ δ₂ needs d large enough
        prop_assume!(R::from_integer(d) >= delta2);
        let g = GammaVector::new(vec![delta1.recip(), delta2.recip(), R::new(1, d)]).unwrap();
        let back = parse_delta_sequences(&g).unwrap();
        prop_assert_eq!(back, inp.clone());
        prop_assert_eq!(riemenschneider_dual(&inp.delta2_cf().unwrap()).unwrap(), inp.delta2_dual_closed_form().unwrap());
    }
}

#[test]
fn worked_route_examples() {
    match decide_route(&gv(&[(3, 5), (1, 3), (1, 9)])).unwrap() {
        RouteVerdict::Realizable { certificate, case, .. } => {
            assert_eq!((certificate.m, certificate.a, case), (8, 5, CaseTag::TwoQShort));
            assert!(verify_certificate(&gv(&[(3, 5), (1, 3), (1, 9)]), &certificate));
        }
        v => panic!("{v:?}"),
    }
    assert!(!decide_route(&gv(&[(3, 5), (1, 3), (1, 8)])).unwrap().is_realizable());
    assert_eq!(
        decide_route(&gv(&[(1, 2), (1, 2), (1, 5)])).unwrap(),
        RouteVerdict::Obstructed { reason: Obstruction::ZeroSquareSphere, stage: 0 }
    );
    // the reversed Poincaré sphere
    assert!(!decide_route(&gv(&[(1, 2), (1, 3), (1, 5)])).unwrap().is_realizable());
}

#[test]
fn worked_parse_and_trace() {
    let rep = decide_route_report(&gv(&[(3, 5), (1, 3), (1, 9)])).unwrap();
    let inp = rep.input.unwrap();
    assert_eq!((inp.n_seq(), inp.m_seq(), *inp.d()), (&[0, 3, 0][..], &[3, 0][..], 9));
    let t: Vec<_> = rep.trace.iter().map(|s| (s.x, s.p, s.q, s.genus)).collect();
    assert_eq!(t, vec![(-8, 1, 1, 0), (-7, 2, 1, 0), (-3, 2, 3, 1), (6, 5, 3, 4)]);
}

#[test]
fn route_runs_on_big_integers() {
    let g: GammaVector<BigInt> = GammaVector::new(vec![
        Ratio::new(BigInt::from(3), BigInt::from(5)),
        Ratio::new(BigInt::from(1), BigInt::from(3)),
        Ratio::new(BigInt::from(1), BigInt::from(9)),
    ])
    .unwrap();
    assert!(decide_route(&g).unwrap().is_realizable());
    assert_eq!(neg_cf_expand(&Ratio::new(BigInt::from(8), BigInt::from(5))).unwrap().len(), 3);
}
