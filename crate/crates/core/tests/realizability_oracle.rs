use num_integer::Integer;
use num_rational::Ratio;
use proptest::prelude::*;
use sfcontact::enumeration::gamma_vectors;
use sfcontact::realizability::{delta_form_holds, is_realizable, verify_certificate};
use sfcontact::seifert::GammaVector;

type R = Ratio<i64>;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Straight from the definition: every permutation, every coprime pair with
/// `m` bounded by the smallest denominator that could possibly work.
fn brute_force(g: &[R]) -> bool {
    let smallest = g.iter().min().unwrap();
    // γ < 1/m for some entry forces m < 1/γ_min
    let m_max = smallest.recip().ceil().to_integer();
    permutations(g.len()).iter().any(|sigma| {
        (2..=m_max).any(|m| {
            (1..m).filter(|a| a.gcd(&m) == 1).any(|a| {
                g[sigma[0]] < R::new(a, m)
                    && g[sigma[1]] < R::new(m - a, m)
                    && sigma[2..].iter().all(|&j| g[j] < R::new(1, m))
            })
        })
    })
}

#[test]
fn search_matches_definition_r3() {
    for gv in gamma_vectors::<i64>(3, 13) {
        let found = is_realizable(&gv).unwrap();
        assert_eq!(found.is_some(), brute_force(gv.as_slice()), "{:?}", gv.as_slice());
        if let Some(c) = found {
            assert!(verify_certificate(&gv, &c));
        }
    }
}

#[test]
fn search_matches_definition_r4() {
    for gv in gamma_vectors::<i64>(4, 8) {
        assert_eq!(is_realizable(&gv).unwrap().is_some(), brute_force(gv.as_slice()), "{:?}", gv.as_slice());
    }
}

#[test]
fn search_is_permutation_invariant() {
    for gv in gamma_vectors::<i64>(3, 9) {
        let base = is_realizable(&gv).unwrap().map(|c| (c.m, c.a));
        for sigma in permutations(3) {
            let shuffled = GammaVector::new(sigma.iter().map(|&i| gv.as_slice()[i]).collect()).unwrap();
            let c = is_realizable(&shuffled).unwrap();
            assert_eq!(c.as_ref().map(|c| (c.m, c.a)), base);
            if let Some(c) = c {
                assert!(verify_certificate(&shuffled, &c));
            }
        }
    }
}

#[test]
fn worked_examples() {
    let gv = |v: &[(i64, i64)]| GammaVector::new(v.iter().map(|&(n, d)| R::new(n, d)).collect()).unwrap();
    assert!(is_realizable(&gv(&[(1, 2), (1, 3), (1, 5)])).unwrap().is_none());
    let c = is_realizable(&gv(&[(3, 5), (1, 3), (1, 9)])).unwrap().unwrap();
    assert_eq!((c.m, c.a), (8, 5));
    assert!(is_realizable(&gv(&[(3, 5), (1, 3), (1, 8)])).unwrap().is_none());
    let c = is_realizable(&gv(&[(1, 3), (1, 3), (1, 4)])).unwrap().unwrap();
    assert_eq!((c.m, c.a), (2, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn delta_form_is_equivalent(
        entries in prop::collection::vec((1i64..30, 2i64..30), 3..6),
        m in 2i64..30,
        a_raw in 1i64..30,
    ) {
        let a = 1 + a_raw % (m - 1);
        if a.gcd(&m) != 1 {
            return Ok(());
        }
        let g: Vec<R> = entries.iter().map(|&(n, d)| R::new(n % d, d)).filter(|x| *x > R::from_integer(0)).collect();
        if g.len() < 3 {
            return Ok(());
        }
        let gv = GammaVector::new(g).unwrap();
        let order = gv.descending_order();
        let cert = sfcontact::realizability::RealizabilityCertificate { m, a, assignment: order.clone() };
        let deltas: Vec<R> = order.iter().map(|&i| gv.as_slice()[i].recip()).collect();
        prop_assert_eq!(verify_certificate(&gv, &cert), delta_form_holds(&deltas, &m, &a));
    }
}
