use num_rational::Ratio;
use sfcontact::decide::{
    admits_invariant_transverse_contact, admits_transverse_contact, admits_transverse_foliation,
    circle_bundle_contact, circle_bundle_foliation, decide, FiredCase, Question,
};
use sfcontact::seifert::{euler_char_base, SeifertData};
use sfcontact::BigInt;

fn sd(b: i64, g: i64, f: &[(i64, i64)]) -> SeifertData<i64> {
    SeifertData::new(b, g, f.iter().copied())
}

/// Circle bundles straight from the two tables: transverse contact iff
/// `e ≤ −χ` (χ ≤ 0) or `e < 0` (χ > 0); transverse foliation iff `|e| ≤ −χ`
/// (χ ≤ 0) or `e = 0` (χ ≥ 0).
fn tables(e: i64, g: i64) -> (bool, bool) {
    let chi = if g >= 0 { 2 - 2 * g } else { 2 + g };
    let contact = if chi <= 0 { e <= -chi } else { e < 0 };
    let foliation = (chi <= 0 && e.abs() <= -chi) || (chi >= 0 && e == 0);
    (contact, foliation)
}

#[test]
fn circle_bundles_reduce_to_tables() {
    let mut count = 0;
    for b in -6..=6i64 {
        for g in -4..=4i64 {
            let m = sd(b, g, &[]);
            let e = -b;
            let (contact, foliation) = tables(e, g);
            assert_eq!(admits_transverse_contact(&m).unwrap().answer, contact, "b={b}, g={g}");
            assert_eq!(admits_transverse_foliation(&m).unwrap().answer, foliation, "b={b}, g={g}");
            assert_eq!(circle_bundle_contact(&e, &g), contact);
            assert_eq!(circle_bundle_foliation(&e, &g), foliation);
            assert_eq!(euler_char_base(&g), if g >= 0 { 2 - 2 * g } else { 2 + g });
            count += 1;
        }
    }
    assert_eq!(count, 117);
}

#[test]
fn poincare_sphere_pair() {
    let m = sd(-1, 0, &[(2, 1), (3, 1), (5, 1)]);
    let d = admits_transverse_contact(&m).unwrap();
    assert_eq!((d.answer, d.case), (true, FiredCase::MainA));
    assert_eq!(d.evidence.euler, Ratio::new(-1, 30));

    let rev = sd(-2, 0, &[(2, 1), (3, 2), (5, 4)]);
    let d = admits_transverse_contact(&rev).unwrap();
    assert_eq!((d.answer, d.case), (false, FiredCase::None));
    assert_eq!(d.evidence.e0, -1);
    assert_eq!(d.evidence.certificate, None);
    assert_eq!(d.evidence.route_agrees, Some(true));

    let f = admits_transverse_foliation(&m).unwrap();
    assert_eq!((f.answer, f.case), (false, FiredCase::None));
    assert!(admits_invariant_transverse_contact(&m).unwrap().answer);
    assert!(!admits_invariant_transverse_contact(&rev).unwrap().answer);
}

#[test]
fn foliation_clauses() {
    assert_eq!(admits_transverse_foliation(&sd(0, 1, &[])).unwrap().case, FiredCase::FoliationA);
    assert_eq!(admits_transverse_foliation(&sd(0, 0, &[])).unwrap().case, FiredCase::FoliationB);
    // e₀ = −1 and Γ = (3/5, 1/3, 1/9) realizable
    let m = sd(-2, 0, &[(5, 2), (3, 2), (9, 8)]);
    assert_eq!(admits_transverse_foliation(&m).unwrap().case, FiredCase::FoliationC);
    // its reversal fires clause (d)
    let rev = sd(-1, 0, &[(5, 3), (3, 1), (9, 1)]);
    assert_eq!(admits_transverse_foliation(&rev).unwrap().case, FiredCase::FoliationD);
}

#[test]
fn decisions_on_big_integers() {
    let m = SeifertData::new(
        BigInt::from(-1),
        BigInt::from(0),
        [(2, 1), (3, 1), (5, 1)].map(|(a, b)| (BigInt::from(a), BigInt::from(b))),
    );
    let d = decide(Question::Contact, &m).unwrap();
    assert!(d.answer);
    assert_eq!(d.evidence.e0, BigInt::from(-2));
    assert!(decide(Question::InvariantContact, &m).unwrap().answer);
    assert!(!decide(Question::Foliation, &m).unwrap().answer);
}

#[test]
fn non_orientable_bases_use_signed_genus() {
    // g = −2: Klein bottle, χ = 0
    assert!(admits_transverse_contact(&sd(0, -2, &[])).unwrap().answer);
    assert!(admits_transverse_foliation(&sd(0, -2, &[])).unwrap().answer);
    // g = −1: projective plane, χ = 1
    let d = admits_transverse_contact(&sd(0, -1, &[])).unwrap();
    assert_eq!((d.answer, d.evidence.chi), (false, 1));
    assert!(admits_transverse_contact(&sd(1, -1, &[])).unwrap().answer);
    // RP³ # RP³: foliated by the suspension of a reflection
    let f = admits_transverse_foliation(&sd(0, -1, &[])).unwrap();
    assert_eq!((f.answer, f.case), (true, FiredCase::FoliationB));
    assert!(!admits_transverse_foliation(&sd(0, -1, &[(2, 1)])).unwrap().answer);
}
