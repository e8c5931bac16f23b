//! Existence of transverse structures on a Seifert fibration, decided from
//! the normalized invariants.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::blowdown_route::decide_route;
use crate::realizability::{is_realizable, verify_certificate, RealizabilityCertificate};
use crate::scalar::Int;
use crate::seifert::{euler_char_base, normalize, NormalizedSeifert, SeifertData};
use crate::{Error, Result};

/// The clause of the existence criterion that decided the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FiredCase {
    /// Contact: `e₀(M) ≤ −χ`.
    MainA,
    /// Contact: `g = 0`, `r ≤ 2`, `e(M) < 0`.
    MainB,
    /// Contact: `g = 0`, `e₀(M) = −1`, `Γ(M)` realizable.
    MainC,
    /// Foliation: `e₀(±M) ≤ −χ`.
    FoliationA,
    /// Foliation: `g = 0`, `e(M) = 0`; also the `e = 0` circle bundle over
    /// the projective plane.
    FoliationB,
    /// Foliation: `g = 0`, `e₀(M) = −1`, `Γ(M)` realizable.
    FoliationC,
    /// Foliation: `g = 0`, `e₀(−M) = −1`, `Γ(−M)` realizable.
    FoliationD,
    /// Circle-invariant contact: `e(M) < 0`.
    Invariant,
    None,
}

impl fmt::Display for FiredCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiredCase::MainA => "Main-a",
            FiredCase::MainB => "Main-b",
            FiredCase::MainC => "Main-c",
            FiredCase::FoliationA => "Foliation-a",
            FiredCase::FoliationB => "Foliation-b",
            FiredCase::FoliationC => "Foliation-c",
            FiredCase::FoliationD => "Foliation-d",
            FiredCase::Invariant => "Invariant",
            FiredCase::None => "none",
        })
    }
}

/// Invariants the decision was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence<I: Int> {
    pub normalized: NormalizedSeifert<I>,
    pub euler: Ratio<I>,
    pub e0: I,
    pub chi: I,
    pub r: usize,
    /// `e₀(−M)`, for the foliation criterion.
    pub reversed_e0: Option<I>,
    /// Realizability witness when a realizability clause fired.
    pub certificate: Option<RealizabilityCertificate<I>>,
    /// Whether the blow-down route agreed with the realizability search,
    /// recorded whenever realizability of `Γ(M)` was consulted for contact.
    pub route_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision<I: Int> {
    pub answer: bool,
    pub case: FiredCase,
    pub evidence: Evidence<I>,
}

fn evidence<I: Int>(m: NormalizedSeifert<I>) -> Evidence<I> {
    Evidence {
        euler: m.euler_number(),
        e0: m.e_zero(),
        chi: m.chi(),
        r: m.r(),
        normalized: m,
        reversed_e0: None,
        certificate: None,
        route_agrees: None,
    }
}

fn decided<I: Int>(case: FiredCase, evidence: Evidence<I>) -> Decision<I> {
    Decision { answer: case != FiredCase::None, case, evidence }
}

/// Positive contact structure transverse to the fibers. Clauses are tried in
/// the order (a), (b), (c).
pub fn admits_transverse_contact<I: Int>(m: &SeifertData<I>) -> Result<Decision<I>> {
    let mut ev = evidence(normalize(m)?);
    let minus_one = -I::one();
    if ev.e0 <= -ev.chi.clone() {
        return Ok(decided(FiredCase::MainA, ev));
    }
    let genus_zero = ev.normalized.g().is_zero();
    if genus_zero && ev.r <= 2 && ev.euler.is_negative() {
        return Ok(decided(FiredCase::MainB, ev));
    }
    if genus_zero && ev.e0 == minus_one && ev.r >= 3 {
        let gammas = ev.normalized.gamma_vector();
        let cert = is_realizable(&gammas)?;
        let route = decide_route(&gammas)?;
        ev.route_agrees = Some(route.is_realizable() == cert.is_some());
        if let Some(cert) = cert {
            debug_assert!(verify_certificate(&gammas, &cert));
            ev.certificate = Some(cert);
            return Ok(decided(FiredCase::MainC, ev));
        }
    }
    Ok(decided(FiredCase::None, ev))
}

/// Foliation transverse to the fibers.
pub fn admits_transverse_foliation<I: Int>(m: &SeifertData<I>) -> Result<Decision<I>> {
    let mut ev = evidence(normalize(m)?);
    let reversed = ev.normalized.reversed();
    let reversed_e0 = reversed.e_zero();
    ev.reversed_e0 = Some(reversed_e0.clone());
    let minus_one = -I::one();
    let neg_chi = -ev.chi.clone();
    if ev.e0 <= neg_chi && reversed_e0 <= neg_chi {
        return Ok(decided(FiredCase::FoliationA, ev));
    }
    let genus_zero = ev.normalized.g().is_zero();
    let projective_bundle = *ev.normalized.g() == minus_one && ev.r == 0;
    if (genus_zero || projective_bundle) && ev.euler.is_zero() {
        return Ok(decided(FiredCase::FoliationB, ev));
    }
    if genus_zero && ev.e0 == minus_one {
        if let Some(cert) = is_realizable(&ev.normalized.gamma_vector())? {
            ev.certificate = Some(cert);
            return Ok(decided(FiredCase::FoliationC, ev));
        }
    }
    if genus_zero && reversed_e0 == minus_one {
        if let Some(cert) = is_realizable(&reversed.gamma_vector())? {
            ev.certificate = Some(cert);
            return Ok(decided(FiredCase::FoliationD, ev));
        }
    }
    Ok(decided(FiredCase::None, ev))
}

/// Contact structure transverse to the fibers and invariant under the
/// circle action.
pub fn admits_invariant_transverse_contact<I: Int>(m: &SeifertData<I>) -> Result<Decision<I>> {
    let ev = evidence(normalize(m)?);
    let case = if ev.euler.is_negative() { FiredCase::Invariant } else { FiredCase::None };
    Ok(decided(case, ev))
}

/// Transverse contact structures on a circle bundle with Euler number `e`.
pub fn circle_bundle_contact<I: Int>(e: &I, g: &I) -> bool {
    let chi = euler_char_base(g);
    if chi.is_positive() {
        e.is_negative()
    } else {
        *e <= -chi
    }
}

/// Transverse foliations on a circle bundle with Euler number `e`.
pub fn circle_bundle_foliation<I: Int>(e: &I, g: &I) -> bool {
    let chi = euler_char_base(g);
    (!chi.is_positive() && e.abs() <= -chi.clone()) || (!chi.is_negative() && e.is_zero())
}

/// Which structure to decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Question {
    Contact,
    Foliation,
    InvariantContact,
}

pub fn decide<I: Int>(question: Question, m: &SeifertData<I>) -> Result<Decision<I>> {
    match question {
        Question::Contact => admits_transverse_contact(m),
        Question::Foliation => admits_transverse_foliation(m),
        Question::InvariantContact => admits_invariant_transverse_contact(m),
    }
}

/// Checks the route and realizability search agree on `Γ(M)` whenever the
/// contact decision consulted clause (c). Surfaces a disagreement as an
/// error.
pub fn shadow_check<I: Int>(d: &Decision<I>) -> Result<()> {
    match d.evidence.route_agrees {
        Some(false) => Err(Error::Internal(format!(
            "blow-down route and realizability search disagree on Γ of {}",
            d.evidence.normalized
        ))),
        _ => Ok(()),
    }
}

/// `e(M) = e₀(M) + Σ γᵢ`
pub fn euler_from_e_zero<I: Int>(m: &NormalizedSeifert<I>) -> Ratio<I> {
    m.gamma_vector()
        .as_slice()
        .iter()
        .fold(Ratio::from_integer(m.e_zero()), |acc, g| acc + g.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(b: i64, g: i64, f: &[(i64, i64)]) -> SeifertData<i64> {
        SeifertData::new(b, g, f.iter().copied())
    }

    fn poincare() -> SeifertData<i64> {
        sd(-1, 0, &[(2, 1), (3, 1), (5, 1)])
    }

    fn reversed_poincare() -> SeifertData<i64> {
        sd(-2, 0, &[(2, 1), (3, 2), (5, 4)])
    }

    #[test]
    fn contact_examples() {
        let d = admits_transverse_contact(&poincare()).unwrap();
        assert_eq!((d.answer, d.case), (true, FiredCase::MainA));
        assert_eq!((d.evidence.e0, d.evidence.chi), (-2, 2));

        let d = admits_transverse_contact(&reversed_poincare()).unwrap();
        assert_eq!((d.answer, d.case), (false, FiredCase::None));
        assert_eq!(d.evidence.route_agrees, Some(true));

        let d = admits_transverse_contact(&sd(0, 1, &[])).unwrap();
        assert_eq!((d.answer, d.case), (true, FiredCase::MainA));

        let d = admits_transverse_contact(&sd(0, 0, &[])).unwrap();
        assert_eq!((d.answer, d.case), (false, FiredCase::None));
    }

    #[test]
    fn contact_case_b_and_c() {
        // e₀ = −1, e = 1 − 1/2 − 2/3 = −1/6
        let d = admits_transverse_contact(&sd(-1, 0, &[(2, 1), (3, 2)])).unwrap();
        assert_eq!(d.case, FiredCase::MainB);
        // e₀ = −1 with Γ = (3/5, 1/3, 1/9) realizable by (8, 5)
        let d = admits_transverse_contact(&sd(-2, 0, &[(5, 2), (3, 2), (9, 8)])).unwrap();
        assert_eq!(d.evidence.e0, -1);
        assert_eq!(d.case, FiredCase::MainC);
        let c = d.evidence.certificate.unwrap();
        assert_eq!((c.m, c.a), (8, 5));
        assert_eq!(d.evidence.route_agrees, Some(true));
    }

    #[test]
    fn contact_rejects_invalid() {
        assert!(matches!(
            admits_transverse_contact(&sd(0, 0, &[(4, 2)])),
            Err(Error::InvalidInvariants(_))
        ));
    }

    #[test]
    fn foliation_examples() {
        let d = admits_transverse_foliation(&sd(0, 1, &[])).unwrap();
        assert_eq!((d.answer, d.case), (true, FiredCase::FoliationA));
        let d = admits_transverse_foliation(&poincare()).unwrap();
        assert_eq!((d.answer, d.case), (false, FiredCase::None));
        assert_eq!(d.evidence.reversed_e0, Some(-1));
        let d = admits_transverse_foliation(&sd(0, 0, &[])).unwrap();
        assert_eq!((d.answer, d.case), (true, FiredCase::FoliationB));
    }

    #[test]
    fn invariant_examples() {
        assert!(admits_invariant_transverse_contact(&poincare()).unwrap().answer);
        assert!(!admits_invariant_transverse_contact(&reversed_poincare()).unwrap().answer);
        assert!(!admits_invariant_transverse_contact(&sd(0, 1, &[])).unwrap().answer);
    }

    #[test]
    fn circle_bundle_tables() {
        assert!(circle_bundle_contact(&0i64, &1));
        assert!(circle_bundle_contact(&-1i64, &0));
        assert!(!circle_bundle_contact(&0i64, &0));
        assert!(circle_bundle_foliation(&2i64, &2));
        assert!(!circle_bundle_foliation(&1i64, &1));
        assert!(circle_bundle_foliation(&0i64, &0));
        // Klein bottle base: χ = 0
        assert!(circle_bundle_foliation(&0i64, &-2));
        assert!(!circle_bundle_foliation(&1i64, &-2));
    }

    #[test]
    fn euler_identity() {
        let m = normalize(&poincare()).unwrap();
        assert_eq!(euler_from_e_zero(&m), m.euler_number());
    }
}
