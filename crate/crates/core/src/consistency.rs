//! Cross-checks between independent parts of the crate, run over finite
//! families: the blow-down route against the realizability search, and the
//! implications between the foliation and contact criteria.
//!
//! Sweeps split the family into chunks processed on a rayon pool; findings
//! are merged in enumeration order, so reports do not depend on the number
//! of workers.

use num_traits::Signed;
use rayon::prelude::*;

use crate::blowdown_route::{decide_route, RouteVerdict};
use crate::decide::{admits_transverse_contact, admits_transverse_foliation, shadow_check};
use crate::enumeration::{gamma_vectors, SeifertFamily};
use crate::plumbing::{build_plumbing, intersection_matrix, is_negative_definite};
use crate::realizability::{is_realizable, verify_certificate};
use crate::scalar::Int;
use crate::seifert::{is_product_sphere, is_projective_pair, normalize, GammaVector, SeifertData};
use crate::{Error, Result};

/// Run `f` on a pool with `jobs` workers, or on the global pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Outcome of comparing the route with the search on one `Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RouteCheck {
    Agree { realizable: bool },
    Disagree { detail: String },
    Inconclusive { detail: String },
    BadCertificate { detail: String },
}

pub fn check_route_against_oracle<I: Int>(gammas: &GammaVector<I>) -> Result<RouteCheck> {
    let oracle = is_realizable(gammas)?;
    if let Some(cert) = &oracle {
        if !verify_certificate(gammas, cert) {
            return Ok(RouteCheck::BadCertificate {
                detail: format!("search certificate ({}, {}) rejected for {}", cert.m, cert.a, show(gammas)),
            });
        }
    }
    let verdict = decide_route(gammas)?;
    if let RouteVerdict::Realizable { certificate, case, .. } = &verdict {
        if !verify_certificate(gammas, certificate) {
            return Ok(RouteCheck::BadCertificate {
                detail: format!(
                    "route certificate ({}, {}) from {case} rejected for {}",
                    certificate.m,
                    certificate.a,
                    show(gammas)
                ),
            });
        }
    }
    if let RouteVerdict::Inconclusive { diagnostic } = &verdict {
        return Ok(RouteCheck::Inconclusive { detail: format!("{}: {diagnostic}", show(gammas)) });
    }
    if verdict.is_realizable() != oracle.is_some() {
        return Ok(RouteCheck::Disagree {
            detail: format!(
                "{}: route says {verdict:?}, search says {}",
                show(gammas),
                if oracle.is_some() { "realizable" } else { "not realizable" }
            ),
        });
    }
    Ok(RouteCheck::Agree { realizable: oracle.is_some() })
}

fn show<I: Int>(gammas: &GammaVector<I>) -> String {
    let parts: Vec<String> = gammas.as_slice().iter().map(|g| g.to_string()).collect();
    format!("Γ = ({})", parts.join(", "))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RouteSweepReport {
    pub r: usize,
    pub max_denominator: i64,
    pub checked: usize,
    pub realizable: usize,
    pub disagreements: Vec<String>,
    pub inconclusive: Vec<String>,
    pub bad_certificates: Vec<String>,
}

impl RouteSweepReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.inconclusive.is_empty() && self.bad_certificates.is_empty()
    }
}

/// Route against search for every `Γ` of length `r` with denominators at
/// most `max_den`.
pub fn route_oracle_sweep<I: Int>(r: usize, max_den: i64, jobs: Option<usize>) -> Result<RouteSweepReport> {
    let family = gamma_vectors::<I>(r, max_den);
    let results: Vec<Result<RouteCheck>> =
        with_jobs(jobs, || family.par_iter().map(check_route_against_oracle).collect())?;
    let mut report = RouteSweepReport { r, max_denominator: max_den, ..Default::default() };
    for res in results {
        report.checked += 1;
        match res? {
            RouteCheck::Agree { realizable } => report.realizable += usize::from(realizable),
            RouteCheck::Disagree { detail } => report.disagreements.push(detail),
            RouteCheck::Inconclusive { detail } => report.inconclusive.push(detail),
            RouteCheck::BadCertificate { detail } => report.bad_certificates.push(detail),
        }
    }
    Ok(report)
}

/// Implications between the criteria that must hold for every `M`.
///
/// - a transverse foliation on `M` gives transverse contact structures on
///   `M` and on `−M`, except on `S¹ × S²` and on `RP³ # RP³` over the
///   projective plane;
/// - `e(M) < 0` gives a transverse contact structure;
/// - transverse foliations exist on `M` and `−M` together;
/// - the route agrees with the search wherever the contact decision used it.
pub fn check_implications<I: Int>(m: &SeifertData<I>) -> Result<ImplicationCheck> {
    let n = normalize(m)?;
    let reversed = n.reversed().into_data();
    let contact = admits_transverse_contact(m)?;
    let contact_rev = admits_transverse_contact(&reversed)?;
    let fol = admits_transverse_foliation(m)?;
    let fol_rev = admits_transverse_foliation(&reversed)?;
    let mut out = Vec::new();
    if fol.answer && !is_product_sphere(&n) && !is_projective_pair(&n) && !(contact.answer && contact_rev.answer) {
        out.push(format!(
            "{n}: foliation ({}) but contact on M = {}, on −M = {}",
            fol.case, contact.answer, contact_rev.answer
        ));
    }
    if contact.evidence.euler.is_negative() && !contact.answer {
        out.push(format!("{n}: e = {} < 0 but no transverse contact structure", contact.evidence.euler));
    }
    if fol.answer != fol_rev.answer {
        out.push(format!("{n}: foliation on M is {} but on −M is {}", fol.answer, fol_rev.answer));
    }
    for d in [&contact, &contact_rev] {
        if let Err(e) = shadow_check(d) {
            out.push(e.to_string());
        }
    }
    Ok(ImplicationCheck { contact: contact.answer, foliation: fol.answer, failures: out })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicationCheck {
    pub contact: bool,
    pub foliation: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ImplicationSweepReport {
    pub checked: usize,
    pub with_foliation: usize,
    pub with_contact: usize,
    pub failures: Vec<String>,
}

pub fn implication_sweep<I: Int>(family: &SeifertFamily, jobs: Option<usize>) -> Result<ImplicationSweepReport> {
    let sets = family.fiber_sets();
    let chunks: Vec<Result<ImplicationSweepReport>> = with_jobs(jobs, || {
        sets.par_iter()
            .map(|fibers| {
                let mut part = ImplicationSweepReport::default();
                for m in family.instances_with::<I>(fibers) {
                    part.checked += 1;
                    let check = check_implications(&m)?;
                    part.with_foliation += usize::from(check.foliation);
                    part.with_contact += usize::from(check.contact);
                    part.failures.extend(check.failures);
                }
                Ok(part)
            })
            .collect()
    })?;
    let mut report = ImplicationSweepReport::default();
    for part in chunks {
        let part = part?;
        report.checked += part.checked;
        report.with_foliation += part.with_foliation;
        report.with_contact += part.with_contact;
        report.failures.extend(part.failures);
    }
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefinitenessSweepReport {
    pub checked: usize,
    pub negative_definite: usize,
    /// Instances where definiteness of the plumbing and `e < 0` differ.
    pub mismatches: Vec<String>,
}

/// Negative definiteness of the star-shaped plumbing against `e(M) < 0` for
/// every member of `family`. Members with a non-orientable base are skipped.
pub fn definiteness_sweep<I: Int>(family: &SeifertFamily, jobs: Option<usize>) -> Result<DefinitenessSweepReport> {
    let sets = family.fiber_sets();
    let chunks: Vec<Result<DefinitenessSweepReport>> = with_jobs(jobs, || {
        sets.par_iter()
            .map(|fibers| {
                let mut part = DefinitenessSweepReport::default();
                for m in family.instances_with::<I>(fibers) {
                    let n = normalize(&m)?;
                    if !n.is_orientable_base() {
                        continue;
                    }
                    part.checked += 1;
                    let definite = is_negative_definite(&intersection_matrix(&build_plumbing(&n)?))?;
                    part.negative_definite += usize::from(definite);
                    if definite != n.euler_number().is_negative() {
                        part.mismatches.push(format!("{n}: negative definite {definite}, e = {}", n.euler_number()));
                    }
                }
                Ok(part)
            })
            .collect()
    })?;
    let mut report = DefinitenessSweepReport::default();
    for part in chunks {
        let part = part?;
        report.checked += part.checked;
        report.negative_definite += part.negative_definite;
        report.mismatches.extend(part.mismatches);
    }
    Ok(report)
}
