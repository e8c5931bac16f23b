//! Realizability of `Γ = (γ₁, …, γ_r)`: `r ≥ 3` and there are coprime
//! `m > a > 0` and a permutation `σ` with
//!
//! ```text
//! γ_σ(1) < a/m,   γ_σ(2) < (m − a)/m,   γ_σ(j) < 1/m  for j ≥ 3.
//! ```

use num_rational::Ratio;
use num_traits::One;

use crate::scalar::{int, Int};
use crate::seifert::GammaVector;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RealizabilityCertificate<I> {
    pub m: I,
    pub a: I,
    /// `assignment[j]` is the index of the entry placed in slot `j`.
    pub assignment: Vec<usize>,
}

/// Search for a certificate. Returns `None` when `r < 3` or when none exists.
///
/// Entries are sorted in decreasing order and the two largest take the
/// `a/m` and `(m − a)/m` slots, which is optimal because both bounds are at
/// least `1/m`. A certificate needs `γ₍₃₎ < 1/m`, so `m` ranges over
/// `2 ≤ m < 1/γ₍₃₎`. The first hit in order of increasing `m`, then `a`,
/// is returned.
pub fn is_realizable<I: Int>(gammas: &GammaVector<I>) -> Result<Option<RealizabilityCertificate<I>>> {
    // Revalidate: the vector may have been built unchecked elsewhere.
    GammaVector::new(gammas.as_slice().to_vec())?;
    if gammas.len() < 3 {
        return Ok(None);
    }
    let order = gammas.descending_order();
    let sorted: Vec<&Ratio<I>> = order.iter().map(|&i| &gammas.as_slice()[i]).collect();
    let (g1, g2, g3) = (sorted[0], sorted[1], sorted[2]);
    if g1.clone() + g2.clone() >= Ratio::one() {
        return Ok(None);
    }
    let mut m: I = int(2);
    while Ratio::from_integer(m.clone()) * g3.clone() < Ratio::one() {
        let mr = Ratio::from_integer(m.clone());
        // a/m > γ₁  ⟺  a > γ₁·m ;  (m − a)/m > γ₂  ⟺  a < m − γ₂·m
        let mut a = (g1.clone() * mr.clone()).floor().to_integer() + I::one();
        let upper = mr.clone() - g2.clone() * mr;
        while Ratio::from_integer(a.clone()) < upper {
            if a.gcd(&m).is_one() {
                return Ok(Some(RealizabilityCertificate { m, a, assignment: order }));
            }
            a = a + I::one();
        }
        m = m + I::one();
    }
    Ok(None)
}

/// Exact check of a certificate against `Γ`, including coprimality and that
/// the assignment is a permutation.
pub fn verify_certificate<I: Int>(gammas: &GammaVector<I>, cert: &RealizabilityCertificate<I>) -> bool {
    let g = gammas.as_slice();
    let r = g.len();
    if r < 3 || cert.assignment.len() != r {
        return false;
    }
    let mut seen = vec![false; r];
    for &i in &cert.assignment {
        if i >= r || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    let (m, a) = (&cert.m, &cert.a);
    if !(*a > I::zero() && a < m) || !a.gcd(m).is_one() {
        return false;
    }
    let slot = |j: usize| &g[cert.assignment[j]];
    *slot(0) < Ratio::new(a.clone(), m.clone())
        && *slot(1) < Ratio::new(m.clone() - a.clone(), m.clone())
        && (2..r).all(|j| *slot(j) < Ratio::new(I::one(), m.clone()))
}

/// Reasons a certificate can fail, in the order they are checked.
pub fn first_failed_inequality<I: Int>(
    gammas: &GammaVector<I>,
    cert: &RealizabilityCertificate<I>,
) -> Option<String> {
    if verify_certificate(gammas, cert) {
        return None;
    }
    let g = gammas.as_slice();
    let (m, a) = (&cert.m, &cert.a);
    if cert.assignment.len() != g.len() || g.len() < 3 {
        return Some("assignment does not cover Γ".into());
    }
    if !(*a > I::zero() && a < m) || !a.gcd(m).is_one() {
        return Some(format!("(m, a) = ({m}, {a}) is not a coprime pair with m > a > 0"));
    }
    let slot = |j: usize| &g[cert.assignment[j]];
    if *slot(0) >= Ratio::new(a.clone(), m.clone()) {
        return Some(format!("γ = {} is not < {a}/{m}", slot(0)));
    }
    let ma = m.clone() - a.clone();
    if *slot(1) >= Ratio::new(ma.clone(), m.clone()) {
        return Some(format!("γ = {} is not < {ma}/{m}", slot(1)));
    }
    (2..g.len())
        .find(|&j| *slot(j) >= Ratio::new(I::one(), m.clone()))
        .map(|j| format!("γ = {} is not < 1/{m}", slot(j)))
        .or_else(|| Some("assignment is not a permutation".into()))
}

/// The same conditions in reciprocal form for `δᵢ = 1/γ₍ᵢ₎` sorted
/// increasingly: `δ₁ > m/a`, `δ₂ > m/(m − a)`, `δ₃, …, δ_r > m`.
pub fn delta_form_holds<I: Int>(sorted_deltas: &[Ratio<I>], m: &I, a: &I) -> bool {
    if sorted_deltas.len() < 3 || a.is_zero() || a >= m {
        return false;
    }
    let mr = Ratio::from_integer(m.clone());
    sorted_deltas[0] > Ratio::new(m.clone(), a.clone())
        && sorted_deltas[1] > Ratio::new(m.clone(), m.clone() - a.clone())
        && sorted_deltas[2..].iter().all(|d| *d > mr)
}
