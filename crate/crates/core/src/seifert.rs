//! Seifert invariants `{b, g; (α₁,β₁), …, (α_r,β_r)}` and the numbers
//! derived from them.
//!
//! The base genus follows the signed convention: `g ≥ 0` is the closed
//! orientable surface of genus `g`, `g < 0` the non-orientable surface with
//! Euler characteristic `2 + g`.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::scalar::{int, Int};
use crate::{Error, Result};

/// One exceptional fiber `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fiber<I> {
    pub alpha: I,
    pub beta: I,
}

impl<I: Int> Fiber<I> {
    pub fn new(alpha: I, beta: I) -> Self {
        Fiber { alpha, beta }
    }

    /// `β/α`
    pub fn ratio(&self) -> Ratio<I> {
        Ratio::new(self.beta.clone(), self.alpha.clone())
    }
}

impl<I: Int> From<(I, I)> for Fiber<I> {
    fn from((alpha, beta): (I, I)) -> Self {
        Fiber { alpha, beta }
    }
}

/// Raw, possibly unnormalized Seifert invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData<I> {
    pub b: I,
    pub g: I,
    pub fibers: Vec<Fiber<I>>,
}

impl<I: Int> SeifertData<I> {
    pub fn new(b: I, g: I, fibers: impl IntoIterator<Item = (I, I)>) -> Self {
        SeifertData { b, g, fibers: fibers.into_iter().map(Fiber::from).collect() }
    }

    /// Check the conditions every Seifert invariant must satisfy: `α ≥ 1`
    /// and `gcd(α, β) = 1`.
    pub fn validate(&self) -> Result<()> {
        for (i, f) in self.fibers.iter().enumerate() {
            if f.alpha <= I::zero() {
                return Err(Error::InvalidInvariants(format!(
                    "fiber {} has non-positive multiplicity α = {}",
                    i + 1,
                    f.alpha
                )));
            }
            if !f.alpha.gcd(&f.beta).is_one() {
                return Err(Error::InvalidInvariants(format!(
                    "fiber {} has gcd({}, {}) ≠ 1",
                    i + 1,
                    f.alpha,
                    f.beta
                )));
            }
        }
        Ok(())
    }

    pub fn normalize(&self) -> Result<NormalizedSeifert<I>> {
        normalize(self)
    }
}

impl<I: fmt::Display> fmt::Display for SeifertData<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}; {};", self.b, self.g)?;
        for (i, fib) in self.fibers.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "," })?;
            write!(f, "({},{})", fib.alpha, fib.beta)?;
        }
        f.write_str("}")
    }
}

/// Seifert invariants with `0 < βᵢ < αᵢ` for every fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedSeifert<I>(SeifertData<I>);

impl<I: Int> NormalizedSeifert<I> {
    /// Wraps data that is already normalized, checking that it is.
    pub fn from_normalized(data: SeifertData<I>) -> Result<Self> {
        data.validate()?;
        for f in &data.fibers {
            if f.alpha < int(2) || f.beta <= I::zero() || f.beta >= f.alpha {
                return Err(Error::InvalidInvariants(format!(
                    "fiber ({},{}) is not normalized",
                    f.alpha, f.beta
                )));
            }
        }
        Ok(NormalizedSeifert(data))
    }

    pub fn data(&self) -> &SeifertData<I> {
        &self.0
    }

    pub fn into_data(self) -> SeifertData<I> {
        self.0
    }

    pub fn b(&self) -> &I {
        &self.0.b
    }

    pub fn g(&self) -> &I {
        &self.0.g
    }

    pub fn fibers(&self) -> &[Fiber<I>] {
        &self.0.fibers
    }

    /// Number of exceptional fibers.
    pub fn r(&self) -> usize {
        self.0.fibers.len()
    }

    pub fn is_orientable_base(&self) -> bool {
        !self.0.g.is_negative()
    }

    pub fn euler_number(&self) -> Ratio<I> {
        euler_number(self)
    }

    pub fn e_zero(&self) -> I {
        e_zero(self)
    }

    pub fn gamma_vector(&self) -> GammaVector<I> {
        gamma_vector(self)
    }

    pub fn reversed(&self) -> Self {
        reverse_orientation(self)
    }

    pub fn chi(&self) -> I {
        euler_char_base(&self.0.g)
    }
}

impl<I: fmt::Display> fmt::Display for NormalizedSeifert<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `Γ(M) = (γ₁, …, γ_r)` with `γᵢ = 1 − βᵢ/αᵢ ∈ (0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaVector<I: Int>(Vec<Ratio<I>>);

impl<I: Int> GammaVector<I> {
    pub fn new(gammas: Vec<Ratio<I>>) -> Result<Self> {
        if let Some(g) = gammas.iter().find(|g| **g <= Ratio::zero() || **g >= Ratio::one()) {
            return Err(Error::Domain(format!("γ = {g} lies outside (0, 1)")));
        }
        Ok(GammaVector(gammas))
    }

    pub fn as_slice(&self) -> &[Ratio<I>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Indices ordering the entries from largest to smallest; equal entries
    /// keep their original order.
    pub fn descending_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.0.len()).collect();
        idx.sort_by(|&i, &j| self.0[j].cmp(&self.0[i]));
        idx
    }

    pub fn sorted_descending(&self) -> Vec<Ratio<I>> {
        self.descending_order().into_iter().map(|i| self.0[i].clone()).collect()
    }

    /// `δᵢ = 1/γᵢ`, entrywise.
    pub fn deltas(&self) -> Vec<Ratio<I>> {
        self.0.iter().map(|g| g.recip()).collect()
    }

    /// `(1 − γ₁, …, 1 − γ_r)`
    pub fn complement(&self) -> Self {
        GammaVector(self.0.iter().map(|g| Ratio::one() - g.clone()).collect())
    }
}

/// Shift every `β` into `(0, α)` and fold `α = 1` fibers into `b`, keeping
/// `e(M)` fixed and the fiber order unchanged.
pub fn normalize<I: Int>(raw: &SeifertData<I>) -> Result<NormalizedSeifert<I>> {
    raw.validate()?;
    let mut b = raw.b.clone();
    let mut fibers = Vec::with_capacity(raw.fibers.len());
    for f in &raw.fibers {
        // β = kα + β' with 0 ≤ β' < α, and −β/α = −k − β'/α.
        let (k, rest) = f.beta.div_mod_floor(&f.alpha);
        b = b + k;
        if f.alpha.is_one() {
            continue;
        }
        fibers.push(Fiber::new(f.alpha.clone(), rest));
    }
    Ok(NormalizedSeifert(SeifertData { b, g: raw.g.clone(), fibers }))
}

/// `e(M) = −b − Σ βᵢ/αᵢ`
pub fn euler_number<I: Int>(m: &NormalizedSeifert<I>) -> Ratio<I> {
    m.fibers()
        .iter()
        .fold(Ratio::from_integer(-m.b().clone()), |acc, f| acc - f.ratio())
}

/// `e₀(M) = −b − r`
pub fn e_zero<I: Int>(m: &NormalizedSeifert<I>) -> I {
    -m.b().clone() - I::from_usize(m.r()).expect("fiber count fits the scalar type")
}

pub fn gamma_vector<I: Int>(m: &NormalizedSeifert<I>) -> GammaVector<I> {
    GammaVector(m.fibers().iter().map(|f| Ratio::one() - f.ratio()).collect())
}

/// Normalized invariants of `−M`: `{−b − r, g; (αᵢ, αᵢ − βᵢ)}`.
pub fn reverse_orientation<I: Int>(m: &NormalizedSeifert<I>) -> NormalizedSeifert<I> {
    let r = I::from_usize(m.r()).expect("fiber count fits the scalar type");
    NormalizedSeifert(SeifertData {
        b: -m.b().clone() - r,
        g: m.g().clone(),
        fibers: m
            .fibers()
            .iter()
            .map(|f| Fiber::new(f.alpha.clone(), f.alpha.clone() - f.beta.clone()))
            .collect(),
    })
}

/// `χ(Σ_g)`: `2 − 2g` for `g ≥ 0`, `2 + g` for `g < 0`.
pub fn euler_char_base<I: Int>(g: &I) -> I {
    if g.is_negative() {
        int::<I>(2) + g.clone()
    } else {
        int::<I>(2) - int::<I>(2) * g.clone()
    }
}

/// Pullback to the orientable double cover of a non-orientable base.
pub fn orientation_double_cover<I: Int>(m: &NormalizedSeifert<I>) -> Result<NormalizedSeifert<I>> {
    if !m.g().is_negative() {
        return Err(Error::Domain(format!(
            "base genus {} is orientable; no orientation double cover",
            m.g()
        )));
    }
    let fibers = m.fibers().iter().flat_map(|f| [f.clone(), f.clone()]).collect();
    Ok(NormalizedSeifert(SeifertData {
        b: int::<I>(2) * m.b().clone(),
        g: -I::one() - m.g().clone(),
        fibers,
    }))
}

/// Euler number `a·e(M)` of the circle-bundle quotient by the cyclic group
/// of order `a = α₁⋯α_r`.
pub fn cyclic_quotient_euler<I: Int>(m: &NormalizedSeifert<I>) -> Ratio<I> {
    let a = m.fibers().iter().fold(I::one(), |acc, f| acc * f.alpha.clone());
    euler_number(m) * Ratio::from_integer(a)
}

/// `S¹ × S²` in one of its two Seifert presentations recognised here: the
/// trivial bundle over `S²`, or `r = 2` with `e = 0` and `e₀ = −1`.
pub fn is_product_sphere<I: Int>(m: &NormalizedSeifert<I>) -> bool {
    m.g().is_zero()
        && euler_number(m).is_zero()
        && (m.r() == 0 || (m.r() == 2 && e_zero(m) == -I::one()))
}

/// `RP³ # RP³` as the circle bundle with `e = 0` over the projective plane.
/// Its transverse foliation is not transversely orientable.
pub fn is_projective_pair<I: Int>(m: &NormalizedSeifert<I>) -> bool {
    *m.g() == -I::one() && m.r() == 0 && m.b().is_zero()
}
