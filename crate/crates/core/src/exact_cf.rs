//! Continued fractions over exact rationals.
//!
//! A *negative* continued fraction `[a₁, …, a_h] = a₁ − 1/(a₂ − 1/(… − 1/a_h))`
//! with every `aᵢ ≥ 2` represents each rational `ρ > 1` in exactly one way.
//! A *positive* continued fraction `[n₁, …, n_k]⁺ = n₁ + 1/(n₂ + …)` is only
//! used formally here, so its coefficients are arbitrary integers.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::scalar::{int, to_count, Int};
use crate::{Error, Result};

/// Negative continued fraction with all coefficients `≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NegCF<I> {
    coeffs: Vec<I>,
}

impl<I: Int> NegCF<I> {
    pub fn new(coeffs: Vec<I>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("empty continued fraction".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| **c < int(2)) {
            return Err(Error::Domain(format!(
                "negative continued fraction coefficient {c} is below 2"
            )));
        }
        Ok(NegCF { coeffs })
    }

    pub fn coeffs(&self) -> &[I] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn eval(&self) -> Ratio<I> {
        neg_cf_eval(self)
    }
}

impl<I: fmt::Display> fmt::Display for NegCF<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Positive continued fraction. Coefficients may be any integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PosCF<I> {
    coeffs: Vec<I>,
}

impl<I: Int> PosCF<I> {
    pub fn new(coeffs: Vec<I>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("empty continued fraction".into()));
        }
        Ok(PosCF { coeffs })
    }

    pub fn coeffs(&self) -> &[I] {
        &self.coeffs
    }

    pub fn eval(&self) -> Result<Ratio<I>> {
        pos_cf_eval(self)
    }
}

/// The unique expansion `ρ = [a₁, …, a_h]` with all `aᵢ ≥ 2`.
pub fn neg_cf_expand<I: Int>(rho: &Ratio<I>) -> Result<NegCF<I>> {
    if *rho <= Ratio::one() {
        return Err(Error::Domain(format!("cannot expand {rho}: must exceed 1")));
    }
    let mut num = rho.numer().clone();
    let mut den = rho.denom().clone();
    let mut coeffs = Vec::new();
    loop {
        // a = ⌈num/den⌉; the remainder a − num/den lies in [0, 1).
        let a = num.div_ceil(&den);
        let rem = a.clone() * den.clone() - num;
        coeffs.push(a);
        if rem.is_zero() {
            break;
        }
        num = den;
        den = rem;
    }
    Ok(NegCF { coeffs })
}

pub fn neg_cf_eval<I: Int>(cf: &NegCF<I>) -> Ratio<I> {
    let (last, rest) = cf.coeffs.split_last().expect("NegCF is nonempty");
    rest.iter().rev().fold(Ratio::from_integer(last.clone()), |tail, c| {
        Ratio::from_integer(c.clone()) - tail.recip()
    })
}

pub fn pos_cf_eval<I: Int>(cf: &PosCF<I>) -> Result<Ratio<I>> {
    let (last, rest) = cf.coeffs.split_last().expect("PosCF is nonempty");
    let mut value = Ratio::from_integer(last.clone());
    for (i, c) in rest.iter().enumerate().rev() {
        if value.is_zero() {
            return Err(Error::Domain(format!(
                "positive continued fraction has a zero tail after position {}",
                i + 1
            )));
        }
        value = Ratio::from_integer(c.clone()) + value.recip();
    }
    Ok(value)
}

/// The unique `ρ' > 1` with `1/ρ + 1/ρ' = 1`, i.e. `ρ/(ρ − 1)`.
pub fn dual<I: Int>(rho: &Ratio<I>) -> Result<Ratio<I>> {
    if *rho <= Ratio::one() {
        return Err(Error::Domain(format!("dual of {rho} undefined: must exceed 1")));
    }
    Ok(rho.clone() / (rho.clone() - Ratio::one()))
}

/// Staircase of dots: row `i` holds `aᵢ − 1` dots and starts in the column
/// of the last dot of row `i − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointDiagram {
    rows: Vec<usize>,
}

impl PointDiagram {
    pub fn from_cf<I: Int>(cf: &NegCF<I>) -> Result<Self> {
        let rows = cf
            .coeffs
            .iter()
            .map(|a| to_count(&(a.clone() - I::one())))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointDiagram { rows })
    }

    /// Dots per row.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Column of the first dot in each row.
    pub fn row_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.rows.len());
        let mut start = 0;
        for &len in &self.rows {
            offsets.push(start);
            start += len - 1;
        }
        offsets
    }

    /// Dots per column, left to right.
    pub fn column_counts(&self) -> Vec<usize> {
        let width = self.rows.iter().map(|len| len - 1).sum::<usize>() + 1;
        let mut counts = vec![0; width];
        for (start, len) in self.row_offsets().into_iter().zip(&self.rows) {
            for c in &mut counts[start..start + len] {
                *c += 1;
            }
        }
        counts
    }

    /// Read the diagram by columns: each column count plus one.
    pub fn dual_coeffs<I: Int>(&self) -> Vec<I> {
        self.column_counts()
            .into_iter()
            .map(|c| I::from_usize(c + 1).expect("column count fits the scalar type"))
            .collect()
    }
}

impl fmt::Display for PointDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (start, len) in self.row_offsets().into_iter().zip(&self.rows) {
            writeln!(f, "{}{}", "  ".repeat(start), "* ".repeat(*len).trim_end())?;
        }
        Ok(())
    }
}

/// Expansion of the dual `ρ'`, read off the point diagram of `ρ` without
/// evaluating either fraction.
pub fn riemenschneider_dual<I: Int>(cf: &NegCF<I>) -> Result<NegCF<I>> {
    let diagram = PointDiagram::from_cf(cf)?;
    Ok(NegCF { coeffs: diagram.dual_coeffs() })
}

pub fn reverse_cf<I: Int>(cf: &NegCF<I>) -> NegCF<I> {
    let mut coeffs = cf.coeffs.clone();
    coeffs.reverse();
    NegCF { coeffs }
}

/// The order `⪯` on integer sequences: the first differing entry decides,
/// and a strict prefix ranks above every extension of it.
///
/// For expansions of rationals `> 1` this agrees with the numeric order.
pub fn lex_compare<I: Ord>(s: &[I], t: &[I]) -> Ordering {
    for (a, b) in s.iter().zip(t) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    t.len().cmp(&s.len())
}
