//! Finite families of Seifert invariants and `Γ` vectors for sweeps.
//!
//! Fibers are enumerated as multisets: every quantity the decisions read is
//! invariant under permuting the fibers.

use std::ops::RangeInclusive;

use num_integer::Integer;
use num_rational::Ratio;

use crate::scalar::{int, Int};
use crate::seifert::{GammaVector, SeifertData};

/// Normalized fibers `(α, β)` with `2 ≤ α ≤ max_alpha`, `0 < β < α`,
/// `gcd(α, β) = 1`, ordered by `α` then `β`.
pub fn normalized_fibers(max_alpha: i64) -> Vec<(i64, i64)> {
    (2..=max_alpha)
        .flat_map(|a| (1..a).filter(move |b| a.gcd(b) == 1).map(move |b| (a, b)))
        .collect()
}

/// Every multiset of size at most `max_size` drawn from `0..n`, as
/// nondecreasing index vectors, shortest first.
pub fn multisets(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_size {
        let mut next = Vec::new();
        for m in &layer {
            let start = m.last().copied().unwrap_or(0);
            for i in start..n {
                let mut grown = m.clone();
                grown.push(i);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Multisets of exactly `size` elements from `0..n`.
pub fn multisets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    multisets(n, size).into_iter().filter(|m| m.len() == size).collect()
}

/// All normalized `{b; g; fibers}` with `g` and `b` in the given ranges,
/// at most `max_r` fibers and `α ≤ max_alpha`.
#[derive(Debug, Clone)]
pub struct SeifertFamily {
    pub genera: RangeInclusive<i64>,
    pub b: RangeInclusive<i64>,
    pub max_r: usize,
    pub max_alpha: i64,
}

impl SeifertFamily {
    pub fn fibers(&self) -> Vec<(i64, i64)> {
        normalized_fibers(self.max_alpha)
    }

    /// Fiber multisets; the unit of work for parallel sweeps.
    pub fn fiber_sets(&self) -> Vec<Vec<(i64, i64)>> {
        let fibers = self.fibers();
        multisets(fibers.len(), self.max_r)
            .into_iter()
            .map(|m| m.into_iter().map(|i| fibers[i]).collect())
            .collect()
    }

    /// Every `(b, g)` combined with one fiber multiset.
    pub fn instances_with<I: Int>(&self, fibers: &[(i64, i64)]) -> Vec<SeifertData<I>> {
        let mut out = Vec::new();
        for g in self.genera.clone() {
            for b in self.b.clone() {
                out.push(SeifertData::new(
                    int(b),
                    int(g),
                    fibers.iter().map(|&(a, be)| (int(a), int(be))),
                ));
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        let combos = (self.genera.end() - self.genera.start() + 1).max(0) as usize
            * (self.b.end() - self.b.start() + 1).max(0) as usize;
        combos * multisets(self.fibers().len(), self.max_r).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Distinct rationals in `(0, 1)` with denominator at most `max_den`, in
/// increasing order.
pub fn unit_interval_rationals<I: Int>(max_den: i64) -> Vec<Ratio<I>> {
    let mut v: Vec<Ratio<I>> = (2..=max_den)
        .flat_map(|d| (1..d).filter(move |n| n.gcd(&d) == 1).map(move |n| (n, d)))
        .map(|(n, d)| Ratio::new(int(n), int(d)))
        .collect();
    v.sort();
    v
}

/// Every `Γ` of length `r` with entries of denominator at most `max_den`,
/// up to permutation.
pub fn gamma_vectors<I: Int>(r: usize, max_den: i64) -> Vec<GammaVector<I>> {
    let values = unit_interval_rationals::<I>(max_den);
    multisets_of_size(values.len(), r)
        .into_iter()
        .map(|m| {
            GammaVector::new(m.into_iter().map(|i| values[i].clone()).collect())
                .expect("entries lie in (0, 1)")
        })
        .collect()
}
