//! Blow-down / adjunction route for `g = 0`, `e₀(M) = −1`, `r ≥ 3`.
//!
//! Sort `Γ` decreasingly and put `δᵢ = 1/γᵢ`. When `δ₁ ≤ 2 < δ₂` the
//! expansions have the run-length shapes
//!
//! ```text
//! δ₁ = [2^(n₁+1), n₂, 2^n₃, n₄, …, n_2p, 2^n_(2p+1)]     n_odd ≥ 0, n_even ≥ 3
//! δ₂ = [m₁, 2^m₂, m₃, …, m_(2q−1), 2^m_2q]               m_odd ≥ 3, m_even ≥ 0
//! δ₃ = [d, …]                                            d ≥ 3
//! ```
//!
//! Blowing down the central `(−1)`-sphere of the star plumbing leaves a
//! triangle: a top vertex of weight `−d + 1` meeting the heads of the `δ₁`
//! and `δ₂` legs. Alternately blowing down along the two legs changes the
//! top vertex by the recurrences in [`run_trace`], and the adjunction bound
//! on every intermediate surface either obstructs a transverse contact
//! structure or pins down a realizability certificate.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::exact_cf::{lex_compare, neg_cf_expand, riemenschneider_dual, NegCF};
use crate::plumbing::{PlumbingGraph, VertexId};
use crate::realizability::{first_failed_inequality, RealizabilityCertificate};
use crate::scalar::{binom2, int, to_count, Int};
use crate::seifert::GammaVector;
use crate::{Error, Result};

/// Run-length data of `δ₁`, `δ₂` and the leading coefficient of `δ₃`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IterationInput<I> {
    n_seq: Vec<I>,
    m_seq: Vec<I>,
    d: I,
}

impl<I: Int> IterationInput<I> {
    pub fn new(n_seq: Vec<I>, m_seq: Vec<I>, d: I) -> Result<Self> {
        let bad = |what: String| Err(Error::Domain(what));
        if n_seq.len().is_multiple_of(2) {
            return bad(format!("n sequence must have odd length, got {}", n_seq.len()));
        }
        if m_seq.is_empty() || m_seq.len() % 2 == 1 {
            return bad(format!("m sequence must have positive even length, got {}", m_seq.len()));
        }
        // 1-based index i is odd iff 0-based position is even
        for (pos, n) in n_seq.iter().enumerate() {
            let min = if pos % 2 == 0 { 0 } else { 3 };
            if *n < int(min) {
                return bad(format!("n_{} = {n} is below {min}", pos + 1));
            }
        }
        for (pos, m) in m_seq.iter().enumerate() {
            let min = if pos % 2 == 0 { 3 } else { 0 };
            if *m < int(min) {
                return bad(format!("m_{} = {m} is below {min}", pos + 1));
            }
        }
        if d < int(3) {
            return bad(format!("d = {d} is below 3"));
        }
        Ok(IterationInput { n_seq, m_seq, d })
    }

    pub fn n_seq(&self) -> &[I] {
        &self.n_seq
    }

    pub fn m_seq(&self) -> &[I] {
        &self.m_seq
    }

    pub fn d(&self) -> &I {
        &self.d
    }

    /// `p` in `n_(2p+1)`
    pub fn p_len(&self) -> usize {
        self.n_seq.len() / 2
    }

    /// `q` in `m_2q`
    pub fn q_len(&self) -> usize {
        self.m_seq.len() / 2
    }

    /// `min(2q, 2p + 1)`: the last index at which both sequences are defined.
    pub fn last_index(&self) -> usize {
        self.m_seq.len().min(self.n_seq.len())
    }

    /// `nᵢ`, 1-based.
    pub fn n(&self, i: usize) -> &I {
        &self.n_seq[i - 1]
    }

    /// `mᵢ`, 1-based.
    pub fn m(&self, i: usize) -> &I {
        &self.m_seq[i - 1]
    }

    /// `cᵢ = (−1)^i (mᵢ − nᵢ) + 2`, the weight of the leg head that has to be
    /// a `(−1)`-sphere for stage `i + 1` to exist. Defined for
    /// `1 ≤ i ≤ min(2q, 2p + 1)`.
    pub fn stage_weight(&self, i: usize) -> I {
        let diff = self.m(i).clone() - self.n(i).clone();
        let signed = if i.is_multiple_of(2) { diff } else { -diff };
        signed + int(2)
    }

    pub fn delta1_cf(&self) -> Result<NegCF<I>> {
        let mut cf = CfBuilder::default();
        for (pos, n) in self.n_seq.iter().enumerate() {
            match pos {
                0 => cf.twos(&(n.clone() + I::one()))?,
                _ if pos % 2 == 0 => cf.twos(n)?,
                _ => cf.push(n.clone()),
            }
        }
        cf.finish()
    }

    pub fn delta2_cf(&self) -> Result<NegCF<I>> {
        let mut cf = CfBuilder::default();
        for (pos, m) in self.m_seq.iter().enumerate() {
            if pos % 2 == 0 {
                cf.push(m.clone());
            } else {
                cf.twos(m)?;
            }
        }
        cf.finish()
    }

    /// Closed form of `δ₂'` read from the point diagram of `δ₂`:
    /// `[2^(m₁−2), m₂+3, 2^(m₃−3), m₄+3, …, 2^(m_(2q−1)−3), m_2q+2]`.
    pub fn delta2_dual_closed_form(&self) -> Result<NegCF<I>> {
        let mut cf = CfBuilder::default();
        let last = self.m_seq.len() - 1;
        for (pos, m) in self.m_seq.iter().enumerate() {
            match pos {
                0 => cf.twos(&(m.clone() - int(2)))?,
                _ if pos % 2 == 0 => cf.twos(&(m.clone() - int(3)))?,
                _ if pos == last => cf.push(m.clone() + int(2)),
                _ => cf.push(m.clone() + int(3)),
            }
        }
        cf.finish()
    }

    /// `[2^(m₁−2), m₂+3, 2^(m₃−3), …, 2^(m_(k−1)−3), m_k+3]` for even `k`.
    pub fn m_prefix_cf(&self, k: usize) -> Result<NegCF<I>> {
        if k == 0 || k % 2 == 1 || k > self.m_seq.len() {
            return Err(Error::Domain(format!("m-prefix needs even 2 ≤ k ≤ 2q, got {k}")));
        }
        let mut cf = CfBuilder::default();
        for (pos, m) in self.m_seq[..k].iter().enumerate() {
            match pos {
                0 => cf.twos(&(m.clone() - int(2)))?,
                _ if pos % 2 == 0 => cf.twos(&(m.clone() - int(3)))?,
                _ => cf.push(m.clone() + int(3)),
            }
        }
        cf.finish()
    }

    /// `δ₁` cut after its `k`-th run of twos, with one extra `2` appended,
    /// for odd `k`: `[2^(n₁+1), n₂, 2^n₃, …, n_(k−1), 2^(n_k+1)]`, and
    /// `[2^(n₁+2)]` when `k = 1`.
    pub fn n_prefix_cf(&self, k: usize) -> Result<NegCF<I>> {
        if k.is_multiple_of(2) || k > self.n_seq.len() {
            return Err(Error::Domain(format!("n-prefix needs odd 1 ≤ k ≤ 2p+1, got {k}")));
        }
        let mut cf = CfBuilder::default();
        for (pos, n) in self.n_seq[..k].iter().enumerate() {
            match pos {
                0 => cf.twos(&(n.clone() + I::one()))?,
                _ if pos % 2 == 0 => cf.twos(n)?,
                _ => cf.push(n.clone()),
            }
        }
        cf.push(int(2));
        cf.finish()
    }

    /// Certificate fraction `ρ = m/a` for termination index `k`.
    pub fn certificate_cf(&self, k: usize) -> Result<NegCF<I>> {
        if k.is_multiple_of(2) {
            self.m_prefix_cf(k)
        } else {
            self.n_prefix_cf(k)
        }
    }
}

struct CfBuilder<I> {
    coeffs: Vec<I>,
}

impl<I> Default for CfBuilder<I> {
    fn default() -> Self {
        CfBuilder { coeffs: Vec::new() }
    }
}

impl<I: Int> CfBuilder<I> {
    fn push(&mut self, c: I) {
        self.coeffs.push(c);
    }

    fn twos(&mut self, count: &I) -> Result<()> {
        let count = to_count(count)?;
        self.coeffs.extend(std::iter::repeat_n(int(2), count));
        Ok(())
    }

    fn finish(self) -> Result<NegCF<I>> {
        NegCF::new(self.coeffs)
    }
}

/// Split the expansion of `δ₁ ∈ (1, 2]` and of `δ₂ > 2` into run lengths,
/// and read `d` off `δ₃`. `Γ` is sorted decreasingly first.
pub fn parse_delta_sequences<I: Int>(gammas: &GammaVector<I>) -> Result<IterationInput<I>> {
    if gammas.len() < 3 {
        return Err(Error::Domain(format!("need at least 3 entries, got {}", gammas.len())));
    }
    let deltas: Vec<Ratio<I>> = gammas.sorted_descending().iter().map(|g| g.recip()).collect();
    let two = Ratio::from_integer(int::<I>(2));
    if deltas[0] > two || deltas[1] <= two {
        return Err(Error::Precondition(format!(
            "need δ₁ ≤ 2 < δ₂, got δ₁ = {}, δ₂ = {}",
            deltas[0], deltas[1]
        )));
    }
    let delta1 = neg_cf_expand(&deltas[0])?;
    let delta2 = neg_cf_expand(&deltas[1])?;
    let delta3 = neg_cf_expand(&deltas[2])?;

    let runs1 = run_lengths(delta1.coeffs());
    // δ₁ ≤ 2 starts with a 2, so the leading run is nonempty
    let mut n_seq = Vec::with_capacity(runs1.len());
    for (pos, item) in runs1.iter().enumerate() {
        n_seq.push(if pos == 0 { item.clone() - I::one() } else { item.clone() });
    }
    let runs2 = run_lengths(delta2.coeffs());
    // δ₂ > 2 starts with its first non-2 entry; drop the empty leading run
    if !runs2[0].is_zero() {
        return Err(Error::Internal(format!("δ₂ = {delta2} does not start with a coefficient ≥ 3")));
    }
    let m_seq = runs2[1..].to_vec();
    let d = delta3.coeffs()[0].clone();
    let input = IterationInput::new(n_seq, m_seq, d)
        .map_err(|e| Error::Internal(format!("δ expansions do not fit the run templates: {e}")))?;
    if input.delta1_cf()? != delta1 || input.delta2_cf()? != delta2 {
        return Err(Error::Internal("run-length decomposition does not round-trip".into()));
    }
    Ok(input)
}

/// `[run₀, v₁, run₁, v₂, …, run_t]`: lengths of the (possibly empty) runs of
/// twos interleaved with the other coefficients.
fn run_lengths<I: Int>(coeffs: &[I]) -> Vec<I> {
    let two = int::<I>(2);
    let mut out = Vec::new();
    let mut run = I::zero();
    for c in coeffs {
        if *c == two {
            run = run + I::one();
        } else {
            out.push(run);
            out.push(c.clone());
            run = I::zero();
        }
    }
    out.push(run);
    out
}

/// The top surface after stage `i`: self-intersection `x`, intersections `p`
/// (with the `δ₂` side) and `q` (with the `δ₁` side), genus after smoothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlowdownState<I> {
    pub stage: usize,
    pub x: I,
    pub p: I,
    pub q: I,
    pub genus: I,
}

impl<I: Int> BlowdownState<I> {
    /// `2g − 2 − x + p + q`, equal to `d − 1` at every stage.
    pub fn conserved(&self) -> I {
        int::<I>(2) * self.genus.clone() - int(2) - self.x.clone() + self.p.clone() + self.q.clone()
    }
}

/// States `0, …, min(2q, 2p + 1) + 1`.
///
/// Start from `(x, p, q, g) = (−d + 1, 1, 1, 0)`. An even step `i` blows down
/// `n_(i+1) + 1` spheres on the `δ₁` side:
/// `x += (n+1)q²`, `p += (n+1)q`, `g += (n+1)·binom(q, 2)`. An odd step blows
/// down `m_(i+1) + 1` spheres on the `δ₂` side with `p` and `q` swapped.
pub fn run_trace<I: Int>(input: &IterationInput<I>) -> Vec<BlowdownState<I>> {
    let mut state = BlowdownState {
        stage: 0,
        x: I::one() - input.d.clone(),
        p: I::one(),
        q: I::one(),
        genus: I::zero(),
    };
    let mut trace = vec![state.clone()];
    for i in 0..=input.last_index() {
        let next = state.stage + 1;
        state = if i % 2 == 0 {
            let k = input.n(i + 1).clone() + I::one();
            BlowdownState {
                stage: next,
                x: state.x + k.clone() * state.q.clone() * state.q.clone(),
                p: state.p + k.clone() * state.q.clone(),
                genus: state.genus + k * binom2(&state.q),
                q: state.q,
            }
        } else {
            let k = input.m(i + 1).clone() + I::one();
            BlowdownState {
                stage: next,
                x: state.x + k.clone() * state.p.clone() * state.p.clone(),
                q: state.q + k.clone() * state.p.clone(),
                genus: state.genus + k * binom2(&state.p),
                p: state.p,
            }
        };
        trace.push(state.clone());
    }
    trace
}

/// `d > pᵢ + qᵢ` at every stage of `trace`.
pub fn d_bound_check<I: Int>(trace: &[BlowdownState<I>], d: &I) -> bool {
    trace.iter().all(|s| *d > s.p.clone() + s.q.clone())
}

/// Which branch of the case analysis produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `δ₁ > 2`: `(m, a) = (2, 1)` works outright.
    Direct,
    /// Some `cₖ < −1` with `k` odd.
    OddK,
    /// Some `cₖ < −1` with `k` even.
    EvenK,
    /// Every `cᵢ = −1` and `2q < 2p + 1`.
    TwoQShort,
    /// Every `cᵢ = −1` and `2p + 1 < 2q`.
    TwoPShort,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Direct => "Direct",
            CaseTag::OddK => "OddK",
            CaseTag::EvenK => "EvenK",
            CaseTag::TwoQShort => "TwoQShort",
            CaseTag::TwoPShort => "TwoPShort",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Obstruction {
    /// `δ₂ ≤ 2`: blowing down yields an embedded sphere of square zero.
    ZeroSquareSphere,
    /// A leg head ends up with weight `cᵢ > −1`.
    AdjunctionViolation,
    /// The smoothed top surface breaks `d > pᵢ + qᵢ`.
    TopSurfaceAdjunction,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::ZeroSquareSphere => "zero-square sphere",
            Obstruction::AdjunctionViolation => "adjunction violation",
            Obstruction::TopSurfaceAdjunction => "top surface adjunction violation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RouteVerdict<I> {
    Realizable { certificate: RealizabilityCertificate<I>, case: CaseTag, stage: usize },
    Obstructed { reason: Obstruction, stage: usize },
    Inconclusive { diagnostic: String },
}

impl<I> RouteVerdict<I> {
    pub fn is_realizable(&self) -> bool {
        matches!(self, RouteVerdict::Realizable { .. })
    }
}

/// Verdict together with what the route computed on the way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteReport<I> {
    pub verdict: RouteVerdict<I>,
    pub input: Option<IterationInput<I>>,
    pub trace: Vec<BlowdownState<I>>,
}

pub fn decide_route<I: Int>(gammas: &GammaVector<I>) -> Result<RouteVerdict<I>> {
    Ok(decide_route_report(gammas)?.verdict)
}

pub fn decide_route_report<I: Int>(gammas: &GammaVector<I>) -> Result<RouteReport<I>> {
    GammaVector::new(gammas.as_slice().to_vec())?;
    if gammas.len() < 3 {
        return Err(Error::Domain(format!(
            "the blow-down route needs r ≥ 3 fibers, got {}",
            gammas.len()
        )));
    }
    let order = gammas.descending_order();
    let sorted = gammas.sorted_descending();
    let half = Ratio::new(I::one(), int(2));
    let early = |verdict| Ok(RouteReport { verdict, input: None, trace: Vec::new() });

    if sorted[0] < half {
        let certificate = RealizabilityCertificate { m: int(2), a: I::one(), assignment: order };
        return early(RouteVerdict::Realizable { certificate, case: CaseTag::Direct, stage: 0 });
    }
    if sorted[1] >= half {
        return early(RouteVerdict::Obstructed { reason: Obstruction::ZeroSquareSphere, stage: 0 });
    }

    let input = parse_delta_sequences(gammas)?;
    let delta2 = input.delta2_cf()?;
    let delta2_dual = riemenschneider_dual(&delta2)?;
    if delta2_dual != input.delta2_dual_closed_form()? {
        return Err(Error::Internal(format!(
            "point diagram of δ₂ = {delta2} gives {delta2_dual}, closed form disagrees"
        )));
    }
    let trace = run_trace(&input);
    let last = input.last_index();

    let mut outcome = None;
    for state in &trace {
        let i = state.stage;
        if input.d <= state.p.clone() + state.q.clone() {
            outcome = Some(Err((Obstruction::TopSurfaceAdjunction, i)));
            break;
        }
        if i == last + 1 {
            let case = if input.m_seq.len() < input.n_seq.len() {
                CaseTag::TwoQShort
            } else {
                CaseTag::TwoPShort
            };
            outcome = Some(Ok((case, i)));
            break;
        }
        if i == 0 {
            continue;
        }
        match input.stage_weight(i).cmp(&-I::one()) {
            Ordering::Greater => {
                outcome = Some(Err((Obstruction::AdjunctionViolation, i)));
                break;
            }
            Ordering::Less => {
                let case = if i % 2 == 0 { CaseTag::EvenK } else { CaseTag::OddK };
                outcome = Some(Ok((case, i)));
                break;
            }
            Ordering::Equal => {}
        }
    }
    let (case, k) = match outcome.expect("trace ends at stage min(2q, 2p + 1) + 1") {
        Err((reason, stage)) => {
            return Ok(RouteReport {
                verdict: RouteVerdict::Obstructed { reason, stage },
                input: Some(input),
                trace,
            })
        }
        Ok(found) => found,
    };

    let rho_cf = input.certificate_cf(k)?;
    let rho = rho_cf.eval();
    let certificate = RealizabilityCertificate {
        m: rho.numer().clone(),
        a: rho.denom().clone(),
        assignment: order,
    };
    let delta1 = input.delta1_cf()?;
    let verdict = if let Some(failed) = first_failed_inequality(gammas, &certificate) {
        RouteVerdict::Inconclusive {
            diagnostic: format!("{case} at k = {k}: ρ = {rho_cf} = {rho} fails: {failed}"),
        }
    } else if let Some(broken) = chain_violation(&delta2_dual, &rho_cf, &delta1) {
        RouteVerdict::Inconclusive { diagnostic: format!("{case} at k = {k}: {broken}") }
    } else {
        RouteVerdict::Realizable { certificate, case, stage: k }
    };
    Ok(RouteReport { verdict, input: Some(input), trace })
}

/// `δ₂' < ρ < δ₁`, checked both on values and on the expansions under `⪯`.
fn chain_violation<I: Int>(delta2_dual: &NegCF<I>, rho: &NegCF<I>, delta1: &NegCF<I>) -> Option<String> {
    let (lo, mid, hi) = (delta2_dual.eval(), rho.eval(), delta1.eval());
    let by_value = lo < mid && mid < hi;
    let by_lex = lex_compare(delta2_dual.coeffs(), rho.coeffs()) == Ordering::Less
        && lex_compare(rho.coeffs(), delta1.coeffs()) == Ordering::Less;
    if by_value != by_lex {
        return Some(format!("value order and ⪯ disagree on δ₂' = {lo}, ρ = {mid}, δ₁ = {hi}"));
    }
    (!by_value).then(|| format!("chain δ₂' = {lo} < ρ = {mid} < δ₁ = {hi} fails"))
}

/// The configuration left after blowing down the central sphere: the top
/// vertex `−d + 1` and the two leg heads, pairwise joined, followed by the
/// rest of the `δ₂` leg and of the `δ₁` leg.
#[derive(Debug, Clone)]
pub struct TriangleConfiguration<I> {
    pub graph: PlumbingGraph<I>,
    pub top: VertexId,
    /// `δ₂` side, head first: `−m₁+1`, `2^m₂`, `−m₃`, …
    pub m_chain: Vec<VertexId>,
    /// `δ₁` side, head first: `−1`, `2^n₁`, `−n₂`, …
    pub n_chain: Vec<VertexId>,
}

pub fn triangle_configuration<I: Int>(input: &IterationInput<I>) -> Result<TriangleConfiguration<I>> {
    let mut graph = PlumbingGraph::new();
    let top = graph.add_vertex(I::one() - input.d.clone(), I::zero());

    let mut m_weights = input.delta2_cf()?.coeffs().iter().map(|c| -c.clone()).collect::<Vec<_>>();
    m_weights[0] = m_weights[0].clone() + I::one();
    let mut n_weights = input.delta1_cf()?.coeffs().iter().map(|c| -c.clone()).collect::<Vec<_>>();
    n_weights[0] = n_weights[0].clone() + I::one();

    let chain = |weights: Vec<I>, graph: &mut PlumbingGraph<I>| -> Result<Vec<VertexId>> {
        let ids: Vec<_> = weights.into_iter().map(|w| graph.add_vertex(w, I::zero())).collect();
        for w in ids.windows(2) {
            graph.add_edge(w[0], w[1], I::one())?;
        }
        Ok(ids)
    };
    let m_chain = chain(m_weights, &mut graph)?;
    let n_chain = chain(n_weights, &mut graph)?;
    graph.add_edge(top, m_chain[0], I::one())?;
    graph.add_edge(top, n_chain[0], I::one())?;
    graph.add_edge(m_chain[0], n_chain[0], I::one())?;
    Ok(TriangleConfiguration { graph, top, m_chain, n_chain })
}

/// Observed top-vertex data after a stage of explicit blow-downs. `p` or
/// `q` is `None` once the corresponding leg is used up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservedState<I> {
    pub stage: usize,
    pub x: I,
    pub genus: I,
    pub p: Option<I>,
    pub q: Option<I>,
    pub graph: PlumbingGraph<I>,
}

/// Replay the route on [`triangle_configuration`] with explicit blow-downs:
/// stage `i` blows down `n_(i+1) + 1` (even `i`) or `m_(i+1) + 1` (odd `i`)
/// leg vertices, always the current head. Stops early when a head is not a
/// `(−1)`-sphere.
pub fn replay_blowdowns<I: Int>(input: &IterationInput<I>) -> Result<Vec<ObservedState<I>>> {
    let TriangleConfiguration { mut graph, top, m_chain, n_chain } = triangle_configuration(input)?;
    let (mut m_front, mut n_front) = (0usize, 0usize);
    let observe = |stage, graph: &PlumbingGraph<I>, m_front: usize, n_front: usize| {
        let t = graph.vertex(top).expect("top vertex is never blown down");
        ObservedState {
            stage,
            x: t.selfint.clone(),
            genus: t.genus.clone(),
            p: m_chain.get(m_front).map(|&v| graph.multiplicity(top, v)),
            q: n_chain.get(n_front).map(|&v| graph.multiplicity(top, v)),
            graph: graph.clone(),
        }
    };
    let mut states = vec![observe(0, &graph, m_front, n_front)];
    'stages: for i in 0..=input.last_index() {
        let (count, chain, front) = if i % 2 == 0 {
            (to_count(&(input.n(i + 1).clone() + I::one()))?, &n_chain, &mut n_front)
        } else {
            (to_count(&(input.m(i + 1).clone() + I::one()))?, &m_chain, &mut m_front)
        };
        for _ in 0..count {
            let Some(&v) = chain.get(*front) else {
                return Err(Error::Internal(format!("leg exhausted during stage {i}")));
            };
            match graph.blow_down(v) {
                Ok(next) => graph = next,
                Err(Error::Precondition(_)) => break 'stages,
                Err(e) => return Err(e),
            }
            *front += 1;
        }
        states.push(observe(i + 1, &graph, m_front, n_front));
    }
    Ok(states)
}
