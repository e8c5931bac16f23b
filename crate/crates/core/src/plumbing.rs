//! Decorated intersection graphs: plumbings, blow-downs and the
//! intersection form.
//!
//! A vertex is a surface class with a self-intersection and a genus, an edge
//! carries the (positive) intersection number of its two endpoints.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::exact_cf::neg_cf_expand;
use crate::scalar::{binom2, int, Int};
use crate::seifert::NormalizedSeifert;
use crate::{Error, Result};

pub type VertexId = usize;

/// Homology class of an embedded surface: `S·S` and `g(S)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceClass<I> {
    pub selfint: I,
    pub genus: I,
}

impl<I: Int> SurfaceClass<I> {
    pub fn new(selfint: I, genus: I) -> Self {
        SurfaceClass { selfint, genus }
    }

    fn is_exceptional_sphere(&self) -> bool {
        self.genus.is_zero() && self.selfint == -I::one()
    }
}

/// Adjunction bound for surfaces in the fillings considered here: spheres
/// have `S·S ≤ −1`, positive genus surfaces `S·S ≤ 2g − 2`.
pub fn adjunction_ok<I: Int>(s: &SurfaceClass<I>) -> bool {
    if s.genus.is_zero() {
        s.selfint <= -I::one()
    } else {
        s.selfint <= int::<I>(2) * s.genus.clone() - int(2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph<I> {
    vertices: BTreeMap<VertexId, SurfaceClass<I>>,
    edges: BTreeMap<(VertexId, VertexId), I>,
    next_id: VertexId,
}

impl<I: Int> Default for PlumbingGraph<I> {
    fn default() -> Self {
        PlumbingGraph { vertices: BTreeMap::new(), edges: BTreeMap::new(), next_id: 0 }
    }
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl<I: Int> PlumbingGraph<I> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, selfint: I, genus: I) -> VertexId {
        let id = self.next_id;
        self.next_id += 1;
        self.vertices.insert(id, SurfaceClass::new(selfint, genus));
        id
    }

    /// Adds `multiplicity` to the edge `u–v`, creating it if needed.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, multiplicity: I) -> Result<()> {
        if u == v {
            return Err(Error::Domain(format!("self-loop at vertex {u}")));
        }
        if !self.vertices.contains_key(&u) || !self.vertices.contains_key(&v) {
            return Err(Error::Domain(format!("edge {u}–{v} references a missing vertex")));
        }
        if !multiplicity.is_positive() {
            return Err(Error::Domain(format!("edge multiplicity {multiplicity} is not positive")));
        }
        let e = self.edges.entry(key(u, v)).or_insert_with(I::zero);
        *e = e.clone() + multiplicity;
        Ok(())
    }

    pub fn vertex(&self, v: VertexId) -> Option<&SurfaceClass<I>> {
        self.vertices.get(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, &SurfaceClass<I>)> {
        self.vertices.iter().map(|(&id, s)| (id, s))
    }

    pub fn vertex_ids(&self) -> Vec<VertexId> {
        self.vertices.keys().copied().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, &I)> {
        self.edges.iter().map(|(&(u, v), m)| (u, v, m))
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> I {
        self.edges.get(&key(u, v)).cloned().unwrap_or_else(I::zero)
    }

    /// Neighbours of `v` with their edge multiplicities, by increasing id.
    pub fn neighbors(&self, v: VertexId) -> Vec<(VertexId, I)> {
        self.edges
            .iter()
            .filter_map(|(&(a, b), m)| {
                if a == v {
                    Some((b, m.clone()))
                } else if b == v {
                    Some((a, m.clone()))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Blow down the `(−1)`-sphere `v`.
    ///
    /// Each neighbour `A` meeting `v` with multiplicity `p` gains `p²` in
    /// self-intersection and `binom(p, 2)` in genus (its `p` new double
    /// points are smoothed). Each pair of neighbours `A, B` with
    /// multiplicities `p, q` gains `p·q` intersections.
    pub fn blow_down(&self, v: VertexId) -> Result<Self> {
        match self.vertices.get(&v) {
            Some(s) if s.is_exceptional_sphere() => {}
            Some(s) => {
                return Err(Error::Precondition(format!(
                    "vertex {v} is not a (−1)-sphere (self-intersection {}, genus {})",
                    s.selfint, s.genus
                )))
            }
            None => return Err(Error::Precondition(format!("no vertex {v}"))),
        }
        let nbrs = self.neighbors(v);
        let mut out = self.clone();
        out.vertices.remove(&v);
        out.edges.retain(|&(a, b), _| a != v && b != v);
        for (a, p) in &nbrs {
            let s = out.vertices.get_mut(a).expect("neighbour exists");
            s.selfint = s.selfint.clone() + p.clone() * p.clone();
            s.genus = s.genus.clone() + binom2(p);
        }
        for (i, (a, p)) in nbrs.iter().enumerate() {
            for (b, q) in &nbrs[i + 1..] {
                out.add_edge(*a, *b, p.clone() * q.clone())?;
            }
        }
        Ok(out)
    }

    /// Smallest-id vertex violating [`adjunction_ok`], if any.
    pub fn first_violation(&self) -> Option<(VertexId, SurfaceClass<I>)> {
        self.vertices
            .iter()
            .find(|(_, s)| !adjunction_ok(s))
            .map(|(&id, s)| (id, s.clone()))
    }

    pub fn exceptional_spheres(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|(_, s)| s.is_exceptional_sphere())
            .map(|(&id, _)| id)
            .collect()
    }

    /// Graphviz rendering: vertex label `x=<selfint>,g=<genus>`, edge label
    /// the multiplicity.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plumbing {\n");
        for (id, s) in &self.vertices {
            writeln!(out, "  {id} [label=\"x={},g={}\"];", s.selfint, s.genus).unwrap();
        }
        for ((u, v), m) in &self.edges {
            writeln!(out, "  {u} -- {v} [label=\"{m}\"];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// The star-shaped plumbing bounded by `M` (orientable base): a central
/// vertex of weight `e₀(M)` and genus `g`, and for every fiber a chain
/// `−b₁, …, −b_s` from `α/(α − β) = [b₁, …, b_s]`, attached at `b₁`.
pub fn build_plumbing<I: Int>(m: &NormalizedSeifert<I>) -> Result<PlumbingGraph<I>> {
    if !m.is_orientable_base() {
        return Err(Error::Domain(format!(
            "base genus {} is non-orientable; build the plumbing of the orientation double cover",
            m.g()
        )));
    }
    let mut graph = PlumbingGraph::new();
    let center = graph.add_vertex(m.e_zero(), m.g().clone());
    for f in m.fibers() {
        let cf = neg_cf_expand(&Ratio::new(f.alpha.clone(), f.alpha.clone() - f.beta.clone()))?;
        let mut prev = center;
        for b in cf.coeffs() {
            let v = graph.add_vertex(-b.clone(), I::zero());
            graph.add_edge(prev, v, I::one())?;
            prev = v;
        }
    }
    Ok(graph)
}

pub fn blow_down<I: Int>(graph: &PlumbingGraph<I>, v: VertexId) -> Result<PlumbingGraph<I>> {
    graph.blow_down(v)
}

/// Which `(−1)`-sphere to blow down next when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlowDownOrder {
    #[default]
    SmallestId,
    LargestId,
}

/// Blow down `(−1)`-spheres until none is left or some vertex violates the
/// adjunction bound. Returns the terminal graph and the violating class.
pub fn fully_blow_down<I: Int>(graph: &PlumbingGraph<I>) -> (PlumbingGraph<I>, Option<SurfaceClass<I>>) {
    fully_blow_down_with(graph, BlowDownOrder::SmallestId)
}

pub fn fully_blow_down_with<I: Int>(
    graph: &PlumbingGraph<I>,
    order: BlowDownOrder,
) -> (PlumbingGraph<I>, Option<SurfaceClass<I>>) {
    let mut current = graph.clone();
    loop {
        if let Some((_, class)) = current.first_violation() {
            return (current, Some(class));
        }
        let spheres = current.exceptional_spheres();
        let next = match order {
            BlowDownOrder::SmallestId => spheres.first(),
            BlowDownOrder::LargestId => spheres.last(),
        };
        let Some(&v) = next else {
            return (current, None);
        };
        current = current.blow_down(v).expect("vertex is a (−1)-sphere");
    }
}

/// Symmetric matrix of the intersection form, rows in increasing vertex id.
pub fn intersection_matrix<I: Int>(graph: &PlumbingGraph<I>) -> Vec<Vec<I>> {
    let ids = graph.vertex_ids();
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let mut q = vec![vec![I::zero(); n]; n];
    for (i, &v) in ids.iter().enumerate() {
        q[i][i] = graph.vertex(v).expect("listed vertex").selfint.clone();
    }
    for (u, v, m) in graph.edges() {
        let (i, j) = (index[&u], index[&v]);
        q[i][j] = m.clone();
        q[j][i] = m.clone();
    }
    q
}

fn check_square_symmetric<I: Int>(q: &[Vec<I>]) -> Result<()> {
    let n = q.len();
    for (i, row) in q.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Domain("matrix is not square".into()));
        }
        for (j, other) in q.iter().enumerate().take(i) {
            if row[j] != other[i] {
                return Err(Error::Domain(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Leading principal minors `D₁, …, D_n`, stopping at the first zero.
///
/// Computed by symmetric elimination without pivoting on the sparse upper
/// triangle: the `k`-th pivot is `D_k / D_{k−1}`, and eliminating it only
/// touches pairs of its remaining neighbours. Plumbing forms are trees, so
/// fill-in stays small.
pub fn leading_principal_minors<I: Int>(q: &[Vec<I>]) -> Result<Vec<I>> {
    check_square_symmetric(q)?;
    let n = q.len();
    let mut upper: Vec<BTreeMap<usize, Ratio<I>>> = q
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .skip(i)
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, Ratio::from_integer(x.clone())))
                .collect()
        })
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut det = Ratio::<I>::one();
    for k in 0..n {
        let pivot = upper[k].get(&k).cloned().unwrap_or_else(Ratio::zero);
        det = det * pivot.clone();
        debug_assert!(det.is_integer());
        minors.push(det.to_integer());
        if pivot.is_zero() {
            break;
        }
        let row: Vec<(usize, Ratio<I>)> = upper[k].range(k + 1..).map(|(&j, x)| (j, x.clone())).collect();
        for (idx, (i, aki)) in row.iter().enumerate() {
            let factor = aki.clone() / pivot.clone();
            for (j, akj) in &row[idx..] {
                let entry = upper[*i].entry(*j).or_insert_with(Ratio::zero);
                *entry = entry.clone() - factor.clone() * akj.clone();
            }
        }
    }
    Ok(minors)
}

/// Sylvester's criterion: `(−1)^k D_k > 0` for every leading minor.
pub fn is_negative_definite<I: Int>(q: &[Vec<I>]) -> Result<bool> {
    let minors = leading_principal_minors(q)?;
    if minors.len() < q.len() {
        return Ok(false);
    }
    Ok(minors.iter().enumerate().all(|(k, d)| {
        if k % 2 == 0 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    }))
}

/// Exact determinant by elimination with row pivoting.
pub fn determinant<I: Int>(q: &[Vec<I>]) -> Result<I> {
    let n = q.len();
    if q.iter().any(|row| row.len() != n) {
        return Err(Error::Domain("matrix is not square".into()));
    }
    let mut a: Vec<Vec<Ratio<I>>> = q
        .iter()
        .map(|row| row.iter().map(|x| Ratio::from_integer(x.clone())).collect())
        .collect();
    let mut det = Ratio::<I>::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(I::zero());
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det = det * pivot.clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone() / pivot.clone();
            let (upper, lower) = a.split_at_mut(i);
            for (x, y) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                *x = x.clone() - factor.clone() * y.clone();
            }
        }
    }
    Ok(det.to_integer())
}
