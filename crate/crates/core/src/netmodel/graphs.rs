use std::collections::{BTreeMap, BTreeSet};

use super::{act_degree, check_pair, same_arity, unordered, NetworkModel};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A set of 2-element subsets of `{1, ..., n}`, stored as pairs `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .map(|(i, j)| check_pair(n, i, j, false))
            .collect::<Result<_>>()?;
        Ok(SimpleGraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&unordered(i, j))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    /// Adds `{i, j}`; returns whether it was absent.
    pub fn insert(&mut self, i: usize, j: usize) -> Result<bool> {
        let e = check_pair(self.n, i, j, false)?;
        Ok(self.edges.insert(e))
    }

    pub fn retain(&mut self, mut keep: impl FnMut(usize, usize) -> bool) {
        self.edges.retain(|&(i, j)| keep(i, j));
    }
}

/// `SG`: simple graphs under union.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraphs;

impl NetworkModel for SimpleGraphs {
    type Obj = usize;
    type Net = SimpleGraph;

    fn id(&self) -> String {
        "sg".into()
    }

    fn object(&self, g: &SimpleGraph) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> SimpleGraph {
        SimpleGraph::empty(*n)
    }

    fn overlay(&self, g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
        same_arity(g.n, h.n)?;
        Ok(SimpleGraph {
            n: g.n,
            edges: g.edges.union(&h.edges).copied().collect(),
        })
    }

    fn act(&self, sigma: &Permutation, g: &SimpleGraph) -> Result<SimpleGraph> {
        act_degree(sigma, g.n)?;
        Ok(SimpleGraph {
            n: g.n,
            edges: g
                .edges
                .iter()
                .map(|&(i, j)| unordered(sigma.image(i), sigma.image(j)))
                .collect(),
        })
    }

    fn djunion(&self, g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
        let m = g.n;
        let mut edges = g.edges.clone();
        edges.extend(h.edges.iter().map(|&(i, j)| (i + m, j + m)));
        Ok(SimpleGraph { n: m + h.n, edges })
    }
}

/// A set of ordered pairs `(i, j)` with `i ≠ j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .map(|(i, j)| check_pair(n, i, j, true))
            .collect::<Result<_>>()?;
        Ok(DirectedGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}

/// `DG`: directed graphs under union.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DirectedGraphs;

impl NetworkModel for DirectedGraphs {
    type Obj = usize;
    type Net = DirectedGraph;

    fn id(&self) -> String {
        "dg".into()
    }

    fn object(&self, g: &DirectedGraph) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> DirectedGraph {
        DirectedGraph {
            n: *n,
            edges: BTreeSet::new(),
        }
    }

    fn overlay(&self, g: &DirectedGraph, h: &DirectedGraph) -> Result<DirectedGraph> {
        same_arity(g.n, h.n)?;
        Ok(DirectedGraph {
            n: g.n,
            edges: g.edges.union(&h.edges).copied().collect(),
        })
    }

    fn act(&self, sigma: &Permutation, g: &DirectedGraph) -> Result<DirectedGraph> {
        act_degree(sigma, g.n)?;
        Ok(DirectedGraph {
            n: g.n,
            edges: g
                .edges
                .iter()
                .map(|&(i, j)| (sigma.image(i), sigma.image(j)))
                .collect(),
        })
    }

    fn djunion(&self, g: &DirectedGraph, h: &DirectedGraph) -> Result<DirectedGraph> {
        let m = g.n;
        let mut edges = g.edges.clone();
        edges.extend(h.edges.iter().map(|&(i, j)| (i + m, j + m)));
        Ok(DirectedGraph { n: m + h.n, edges })
    }
}

/// How multiplicities combine when multigraphs are overlaid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MultOverlay {
    /// Union of multisets: pointwise maximum.
    Max,
    /// Multiset sum: pointwise addition.
    Sum,
}

impl MultOverlay {
    fn combine(self, a: u64, b: u64) -> Result<u64> {
        match self {
            MultOverlay::Max => Ok(a.max(b)),
            MultOverlay::Sum => a
                .checked_add(b)
                .ok_or_else(|| Error::Overflow(format!("multiplicity {a} + {b}"))),
        }
    }
}

fn merge_mult(
    a: &BTreeMap<(usize, usize), u64>,
    b: &BTreeMap<(usize, usize), u64>,
    how: MultOverlay,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut out = a.clone();
    for (&e, &v) in b {
        let cur = out.get(&e).copied().unwrap_or(0);
        out.insert(e, how.combine(cur, v)?);
    }
    Ok(out)
}

fn collect_mult(
    n: usize,
    entries: impl IntoIterator<Item = (usize, usize, u64)>,
    directed: bool,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut mult = BTreeMap::new();
    for (i, j, k) in entries {
        let e = check_pair(n, i, j, directed)?;
        if mult.contains_key(&e) {
            return Err(Error::InvalidNetwork(format!("edge ({i},{j}) listed twice")));
        }
        if k > 0 {
            mult.insert(e, k);
        }
    }
    Ok(mult)
}

/// A multiset of 2-element subsets: multiplicities keyed by `(i, j)`, `i < j`.
/// Absent pairs have multiplicity 0; stored multiplicities are positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: BTreeMap<(usize, usize), u64>,
}

impl Multigraph {
    pub fn new(n: usize, entries: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        Ok(Multigraph {
            n,
            mult: collect_mult(n, entries, false)?,
        })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            mult: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u64 {
        self.mult.get(&unordered(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero multiplicities in key order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.mult.iter().map(|(&(i, j), &k)| (i, j, k))
    }

    pub fn support(&self) -> super::SimpleGraph {
        super::SimpleGraph {
            n: self.n,
            edges: self.mult.keys().copied().collect(),
        }
    }

    /// Replaces every multiplicity `k` of `{i, j}` by `f(i, j, k)`.
    pub fn map_mult(&self, mut f: impl FnMut(usize, usize, u64) -> u64) -> Self {
        Multigraph {
            n: self.n,
            mult: self
                .mult
                .iter()
                .map(|(&(i, j), &k)| ((i, j), f(i, j, k)))
                .filter(|&(_, k)| k > 0)
                .collect(),
        }
    }
}

/// `MG` (overlay by max) or `MG⁺` (overlay by sum).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Multigraphs(pub MultOverlay);

impl Multigraphs {
    pub const MAX: Multigraphs = Multigraphs(MultOverlay::Max);
    pub const SUM: Multigraphs = Multigraphs(MultOverlay::Sum);
}

impl NetworkModel for Multigraphs {
    type Obj = usize;
    type Net = Multigraph;

    fn id(&self) -> String {
        match self.0 {
            MultOverlay::Max => "mg".into(),
            MultOverlay::Sum => "mgplus".into(),
        }
    }

    fn object(&self, g: &Multigraph) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> Multigraph {
        Multigraph::empty(*n)
    }

    fn overlay(&self, g: &Multigraph, h: &Multigraph) -> Result<Multigraph> {
        same_arity(g.n, h.n)?;
        Ok(Multigraph {
            n: g.n,
            mult: merge_mult(&g.mult, &h.mult, self.0)?,
        })
    }

    fn act(&self, sigma: &Permutation, g: &Multigraph) -> Result<Multigraph> {
        act_degree(sigma, g.n)?;
        Ok(Multigraph {
            n: g.n,
            mult: g
                .mult
                .iter()
                .map(|(&(i, j), &k)| (unordered(sigma.image(i), sigma.image(j)), k))
                .collect(),
        })
    }

    fn djunion(&self, g: &Multigraph, h: &Multigraph) -> Result<Multigraph> {
        let m = g.n;
        let mut mult = g.mult.clone();
        mult.extend(h.mult.iter().map(|(&(i, j), &k)| ((i + m, j + m), k)));
        Ok(Multigraph { n: m + h.n, mult })
    }
}

/// A multiset of ordered pairs `(i, j)`, `i ≠ j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedMultigraph {
    n: usize,
    mult: BTreeMap<(usize, usize), u64>,
}

impl DirectedMultigraph {
    pub fn new(n: usize, entries: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        Ok(DirectedMultigraph {
            n,
            mult: collect_mult(n, entries, true)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.mult.iter().map(|(&(i, j), &k)| (i, j, k))
    }
}

/// `DMG` (max) or `DMG⁺` (sum).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectedMultigraphs(pub MultOverlay);

impl NetworkModel for DirectedMultigraphs {
    type Obj = usize;
    type Net = DirectedMultigraph;

    fn id(&self) -> String {
        match self.0 {
            MultOverlay::Max => "dmg".into(),
            MultOverlay::Sum => "dmgplus".into(),
        }
    }

    fn object(&self, g: &DirectedMultigraph) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> DirectedMultigraph {
        DirectedMultigraph {
            n: *n,
            mult: BTreeMap::new(),
        }
    }

    fn overlay(&self, g: &DirectedMultigraph, h: &DirectedMultigraph) -> Result<DirectedMultigraph> {
        same_arity(g.n, h.n)?;
        Ok(DirectedMultigraph {
            n: g.n,
            mult: merge_mult(&g.mult, &h.mult, self.0)?,
        })
    }

    fn act(&self, sigma: &Permutation, g: &DirectedMultigraph) -> Result<DirectedMultigraph> {
        act_degree(sigma, g.n)?;
        Ok(DirectedMultigraph {
            n: g.n,
            mult: g
                .mult
                .iter()
                .map(|(&(i, j), &k)| ((sigma.image(i), sigma.image(j)), k))
                .collect(),
        })
    }

    fn djunion(&self, g: &DirectedMultigraph, h: &DirectedMultigraph) -> Result<DirectedMultigraph> {
        let m = g.n;
        let mut mult = g.mult.clone();
        mult.extend(h.mult.iter().map(|(&(i, j), &k)| ((i + m, j + m), k)));
        Ok(DirectedMultigraph { n: m + h.n, mult })
    }
}

/// A set of nonempty subsets of `{1, ..., n}`, each stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: BTreeSet<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut out = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::InvalidNetwork("empty hyperedge".into()));
            }
            if e[0] == 0 || *e.last().unwrap() > n {
                return Err(Error::InvalidNetwork(format!("hyperedge {e:?} outside 1..={n}")));
            }
            out.insert(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.edges.iter().map(|e| e.as_slice())
    }
}

/// `HG`: hypergraphs under union.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Hypergraphs;

impl NetworkModel for Hypergraphs {
    type Obj = usize;
    type Net = Hypergraph;

    fn id(&self) -> String {
        "hg".into()
    }

    fn object(&self, g: &Hypergraph) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> Hypergraph {
        Hypergraph {
            n: *n,
            edges: BTreeSet::new(),
        }
    }

    fn overlay(&self, g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
        same_arity(g.n, h.n)?;
        Ok(Hypergraph {
            n: g.n,
            edges: g.edges.union(&h.edges).cloned().collect(),
        })
    }

    fn act(&self, sigma: &Permutation, g: &Hypergraph) -> Result<Hypergraph> {
        act_degree(sigma, g.n)?;
        let edges = g
            .edges
            .iter()
            .map(|e| {
                let mut img: Vec<usize> = e.iter().map(|&v| sigma.image(v)).collect();
                img.sort_unstable();
                img
            })
            .collect();
        Ok(Hypergraph { n: g.n, edges })
    }

    fn djunion(&self, g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
        let m = g.n;
        let mut edges = g.edges.clone();
        edges.extend(h.edges.iter().map(|e| e.iter().map(|v| v + m).collect()));
        Ok(Hypergraph { n: m + h.n, edges })
    }
}
