//! Degree-limited networks: vertices with a fixed number of ports, built by
//! attempting edges one at a time. Repeating an attempt never changes the
//! outcome, so attempt words act through a graphic monoid (`aba = ab`).

use super::{check_inputs, Algebra};
use crate::error::{Error, Result};
use crate::netmodel::{act_degree, check_pair, unordered, NetworkModel, SimpleGraph, SimpleGraphs};
use crate::operad::{NetworkOperad, Op};
use crate::perm::Permutation;

/// A finite word of edge-connection attempts on `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttemptSequence {
    n: usize,
    attempts: Vec<(usize, usize)>,
}

impl AttemptSequence {
    pub fn new(n: usize, attempts: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let attempts = attempts
            .into_iter()
            .map(|(i, j)| check_pair(n, i, j, false))
            .collect::<Result<_>>()?;
        Ok(AttemptSequence { n, attempts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn attempts(&self) -> &[(usize, usize)] {
        &self.attempts
    }
}

/// Attempt words as the networks of an operad. Overlaying `g` on `h` runs
/// `h`'s attempts first, so that the word of a composite operation runs the
/// inner operations before the outer one.
///
/// Words are compared literally, so the interchange law holds only up to
/// the action on [`PortedNetwork`]s.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AttemptWords;

impl NetworkModel for AttemptWords {
    type Obj = usize;
    type Net = AttemptSequence;

    fn id(&self) -> String {
        "attempts".into()
    }

    fn object(&self, g: &AttemptSequence) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> AttemptSequence {
        AttemptSequence {
            n: *n,
            attempts: Vec::new(),
        }
    }

    fn overlay(&self, g: &AttemptSequence, h: &AttemptSequence) -> Result<AttemptSequence> {
        crate::netmodel::same_arity(g.n, h.n)?;
        let mut attempts = h.attempts.clone();
        attempts.extend_from_slice(&g.attempts);
        Ok(AttemptSequence { n: g.n, attempts })
    }

    fn act(&self, sigma: &Permutation, g: &AttemptSequence) -> Result<AttemptSequence> {
        act_degree(sigma, g.n)?;
        let attempts = g
            .attempts
            .iter()
            .map(|&(i, j)| unordered(sigma.image(i), sigma.image(j)))
            .collect();
        Ok(AttemptSequence { n: g.n, attempts })
    }

    fn djunion(&self, g: &AttemptSequence, h: &AttemptSequence) -> Result<AttemptSequence> {
        let m = g.n;
        let mut attempts = g.attempts.clone();
        attempts.extend(h.attempts.iter().map(|&(i, j)| (i + m, j + m)));
        Ok(AttemptSequence { n: m + h.n, attempts })
    }
}

/// A simple graph whose vertex `i` has `ports[i]` ports; `deg(i) ≤ ports[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PortedNetwork {
    graph: SimpleGraph,
    ports: Vec<u32>,
}

impl PortedNetwork {
    pub fn new(graph: SimpleGraph, ports: Vec<u32>) -> Result<Self> {
        if ports.len() != graph.n() {
            return Err(Error::ArityMismatch {
                expected: format!("{} port counts", graph.n()),
                found: ports.len().to_string(),
            });
        }
        if let Some(v) = (1..=graph.n()).find(|&v| graph.degree(v) > ports[v - 1] as usize) {
            return Err(Error::Constraint(format!(
                "vertex {v} has degree {} but {} ports",
                graph.degree(v),
                ports[v - 1]
            )));
        }
        Ok(PortedNetwork { graph, ports })
    }

    /// No edges.
    pub fn bare(ports: Vec<u32>) -> Self {
        PortedNetwork {
            graph: SimpleGraph::empty(ports.len()),
            ports,
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn ports(&self) -> &[u32] {
        &self.ports
    }

    /// Connects `i` and `j` if they are not yet adjacent and both have a free
    /// port; returns whether an edge was added.
    pub fn attempt(&mut self, i: usize, j: usize) -> Result<bool> {
        let (i, j) = check_pair(self.n(), i, j, false)?;
        let free = |v: usize| self.graph.degree(v) < self.ports[v - 1] as usize;
        if self.graph.has_edge(i, j) || !free(i) || !free(j) {
            return Ok(false);
        }
        self.graph.insert(i, j)
    }

    /// Runs a word of attempts in order.
    pub fn process(&mut self, attempts: &[(usize, usize)]) -> Result<()> {
        for &(i, j) in attempts {
            self.attempt(i, j)?;
        }
        Ok(())
    }
}

/// Starts from `σ(p_1 ⊔ ... ⊔ p_k)` and runs the operation's attempts.
pub fn act_degree_limited(f: &Op<AttemptWords>, items: &[PortedNetwork]) -> Result<PortedNetwork> {
    check_inputs(&AttemptWords, f, items.iter().map(PortedNetwork::n))?;
    let graphs: Vec<SimpleGraph> = items.iter().map(|p| p.graph.clone()).collect();
    let graph = SimpleGraphs.act(f.perm(), &SimpleGraphs.djunion_all(&graphs)?)?;
    let ports: Vec<u32> = items.iter().flat_map(|p| p.ports.iter().copied()).collect();
    let mut out = PortedNetwork {
        graph,
        ports: f.perm().permute_positions(&ports)?,
    };
    out.process(f.net().attempts())?;
    Ok(out)
}

/// The algebra of port-limited networks over the attempt-word operad.
#[derive(Clone, Debug)]
pub struct DegreeLimited {
    operad: NetworkOperad<AttemptWords>,
}

impl Default for DegreeLimited {
    fn default() -> Self {
        DegreeLimited {
            operad: NetworkOperad::new(AttemptWords),
        }
    }
}

impl Algebra for DegreeLimited {
    type Model = AttemptWords;
    type Elem = PortedNetwork;

    fn operad(&self) -> &NetworkOperad<AttemptWords> {
        &self.operad
    }

    fn name(&self) -> String {
        "degree-limited".into()
    }

    fn object(&self, a: &PortedNetwork) -> usize {
        a.n()
    }

    fn validate(&self, a: &PortedNetwork) -> Result<()> {
        PortedNetwork::new(a.graph.clone(), a.ports.clone()).map(|_| ())
    }

    fn act(&self, f: &Op<AttemptWords>, items: &[PortedNetwork]) -> Result<PortedNetwork> {
        act_degree_limited(f, items)
    }
}
