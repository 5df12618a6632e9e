//! Deliberately broken structures, used to confirm that the checkers catch
//! law violations.

use super::sample::{Limits, Rng, Sampler};
use crate::algebra::{act_attributes, Algebra, AttributedNetwork, BoundedAlgebra, EdgeBound};
use crate::error::Result;
use crate::netmodel::{Multigraph, Multigraphs, NetworkModel, SimpleGraph, SimpleGraphs};
use crate::operad::{NetworkOperad, Op, Profile};
use crate::perm::Permutation;

/// Simple graphs whose overlay drops the largest edge whenever both sides
/// have edges. Units still behave, but associativity fails.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LossySimpleGraphs;

impl NetworkModel for LossySimpleGraphs {
    type Obj = usize;
    type Net = SimpleGraph;

    fn id(&self) -> String {
        "sg-lossy".into()
    }

    fn object(&self, g: &SimpleGraph) -> usize {
        g.n()
    }

    fn unit(&self, n: &usize) -> SimpleGraph {
        SimpleGraphs.unit(n)
    }

    fn overlay(&self, g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
        let mut out = SimpleGraphs.overlay(g, h)?;
        if g.edge_count() > 0 && h.edge_count() > 0 {
            let last = out.edges().last();
            if let Some(last) = last {
                out.retain(|i, j| (i, j) != last);
            }
        }
        Ok(out)
    }

    fn act(&self, sigma: &Permutation, g: &SimpleGraph) -> Result<SimpleGraph> {
        SimpleGraphs.act(sigma, g)
    }

    fn djunion(&self, g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
        SimpleGraphs.djunion(g, h)
    }
}

impl Sampler for LossySimpleGraphs {
    fn types(&self, max_n: usize) -> Vec<usize> {
        SimpleGraphs.types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        SimpleGraphs.random_type(max_n, rng)
    }

    fn sample(&self, n: &usize, limits: &Limits, rng: &mut Rng) -> SimpleGraph {
        SimpleGraphs.sample(n, limits, rng)
    }

    fn count(&self, n: &usize, limits: &Limits) -> u128 {
        SimpleGraphs.count(n, limits)
    }

    fn enumerate_all(&self, n: &usize, limits: &Limits) -> Vec<SimpleGraph> {
        SimpleGraphs.enumerate_all(n, limits)
    }
}

/// Composition that forgets to move the inner networks by the outer
/// permutation: `(σ(τ_1 + ... + τ_k), g ∪ (h_1 ⊔ ... ⊔ h_k))`.
pub fn compose_ignoring_permutation<M: NetworkModel>(
    operad: &NetworkOperad<M>,
    f: &Op<M>,
    gs: &[Op<M>],
) -> Result<Op<M>> {
    operad.check_slots(f, gs)?;
    let model = operad.model();
    let tau = Permutation::block_sum_all(gs.iter().map(|g| g.perm()));
    let hs: Vec<M::Net> = gs.iter().map(|g| g.net().clone()).collect();
    let net = model.overlay(f.net(), &model.djunion_all(&hs)?)?;
    let inputs = gs.iter().flat_map(|g| g.inputs().iter().cloned()).collect();
    operad.make_operation(
        Profile::new(inputs, f.output().clone()),
        f.perm().compose(&tau)?,
        net,
    )
}

/// The bounded algebra without its clamp: overlays may exceed the bound.
#[derive(Clone, Debug)]
pub struct Unclamped<B, X>(pub BoundedAlgebra<B, X>);

impl<B, X> Algebra for Unclamped<B, X>
where
    B: EdgeBound<X>,
    X: Clone + PartialEq + std::fmt::Debug,
{
    type Model = Multigraphs;
    type Elem = AttributedNetwork<Multigraph, X>;

    fn operad(&self) -> &NetworkOperad<Multigraphs> {
        self.0.operad()
    }

    fn name(&self) -> String {
        format!("unclamped[{}]", self.0.bound().describe())
    }

    fn object(&self, a: &Self::Elem) -> usize {
        a.net.n()
    }

    fn validate(&self, a: &Self::Elem) -> Result<()> {
        self.0.validate(a)
    }

    fn act(&self, f: &Op<Multigraphs>, items: &[Self::Elem]) -> Result<Self::Elem> {
        act_attributes(&Multigraphs::SUM, f, items)
    }
}
