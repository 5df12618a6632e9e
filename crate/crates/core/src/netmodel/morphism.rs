use super::{
    EdgeLabeling, Gamma, MultOverlay, Multigraph, Multigraphs, NetworkModel, SimpleGraph, SimpleGraphs,
};
use crate::error::{Error, Result};
use crate::monoid::{Monoid, MonoidHom};

type ObjOf<M> = <M as NetworkModel>::Obj;
type NetOf<M> = <M as NetworkModel>::Net;

/// A morphism of network models: a family of maps `φ_t : F(t) → F'(f(t))`,
/// each a monoid homomorphism, commuting with the symmetric action and with
/// disjoint union.
pub trait ModelMorphism {
    type Source: NetworkModel;
    type Target: NetworkModel;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    /// The action on types; the identity unless colors change.
    fn map_object(&self, t: &ObjOf<Self::Source>) -> ObjOf<Self::Target>;

    fn apply(&self, g: &NetOf<Self::Source>) -> Result<NetOf<Self::Target>>;

    fn name(&self) -> String;
}

/// `1_F`.
#[derive(Clone, Debug)]
pub struct IdentityMorphism<M> {
    model: M,
}

impl<M: NetworkModel> IdentityMorphism<M> {
    pub fn new(model: M) -> Self {
        IdentityMorphism { model }
    }
}

impl<M: NetworkModel> ModelMorphism for IdentityMorphism<M> {
    type Source = M;
    type Target = M;

    fn source(&self) -> &M {
        &self.model
    }

    fn target(&self) -> &M {
        &self.model
    }

    fn map_object(&self, t: &M::Obj) -> M::Obj {
        t.clone()
    }

    fn apply(&self, g: &M::Net) -> Result<M::Net> {
        Ok(g.clone())
    }

    fn name(&self) -> String {
        format!("id[{}]", self.model.id())
    }
}

/// `second ∘ first`.
#[derive(Clone, Debug)]
pub struct Composite<F, G> {
    first: F,
    second: G,
}

impl<F, G> Composite<F, G>
where
    F: ModelMorphism,
    G: ModelMorphism<Source = F::Target>,
{
    pub fn new(first: F, second: G) -> Result<Self> {
        let (mid_a, mid_b) = (first.target().id(), second.source().id());
        if mid_a != mid_b {
            return Err(Error::ModelMismatch {
                expected: mid_b,
                found: mid_a,
            });
        }
        Ok(Composite { first, second })
    }
}

impl<F, G> ModelMorphism for Composite<F, G>
where
    F: ModelMorphism,
    G: ModelMorphism<Source = F::Target>,
{
    type Source = F::Source;
    type Target = G::Target;

    fn source(&self) -> &F::Source {
        self.first.source()
    }

    fn target(&self) -> &G::Target {
        self.second.target()
    }

    fn map_object(&self, t: &ObjOf<F::Source>) -> ObjOf<G::Target> {
        self.second.map_object(&self.first.map_object(t))
    }

    fn apply(&self, g: &NetOf<F::Source>) -> Result<NetOf<G::Target>> {
        self.second.apply(&self.first.apply(g)?)
    }

    fn name(&self) -> String {
        format!("{}∘{}", self.second.name(), self.first.name())
    }
}

/// The isomorphisms `MG ≅ Γ_(ℕ,max)` and `MG⁺ ≅ Γ_(ℕ,+)`.
#[derive(Clone, Debug)]
pub struct MultigraphToLabeling {
    source: Multigraphs,
    target: Gamma,
}

impl MultigraphToLabeling {
    pub fn new(source: Multigraphs) -> Self {
        let monoid = match source.0 {
            MultOverlay::Max => Monoid::NatMax,
            MultOverlay::Sum => Monoid::NatPlus,
        };
        MultigraphToLabeling {
            source,
            target: Gamma::new(monoid),
        }
    }
}

impl ModelMorphism for MultigraphToLabeling {
    type Source = Multigraphs;
    type Target = Gamma;

    fn source(&self) -> &Multigraphs {
        &self.source
    }

    fn target(&self) -> &Gamma {
        &self.target
    }

    fn map_object(&self, t: &usize) -> usize {
        *t
    }

    fn apply(&self, g: &Multigraph) -> Result<EdgeLabeling> {
        EdgeLabeling::new(g.n(), self.target.monoid().clone(), g.entries())
    }

    fn name(&self) -> String {
        format!("{}≅{}", self.source.id(), self.target.id())
    }
}

/// `Γ_𝔹 → SG` or `Γ_{B_1} → SG`: an edge is present iff its label is not the unit.
#[derive(Clone, Debug)]
pub struct LabelingToSimple {
    source: Gamma,
}

impl LabelingToSimple {
    pub fn new(monoid: Monoid) -> Result<Self> {
        match monoid {
            Monoid::Bool | Monoid::Truncated(1) => Ok(LabelingToSimple {
                source: Gamma::new(monoid),
            }),
            other => Err(Error::ModelMismatch {
                expected: "gamma:bool or gamma:bk:1".into(),
                found: format!("gamma:{other}"),
            }),
        }
    }
}

impl ModelMorphism for LabelingToSimple {
    type Source = Gamma;
    type Target = SimpleGraphs;

    fn source(&self) -> &Gamma {
        &self.source
    }

    fn target(&self) -> &SimpleGraphs {
        &SimpleGraphs
    }

    fn map_object(&self, t: &usize) -> usize {
        *t
    }

    fn apply(&self, g: &EdgeLabeling) -> Result<SimpleGraph> {
        if g.monoid() != self.source.monoid() {
            return Err(Error::ModelMismatch {
                expected: self.source.id(),
                found: format!("gamma:{}", g.monoid()),
            });
        }
        SimpleGraph::new(g.n(), g.entries().map(|(i, j, _)| (i, j)))
    }

    fn name(&self) -> String {
        format!("{}≅sg", self.source.id())
    }
}

/// `MG⁺ → SG`: `Γ` of `cutoff_1`, read through `MG⁺ ≅ Γ_(ℕ,+)` and `Γ_{B_1} ≅ SG`.
pub type SupportMorphism = Composite<Composite<MultigraphToLabeling, super::GammaHom>, LabelingToSimple>;

impl SupportMorphism {
    pub fn cutoff_one() -> Self {
        let inner = Composite::new(
            MultigraphToLabeling::new(Multigraphs::SUM),
            super::GammaHom::new(MonoidHom::cutoff(1)),
        )
        .expect("nat-plus matches");
        Composite::new(inner, LabelingToSimple::new(Monoid::Truncated(1)).expect("bk:1"))
            .expect("bk:1 matches")
    }
}

/// `SG → Γ_𝔹`: present edges are labeled `T`. Inverse to `LabelingToSimple` over `𝔹`.
#[derive(Clone, Debug)]
pub struct SimpleToLabeling {
    target: Gamma,
}

impl Default for SimpleToLabeling {
    fn default() -> Self {
        SimpleToLabeling {
            target: Gamma::new(Monoid::Bool),
        }
    }
}

impl ModelMorphism for SimpleToLabeling {
    type Source = SimpleGraphs;
    type Target = Gamma;

    fn source(&self) -> &SimpleGraphs {
        &SimpleGraphs
    }

    fn target(&self) -> &Gamma {
        &self.target
    }

    fn map_object(&self, t: &usize) -> usize {
        *t
    }

    fn apply(&self, g: &SimpleGraph) -> Result<EdgeLabeling> {
        Ok(sg_to_gamma_bool(g))
    }

    fn name(&self) -> String {
        "sg≅gamma:bool".into()
    }
}

/// The bijection `SG(n) → Γ_𝔹(n)`: edge present ⇔ label `T`.
pub fn sg_to_gamma_bool(g: &SimpleGraph) -> EdgeLabeling {
    EdgeLabeling::new(g.n(), Monoid::Bool, g.edges().map(|(i, j)| (i, j, 1)))
        .expect("edges of a simple graph are valid")
}

/// The inverse of [`sg_to_gamma_bool`].
pub fn sg_from_gamma_bool(g: &EdgeLabeling) -> Result<SimpleGraph> {
    LabelingToSimple::new(Monoid::Bool)?.apply(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netmodel::GammaHom;

    #[test]
    fn cutoff_sends_multigraph_to_support() {
        let phi = SupportMorphism::cutoff_one();
        let g = Multigraph::new(3, [(1, 2, 3), (2, 3, 1)]).unwrap();
        assert_eq!(
            phi.apply(&g).unwrap(),
            SimpleGraph::new(3, [(1, 2), (2, 3)]).unwrap()
        );
        assert_eq!(phi.source().id(), "mgplus");
        assert_eq!(phi.target().id(), "sg");
        let single = Multigraph::new(2, [(1, 2, 3)]).unwrap();
        assert_eq!(
            phi.apply(&single).unwrap(),
            SimpleGraph::new(2, [(1, 2)]).unwrap()
        );
    }

    #[test]
    fn composite_checks_the_middle() {
        let a = GammaHom::new(MonoidHom::cutoff(2));
        let b = GammaHom::new(MonoidHom::cutoff(1));
        assert!(Composite::new(a, b).is_err());
        let a = GammaHom::new(MonoidHom::cutoff(2));
        let b = GammaHom::new(MonoidHom::truncate(2, 1).unwrap());
        assert!(Composite::new(a, b).is_ok());
    }

    #[test]
    fn bool_bijection_round_trips() {
        let g = SimpleGraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(sg_from_gamma_bool(&sg_to_gamma_bool(&g)).unwrap(), g);
    }
}
