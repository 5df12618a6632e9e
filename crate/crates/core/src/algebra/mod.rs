//! Algebras of network operads.
//!
//! An algebra assigns a set `A(t)` to every type and lets each operation
//! `f ∈ O_F(t_1, ..., t_k; t)` act as a map `A(t_1) × ... × A(t_k) → A(t)`.
//! The canonical algebra acts on networks themselves; the others decorate
//! vertices with attributes and constrain which edges may exist.

mod bounded;
mod graphic;
mod predicate;

use std::fmt::Debug;

pub use bounded::{act_bounded, BoundedAlgebra, EdgeBound, FnBound, TwoRange};
pub use graphic::{act_degree_limited, AttemptSequence, AttemptWords, DegreeLimited, PortedNetwork};
pub use predicate::{
    act_predicate, enforce_predicate, parse_rational, EdgePredicate, FnPredicate, PlanarPoint,
    PredicateAlgebra, RangeLimit,
};

use crate::error::{Error, Result};
use crate::netmodel::{NetworkModel, Object};
use crate::operad::{NetworkOperad, Op};

type ObjOf<M> = <M as NetworkModel>::Obj;

/// An algebra of the operad `O_F` for `F = Self::Model`.
pub trait Algebra {
    type Model: NetworkModel;
    type Elem: Clone + PartialEq + Debug;

    fn operad(&self) -> &NetworkOperad<Self::Model>;

    fn name(&self) -> String;

    /// The type `t` with `a ∈ A(t)`.
    fn object(&self, a: &Self::Elem) -> ObjOf<Self::Model>;

    /// Membership in the constrained subset, where the algebra has one.
    fn validate(&self, _a: &Self::Elem) -> Result<()> {
        Ok(())
    }

    /// `α(f)(a_1, ..., a_k)`.
    fn act(&self, f: &Op<Self::Model>, items: &[Self::Elem]) -> Result<Self::Elem>;
}

/// Checks that `f` belongs to `model` and that the item types match its inputs.
pub(crate) fn check_inputs<M: NetworkModel>(
    model: &M,
    f: &Op<M>,
    types: impl ExactSizeIterator<Item = M::Obj>,
) -> Result<()> {
    let id = model.id();
    if f.model() != id {
        return Err(Error::ModelMismatch {
            expected: id,
            found: f.model().to_string(),
        });
    }
    if types.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: format!("{} inputs", f.arity()),
            found: format!("{} items", types.len()),
        });
    }
    for (i, (t, want)) in types.zip(f.inputs()).enumerate() {
        if &t != want {
            return Err(Error::ProfileMismatch {
                slot: i + 1,
                expected: want.describe(),
                found: t.describe(),
            });
        }
    }
    Ok(())
}

/// `α(σ, g)(h_1, ..., h_k) = g ∪ σ(h_1 ⊔ ... ⊔ h_k)`.
pub fn act_canonical<M: NetworkModel>(model: &M, f: &Op<M>, hs: &[M::Net]) -> Result<M::Net> {
    check_inputs(model, f, hs.iter().map(|h| model.object(h)))?;
    let moved = model.act(f.perm(), &model.djunion_all(hs)?)?;
    model.overlay(f.net(), &moved)
}

/// The canonical algebra `A(t) = F(t)`.
#[derive(Clone, Debug)]
pub struct Canonical<M> {
    operad: NetworkOperad<M>,
}

impl<M: NetworkModel> Canonical<M> {
    pub fn new(model: M) -> Self {
        Canonical {
            operad: NetworkOperad::new(model),
        }
    }
}

impl<M: NetworkModel> Algebra for Canonical<M> {
    type Model = M;
    type Elem = M::Net;

    fn operad(&self) -> &NetworkOperad<M> {
        &self.operad
    }

    fn name(&self) -> String {
        format!("canonical[{}]", self.operad.model().id())
    }

    fn object(&self, a: &M::Net) -> M::Obj {
        self.operad.model().object(a)
    }

    fn act(&self, f: &Op<M>, items: &[M::Net]) -> Result<M::Net> {
        act_canonical(self.operad.model(), f, items)
    }
}

/// A network with one attribute per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AttributedNetwork<N, X> {
    pub net: N,
    pub attrs: Vec<X>,
}

impl<N, X> AttributedNetwork<N, X> {
    pub fn new<M: NetworkModel<Net = N>>(model: &M, net: N, attrs: Vec<X>) -> Result<Self> {
        let n = model.object(&net).len();
        if n != attrs.len() {
            return Err(Error::ArityMismatch {
                expected: format!("{n} attributes"),
                found: attrs.len().to_string(),
            });
        }
        Ok(AttributedNetwork { net, attrs })
    }
}

/// `π_X`: forgets the attributes.
pub fn hom_forget<N: Clone, X>(a: &AttributedNetwork<N, X>) -> N {
    a.net.clone()
}

/// `α_X(σ, g)((h_1, x_1), ..., (h_k, x_k)) = (g ∪ σ(h_1 ⊔ ... ⊔ h_k), σ(x_1, ..., x_k))`,
/// where the concatenated attributes are moved so that the attribute of
/// vertex `i` lands on vertex `σ(i)`.
pub fn act_attributes<M: NetworkModel, X: Clone>(
    model: &M,
    f: &Op<M>,
    items: &[AttributedNetwork<M::Net, X>],
) -> Result<AttributedNetwork<M::Net, X>> {
    let nets: Vec<M::Net> = items.iter().map(|a| a.net.clone()).collect();
    let net = act_canonical(model, f, &nets)?;
    let attrs: Vec<X> = items.iter().flat_map(|a| a.attrs.iter().cloned()).collect();
    let attrs = f.perm().permute_positions(&attrs)?;
    Ok(AttributedNetwork { net, attrs })
}

/// `A_X(t) = F(t) × X^|t|`.
#[derive(Clone, Debug)]
pub struct Attributed<M, X> {
    operad: NetworkOperad<M>,
    _attr: std::marker::PhantomData<fn() -> X>,
}

impl<M: NetworkModel, X> Attributed<M, X> {
    pub fn new(model: M) -> Self {
        Attributed {
            operad: NetworkOperad::new(model),
            _attr: std::marker::PhantomData,
        }
    }
}

impl<M, X> Algebra for Attributed<M, X>
where
    M: NetworkModel,
    X: Clone + PartialEq + Debug,
{
    type Model = M;
    type Elem = AttributedNetwork<M::Net, X>;

    fn operad(&self) -> &NetworkOperad<M> {
        &self.operad
    }

    fn name(&self) -> String {
        format!("attributes[{}]", self.operad.model().id())
    }

    fn object(&self, a: &Self::Elem) -> M::Obj {
        self.operad.model().object(&a.net)
    }

    fn validate(&self, a: &Self::Elem) -> Result<()> {
        let n = self.object(a).len();
        if n == a.attrs.len() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: format!("{n} attributes"),
                found: a.attrs.len().to_string(),
            })
        }
    }

    fn act(&self, f: &Op<M>, items: &[Self::Elem]) -> Result<Self::Elem> {
        for a in items {
            self.validate(a)?;
        }
        act_attributes(self.operad.model(), f, items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netmodel::{SimpleGraph, SimpleGraphs};
    use crate::operad::Profile;
    use crate::perm::Permutation;

    fn sg(n: usize, e: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_worked_composite() {
        let alg = Canonical::new(SimpleGraphs);
        let f = alg
            .operad()
            .make_operation(
                Profile::new(vec![3, 4, 2], 9),
                Permutation::identity(9),
                sg(9, &[(1, 2), (3, 6)]),
            )
            .unwrap();
        let hs = [
            sg(3, &[(2, 3)]),
            sg(4, &[(1, 2), (2, 3), (3, 4)]),
            sg(2, &[(1, 2)]),
        ];
        assert_eq!(
            alg.act(&f, &hs).unwrap(),
            sg(9, &[(1, 2), (2, 3), (3, 6), (4, 5), (5, 6), (6, 7), (8, 9)])
        );
        let id = alg.operad().identity_op(&4);
        assert_eq!(alg.act(&id, &hs[1..2]).unwrap(), hs[1]);
        assert!(matches!(
            alg.act(&f, &[hs[0].clone(), hs[0].clone(), hs[2].clone()]),
            Err(Error::ProfileMismatch { slot: 2, .. })
        ));
    }

    #[test]
    fn swap_of_units_is_unit() {
        let alg = Canonical::new(SimpleGraphs);
        let f = alg
            .operad()
            .make_operation(
                Profile::new(vec![1, 1], 2),
                Permutation::block_swap(1, 1),
                sg(2, &[]),
            )
            .unwrap();
        assert_eq!(alg.act(&f, &[sg(1, &[]), sg(1, &[])]).unwrap(), sg(2, &[]));
    }

    #[test]
    fn attributes_follow_their_vertices() {
        let alg: Attributed<SimpleGraphs, char> = Attributed::new(SimpleGraphs);
        let swap = alg
            .operad()
            .make_operation(
                Profile::new(vec![1, 1], 2),
                Permutation::from_images(&[2, 1]).unwrap(),
                sg(2, &[]),
            )
            .unwrap();
        let a = AttributedNetwork::new(&SimpleGraphs, sg(1, &[]), vec!['a']).unwrap();
        let b = AttributedNetwork::new(&SimpleGraphs, sg(1, &[]), vec!['b']).unwrap();
        let out = alg.act(&swap, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(out.attrs, vec!['b', 'a']);

        let id = alg
            .operad()
            .make_operation(
                Profile::new(vec![1, 1], 2),
                Permutation::identity(2),
                sg(2, &[(1, 2)]),
            )
            .unwrap();
        let out = alg.act(&id, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(out.attrs, vec!['a', 'b']);
        // forgetting attributes commutes with acting
        assert_eq!(
            hom_forget(&out),
            act_canonical(&SimpleGraphs, &id, &[hom_forget(&a), hom_forget(&b)]).unwrap()
        );
        assert!(AttributedNetwork::new(&SimpleGraphs, sg(2, &[]), vec!['a']).is_err());
    }
}
