//! Network models: families of networks indexed by vertex types, with
//! overlay, a symmetric-group action, and disjoint union.
//!
//! A model is anything implementing [`NetworkModel`]. The types of a
//! one-colored model are vertex counts (`usize`); colored models use
//! [`ColorWord`](crate::colored::ColorWord) instead, so the operad and the
//! law checkers treat both uniformly through the [`Object`] trait.

mod gamma;
mod graphs;
mod morphism;
mod partition;
mod tensor;

use std::fmt::Debug;

pub use gamma::{EdgeLabeling, Gamma, GammaHom};
pub use graphs::{
    DirectedGraph, DirectedGraphs, DirectedMultigraph, DirectedMultigraphs, Hypergraph, Hypergraphs,
    MultOverlay, Multigraph, Multigraphs, SimpleGraph, SimpleGraphs,
};
pub use morphism::{
    sg_from_gamma_bool, sg_to_gamma_bool, Composite, IdentityMorphism, LabelingToSimple, ModelMorphism,
    MultigraphToLabeling, SimpleToLabeling, SupportMorphism,
};
pub use partition::{Lattice, Partition, Partitions};
pub use tensor::Tensor;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The types of a network model: objects of the free symmetric monoidal
/// category the model is defined on.
pub trait Object: Clone + PartialEq + Eq + Debug {
    /// Number of vertices.
    fn len(&self) -> usize;
    /// The monoidal unit.
    fn empty() -> Self;
    fn concat(&self, other: &Self) -> Self;
    /// The codomain of `σ` viewed as a morphism out of `self`.
    fn permuted(&self, sigma: &Permutation) -> Result<Self>;
    fn describe(&self) -> String;
    /// Whether some permutation takes `self` to `other`.
    fn rearranges_to(&self, other: &Self) -> bool;
    /// The vertices in positions `start + 1 ..= end`.
    fn slice(&self, start: usize, end: usize) -> Self;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn concat_all<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self
    where
        Self: 'a,
    {
        items.into_iter().fold(Self::empty(), |acc, t| acc.concat(t))
    }
}

impl Object for usize {
    fn len(&self) -> usize {
        *self
    }

    fn empty() -> Self {
        0
    }

    fn concat(&self, other: &Self) -> Self {
        self + other
    }

    fn permuted(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != *self {
            return Err(Error::DegreeMismatch {
                expected: *self,
                found: sigma.degree(),
            });
        }
        Ok(*self)
    }

    fn describe(&self) -> String {
        self.to_string()
    }

    fn rearranges_to(&self, other: &Self) -> bool {
        self == other
    }

    fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= *self, "slice {start}..{end} of {self}");
        end - start
    }
}

/// The five pieces of data of a network model.
///
/// Implementations must satisfy the twelve network-model equations; the
/// [`oracle`](crate::oracle) module checks them.
pub trait NetworkModel {
    type Obj: Object;
    type Net: Clone + PartialEq + Debug;

    /// A stable identifier, also used to tag operad operations.
    fn id(&self) -> String;

    /// The type a network lives over.
    fn object(&self, g: &Self::Net) -> Self::Obj;

    /// The identity network `e_t`.
    fn unit(&self, t: &Self::Obj) -> Self::Net;

    /// The monoid operation `g ∪ h` on networks of the same type.
    fn overlay(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net>;

    /// `σ(g)`: relabel vertex `i` as `σ(i)`.
    fn act(&self, sigma: &Permutation, g: &Self::Net) -> Result<Self::Net>;

    /// `g ⊔ h`: `g` on the first vertices, `h` shifted past them.
    fn djunion(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net>;

    fn djunion_all(&self, gs: &[Self::Net]) -> Result<Self::Net> {
        let mut acc = self.unit(&Self::Obj::empty());
        for g in gs {
            acc = self.djunion(&acc, g)?;
        }
        Ok(acc)
    }
}

impl<M: NetworkModel + ?Sized> NetworkModel for &M {
    type Obj = M::Obj;
    type Net = M::Net;

    fn id(&self) -> String {
        (**self).id()
    }
    fn object(&self, g: &Self::Net) -> Self::Obj {
        (**self).object(g)
    }
    fn unit(&self, t: &Self::Obj) -> Self::Net {
        (**self).unit(t)
    }
    fn overlay(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        (**self).overlay(g, h)
    }
    fn act(&self, sigma: &Permutation, g: &Self::Net) -> Result<Self::Net> {
        (**self).act(sigma, g)
    }
    fn djunion(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        (**self).djunion(g, h)
    }
}

pub(crate) fn same_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        })
    }
}

pub(crate) fn act_degree(sigma: &Permutation, n: usize) -> Result<()> {
    if sigma.degree() == n {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            expected: n,
            found: sigma.degree(),
        })
    }
}

/// Sorts an unordered pair into `(min, max)`.
#[inline]
pub(crate) fn unordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

pub(crate) fn check_pair(n: usize, i: usize, j: usize, directed: bool) -> Result<(usize, usize)> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidNetwork(format!("edge ({i},{j}) outside 1..={n}")));
    }
    if i == j {
        return Err(Error::InvalidNetwork(format!("loop at vertex {i}")));
    }
    Ok(if directed { (i, j) } else { unordered(i, j) })
}
