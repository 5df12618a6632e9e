//! Composition rebuilt from the symmetric monoidal structure of the
//! underlying category: fold the inner operations with the tensor
//! `(σ, g) ⊗ (σ', g') = (σ + σ', g ⊔ g')`, then apply the single binary
//! composite `(σ, g) ∘ (π, h) = (σπ, g ∪ σ(h))`.
//!
//! Permutation arithmetic here works on raw image vectors and does not go
//! through [`Permutation`]'s own composition or block sums.

use crate::error::{Error, Result};
use crate::netmodel::{NetworkModel, Object};
use crate::operad::{NetworkOperad, Op, Profile};
use crate::perm::Permutation;

/// 0-based images of `σ`.
fn images0(p: &Permutation) -> Vec<usize> {
    p.images().iter().map(|&i| i - 1).collect()
}

fn tensor_images(a: &[usize], b: &[usize]) -> Vec<usize> {
    let shift = a.len();
    a.iter().copied().chain(b.iter().map(|&j| j + shift)).collect()
}

/// `(a ∘ b)(i) = a(b(i))`.
fn after_images(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&j| a[j]).collect()
}

fn to_perm(images: Vec<usize>) -> Result<Permutation> {
    Permutation::from_images(&images.iter().map(|&i| i + 1).collect::<Vec<_>>())
}

/// `f ∘ (g_1, ..., g_k)` computed along the categorical path.
pub fn compose_via_category<M: NetworkModel>(
    operad: &NetworkOperad<M>,
    f: &Op<M>,
    gs: &[Op<M>],
) -> Result<Op<M>> {
    let model = operad.model();
    let id = model.id();
    if gs.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: format!("{} operations", f.arity()),
            found: gs.len().to_string(),
        });
    }
    for op in std::iter::once(f).chain(gs) {
        if op.model() != id {
            return Err(Error::ModelMismatch {
                expected: id.clone(),
                found: op.model().to_string(),
            });
        }
    }
    for (slot, (g, want)) in gs.iter().zip(f.inputs()).enumerate() {
        if g.output() != want {
            return Err(Error::ProfileMismatch {
                slot: slot + 1,
                expected: want.describe(),
                found: g.output().describe(),
            });
        }
    }

    let mut tensor: Option<(Vec<usize>, M::Net)> = None;
    for g in gs {
        let next = images0(g.perm());
        tensor = Some(match tensor {
            None => (next, g.net().clone()),
            Some((perm, net)) => (tensor_images(&perm, &next), model.djunion(&net, g.net())?),
        });
    }
    let (pi, h) = tensor.unwrap_or_else(|| (Vec::new(), model.unit(&M::Obj::empty())));

    let sigma = images0(f.perm());
    let moved = model.act(f.perm(), &h)?;
    let net = model.overlay(f.net(), &moved)?;
    let inputs = gs.iter().flat_map(|g| g.inputs().iter().cloned()).collect();
    operad.make_operation(
        Profile::new(inputs, f.output().clone()),
        to_perm(after_images(&sigma, &pi))?,
        net,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netmodel::{SimpleGraph, SimpleGraphs};

    #[test]
    fn matches_the_worked_composite() {
        let operad = NetworkOperad::new(SimpleGraphs);
        let sg = |n, e: &[(usize, usize)]| SimpleGraph::new(n, e.iter().copied()).unwrap();
        let f = operad
            .make_operation(
                Profile::new(vec![3, 4, 2], 9),
                Permutation::identity(9),
                sg(9, &[(1, 2), (3, 6)]),
            )
            .unwrap();
        let leaf = |n, e: &[(usize, usize)]| {
            operad
                .make_operation(Profile::new(vec![n], n), Permutation::identity(n), sg(n, e))
                .unwrap()
        };
        let gs = [
            leaf(3, &[(2, 3)]),
            leaf(4, &[(1, 2), (2, 3), (3, 4)]),
            leaf(2, &[(1, 2)]),
        ];
        let h = compose_via_category(&operad, &f, &gs).unwrap();
        assert_eq!(h, operad.compose(&f, &gs).unwrap());
        assert_eq!(
            h.net(),
            &sg(9, &[(1, 2), (2, 3), (3, 6), (4, 5), (5, 6), (6, 7), (8, 9)])
        );
    }

    #[test]
    fn local_arithmetic() {
        assert_eq!(tensor_images(&[1, 0], &[0]), vec![1, 0, 2]);
        assert_eq!(after_images(&[1, 2, 0], &[1, 0, 2]), vec![2, 1, 0]);
    }
}
