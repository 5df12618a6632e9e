//! The network operad `O_F` of a network model `F`.
//!
//! An operation of profile `(t_1, ..., t_k; t)` is a pair `(σ, g)` where `σ`
//! rearranges the concatenated inputs into `t` and `g ∈ F(t)`. Composition:
//!
//! ```text
//! (σ, g) ∘ ((τ_1, h_1), ..., (τ_k, h_k)) = (σ (τ_1 + ... + τ_k), g ∪ σ(h_1 ⊔ ... ⊔ h_k))
//! ```

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::netmodel::{ModelMorphism, NetworkModel, Object};
use crate::perm::Permutation;

/// Input types and output type of an operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile<T> {
    pub inputs: Vec<T>,
    pub output: T,
}

impl<T: Object> Profile<T> {
    pub fn new(inputs: Vec<T>, output: T) -> Self {
        Profile { inputs, output }
    }

    /// `t_1 ⊗ ... ⊗ t_k`.
    pub fn source(&self) -> T {
        T::concat_all(&self.inputs)
    }
}

/// An element `(σ, g)` of `O_F(t_1, ..., t_k; t)`, tagged with the model it
/// belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Operation<T, N> {
    model: String,
    profile: Profile<T>,
    perm: Permutation,
    net: N,
}

pub type Op<M> = Operation<<M as NetworkModel>::Obj, <M as NetworkModel>::Net>;

impl<T: Object, N> Operation<T, N> {
    pub fn model(&self) -> &str {
        &self.model
    }

    pub fn profile(&self) -> &Profile<T> {
        &self.profile
    }

    pub fn inputs(&self) -> &[T] {
        &self.profile.inputs
    }

    pub fn output(&self) -> &T {
        &self.profile.output
    }

    /// Number of inputs `k`.
    pub fn arity(&self) -> usize {
        self.profile.inputs.len()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn net(&self) -> &N {
        &self.net
    }

    pub fn into_parts(self) -> (Profile<T>, Permutation, N) {
        (self.profile, self.perm, self.net)
    }
}

impl<T: Serialize, N: Serialize> Serialize for Operation<T, N> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct P<'a, T> {
            #[serde(rename = "in")]
            inputs: &'a [T],
            out: &'a T,
        }
        let mut st = s.serialize_struct("Operation", 3)?;
        st.serialize_field(
            "profile",
            &P {
                inputs: &self.profile.inputs,
                out: &self.profile.output,
            },
        )?;
        st.serialize_field("perm", &self.perm)?;
        st.serialize_field("net", &self.net)?;
        st.end()
    }
}

/// `O_F`, holding the model whose overlay, action and disjoint union drive
/// composition.
#[derive(Clone, Debug)]
pub struct NetworkOperad<M> {
    model: M,
}

impl<M: NetworkModel> NetworkOperad<M> {
    pub fn new(model: M) -> Self {
        NetworkOperad { model }
    }

    pub fn model(&self) -> &M {
        &self.model
    }

    fn own<T, N>(&self, f: &Operation<T, N>) -> Result<()> {
        let id = self.model.id();
        if f.model == id {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                expected: id,
                found: f.model.clone(),
            })
        }
    }

    /// Validates `(σ, g)` against a profile.
    pub fn make_operation(&self, profile: Profile<M::Obj>, perm: Permutation, net: M::Net) -> Result<Op<M>> {
        let source = profile.source();
        if !source.rearranges_to(&profile.output) {
            return Err(Error::EmptyHomset {
                inputs: describe_all(&profile.inputs),
                output: profile.output.describe(),
            });
        }
        if perm.degree() != profile.output.len() {
            return Err(Error::DegreeMismatch {
                expected: profile.output.len(),
                found: perm.degree(),
            });
        }
        let moved = source.permuted(&perm)?;
        if moved != profile.output {
            return Err(Error::Constraint(format!(
                "{perm} sends {} to {}, not {}",
                source.describe(),
                moved.describe(),
                profile.output.describe()
            )));
        }
        let t = self.model.object(&net);
        if t != profile.output {
            return Err(Error::ArityMismatch {
                expected: profile.output.describe(),
                found: t.describe(),
            });
        }
        Ok(Operation {
            model: self.model.id(),
            profile,
            perm,
            net,
        })
    }

    /// `(1, e_t)` of profile `(t; t)`.
    pub fn identity_op(&self, t: &M::Obj) -> Op<M> {
        Operation {
            model: self.model.id(),
            profile: Profile::new(vec![t.clone()], t.clone()),
            perm: Permutation::identity(t.len()),
            net: self.model.unit(t),
        }
    }

    /// Operadic composition in closed form.
    pub fn compose(&self, f: &Op<M>, gs: &[Op<M>]) -> Result<Op<M>> {
        self.check_slots(f, gs)?;
        let tau = Permutation::block_sum_all(gs.iter().map(|g| &g.perm));
        let perm = f.perm.compose(&tau)?;
        let hs: Vec<M::Net> = gs.iter().map(|g| g.net.clone()).collect();
        let moved = self.model.act(&f.perm, &self.model.djunion_all(&hs)?)?;
        let net = self.model.overlay(&f.net, &moved)?;
        Ok(Operation {
            model: f.model.clone(),
            profile: Profile::new(
                gs.iter().flat_map(|g| g.profile.inputs.iter().cloned()).collect(),
                f.profile.output.clone(),
            ),
            perm,
            net,
        })
    }

    /// Checks that `gs` can be plugged into `f`, naming the first bad slot.
    pub fn check_slots(&self, f: &Op<M>, gs: &[Op<M>]) -> Result<()> {
        self.own(f)?;
        if gs.len() != f.arity() {
            return Err(Error::ArityMismatch {
                expected: format!("{} inputs", f.arity()),
                found: format!("{} operations", gs.len()),
            });
        }
        for (i, (g, t)) in gs.iter().zip(&f.profile.inputs).enumerate() {
            self.own(g)?;
            if &g.profile.output != t {
                return Err(Error::ProfileMismatch {
                    slot: i + 1,
                    expected: t.describe(),
                    found: g.profile.output.describe(),
                });
            }
        }
        Ok(())
    }

    /// `f · τ` for `τ ∈ S_k`: inputs reordered to `(t_τ(1), ..., t_τ(k))`,
    /// permutation precomposed with the induced block permutation.
    pub fn right_action(&self, f: &Op<M>, tau: &Permutation) -> Result<Op<M>> {
        self.own(f)?;
        let sizes: Vec<usize> = f.profile.inputs.iter().map(Object::len).collect();
        let block = Permutation::block_induced(tau, &sizes)?;
        let inputs = (1..=tau.degree())
            .map(|j| f.profile.inputs[tau.image(j) - 1].clone())
            .collect();
        Ok(Operation {
            model: f.model.clone(),
            profile: Profile::new(inputs, f.profile.output.clone()),
            perm: f.perm.compose(&block)?,
            net: f.net.clone(),
        })
    }
}

/// `O_φ`: applies a model morphism to the network of an operation.
pub fn operad_morphism_apply<P>(phi: &P, f: &Op<P::Source>) -> Result<Op<P::Target>>
where
    P: ModelMorphism,
{
    let source = phi.source().id();
    if f.model != source {
        return Err(Error::ModelMismatch {
            expected: source,
            found: f.model.clone(),
        });
    }
    Ok(Operation {
        model: phi.target().id(),
        profile: Profile::new(
            f.profile.inputs.iter().map(|t| phi.map_object(t)).collect(),
            phi.map_object(&f.profile.output),
        ),
        perm: f.perm.clone(),
        net: phi.apply(&f.net)?,
    })
}

fn describe_all<T: Object>(ts: &[T]) -> String {
    let parts: Vec<String> = ts.iter().map(Object::describe).collect();
    format!("({})", parts.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::{ColorWord, PetriModel, PetriNet};
    use crate::netmodel::{Multigraph, Multigraphs, SimpleGraph, SimpleGraphs, SupportMorphism};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    fn sg(n: usize, e: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, e.iter().copied()).unwrap()
    }

    fn op(
        o: &NetworkOperad<SimpleGraphs>,
        ins: &[usize],
        p: Permutation,
        g: SimpleGraph,
    ) -> Op<SimpleGraphs> {
        let out = g.n();
        o.make_operation(Profile::new(ins.to_vec(), out), p, g).unwrap()
    }

    #[test]
    fn worked_composite() {
        let o = NetworkOperad::new(SimpleGraphs);
        let f = op(&o, &[3, 4, 2], Permutation::identity(9), sg(9, &[(1, 2), (3, 6)]));
        let gs = [
            op(&o, &[3], Permutation::identity(3), sg(3, &[(2, 3)])),
            op(
                &o,
                &[4],
                Permutation::identity(4),
                sg(4, &[(1, 2), (2, 3), (3, 4)]),
            ),
            op(&o, &[2], Permutation::identity(2), sg(2, &[(1, 2)])),
        ];
        let c = o.compose(&f, &gs).unwrap();
        assert_eq!(
            c.net(),
            &sg(9, &[(1, 2), (2, 3), (3, 6), (4, 5), (5, 6), (6, 7), (8, 9)])
        );
        assert_eq!(c.inputs(), &[3, 4, 2]);
        assert!(c.perm().is_identity());
    }

    #[test]
    fn empty_homsets_and_degrees() {
        let o = NetworkOperad::new(SimpleGraphs);
        let bad = o.make_operation(Profile::new(vec![1, 1], 3), Permutation::identity(3), sg(3, &[]));
        assert!(matches!(bad, Err(Error::EmptyHomset { .. })));
        let bad = o.make_operation(Profile::new(vec![2], 2), Permutation::identity(3), sg(2, &[]));
        assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
        let bad = o.make_operation(Profile::new(vec![2], 2), Permutation::identity(2), sg(3, &[]));
        assert!(matches!(bad, Err(Error::ArityMismatch { .. })));
        assert!(o
            .make_operation(Profile::new(vec![2], 2), perm(&[2, 1]), sg(2, &[(1, 2)]))
            .is_ok());
    }

    #[test]
    fn profile_mismatch_names_the_slot() {
        let o = NetworkOperad::new(SimpleGraphs);
        let f = op(&o, &[1, 2], Permutation::identity(3), sg(3, &[]));
        let err = o
            .compose(&f, &[o.identity_op(&1), o.identity_op(&1)])
            .unwrap_err();
        assert_eq!(
            err,
            Error::ProfileMismatch {
                slot: 2,
                expected: "2".into(),
                found: "1".into()
            }
        );
        assert!(o.compose(&f, &[o.identity_op(&1)]).is_err());
    }

    #[test]
    fn swap_over_units() {
        let o = NetworkOperad::new(SimpleGraphs);
        let f = op(&o, &[1, 1], perm(&[2, 1]), sg(2, &[]));
        let c = o.compose(&f, &[o.identity_op(&1), o.identity_op(&1)]).unwrap();
        assert_eq!(c.perm(), &perm(&[2, 1]));
        assert_eq!(c.net(), &sg(2, &[]));
    }

    #[test]
    fn unit_laws() {
        let o = NetworkOperad::new(SimpleGraphs);
        let f = op(&o, &[1, 2], perm(&[3, 1, 2]), sg(3, &[(1, 3)]));
        let ids: Vec<_> = f.inputs().iter().map(|t| o.identity_op(t)).collect();
        assert_eq!(o.compose(&f, &ids).unwrap(), f);
        assert_eq!(
            o.compose(&o.identity_op(&3), std::slice::from_ref(&f)).unwrap(),
            f
        );
        assert_eq!(o.identity_op(&3).net(), &sg(3, &[]));
    }

    #[test]
    fn right_action_reorders_blocks() {
        let o = NetworkOperad::new(SimpleGraphs);
        let f = op(&o, &[2, 3], Permutation::identity(5), sg(5, &[(1, 4)]));
        let g = o.right_action(&f, &perm(&[2, 1])).unwrap();
        assert_eq!(g.inputs(), &[3, 2]);
        assert_eq!(g.perm(), &perm(&[3, 4, 5, 1, 2]));
        assert_eq!(g.net(), f.net());
        assert_eq!(o.right_action(&f, &Permutation::identity(2)).unwrap(), f);
        assert!(o.right_action(&f, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn right_action_is_an_action() {
        let o = NetworkOperad::new(SimpleGraphs);
        for k in 0..=3usize {
            // every size vector in {0,1,2}^k
            for code in 0..3usize.pow(k as u32) {
                let sizes: Vec<usize> = (0..k).map(|i| code / 3usize.pow(i as u32) % 3).collect();
                let n: usize = sizes.iter().sum();
                let f = op(
                    &o,
                    &sizes,
                    Permutation::all(n).pop().unwrap(),
                    SimpleGraph::empty(n),
                );
                for t1 in Permutation::all(k) {
                    let ft = o.right_action(&f, &t1).unwrap();
                    for t2 in Permutation::all(k) {
                        let lhs = o.right_action(&ft, &t2).unwrap();
                        let rhs = o.right_action(&f, &t1.compose(&t2).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "sizes {sizes:?} τ={t1} τ'={t2}");
                    }
                }
            }
        }
    }

    #[test]
    fn morphism_maps_networks() {
        let phi = SupportMorphism::cutoff_one();
        let o = NetworkOperad::new(Multigraphs::SUM);
        let f = o
            .make_operation(
                Profile::new(vec![1, 1], 2),
                perm(&[2, 1]),
                Multigraph::new(2, [(1, 2, 2)]).unwrap(),
            )
            .unwrap();
        let g = operad_morphism_apply(&phi, &f).unwrap();
        assert_eq!(g.net(), &sg(2, &[(1, 2)]));
        assert_eq!(g.perm(), f.perm());
        assert_eq!(g.model(), "sg");
        let id = o.identity_op(&3);
        assert_eq!(
            operad_morphism_apply(&phi, &id).unwrap(),
            NetworkOperad::new(SimpleGraphs).identity_op(&3)
        );
        let wrong = NetworkOperad::new(Multigraphs::MAX).identity_op(&1);
        assert!(operad_morphism_apply(&phi, &wrong).is_err());
    }

    #[test]
    fn composition_checks_model_tags() {
        let sgo = NetworkOperad::new(SimpleGraphs);
        let mgo = NetworkOperad::new(Multigraphs::MAX);
        // same Rust types would be needed to mix, so compare through Multigraphs variants
        let mgs = NetworkOperad::new(Multigraphs::SUM);
        let f = mgo.identity_op(&2);
        assert!(matches!(
            mgs.compose(&f, &[mgs.identity_op(&2)]),
            Err(Error::ModelMismatch { .. })
        ));
        assert!(sgo.compose(&sgo.identity_op(&0), &[sgo.identity_op(&0)]).is_ok());
    }

    #[test]
    fn colored_operations() {
        let o = NetworkOperad::new(PetriModel::default());
        let w = |s: &str| s.parse::<ColorWord>().unwrap();
        let id = o.identity_op(&w("p,t"));
        assert_eq!(id.net().net, PetriNet::zero(1, 1));
        // (t),(p) -> (p,t) needs the swap
        let net = o.model().unit(&w("p,t"));
        assert!(o
            .make_operation(
                Profile::new(vec![w("t"), w("p")], w("p,t")),
                perm(&[2, 1]),
                net.clone()
            )
            .is_ok());
        let bad = o.make_operation(
            Profile::new(vec![w("t"), w("p")], w("p,t")),
            Permutation::identity(2),
            net.clone(),
        );
        assert!(matches!(bad, Err(Error::Constraint(_))));
        let bad = o.make_operation(Profile::new(vec![w("t"), w("t")], w("p,t")), perm(&[2, 1]), net);
        assert!(matches!(bad, Err(Error::EmptyHomset { .. })));
    }

    #[test]
    fn json_form() {
        let f = Operation {
            model: "sg".to_string(),
            profile: Profile::new(vec![1usize, 1], 2),
            perm: perm(&[2, 1]),
            net: serde_json::json!({"edges": [[1, 2]]}),
        };
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["profile"]["in"], serde_json::json!([1, 1]));
        assert_eq!(v["profile"]["out"], serde_json::json!(2));
        assert_eq!(v["perm"], serde_json::json!([2, 1]));
        assert_eq!(v["net"]["edges"], serde_json::json!([[1, 2]]));
    }
}
