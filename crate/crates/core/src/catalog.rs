//! Runtime selection of the one-colored models by identifier, with their
//! canonical JSON forms.
//!
//! | id | networks |
//! |----|----------|
//! | `sg`, `dg` | simple / directed graphs |
//! | `mg`, `mgplus` | multigraphs under max / sum |
//! | `dmg`, `dmgplus` | directed multigraphs under max / sum |
//! | `hg` | hypergraphs |
//! | `part-join`, `part-meet` | partitions |
//! | `gamma:<monoid>` | edge labelings, e.g. `gamma:bk:2` |
//! | `<a>*<b>` | pairs, e.g. `sg*mg` |

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::monoid::Monoid;
use crate::netmodel::{
    DirectedGraph, DirectedGraphs, DirectedMultigraph, DirectedMultigraphs, EdgeLabeling, Gamma, Hypergraph,
    Hypergraphs, Lattice, MultOverlay, Multigraph, Multigraphs, NetworkModel, Partition, Partitions,
    SimpleGraph, SimpleGraphs,
};
use crate::oracle::{Limits, Rng, Sampler};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyModel {
    Sg,
    Dg,
    Mg(MultOverlay),
    Dmg(MultOverlay),
    Hg,
    Part(Lattice),
    Gamma(Gamma),
    Tensor(Box<AnyModel>, Box<AnyModel>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyNet {
    Sg(SimpleGraph),
    Dg(DirectedGraph),
    Mg(Multigraph),
    Dmg(DirectedMultigraph),
    Hg(Hypergraph),
    Part(Partition),
    Gamma(EdgeLabeling),
    Pair(Box<AnyNet>, Box<AnyNet>),
}

impl AnyModel {
    pub fn parse(id: &str) -> Result<Self> {
        if let Some((a, b)) = id.split_once('*') {
            return Ok(AnyModel::Tensor(
                Box::new(Self::parse(a)?),
                Box::new(Self::parse(b)?),
            ));
        }
        Ok(match id {
            "sg" => AnyModel::Sg,
            "dg" => AnyModel::Dg,
            "mg" => AnyModel::Mg(MultOverlay::Max),
            "mgplus" => AnyModel::Mg(MultOverlay::Sum),
            "dmg" => AnyModel::Dmg(MultOverlay::Max),
            "dmgplus" => AnyModel::Dmg(MultOverlay::Sum),
            "hg" => AnyModel::Hg,
            "part-join" => AnyModel::Part(Lattice::Join),
            "part-meet" => AnyModel::Part(Lattice::Meet),
            _ => match id.strip_prefix("gamma:") {
                Some(m) => AnyModel::Gamma(Gamma::new(Monoid::parse(m)?)),
                None => return Err(Error::Unknown(format!("model {id}"))),
            },
        })
    }

    /// The models of the law catalog.
    pub fn catalog() -> Vec<AnyModel> {
        [
            "sg",
            "dg",
            "mg",
            "mgplus",
            "dmg",
            "dmgplus",
            "hg",
            "part-join",
            "part-meet",
            "gamma:bk:1",
            "gamma:bk:2",
            "gamma:bk:3",
            "sg*mg",
        ]
        .iter()
        .map(|id| AnyModel::parse(id).expect("catalog ids parse"))
        .collect()
    }

    fn mismatch_free(&self, g: &AnyNet) -> bool {
        matches!(
            (self, g),
            (AnyModel::Sg, AnyNet::Sg(_))
                | (AnyModel::Dg, AnyNet::Dg(_))
                | (AnyModel::Mg(_), AnyNet::Mg(_))
                | (AnyModel::Dmg(_), AnyNet::Dmg(_))
                | (AnyModel::Hg, AnyNet::Hg(_))
                | (AnyModel::Part(_), AnyNet::Part(_))
                | (AnyModel::Gamma(_), AnyNet::Gamma(_))
                | (AnyModel::Tensor(..), AnyNet::Pair(..))
        )
    }

    fn mismatch(&self, g: &AnyNet) -> Error {
        Error::ModelMismatch {
            expected: self.id(),
            found: g.kind().into(),
        }
    }

    /// The canonical JSON object of `g`, keys sorted.
    pub fn to_json(&self, g: &AnyNet) -> Result<Value> {
        let n = self.object(g);
        let body = match (self, g) {
            (AnyModel::Sg, AnyNet::Sg(g)) => {
                json!({ "edges": g.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>() })
            }
            (AnyModel::Dg, AnyNet::Dg(g)) => {
                json!({ "edges": g.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>() })
            }
            (AnyModel::Mg(_), AnyNet::Mg(g)) => {
                json!({ "edges": g.entries().map(|(i, j, k)| json!([i, j, k])).collect::<Vec<_>>() })
            }
            (AnyModel::Dmg(_), AnyNet::Dmg(g)) => {
                json!({ "edges": g.entries().map(|(i, j, k)| json!([i, j, k])).collect::<Vec<_>>() })
            }
            (AnyModel::Hg, AnyNet::Hg(g)) => json!({ "edges": g.edges().collect::<Vec<_>>() }),
            (AnyModel::Part(_), AnyNet::Part(g)) => json!({ "blocks": g.blocks() }),
            (AnyModel::Gamma(m), AnyNet::Gamma(g)) => {
                let monoid = m.monoid();
                let labels: Vec<Value> = g
                    .entries()
                    .map(|(i, j, x)| json!([i, j, monoid.format(x)]))
                    .collect();
                json!({ "labels": labels })
            }
            (AnyModel::Tensor(a, b), AnyNet::Pair(x, y)) => {
                json!({ "left": a.to_json(x)?, "right": b.to_json(y)? })
            }
            _ => return Err(self.mismatch(g)),
        };
        let mut obj = body;
        obj["model"] = json!(self.id());
        obj["n"] = json!(n);
        Ok(obj)
    }

    /// Reads a network of this model, checking the `"model"` tag.
    pub fn from_json(&self, v: &Value) -> Result<AnyNet> {
        let tag = v.get("model").and_then(Value::as_str).unwrap_or_default();
        if tag != self.id() {
            return Err(Error::ModelMismatch {
                expected: self.id(),
                found: tag.to_string(),
            });
        }
        let n = field::<usize>(v, "n")?;
        Ok(match self {
            AnyModel::Sg => AnyNet::Sg(SimpleGraph::new(n, field::<Vec<(usize, usize)>>(v, "edges")?)?),
            AnyModel::Dg => AnyNet::Dg(DirectedGraph::new(n, field::<Vec<(usize, usize)>>(v, "edges")?)?),
            AnyModel::Mg(_) => AnyNet::Mg(Multigraph::new(
                n,
                field::<Vec<(usize, usize, u64)>>(v, "edges")?,
            )?),
            AnyModel::Dmg(_) => AnyNet::Dmg(DirectedMultigraph::new(
                n,
                field::<Vec<(usize, usize, u64)>>(v, "edges")?,
            )?),
            AnyModel::Hg => AnyNet::Hg(Hypergraph::new(n, field::<Vec<Vec<usize>>>(v, "edges")?)?),
            AnyModel::Part(_) => AnyNet::Part(Partition::new(n, field::<Vec<Vec<usize>>>(v, "blocks")?)?),
            AnyModel::Gamma(m) => {
                let monoid = m.monoid();
                let entries = field::<Vec<(usize, usize, String)>>(v, "labels")?
                    .into_iter()
                    .map(|(i, j, x)| Ok((i, j, monoid.parse_elem(&x)?)))
                    .collect::<Result<Vec<_>>>()?;
                AnyNet::Gamma(EdgeLabeling::new(n, monoid.clone(), entries)?)
            }
            AnyModel::Tensor(a, b) => {
                let x = a.from_json(v.get("left").unwrap_or(&Value::Null))?;
                let y = b.from_json(v.get("right").unwrap_or(&Value::Null))?;
                if a.object(&x) != n || b.object(&y) != n {
                    return Err(Error::ArityMismatch {
                        expected: n.to_string(),
                        found: format!("({}, {})", a.object(&x), b.object(&y)),
                    });
                }
                AnyNet::Pair(Box::new(x), Box::new(y))
            }
        })
    }

    /// Reads any network, taking the model from its `"model"` tag.
    pub fn read_json(v: &Value) -> Result<(AnyModel, AnyNet)> {
        let tag = v
            .get("model")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("missing \"model\" tag".into()))?;
        let model = AnyModel::parse(tag)?;
        let net = model.from_json(v)?;
        Ok((model, net))
    }
}

fn field<T: serde::de::DeserializeOwned>(v: &Value, key: &str) -> Result<T> {
    let raw = v
        .get(key)
        .ok_or_else(|| Error::Json(format!("missing field \"{key}\"")))?;
    serde_json::from_value(raw.clone()).map_err(|e| Error::Json(format!("field \"{key}\": {e}")))
}

impl AnyNet {
    fn kind(&self) -> &'static str {
        match self {
            AnyNet::Sg(_) => "sg",
            AnyNet::Dg(_) => "dg",
            AnyNet::Mg(_) => "multigraph",
            AnyNet::Dmg(_) => "directed multigraph",
            AnyNet::Hg(_) => "hg",
            AnyNet::Part(_) => "partition",
            AnyNet::Gamma(_) => "labeling",
            AnyNet::Pair(..) => "pair",
        }
    }
}

/// Applies a structure map of the concrete model matching `$self`.
macro_rules! dispatch {
    ($self:ident, $g:expr, $culprit:expr => $($pat:pat => $body:expr),+ $(,)?) => {
        match ($self, $g) {
            $($pat => $body,)+
            _ => Err($self.mismatch($culprit)),
        }
    };
}

impl NetworkModel for AnyModel {
    type Obj = usize;
    type Net = AnyNet;

    fn id(&self) -> String {
        match self {
            AnyModel::Sg => SimpleGraphs.id(),
            AnyModel::Dg => DirectedGraphs.id(),
            AnyModel::Mg(o) => Multigraphs(*o).id(),
            AnyModel::Dmg(o) => DirectedMultigraphs(*o).id(),
            AnyModel::Hg => Hypergraphs.id(),
            AnyModel::Part(l) => Partitions(*l).id(),
            AnyModel::Gamma(m) => m.id(),
            AnyModel::Tensor(a, b) => format!("{}*{}", a.id(), b.id()),
        }
    }

    fn object(&self, g: &AnyNet) -> usize {
        match g {
            AnyNet::Sg(g) => g.n(),
            AnyNet::Dg(g) => g.n(),
            AnyNet::Mg(g) => g.n(),
            AnyNet::Dmg(g) => g.n(),
            AnyNet::Hg(g) => g.n(),
            AnyNet::Part(g) => g.n(),
            AnyNet::Gamma(g) => g.n(),
            AnyNet::Pair(x, _) => self.object(x),
        }
    }

    fn unit(&self, n: &usize) -> AnyNet {
        match self {
            AnyModel::Sg => AnyNet::Sg(SimpleGraphs.unit(n)),
            AnyModel::Dg => AnyNet::Dg(DirectedGraphs.unit(n)),
            AnyModel::Mg(o) => AnyNet::Mg(Multigraphs(*o).unit(n)),
            AnyModel::Dmg(o) => AnyNet::Dmg(DirectedMultigraphs(*o).unit(n)),
            AnyModel::Hg => AnyNet::Hg(Hypergraphs.unit(n)),
            AnyModel::Part(l) => AnyNet::Part(Partitions(*l).unit(n)),
            AnyModel::Gamma(m) => AnyNet::Gamma(m.unit(n)),
            AnyModel::Tensor(a, b) => AnyNet::Pair(Box::new(a.unit(n)), Box::new(b.unit(n))),
        }
    }

    fn overlay(&self, g: &AnyNet, h: &AnyNet) -> Result<AnyNet> {
        let culprit = if self.mismatch_free(g) { h } else { g };
        dispatch!(self, (g, h), culprit =>
            (AnyModel::Sg, (AnyNet::Sg(g), AnyNet::Sg(h))) => Ok(AnyNet::Sg(SimpleGraphs.overlay(g, h)?)),
            (AnyModel::Dg, (AnyNet::Dg(g), AnyNet::Dg(h))) => Ok(AnyNet::Dg(DirectedGraphs.overlay(g, h)?)),
            (AnyModel::Mg(o), (AnyNet::Mg(g), AnyNet::Mg(h))) => Ok(AnyNet::Mg(Multigraphs(*o).overlay(g, h)?)),
            (AnyModel::Dmg(o), (AnyNet::Dmg(g), AnyNet::Dmg(h))) => {
                Ok(AnyNet::Dmg(DirectedMultigraphs(*o).overlay(g, h)?))
            },
            (AnyModel::Hg, (AnyNet::Hg(g), AnyNet::Hg(h))) => Ok(AnyNet::Hg(Hypergraphs.overlay(g, h)?)),
            (AnyModel::Part(l), (AnyNet::Part(g), AnyNet::Part(h))) => Ok(AnyNet::Part(Partitions(*l).overlay(g, h)?)),
            (AnyModel::Gamma(m), (AnyNet::Gamma(g), AnyNet::Gamma(h))) => Ok(AnyNet::Gamma(m.overlay(g, h)?)),
            (AnyModel::Tensor(a, b), (AnyNet::Pair(g1, g2), AnyNet::Pair(h1, h2))) => {
                Ok(AnyNet::Pair(Box::new(a.overlay(g1, h1)?), Box::new(b.overlay(g2, h2)?)))
            },
        )
    }

    fn act(&self, sigma: &Permutation, g: &AnyNet) -> Result<AnyNet> {
        dispatch!(self, g, g =>
            (AnyModel::Sg, AnyNet::Sg(g)) => Ok(AnyNet::Sg(SimpleGraphs.act(sigma, g)?)),
            (AnyModel::Dg, AnyNet::Dg(g)) => Ok(AnyNet::Dg(DirectedGraphs.act(sigma, g)?)),
            (AnyModel::Mg(o), AnyNet::Mg(g)) => Ok(AnyNet::Mg(Multigraphs(*o).act(sigma, g)?)),
            (AnyModel::Dmg(o), AnyNet::Dmg(g)) => Ok(AnyNet::Dmg(DirectedMultigraphs(*o).act(sigma, g)?)),
            (AnyModel::Hg, AnyNet::Hg(g)) => Ok(AnyNet::Hg(Hypergraphs.act(sigma, g)?)),
            (AnyModel::Part(l), AnyNet::Part(g)) => Ok(AnyNet::Part(Partitions(*l).act(sigma, g)?)),
            (AnyModel::Gamma(m), AnyNet::Gamma(g)) => Ok(AnyNet::Gamma(m.act(sigma, g)?)),
            (AnyModel::Tensor(a, b), AnyNet::Pair(x, y)) => {
                Ok(AnyNet::Pair(Box::new(a.act(sigma, x)?), Box::new(b.act(sigma, y)?)))
            },
        )
    }

    fn djunion(&self, g: &AnyNet, h: &AnyNet) -> Result<AnyNet> {
        let culprit = if self.mismatch_free(g) { h } else { g };
        dispatch!(self, (g, h), culprit =>
            (AnyModel::Sg, (AnyNet::Sg(g), AnyNet::Sg(h))) => Ok(AnyNet::Sg(SimpleGraphs.djunion(g, h)?)),
            (AnyModel::Dg, (AnyNet::Dg(g), AnyNet::Dg(h))) => Ok(AnyNet::Dg(DirectedGraphs.djunion(g, h)?)),
            (AnyModel::Mg(o), (AnyNet::Mg(g), AnyNet::Mg(h))) => Ok(AnyNet::Mg(Multigraphs(*o).djunion(g, h)?)),
            (AnyModel::Dmg(o), (AnyNet::Dmg(g), AnyNet::Dmg(h))) => {
                Ok(AnyNet::Dmg(DirectedMultigraphs(*o).djunion(g, h)?))
            },
            (AnyModel::Hg, (AnyNet::Hg(g), AnyNet::Hg(h))) => Ok(AnyNet::Hg(Hypergraphs.djunion(g, h)?)),
            (AnyModel::Part(l), (AnyNet::Part(g), AnyNet::Part(h))) => Ok(AnyNet::Part(Partitions(*l).djunion(g, h)?)),
            (AnyModel::Gamma(m), (AnyNet::Gamma(g), AnyNet::Gamma(h))) => Ok(AnyNet::Gamma(m.djunion(g, h)?)),
            (AnyModel::Tensor(a, b), (AnyNet::Pair(g1, g2), AnyNet::Pair(h1, h2))) => {
                Ok(AnyNet::Pair(Box::new(a.djunion(g1, h1)?), Box::new(b.djunion(g2, h2)?)))
            },
        )
    }
}

impl Sampler for AnyModel {
    fn types(&self, max_n: usize) -> Vec<usize> {
        (0..=max_n).collect()
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        SimpleGraphs.random_type(max_n, rng)
    }

    fn sample(&self, n: &usize, limits: &Limits, rng: &mut Rng) -> AnyNet {
        match self {
            AnyModel::Sg => AnyNet::Sg(SimpleGraphs.sample(n, limits, rng)),
            AnyModel::Dg => AnyNet::Dg(DirectedGraphs.sample(n, limits, rng)),
            AnyModel::Mg(o) => AnyNet::Mg(Multigraphs(*o).sample(n, limits, rng)),
            AnyModel::Dmg(o) => AnyNet::Dmg(DirectedMultigraphs(*o).sample(n, limits, rng)),
            AnyModel::Hg => AnyNet::Hg(Hypergraphs.sample(n, limits, rng)),
            AnyModel::Part(l) => AnyNet::Part(Partitions(*l).sample(n, limits, rng)),
            AnyModel::Gamma(m) => AnyNet::Gamma(m.sample(n, limits, rng)),
            AnyModel::Tensor(a, b) => {
                let x = a.sample(n, limits, rng);
                AnyNet::Pair(Box::new(x), Box::new(b.sample(n, limits, rng)))
            }
        }
    }

    fn count(&self, n: &usize, limits: &Limits) -> u128 {
        match self {
            AnyModel::Sg => SimpleGraphs.count(n, limits),
            AnyModel::Dg => DirectedGraphs.count(n, limits),
            AnyModel::Mg(o) => Multigraphs(*o).count(n, limits),
            AnyModel::Dmg(o) => DirectedMultigraphs(*o).count(n, limits),
            AnyModel::Hg => Hypergraphs.count(n, limits),
            AnyModel::Part(l) => Partitions(*l).count(n, limits),
            AnyModel::Gamma(m) => m.count(n, limits),
            AnyModel::Tensor(a, b) => a.count(n, limits).saturating_mul(b.count(n, limits)),
        }
    }

    fn enumerate_all(&self, n: &usize, limits: &Limits) -> Vec<AnyNet> {
        match self {
            AnyModel::Sg => SimpleGraphs
                .enumerate_all(n, limits)
                .into_iter()
                .map(AnyNet::Sg)
                .collect(),
            AnyModel::Dg => DirectedGraphs
                .enumerate_all(n, limits)
                .into_iter()
                .map(AnyNet::Dg)
                .collect(),
            AnyModel::Mg(o) => Multigraphs(*o)
                .enumerate_all(n, limits)
                .into_iter()
                .map(AnyNet::Mg)
                .collect(),
            AnyModel::Dmg(o) => DirectedMultigraphs(*o)
                .enumerate_all(n, limits)
                .into_iter()
                .map(AnyNet::Dmg)
                .collect(),
            AnyModel::Hg => Hypergraphs
                .enumerate_all(n, limits)
                .into_iter()
                .map(AnyNet::Hg)
                .collect(),
            AnyModel::Part(l) => Partitions(*l)
                .enumerate_all(n, limits)
                .into_iter()
                .map(AnyNet::Part)
                .collect(),
            AnyModel::Gamma(m) => m
                .enumerate_all(n, limits)
                .into_iter()
                .map(AnyNet::Gamma)
                .collect(),
            AnyModel::Tensor(a, b) => {
                let right = b.enumerate_all(n, limits);
                a.enumerate_all(n, limits)
                    .into_iter()
                    .flat_map(|x| {
                        right
                            .iter()
                            .map(move |y| AnyNet::Pair(Box::new(x.clone()), Box::new(y.clone())))
                    })
                    .collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{all_passed, check_model_laws, CheckConfig};

    #[test]
    fn ids_round_trip() {
        for m in AnyModel::catalog() {
            assert_eq!(AnyModel::parse(&m.id()).unwrap(), m);
        }
        assert!(AnyModel::parse("nosuch").is_err());
        assert!(AnyModel::parse("gamma:bk:x").is_err());
    }

    #[test]
    fn json_forms() {
        let g = AnyNet::Sg(SimpleGraph::new(9, [(3, 6), (1, 2)]).unwrap());
        assert_eq!(
            AnyModel::Sg.to_json(&g).unwrap().to_string(),
            r#"{"edges":[[1,2],[3,6]],"model":"sg","n":9}"#
        );
        let m = AnyModel::parse("gamma:bk:2").unwrap();
        let v: Value = serde_json::from_str(r#"{"model":"gamma:bk:2","n":3,"labels":[[1,2,"2"]]}"#).unwrap();
        let x = m.from_json(&v).unwrap();
        assert_eq!(
            m.to_json(&x).unwrap().to_string(),
            r#"{"labels":[[1,2,"2"]],"model":"gamma:bk:2","n":3}"#
        );
        let p = AnyModel::parse("part-join").unwrap();
        let v = json!({"model": "part-join", "n": 3, "blocks": [[1, 2], [3]]});
        assert_eq!(p.to_json(&p.from_json(&v).unwrap()).unwrap(), v);
        assert_eq!(
            AnyModel::Sg.to_json(&AnyModel::Sg.unit(&2)).unwrap().to_string(),
            r#"{"edges":[],"model":"sg","n":2}"#
        );
        assert!(AnyModel::Sg
            .from_json(&json!({"model": "dg", "n": 1, "edges": []}))
            .is_err());
        assert!(AnyModel::Sg
            .from_json(&json!({"model": "sg", "n": 2, "edges": [[1, 3]]}))
            .is_err());
    }

    #[test]
    fn every_catalog_model_round_trips_through_json() {
        use rand::SeedableRng;
        let mut rng = Rng::seed_from_u64(1);
        for m in AnyModel::catalog() {
            for _ in 0..20 {
                let n = m.random_type(5, &mut rng);
                let g = m.sample(&n, &Limits::default(), &mut rng);
                let text = m.to_json(&g).unwrap().to_string();
                let (back_model, back) = AnyModel::read_json(&serde_json::from_str(&text).unwrap()).unwrap();
                assert_eq!((back_model, back), (m.clone(), g));
            }
        }
    }

    #[test]
    fn dispatch_matches_the_concrete_models() {
        let cfg = CheckConfig {
            samples: 100,
            ..CheckConfig::default()
        };
        assert!(all_passed(&check_model_laws(
            &AnyModel::parse("sg*mg").unwrap(),
            &cfg
        )));
        assert!(AnyModel::Sg
            .overlay(&AnyModel::Dg.unit(&1), &AnyModel::Sg.unit(&1))
            .is_err());
    }
}
