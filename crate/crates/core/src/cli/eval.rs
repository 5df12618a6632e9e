//! Evaluating terms in an algebra, and the JSON form of the results.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use super::term::{child_path, op_path, typecheck, AttrLit, EdgeLit, NetLit, Term, ROOT};
use crate::algebra::{
    parse_rational, Algebra, Attributed, AttributedNetwork, BoundedAlgebra, Canonical, EdgeBound,
    PlanarPoint, PredicateAlgebra, RangeLimit, TwoRange,
};
use crate::catalog::{AnyModel, AnyNet};
use crate::error::{Error, Result};
use crate::netmodel::{
    DirectedGraph, DirectedMultigraph, EdgeLabeling, Hypergraph, Multigraph, NetworkModel, Partition,
    SimpleGraph,
};
use crate::operad::Profile;
use crate::perm::Permutation;

/// Per-pair edge caps over symbolic attributes: `default` unless the
/// unordered pair is listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableBound {
    default: u64,
    bounds: BTreeMap<(String, String), u64>,
}

#[derive(serde::Deserialize)]
struct TableJson {
    default: u64,
    #[serde(default)]
    bounds: Vec<(String, String, u64)>,
}

impl TableBound {
    pub fn constant(k: u64) -> Self {
        TableBound {
            default: k,
            bounds: BTreeMap::new(),
        }
    }

    /// `{"default": k, "bounds": [["a", "b", k], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TableJson = serde_json::from_str(text)?;
        let mut bounds = BTreeMap::new();
        for (a, b, k) in raw.bounds {
            let key = ordered(a, b);
            if bounds.insert(key.clone(), k).is_some_and(|old| old != k) {
                return Err(Error::Constraint(format!("pair {key:?} bounded twice")));
            }
        }
        Ok(TableBound {
            default: raw.default,
            bounds,
        })
    }

    /// The symbols named in the table.
    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .bounds
            .keys()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn ordered(a: String, b: String) -> (String, String) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl EdgeBound<String> for TableBound {
    fn bound(&self, a: &String, b: &String) -> u64 {
        let key = ordered(a.clone(), b.clone());
        self.bounds.get(&key).copied().unwrap_or(self.default)
    }

    fn describe(&self) -> String {
        if self.bounds.is_empty() {
            format!("k={}", self.default)
        } else {
            format!("table[{} pairs, default {}]", self.bounds.len(), self.default)
        }
    }
}

/// The algebra a term is evaluated in.
#[derive(Clone, Debug)]
pub enum AlgebraSpec {
    Canonical,
    Attributes,
    Range(RangeLimit),
    TwoRange(TwoRange),
    Bounded(TableBound),
    DegreeLimited,
}

impl AlgebraSpec {
    /// Reads an algebra id and its `key=value` parameters.
    pub fn parse(id: &str, params: &[(String, String)]) -> Result<Self> {
        let allowed: &[&str] = match id {
            "canonical" | "attributes" | "degree-limited" => &[],
            "range" => &["L"],
            "two-range" => &["L1", "L2"],
            "bounded" => &["k", "table"],
            _ => return Err(Error::Unknown(format!("algebra {id}"))),
        };
        if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(Error::Unknown(format!("parameter {k} for algebra {id}")));
        }
        let get = |key: &str| {
            params
                .iter()
                .rev()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
        };
        let need = |key: &str| {
            get(key).ok_or_else(|| Error::Constraint(format!("algebra {id} needs --param {key}=...")))
        };
        let nonneg = |key: &str| -> Result<BigRational> {
            let x = parse_rational(need(key)?)?;
            if x < BigRational::zero() {
                return Err(Error::Constraint(format!("{key} must be non-negative")));
            }
            Ok(x)
        };
        Ok(match id {
            "canonical" => AlgebraSpec::Canonical,
            "attributes" => AlgebraSpec::Attributes,
            "degree-limited" => AlgebraSpec::DegreeLimited,
            "range" => AlgebraSpec::Range(RangeLimit::new(nonneg("L")?)?),
            "two-range" => AlgebraSpec::TwoRange(TwoRange::new(nonneg("L1")?, nonneg("L2")?)?),
            _ => match (get("k"), get("table")) {
                (Some(k), None) => AlgebraSpec::Bounded(TableBound::constant(
                    k.parse()
                        .map_err(|_| Error::Constraint(format!("k must be a natural number, got {k}")))?,
                )),
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Unknown(format!("bound table {path}: {e}")))?;
                    AlgebraSpec::Bounded(TableBound::from_json(&text)?)
                }
                _ => {
                    return Err(Error::Constraint(
                        "algebra bounded needs exactly one of k, table".into(),
                    ))
                }
            },
        })
    }

    pub fn id(&self) -> &'static str {
        match self {
            AlgebraSpec::Canonical => "canonical",
            AlgebraSpec::Attributes => "attributes",
            AlgebraSpec::Range(_) => "range",
            AlgebraSpec::TwoRange(_) => "two-range",
            AlgebraSpec::Bounded(_) => "bounded",
            AlgebraSpec::DegreeLimited => "degree-limited",
        }
    }

    /// Rejects models the algebra is not defined over.
    pub fn check_model(&self, model: &AnyModel) -> Result<()> {
        let want = match self {
            AlgebraSpec::Range(_) => "sg",
            AlgebraSpec::TwoRange(_) | AlgebraSpec::Bounded(_) => "mgplus",
            _ => return Ok(()),
        };
        if model.id() != want {
            return Err(Error::ModelMismatch {
                expected: format!("{want} for algebra {}", self.id()),
                found: model.id(),
            });
        }
        Ok(())
    }
}

/// A vertex attribute: a point of the rational plane or a symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Attr {
    Point(PlanarPoint),
    Symbol(String),
}

impl fmt::Display for Attr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Attr::Point(p) => p.fmt(f),
            Attr::Symbol(s) => f.write_str(s),
        }
    }
}

fn rational_json(x: &BigRational) -> Value {
    match (x.is_integer(), i64::try_from(x.numer())) {
        (true, Ok(v)) => json!(v),
        _ => json!(x.to_string()),
    }
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        _ => Err(Error::Json(format!("expected a coordinate, found {v}"))),
    }
}

impl Attr {
    pub fn to_json(&self) -> Value {
        match self {
            Attr::Point(p) => json!([rational_json(&p.x), rational_json(&p.y)]),
            Attr::Symbol(s) => json!(s),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Ok(Attr::Symbol(s.clone())),
            Value::Array(xy) if xy.len() == 2 => Ok(Attr::Point(PlanarPoint::new(
                rational_from_json(&xy[0])?,
                rational_from_json(&xy[1])?,
            ))),
            _ => Err(Error::Json(format!("expected an attribute, found {v}"))),
        }
    }

    fn from_lit(a: &AttrLit) -> Result<Self> {
        match a {
            AttrLit::Point(x, y) => Ok(Attr::Point(PlanarPoint::parse(x, y)?)),
            AttrLit::Symbol(s) => Ok(Attr::Symbol(s.clone())),
        }
    }

    fn into_point(self) -> Result<PlanarPoint> {
        match self {
            Attr::Point(p) => Ok(p),
            Attr::Symbol(s) => Err(Error::Constraint(format!("attribute {s} is not a point"))),
        }
    }

    fn into_symbol(self) -> Result<String> {
        match self {
            Attr::Symbol(s) => Ok(s),
            Attr::Point(p) => Err(Error::Constraint(format!("attribute {p} is not a symbol"))),
        }
    }
}

/// The value of a term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Net(AnyModel, AnyNet),
    Attributed(AnyModel, AnyNet, Vec<Attr>),
}

impl Element {
    pub fn to_json(&self) -> Result<Value> {
        match self {
            Element::Net(m, g) => m.to_json(g),
            Element::Attributed(m, g, attrs) => {
                let mut v = m.to_json(g)?;
                v["attrs"] = Value::Array(attrs.iter().map(Attr::to_json).collect());
                Ok(v)
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let (model, net) = AnyModel::read_json(v)?;
        match v.get("attrs") {
            None => Ok(Element::Net(model, net)),
            Some(Value::Array(raw)) => {
                let attrs = raw.iter().map(Attr::from_json).collect::<Result<Vec<_>>>()?;
                let n = model.object(&net);
                if attrs.len() != n {
                    return Err(Error::ArityMismatch {
                        expected: format!("{n} attributes"),
                        found: attrs.len().to_string(),
                    });
                }
                Ok(Element::Attributed(model, net, attrs))
            }
            Some(other) => Err(Error::Json(format!("\"attrs\" must be an array, found {other}"))),
        }
    }
}

/// Compact JSON with sorted keys.
pub fn serialize(e: &Element) -> Result<String> {
    Ok(serde_json::to_string(&e.to_json()?)?)
}

pub fn deserialize(text: &str) -> Result<Element> {
    Element::from_json(&serde_json::from_str(text)?)
}

/// What a term is evaluated against.
#[derive(Clone, Debug)]
pub struct Config {
    pub model: AnyModel,
    pub algebra: AlgebraSpec,
}

fn edge_error(model: &AnyModel, e: &EdgeLit, why: &str) -> Error {
    Error::InvalidNetwork(format!("edge {e} in a {} literal: {why}", model.id()))
}

fn pair(model: &AnyModel, e: &EdgeLit) -> Result<(usize, usize)> {
    match e.ends[..] {
        [i, j] => Ok((i, j)),
        _ => Err(edge_error(model, e, "expected two endpoints")),
    }
}

fn plain(model: &AnyModel, e: &EdgeLit) -> Result<(usize, usize)> {
    if e.label.is_some() {
        return Err(edge_error(model, e, "labels are not allowed"));
    }
    pair(model, e)
}

fn multiplicity(model: &AnyModel, e: &EdgeLit) -> Result<(usize, usize, u64)> {
    let (i, j) = pair(model, e)?;
    let k = match &e.label {
        None => 1,
        Some(l) => l
            .parse()
            .map_err(|_| edge_error(model, e, "multiplicity must be a natural number"))?,
    };
    Ok((i, j, k))
}

fn factors(model: &AnyModel) -> usize {
    match model {
        AnyModel::Tensor(a, b) => factors(a) + factors(b),
        _ => 1,
    }
}

/// Builds the network written by a literal's edge groups.
pub fn literal_net(model: &AnyModel, lit: &NetLit) -> Result<AnyNet> {
    if lit.model != model.id() {
        return Err(Error::ModelMismatch {
            expected: model.id(),
            found: lit.model.clone(),
        });
    }
    if lit.groups.len() != factors(model) {
        return Err(Error::InvalidNetwork(format!(
            "a {} literal takes {} edge group(s), found {}",
            model.id(),
            factors(model),
            lit.groups.len()
        )));
    }
    build(model, lit.n, &lit.groups)
}

fn build(model: &AnyModel, n: usize, groups: &[Vec<EdgeLit>]) -> Result<AnyNet> {
    let m = model;
    let edges = &groups[0];
    Ok(match model {
        AnyModel::Sg => AnyNet::Sg(SimpleGraph::new(
            n,
            edges.iter().map(|e| plain(m, e)).collect::<Result<Vec<_>>>()?,
        )?),
        AnyModel::Dg => AnyNet::Dg(DirectedGraph::new(
            n,
            edges.iter().map(|e| plain(m, e)).collect::<Result<Vec<_>>>()?,
        )?),
        AnyModel::Mg(_) => AnyNet::Mg(Multigraph::new(
            n,
            edges
                .iter()
                .map(|e| multiplicity(m, e))
                .collect::<Result<Vec<_>>>()?,
        )?),
        AnyModel::Dmg(_) => AnyNet::Dmg(DirectedMultigraph::new(
            n,
            edges
                .iter()
                .map(|e| multiplicity(m, e))
                .collect::<Result<Vec<_>>>()?,
        )?),
        AnyModel::Hg | AnyModel::Part(_) => {
            if let Some(e) = edges.iter().find(|e| e.label.is_some()) {
                return Err(edge_error(m, e, "labels are not allowed"));
            }
            if let AnyModel::Hg = model {
                AnyNet::Hg(Hypergraph::new(n, edges.iter().map(|e| e.ends.clone()))?)
            } else {
                let links = edges.iter().flat_map(|e| e.ends.windows(2).map(|w| (w[0], w[1])));
                let singles = edges.iter().flat_map(|e| e.ends.iter().map(|&v| (v, v)));
                AnyNet::Part(Partition::generated_by(
                    n,
                    links.chain(singles).collect::<Vec<_>>(),
                )?)
            }
        }
        AnyModel::Gamma(gm) => {
            let monoid = gm.monoid();
            let entries = edges
                .iter()
                .map(|e| {
                    let (i, j) = pair(m, e)?;
                    let label = e
                        .label
                        .as_deref()
                        .ok_or_else(|| edge_error(m, e, "a label is required"))?;
                    Ok((i, j, monoid.parse_elem(label)?))
                })
                .collect::<Result<Vec<_>>>()?;
            AnyNet::Gamma(EdgeLabeling::new(n, monoid.clone(), entries)?)
        }
        AnyModel::Tensor(a, b) => {
            let (ga, gb) = groups.split_at(factors(a));
            AnyNet::Pair(Box::new(build(a, n, ga)?), Box::new(build(b, n, gb)?))
        }
    })
}

fn literal_attrs(lit: &NetLit) -> Result<Vec<Attr>> {
    let attrs = lit
        .attrs
        .as_ref()
        .ok_or_else(|| Error::Constraint("this algebra needs vertex attributes: (at ...)".into()))?;
    if attrs.len() != lit.n {
        return Err(Error::ArityMismatch {
            expected: format!("{} attributes", lit.n),
            found: attrs.len().to_string(),
        });
    }
    attrs.iter().map(Attr::from_lit).collect()
}

fn no_attrs(lit: &NetLit) -> Result<()> {
    match lit.attrs {
        Some(_) => Err(Error::Constraint("this literal takes no attributes".into())),
        None => Ok(()),
    }
}

/// Bottom-up evaluation. `leaf` turns a literal into an element and `net`
/// turns an operation's literal into a network of the algebra's model.
fn eval_in<A>(
    alg: &A,
    t: &Term,
    path: &str,
    leaf: &dyn Fn(&NetLit) -> Result<A::Elem>,
    net: &dyn Fn(&NetLit) -> Result<<A::Model as NetworkModel>::Net>,
) -> Result<A::Elem>
where
    A: Algebra,
    A::Model: NetworkModel<Obj = usize>,
{
    match t {
        Term::Net(lit) => leaf(lit).map_err(|e| e.at(path)),
        Term::Compose { op, children } => {
            let items = children
                .iter()
                .enumerate()
                .map(|(i, c)| eval_in(alg, c, &child_path(path, i), leaf, net))
                .collect::<Result<Vec<_>>>()?;
            let here = op_path(path);
            let f = (|| {
                no_attrs(&op.net)?;
                let perm = match &op.perm {
                    None => Permutation::identity(op.output),
                    Some(images) => Permutation::from_images(images)?,
                };
                alg.operad()
                    .make_operation(Profile::new(op.inputs.clone(), op.output), perm, net(&op.net)?)
            })()
            .map_err(|e| e.at(&here))?;
            alg.act(&f, &items).map_err(|e| e.at(path))
        }
    }
}

fn unwrap_sg(g: AnyNet) -> SimpleGraph {
    match g {
        AnyNet::Sg(g) => g,
        _ => unreachable!("model checked before evaluation"),
    }
}

fn unwrap_mg(g: AnyNet) -> Multigraph {
    match g {
        AnyNet::Mg(g) => g,
        _ => unreachable!("model checked before evaluation"),
    }
}

/// Typechecks `t` and evaluates it in the configured algebra.
pub fn eval_term(t: &Term, cfg: &Config) -> Result<Element> {
    typecheck(t)?;
    let model = &cfg.model;
    cfg.algebra.check_model(model)?;
    let net = |lit: &NetLit| literal_net(model, lit);
    let attributed = |lit: &NetLit| -> Result<(AnyNet, Vec<Attr>)> { Ok((net(lit)?, literal_attrs(lit)?)) };
    match &cfg.algebra {
        AlgebraSpec::Canonical => {
            let alg = Canonical::new(model.clone());
            let leaf = |lit: &NetLit| {
                no_attrs(lit)?;
                net(lit)
            };
            Ok(Element::Net(model.clone(), eval_in(&alg, t, ROOT, &leaf, &net)?))
        }
        AlgebraSpec::Attributes => {
            let alg: Attributed<AnyModel, Attr> = Attributed::new(model.clone());
            let leaf = |lit: &NetLit| {
                let (g, attrs) = attributed(lit)?;
                AttributedNetwork::new(model, g, attrs)
            };
            let out = eval_in(&alg, t, ROOT, &leaf, &net)?;
            Ok(Element::Attributed(model.clone(), out.net, out.attrs))
        }
        AlgebraSpec::Range(range) => {
            let alg = PredicateAlgebra::new(range.clone());
            let leaf = |lit: &NetLit| {
                let (g, attrs) = attributed(lit)?;
                let points = attrs.into_iter().map(Attr::into_point).collect::<Result<_>>()?;
                alg.element(unwrap_sg(g), points)
            };
            let sg = |lit: &NetLit| net(lit).map(unwrap_sg);
            let out = eval_in(&alg, t, ROOT, &leaf, &sg)?;
            let attrs = out.attrs.into_iter().map(Attr::Point).collect();
            Ok(Element::Attributed(model.clone(), AnyNet::Sg(out.net), attrs))
        }
        AlgebraSpec::TwoRange(bound) => {
            let alg = BoundedAlgebra::new(bound.clone());
            let leaf = |lit: &NetLit| {
                let (g, attrs) = attributed(lit)?;
                let points = attrs.into_iter().map(Attr::into_point).collect::<Result<_>>()?;
                alg.element(unwrap_mg(g), points)
            };
            let mg = |lit: &NetLit| net(lit).map(unwrap_mg);
            let out = eval_in(&alg, t, ROOT, &leaf, &mg)?;
            let attrs = out.attrs.into_iter().map(Attr::Point).collect();
            Ok(Element::Attributed(model.clone(), AnyNet::Mg(out.net), attrs))
        }
        AlgebraSpec::Bounded(table) => {
            let alg = BoundedAlgebra::new(table.clone());
            let leaf = |lit: &NetLit| {
                let (g, attrs) = attributed(lit)?;
                let symbols = attrs.into_iter().map(Attr::into_symbol).collect::<Result<_>>()?;
                alg.element(unwrap_mg(g), symbols)
            };
            let mg = |lit: &NetLit| net(lit).map(unwrap_mg);
            let out = eval_in(&alg, t, ROOT, &leaf, &mg)?;
            let attrs = out.attrs.into_iter().map(Attr::Symbol).collect();
            Ok(Element::Attributed(model.clone(), AnyNet::Mg(out.net), attrs))
        }
        AlgebraSpec::DegreeLimited => Err(Error::Unknown(
            "algebra degree-limited has no term syntax; use `check algebra`".into(),
        )),
    }
}

/// Parses, typechecks and evaluates.
pub fn eval_text(text: &str, cfg: &Config) -> Result<Element> {
    eval_term(&super::term::parse_term(text)?, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    const COMPOSITE: &str = "(compose (op (3 4 2 -> 9) id (net sg 9 {1-2,3-6})) \
        (net sg 3 {2-3}) (net sg 4 {1-2,2-3,3-4}) (net sg 2 {1-2}))";

    fn cfg(model: &str, algebra: &str, params: &[(&str, &str)]) -> Config {
        let params: Vec<(String, String)> = params
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        Config {
            model: AnyModel::parse(model).unwrap(),
            algebra: AlgebraSpec::parse(algebra, &params).unwrap(),
        }
    }

    #[test]
    fn composite_under_canonical() {
        let e = eval_text(COMPOSITE, &cfg("sg", "canonical", &[])).unwrap();
        assert_eq!(
            serialize(&e).unwrap(),
            r#"{"edges":[[1,2],[2,3],[3,6],[4,5],[5,6],[6,7],[8,9]],"model":"sg","n":9}"#
        );
        let leaf = eval_text("(net sg 3 {2-3})", &cfg("sg", "canonical", &[])).unwrap();
        assert_eq!(
            serialize(&leaf).unwrap(),
            r#"{"edges":[[2,3]],"model":"sg","n":3}"#
        );
    }

    #[test]
    fn range_drops_long_operation_edges() {
        // two unit-distance pairs placed far apart; the bridging edge 2-3 is too long
        let text = "(compose (op (2 2 -> 4) id (net sg 4 {1-2,2-3})) \
            (net sg 2 {1-2} (at (0 0) (1 0))) (net sg 2 {} (at (5 0) (6 0))))";
        let e = eval_text(text, &cfg("sg", "range", &[("L", "1")])).unwrap();
        assert_eq!(
            serialize(&e).unwrap(),
            r#"{"attrs":[[0,0],[1,0],[5,0],[6,0]],"edges":[[1,2]],"model":"sg","n":4}"#
        );
        // an input literal outside A_p names its path
        let bad = text
            .replace("(net sg 2 {} (at (5 0)", "(net sg 2 {1-2} (at (5 0)")
            .replace("(6 0)", "(7 0)");
        match eval_text(&bad, &cfg("sg", "range", &[("L", "1")])) {
            Err(Error::At { path, .. }) => assert_eq!(path, "$.2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn literals_of_every_kind() {
        let c = |m: &str| cfg(m, "canonical", &[]);
        let s = |m: &str, t: &str| serialize(&eval_text(t, &c(m)).unwrap()).unwrap();
        assert_eq!(
            s("mgplus", "(net mgplus 3 {1-2:2,2-3})"),
            r#"{"edges":[[1,2,2],[2,3,1]],"model":"mgplus","n":3}"#
        );
        assert_eq!(
            s("hg", "(net hg 3 {1-2-3,2})"),
            r#"{"edges":[[1,2,3],[2]],"model":"hg","n":3}"#
        );
        assert_eq!(
            s("part-join", "(net part-join 4 {1-3})"),
            r#"{"blocks":[[1,3],[2],[4]],"model":"part-join","n":4}"#
        );
        assert_eq!(
            s("gamma:bool", "(net gamma:bool 2 {1-2:T})"),
            r#"{"labels":[[1,2,"T"]],"model":"gamma:bool","n":2}"#
        );
        assert_eq!(
            s("sg*mg", "(net sg*mg 2 {1-2} {})"),
            r#"{"left":{"edges":[[1,2]],"model":"sg","n":2},"model":"sg*mg","n":2,"right":{"edges":[],"model":"mg","n":2}}"#
        );
        assert!(eval_text("(net sg 2 {1-2:3})", &c("sg")).is_err());
        assert!(eval_text("(net gamma:bool 2 {1-2})", &c("gamma:bool")).is_err());
        assert!(eval_text("(net sg*mg 2 {1-2})", &c("sg*mg")).is_err());
        assert!(matches!(
            eval_text("(net dg 2 {})", &c("sg")),
            Err(Error::At { .. })
        ));
    }

    #[test]
    fn bounded_by_table_and_constant() {
        let text = "(compose (op (1 1 -> 2) id (net mgplus 2 {1-2:5})) \
            (net mgplus 1 {} (at a)) (net mgplus 1 {} (at b)))";
        let e = eval_text(text, &cfg("mgplus", "bounded", &[("k", "2")])).unwrap();
        assert_eq!(
            serialize(&e).unwrap(),
            r#"{"attrs":["a","b"],"edges":[[1,2,2]],"model":"mgplus","n":2}"#
        );
        let table = TableBound::from_json(r#"{"default":0,"bounds":[["b","a",3]]}"#).unwrap();
        assert_eq!(table.bound(&"a".into(), &"b".into()), 3);
        assert_eq!(table.bound(&"a".into(), &"a".into()), 0);
        let c = Config {
            model: AnyModel::parse("mgplus").unwrap(),
            algebra: AlgebraSpec::Bounded(table),
        };
        let e = eval_text(text, &c).unwrap();
        assert_eq!(
            serialize(&e).unwrap(),
            r#"{"attrs":["a","b"],"edges":[[1,2,3]],"model":"mgplus","n":2}"#
        );
    }

    #[test]
    fn algebra_parameters_are_validated() {
        assert!(AlgebraSpec::parse("range", &[]).is_err());
        assert!(AlgebraSpec::parse("range", &[("L".into(), "-1".into())]).is_err());
        assert!(AlgebraSpec::parse("canonical", &[("L".into(), "1".into())]).is_err());
        assert!(AlgebraSpec::parse(
            "bounded",
            &[("k".into(), "1".into()), ("table".into(), "x".into())]
        )
        .is_err());
        assert!(matches!(
            AlgebraSpec::parse("nosuch", &[]),
            Err(Error::Unknown(_))
        ));
        let range = AlgebraSpec::parse("range", &[("L".into(), "3/2".into())]).unwrap();
        assert!(range.check_model(&AnyModel::parse("mg").unwrap()).is_err());
    }

    #[test]
    fn attributed_json_round_trips() {
        let e = eval_text("(net sg 2 {1-2} (at (1/2 -3) x))", &cfg("sg", "attributes", &[])).unwrap();
        let text = serialize(&e).unwrap();
        assert_eq!(
            text,
            r#"{"attrs":[["1/2",-3],"x"],"edges":[[1,2]],"model":"sg","n":2}"#
        );
        assert_eq!(deserialize(&text).unwrap(), e);
    }
}
