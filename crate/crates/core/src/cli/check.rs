//! Law-check drivers and morphism application behind the `netop` binary.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng as _;
use serde_json::Value;

use super::eval::{AlgebraSpec, Attr};
use crate::algebra::{
    enforce_predicate, AttemptWords, Attributed, AttributedNetwork, BoundedAlgebra, Canonical, DegreeLimited,
    EdgeBound, PlanarPoint, PortedNetwork, PredicateAlgebra,
};
use crate::catalog::{AnyModel, AnyNet};
use crate::error::{Error, Result};
use crate::monoid::{Monoid, MonoidHom};
use crate::netmodel::{
    GammaHom, LabelingToSimple, ModelMorphism, MultOverlay, MultigraphToLabeling, Multigraphs, NetworkModel,
    SimpleGraphs, SimpleToLabeling, SupportMorphism,
};
use crate::operad::NetworkOperad;
use crate::oracle::{
    check_algebra, check_graphic, check_inverse, check_model_laws, check_morphism, check_operad,
    random_point, CheckConfig, GraphicBounds, LawReport, Limits, Rng, Sampler,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// The network-model equations.
    Thm3,
    Operad,
    Algebra,
    Morphism,
    Graphic,
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "thm3" => CheckKind::Thm3,
            "operad" => CheckKind::Operad,
            "algebra" => CheckKind::Algebra,
            "morphism" => CheckKind::Morphism,
            "graphic" => CheckKind::Graphic,
            _ => return Err(Error::Unknown(format!("check kind {s}"))),
        })
    }
}

/// Runs one family of law checks. `model` is ignored by the graphic suite.
pub fn run_check(
    kind: CheckKind,
    model: Option<&AnyModel>,
    algebra: &AlgebraSpec,
    cfg: &CheckConfig,
) -> Result<Vec<LawReport>> {
    if kind == CheckKind::Graphic {
        let bounds = GraphicBounds {
            max_n: cfg.max_n,
            ..GraphicBounds::default()
        };
        return Ok(check_graphic(bounds, cfg));
    }
    let model = model.ok_or_else(|| Error::Unknown("missing --model".into()))?;
    Ok(match kind {
        CheckKind::Thm3 => check_model_laws(model, cfg),
        CheckKind::Operad => check_operad(&NetworkOperad::new(model.clone()), cfg),
        CheckKind::Algebra => check_algebra_spec(model, algebra, cfg)?,
        CheckKind::Morphism => check_morphisms_from(model, cfg)?,
        CheckKind::Graphic => unreachable!(),
    })
}

fn points(n: usize, rng: &mut Rng) -> Vec<PlanarPoint> {
    (0..n).map(|_| random_point(rng)).collect()
}

/// Law suites for an algebra, with elements drawn from inside its
/// constrained subset.
pub fn check_algebra_spec(model: &AnyModel, spec: &AlgebraSpec, cfg: &CheckConfig) -> Result<Vec<LawReport>> {
    spec.check_model(model)?;
    let limits = cfg.limits;
    Ok(match spec {
        AlgebraSpec::Canonical => {
            let gen = |n: &usize, rng: &mut Rng| model.sample(n, &limits, rng);
            check_algebra(&Canonical::new(model.clone()), &gen, cfg)
        }
        AlgebraSpec::Attributes => {
            let alg: Attributed<AnyModel, Attr> = Attributed::new(model.clone());
            let gen = |n: &usize, rng: &mut Rng| AttributedNetwork {
                net: model.sample(n, &limits, rng),
                attrs: points(*n, rng).into_iter().map(Attr::Point).collect(),
            };
            check_algebra(&alg, &gen, cfg)
        }
        AlgebraSpec::Range(range) => {
            let alg = PredicateAlgebra::new(range.clone());
            let gen = |n: &usize, rng: &mut Rng| {
                let raw = AttributedNetwork {
                    net: SimpleGraphs.sample(n, &limits, rng),
                    attrs: points(*n, rng),
                };
                enforce_predicate(range, &raw)
            };
            check_algebra(&alg, &gen, cfg)
        }
        AlgebraSpec::TwoRange(bound) => {
            let alg = BoundedAlgebra::new(bound.clone());
            let gen = |n: &usize, rng: &mut Rng| {
                let attrs = points(*n, rng);
                let net = Multigraphs::SUM
                    .sample(n, &limits, rng)
                    .map_mult(|i, j, k| k.min(bound.bound(&attrs[i - 1], &attrs[j - 1])));
                AttributedNetwork { net, attrs }
            };
            check_algebra(&alg, &gen, cfg)
        }
        AlgebraSpec::Bounded(table) => {
            let alg = BoundedAlgebra::new(table.clone());
            let mut symbols = table.symbols();
            if symbols.is_empty() {
                symbols = vec!["a".into(), "b".into()];
            }
            let gen = |n: &usize, rng: &mut Rng| {
                let attrs: Vec<String> = (0..*n)
                    .map(|_| symbols.choose(rng).expect("non-empty").clone())
                    .collect();
                let net = Multigraphs::SUM
                    .sample(n, &limits, rng)
                    .map_mult(|i, j, k| k.min(table.bound(&attrs[i - 1], &attrs[j - 1])));
                AttributedNetwork { net, attrs }
            };
            check_algebra(&alg, &gen, cfg)
        }
        AlgebraSpec::DegreeLimited => {
            let gen = |n: &usize, rng: &mut Rng| {
                let mut p = PortedNetwork::bare((0..*n).map(|_| rng.gen_range(0..=2)).collect());
                let word = AttemptWords.sample(n, &Limits { max_mult: 4 }, rng);
                p.process(word.attempts()).expect("sampled attempts are in range");
                p
            };
            check_algebra(&DegreeLimited::default(), &gen, cfg)
        }
    })
}

/// The morphism suites registered for a source model.
pub fn check_morphisms_from(model: &AnyModel, cfg: &CheckConfig) -> Result<Vec<LawReport>> {
    Ok(match model {
        AnyModel::Sg => {
            let to = SimpleToLabeling::default();
            let back = LabelingToSimple::new(Monoid::Bool)?;
            let mut out = check_morphism(&to, cfg);
            out.extend(check_inverse(&to, &back, cfg));
            out
        }
        AnyModel::Mg(MultOverlay::Sum) => {
            let mut out = check_morphism(&SupportMorphism::cutoff_one(), cfg);
            out.extend(check_morphism(&MultigraphToLabeling::new(Multigraphs::SUM), cfg));
            out
        }
        AnyModel::Mg(MultOverlay::Max) => check_morphism(&MultigraphToLabeling::new(Multigraphs::MAX), cfg),
        AnyModel::Gamma(g) if *g.monoid() == Monoid::Bool => {
            check_morphism(&LabelingToSimple::new(Monoid::Bool)?, cfg)
        }
        AnyModel::Gamma(g) if *g.monoid() == Monoid::NatPlus => {
            check_morphism(&GammaHom::new(MonoidHom::cutoff(1)), cfg)
                .into_iter()
                .chain(check_morphism(&GammaHom::new(MonoidHom::cutoff(2)), cfg))
                .collect()
        }
        AnyModel::Gamma(g) => match g.monoid() {
            Monoid::Truncated(j) if *j >= 1 => {
                check_morphism(&GammaHom::new(MonoidHom::truncate(*j, 1)?), cfg)
            }
            _ => {
                return Err(Error::Unknown(format!(
                    "no morphism registered for model {}",
                    model.id()
                )))
            }
        },
        _ => {
            return Err(Error::Unknown(format!(
                "no morphism registered for model {}",
                model.id()
            )))
        }
    })
}

/// `Γ(cutoff_k)` on a network read from JSON. Multigraphs under sum are
/// read as labelings over `(ℕ, +)`; for `k = 1` they map to their support.
pub fn apply_cutoff(k: u64, input: &Value) -> Result<Value> {
    let (model, net) = AnyModel::read_json(input)?;
    match (&model, &net) {
        (AnyModel::Mg(MultOverlay::Sum), AnyNet::Mg(g)) if k == 1 => {
            AnyModel::Sg.to_json(&AnyNet::Sg(SupportMorphism::cutoff_one().apply(g)?))
        }
        (AnyModel::Mg(MultOverlay::Sum), AnyNet::Mg(g)) => {
            let labels = MultigraphToLabeling::new(Multigraphs::SUM).apply(g)?;
            cut(MonoidHom::cutoff(k), &AnyNet::Gamma(labels))
        }
        (AnyModel::Gamma(m), g) if *m.monoid() == Monoid::NatPlus => cut(MonoidHom::cutoff(k), g),
        (AnyModel::Gamma(m), g) => match m.monoid() {
            Monoid::Truncated(j) => cut(MonoidHom::truncate(*j, k)?, g),
            _ => Err(cutoff_source(&model)),
        },
        _ => Err(cutoff_source(&model)),
    }
}

fn cutoff_source(model: &AnyModel) -> Error {
    Error::ModelMismatch {
        expected: "mgplus, gamma:nat-plus or gamma:bk:j".into(),
        found: model.id(),
    }
}

fn cut(hom: MonoidHom, g: &AnyNet) -> Result<Value> {
    let AnyNet::Gamma(g) = g else {
        unreachable!("labeling models hold labelings")
    };
    let phi = GammaHom::new(hom);
    let target = AnyModel::Gamma(phi.target().clone());
    target.to_json(&AnyNet::Gamma(phi.apply(g)?))
}
