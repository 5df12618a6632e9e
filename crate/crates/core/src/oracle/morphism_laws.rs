//! Laws of morphisms of network models and of the induced operad maps.

use super::operad_laws::random_operation;
use super::sample::{product, random_permutation, Rng, Sampler};
use super::{agree, within, CheckConfig, LawReport, Suite};
use crate::error::Result;
use crate::netmodel::{ModelMorphism, NetworkModel, Object};
use crate::operad::{operad_morphism_apply, NetworkOperad, Op};
use crate::perm::Permutation;

const MAX_ARITY: usize = 3;

/// Compatibility of `φ` with units, overlay, the action and disjoint union,
/// and functoriality of the induced map of operads.
pub fn check_morphism<P>(phi: &P, cfg: &CheckConfig) -> Vec<LawReport>
where
    P: ModelMorphism,
    P::Source: Sampler,
{
    let src = phi.source();
    let tgt = phi.target();
    let limits = cfg.limits;
    let max_n = cfg.max_n;
    let types = src.types(max_n);
    let sum = |f: &dyn Fn(&<P::Source as NetworkModel>::Obj) -> u128| {
        types.iter().fold(0u128, |acc, t| acc.saturating_add(f(t)))
    };
    let count = |t: &_| src.count(t, &limits);
    let nets = |t: &_| src.enumerate_all(t, &limits);
    let draw = |rng: &mut Rng| {
        let t = src.random_type(max_n, rng);
        src.sample(&t, &limits, rng)
    };
    let map_op = |f: &Op<P::Source>| operad_morphism_apply(phi, f);
    let so = NetworkOperad::new(src);
    let to = NetworkOperad::new(tgt);

    let mut suite = Suite::new(format!("morphism[{}]", phi.name()), cfg);

    suite.law(
        "preserves-unit",
        |b| within(b, types.len() as u128, || types.clone()),
        |rng| src.random_type(max_n, rng),
        |t| agree(phi.apply(&src.unit(t)), Ok(tgt.unit(&phi.map_object(t)))),
    );

    suite.law(
        "preserves-overlay",
        |b| {
            within(b, sum(&|t| product([count(t), count(t)])), || {
                let mut out = Vec::new();
                for t in &types {
                    let all = nets(t);
                    for g in &all {
                        for h in &all {
                            out.push((g.clone(), h.clone()));
                        }
                    }
                }
                out
            })
        },
        |rng| {
            let t = src.random_type(max_n, rng);
            (src.sample(&t, &limits, rng), src.sample(&t, &limits, rng))
        },
        |(g, h)| {
            let lhs = src.overlay(g, h).and_then(|gh| phi.apply(&gh));
            let rhs = phi
                .apply(g)
                .and_then(|a| phi.apply(h).and_then(|b| tgt.overlay(&a, &b)));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "preserves-action",
        |b| {
            let fact = |t: &<P::Source as NetworkModel>::Obj| (1..=t.len() as u128).product::<u128>();
            within(b, sum(&|t| product([fact(t), count(t)])), || {
                let mut out = Vec::new();
                for t in &types {
                    let all = nets(t);
                    for s in Permutation::all(t.len()) {
                        for g in &all {
                            out.push((s.clone(), g.clone()));
                        }
                    }
                }
                out
            })
        },
        |rng| {
            let g = draw(rng);
            (random_permutation(src.object(&g).len(), rng), g)
        },
        |(s, g)| {
            let lhs = src.act(s, g).and_then(|sg| phi.apply(&sg));
            let rhs = phi.apply(g).and_then(|pg| tgt.act(s, &pg));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "preserves-djunion",
        |b| {
            let total = sum(&count);
            within(b, product([total, total]), || {
                let all: Vec<_> = types.iter().flat_map(nets).collect();
                let mut out = Vec::new();
                for g in &all {
                    for h in &all {
                        out.push((g.clone(), h.clone()));
                    }
                }
                out
            })
        },
        |rng| (draw(rng), draw(rng)),
        |(g, h)| {
            let lhs = src.djunion(g, h).and_then(|gh| phi.apply(&gh));
            let rhs = phi
                .apply(g)
                .and_then(|a| phi.apply(h).and_then(|b| tgt.djunion(&a, &b)));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "operad-identities",
        |b| within(b, types.len() as u128, || types.clone()),
        |rng| src.random_type(max_n, rng),
        |t| agree(map_op(&so.identity_op(t)), Ok(to.identity_op(&phi.map_object(t)))),
    );

    suite.law(
        "operad-composition",
        |_| None,
        |rng| {
            let t = src.random_type(max_n, rng);
            let f = random_operation(&so, &t, MAX_ARITY, &limits, rng);
            let gs: Vec<_> = f
                .inputs()
                .iter()
                .map(|t| random_operation(&so, t, MAX_ARITY, &limits, rng))
                .collect();
            (f, gs)
        },
        |(f, gs)| {
            let lhs = so.compose(f, gs).and_then(|fg| map_op(&fg));
            let rhs = map_op(f).and_then(|pf| {
                gs.iter()
                    .map(map_op)
                    .collect::<Result<Vec<_>>>()
                    .and_then(|pgs| to.compose(&pf, &pgs))
            });
            agree(lhs, rhs)
        },
    );

    suite.law(
        "operad-right-action",
        |_| None,
        |rng| {
            let t = src.random_type(max_n, rng);
            let f = random_operation(&so, &t, MAX_ARITY, &limits, rng);
            let tau = random_permutation(f.arity(), rng);
            (f, tau)
        },
        |(f, tau)| {
            let lhs = so.right_action(f, tau).and_then(|ft| map_op(&ft));
            let rhs = map_op(f).and_then(|pf| to.right_action(&pf, tau));
            agree(lhs, rhs)
        },
    );

    suite.finish()
}

/// `ψ ∘ φ = 1` on every source network and `φ ∘ ψ = 1` on every target
/// network within the configured bounds.
pub fn check_inverse<P, Q>(phi: &P, psi: &Q, cfg: &CheckConfig) -> Vec<LawReport>
where
    P: ModelMorphism,
    Q: ModelMorphism<Source = P::Target, Target = P::Source>,
    P::Source: Sampler,
    P::Target: Sampler,
{
    let limits = cfg.limits;
    let max_n = cfg.max_n;
    let mut suite = Suite::new(format!("inverse[{}|{}]", phi.name(), psi.name()), cfg);
    let src = phi.source();
    let tgt = phi.target();
    suite.law(
        "left-inverse",
        |b| {
            let ts = src.types(max_n);
            let total = ts
                .iter()
                .fold(0u128, |a, t| a.saturating_add(src.count(t, &limits)));
            within(b, total, || {
                ts.iter().flat_map(|t| src.enumerate_all(t, &limits)).collect()
            })
        },
        |rng| {
            let t = src.random_type(max_n, rng);
            src.sample(&t, &limits, rng)
        },
        |g| agree(phi.apply(g).and_then(|h| psi.apply(&h)), Ok(g.clone())),
    );
    suite.law(
        "right-inverse",
        |b| {
            let ts = tgt.types(max_n);
            let total = ts
                .iter()
                .fold(0u128, |a, t| a.saturating_add(tgt.count(t, &limits)));
            within(b, total, || {
                ts.iter().flat_map(|t| tgt.enumerate_all(t, &limits)).collect()
            })
        },
        |rng| {
            let t = tgt.random_type(max_n, rng);
            tgt.sample(&t, &limits, rng)
        },
        |h| agree(psi.apply(h).and_then(|g| phi.apply(&g)), Ok(h.clone())),
    );
    suite.finish()
}
