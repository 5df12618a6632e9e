//! The equations every network model must satisfy.

use super::sample::{product, random_permutation, Sampler};
use super::{agree, first_failure, within, CheckConfig, LawReport, Suite};
use crate::netmodel::Object;
use crate::perm::Permutation;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Checks overlay, action and disjoint-union equations for `model`.
pub fn check_model_laws<S: Sampler>(model: &S, cfg: &CheckConfig) -> Vec<LawReport> {
    let m = model;
    let limits = cfg.limits;
    let types = m.types(cfg.max_n);
    let count = |t: &S::Obj| m.count(t, &limits);
    let nets = |t: &S::Obj| m.enumerate_all(t, &limits);
    let all_nets = || types.iter().flat_map(&nets).collect::<Vec<_>>();
    let sum = |f: &dyn Fn(&S::Obj) -> u128| types.iter().fold(0u128, |acc, t| acc.saturating_add(f(t)));
    let perms = |t: &S::Obj| Permutation::all(t.len());
    let max_n = cfg.max_n;
    let draw = |rng: &mut super::Rng| {
        let t = m.random_type(max_n, rng);
        m.sample(&t, &limits, rng)
    };

    let mut suite = Suite::new(format!("model[{}]", m.id()), cfg);

    suite.law(
        "overlay-unit",
        |b| within(b, sum(&count), all_nets),
        |rng| draw(rng),
        |g| {
            let e = m.unit(&m.object(g));
            first_failure([
                agree(m.overlay(&e, g), Ok(g.clone())),
                agree(m.overlay(g, &e), Ok(g.clone())),
            ])
        },
    );

    suite.law(
        "overlay-associative",
        |b| {
            within(b, sum(&|t| product([count(t); 3])), || {
                let mut out = Vec::new();
                for t in &types {
                    let all = nets(t);
                    for a in &all {
                        for x in &all {
                            for y in &all {
                                out.push((a.clone(), x.clone(), y.clone()));
                            }
                        }
                    }
                }
                out
            })
        },
        |rng| {
            let t = m.random_type(max_n, rng);
            (
                m.sample(&t, &limits, rng),
                m.sample(&t, &limits, rng),
                m.sample(&t, &limits, rng),
            )
        },
        |(a, x, y)| {
            let lhs = m.overlay(a, x).and_then(|ax| m.overlay(&ax, y));
            let rhs = m.overlay(x, y).and_then(|xy| m.overlay(a, &xy));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "action-distributes-over-overlay",
        |b| {
            within(
                b,
                sum(&|t| product([factorial(t.len()), count(t), count(t)])),
                || {
                    let mut out = Vec::new();
                    for t in &types {
                        let all = nets(t);
                        for s in perms(t) {
                            for a in &all {
                                for x in &all {
                                    out.push((s.clone(), a.clone(), x.clone()));
                                }
                            }
                        }
                    }
                    out
                },
            )
        },
        |rng| {
            let t = m.random_type(max_n, rng);
            let s = random_permutation(t.len(), rng);
            (s, m.sample(&t, &limits, rng), m.sample(&t, &limits, rng))
        },
        |(s, a, x)| {
            let lhs = m.overlay(a, x).and_then(|ax| m.act(s, &ax));
            let rhs = m
                .act(s, a)
                .and_then(|sa| m.act(s, x).and_then(|sx| m.overlay(&sa, &sx)));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "action-fixes-unit",
        |b| {
            within(b, sum(&|t| factorial(t.len())), || {
                types
                    .iter()
                    .flat_map(|t| perms(t).into_iter().map(move |s| (s, t.clone())))
                    .collect()
            })
        },
        |rng| {
            let t = m.random_type(max_n, rng);
            (random_permutation(t.len(), rng), t)
        },
        |(s, t)| agree(m.act(s, &m.unit(t)), t.permuted(s).map(|u| m.unit(&u))),
    );

    suite.law(
        "action-composition",
        |b| {
            within(
                b,
                sum(&|t| product([factorial(t.len()), factorial(t.len()), count(t)])),
                || {
                    let mut out = Vec::new();
                    for t in &types {
                        let all = nets(t);
                        for s1 in perms(t) {
                            for s2 in perms(t) {
                                for g in &all {
                                    out.push((s1.clone(), s2.clone(), g.clone()));
                                }
                            }
                        }
                    }
                    out
                },
            )
        },
        |rng| {
            let t = m.random_type(max_n, rng);
            let (s1, s2) = (random_permutation(t.len(), rng), random_permutation(t.len(), rng));
            (s1, s2, m.sample(&t, &limits, rng))
        },
        |(s1, s2, g)| {
            let lhs = s2.compose(s1).and_then(|s| m.act(&s, g));
            let rhs = m.act(s1, g).and_then(|h| m.act(s2, &h));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "action-identity",
        |b| within(b, sum(&count), all_nets),
        |rng| draw(rng),
        |g| agree(m.act(&Permutation::identity(m.object(g).len()), g), Ok(g.clone())),
    );

    suite.law(
        "interchange",
        |b| {
            let pairs = sum(&|t| product([count(t), count(t)]));
            within(b, product([pairs, pairs]), || {
                let pairs: Vec<_> = types
                    .iter()
                    .flat_map(|t| {
                        let all = nets(t);
                        let mut v = Vec::new();
                        for a in &all {
                            for x in &all {
                                v.push((a.clone(), x.clone()));
                            }
                        }
                        v
                    })
                    .collect();
                let mut out = Vec::new();
                for (g1, g2) in &pairs {
                    for (h1, h2) in &pairs {
                        out.push((g1.clone(), g2.clone(), h1.clone(), h2.clone()));
                    }
                }
                out
            })
        },
        |rng| {
            let s = m.random_type(max_n, rng);
            let t = m.random_type(max_n, rng);
            (
                m.sample(&s, &limits, rng),
                m.sample(&s, &limits, rng),
                m.sample(&t, &limits, rng),
                m.sample(&t, &limits, rng),
            )
        },
        |(g1, g2, h1, h2)| {
            let lhs = m
                .overlay(g1, g2)
                .and_then(|g| m.overlay(h1, h2).and_then(|h| m.djunion(&g, &h)));
            let rhs = m
                .djunion(g1, h1)
                .and_then(|a| m.djunion(g2, h2).and_then(|b| m.overlay(&a, &b)));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "djunion-of-units",
        |b| {
            let n = types.len() as u128;
            within(b, n * n, || {
                let mut out = Vec::new();
                for s in &types {
                    for t in &types {
                        out.push((s.clone(), t.clone()));
                    }
                }
                out
            })
        },
        |rng| (m.random_type(max_n, rng), m.random_type(max_n, rng)),
        |(s, t)| agree(m.djunion(&m.unit(s), &m.unit(t)), Ok(m.unit(&s.concat(t)))),
    );

    suite.law(
        "djunion-equivariant",
        |b| {
            let one = sum(&|t| product([factorial(t.len()), count(t)]));
            within(b, product([one, one]), || {
                let singles: Vec<_> = types
                    .iter()
                    .flat_map(|t| {
                        let all = nets(t);
                        perms(t)
                            .into_iter()
                            .flat_map(move |s| all.clone().into_iter().map(move |g| (s.clone(), g)))
                    })
                    .collect();
                let mut out = Vec::new();
                for (s, g) in &singles {
                    for (t, h) in &singles {
                        out.push((s.clone(), g.clone(), t.clone(), h.clone()));
                    }
                }
                out
            })
        },
        |rng| {
            let a = m.random_type(max_n, rng);
            let b = m.random_type(max_n, rng);
            (
                random_permutation(a.len(), rng),
                m.sample(&a, &limits, rng),
                random_permutation(b.len(), rng),
                m.sample(&b, &limits, rng),
            )
        },
        |(s, g, t, h)| {
            let lhs = m
                .act(s, g)
                .and_then(|sg| m.act(t, h).and_then(|th| m.djunion(&sg, &th)));
            let rhs = m.djunion(g, h).and_then(|gh| m.act(&s.block_sum(t), &gh));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "djunion-associative",
        |b| {
            let total = sum(&count);
            within(b, product([total; 3]), || {
                let all = all_nets();
                let mut out = Vec::new();
                for a in &all {
                    for x in &all {
                        for y in &all {
                            out.push((a.clone(), x.clone(), y.clone()));
                        }
                    }
                }
                out
            })
        },
        |rng| (draw(rng), draw(rng), draw(rng)),
        |(a, x, y)| {
            let lhs = m.djunion(a, x).and_then(|ax| m.djunion(&ax, y));
            let rhs = m.djunion(x, y).and_then(|xy| m.djunion(a, &xy));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "djunion-unit",
        |b| within(b, sum(&count), all_nets),
        |rng| draw(rng),
        |g| {
            let e = m.unit(&S::Obj::empty());
            first_failure([
                agree(m.djunion(&e, g), Ok(g.clone())),
                agree(m.djunion(g, &e), Ok(g.clone())),
            ])
        },
    );

    suite.law(
        "block-swap",
        |b| {
            let total = sum(&count);
            within(b, product([total, total]), || {
                let all = all_nets();
                let mut out = Vec::new();
                for h in &all {
                    for g in &all {
                        out.push((h.clone(), g.clone()));
                    }
                }
                out
            })
        },
        |rng| (draw(rng), draw(rng)),
        |(h, g)| {
            let swap = Permutation::block_swap(m.object(h).len(), m.object(g).len());
            agree(m.djunion(h, g).and_then(|hg| m.act(&swap, &hg)), m.djunion(g, h))
        },
    );

    suite.finish()
}
