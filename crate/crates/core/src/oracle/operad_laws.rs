//! Laws of a network operad, with composition supplied by the caller so that
//! broken composers can be exercised too.

use rand::Rng as _;

use super::compose::compose_via_category;
use super::sample::{random_permutation, Limits, Rng, Sampler};
use super::{agree, first_failure, within, CheckConfig, LawReport, Suite};
use crate::error::Result;
use crate::netmodel::Object;
use crate::operad::{NetworkOperad, Op, Profile};
use crate::perm::Permutation;

/// A candidate operadic composition.
pub type Composer<M> = dyn Fn(&NetworkOperad<M>, &Op<M>, &[Op<M>]) -> Result<Op<M>>;

const MAX_ARITY: usize = 3;

/// A random operation with the given output, at most `max_arity` inputs,
/// and a random permutation and network.
pub fn random_operation<S: Sampler>(
    operad: &NetworkOperad<S>,
    output: &S::Obj,
    max_arity: usize,
    limits: &Limits,
    rng: &mut Rng,
) -> Op<S> {
    let model = operad.model();
    let n = output.len();
    let sigma = random_permutation(n, rng);
    let source = output.permuted(&sigma.inverse()).expect("degree matches");
    let k = if n == 0 {
        rng.gen_range(0..=max_arity)
    } else {
        rng.gen_range(1..=max_arity.max(1))
    };
    let mut cuts: Vec<usize> = (0..k.saturating_sub(1)).map(|_| rng.gen_range(0..=n)).collect();
    cuts.sort_unstable();
    let bounds: Vec<usize> = std::iter::once(0).chain(cuts).chain(std::iter::once(n)).collect();
    let inputs = if k == 0 {
        Vec::new()
    } else {
        bounds.windows(2).map(|w| source.slice(w[0], w[1])).collect()
    };
    let net = model.sample(output, limits, rng);
    operad
        .make_operation(Profile::new(inputs, output.clone()), sigma, net)
        .expect("random operation is well typed")
}

fn random_family<S: Sampler>(
    operad: &NetworkOperad<S>,
    outputs: &[S::Obj],
    limits: &Limits,
    rng: &mut Rng,
) -> Vec<Op<S>> {
    outputs
        .iter()
        .map(|t| random_operation(operad, t, MAX_ARITY, limits, rng))
        .collect()
}

/// Operad laws with the closed-form composition.
pub fn check_operad<S: Sampler>(operad: &NetworkOperad<S>, cfg: &CheckConfig) -> Vec<LawReport> {
    check_operad_with(
        operad,
        &|o: &NetworkOperad<S>, f: &Op<S>, gs: &[Op<S>]| o.compose(f, gs),
        cfg,
    )
}

/// Associativity, units, the right action, equivariance, and agreement of
/// `compose` with the categorical construction.
pub fn check_operad_with<S: Sampler>(
    operad: &NetworkOperad<S>,
    compose: &Composer<S>,
    cfg: &CheckConfig,
) -> Vec<LawReport> {
    let o = operad;
    let model = o.model();
    let limits = cfg.limits;
    let max_n = cfg.max_n;
    let top = |rng: &mut Rng| {
        let t = model.random_type(max_n, rng);
        random_operation(o, &t, MAX_ARITY, &limits, rng)
    };
    let with_inner = |rng: &mut Rng| {
        let f = top(rng);
        let gs = random_family(o, f.inputs(), &limits, rng);
        (f, gs)
    };

    let mut suite = Suite::new(format!("operad[{}]", model.id()), cfg);

    suite.law(
        "composition-matches-category",
        |_| None,
        with_inner,
        |(f, gs)| agree(compose(o, f, gs), compose_via_category(o, f, gs)),
    );

    suite.law(
        "associativity",
        |_| None,
        |rng| {
            let (f, gs) = with_inner(rng);
            let hs: Vec<Vec<Op<S>>> = gs
                .iter()
                .map(|g| random_family(o, g.inputs(), &limits, rng))
                .collect();
            (f, gs, hs)
        },
        |(f, gs, hs)| {
            let flat: Vec<Op<S>> = hs.iter().flatten().cloned().collect();
            let lhs = compose(o, f, gs).and_then(|fg| compose(o, &fg, &flat));
            let rhs = gs
                .iter()
                .zip(hs)
                .map(|(g, h)| compose(o, g, h))
                .collect::<Result<Vec<_>>>()
                .and_then(|inner| compose(o, f, &inner));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "units",
        |_| None,
        top,
        |f| {
            let left = compose(o, &o.identity_op(f.output()), std::slice::from_ref(f));
            let ids: Vec<Op<S>> = f.inputs().iter().map(|t| o.identity_op(t)).collect();
            let right = compose(o, f, &ids);
            first_failure([agree(left, Ok(f.clone())), agree(right, Ok(f.clone()))])
        },
    );

    suite.law(
        "right-action",
        |budget| small_action_cases(o, budget),
        |rng| {
            let f = top(rng);
            let k = f.arity();
            (f, random_permutation(k, rng), random_permutation(k, rng))
        },
        |(f, t1, t2)| {
            let identity = agree(
                o.right_action(f, &Permutation::identity(f.arity())),
                Ok(f.clone()),
            );
            let lhs = o.right_action(f, t1).and_then(|g| o.right_action(&g, t2));
            let rhs = t1.compose(t2).and_then(|t| o.right_action(f, &t));
            first_failure([identity, agree(lhs, rhs)])
        },
    );

    suite.law(
        "equivariance",
        |_| None,
        |rng| {
            let (f, gs) = with_inner(rng);
            let tau = random_permutation(f.arity(), rng);
            (f, gs, tau)
        },
        |(f, gs, tau)| {
            let moved: Vec<Op<S>> = (1..=tau.degree()).map(|j| gs[tau.image(j) - 1].clone()).collect();
            let lhs = o.right_action(f, tau).and_then(|ft| compose(o, &ft, &moved));
            let arities: Vec<usize> = gs.iter().map(|g| g.arity()).collect();
            let rhs = Permutation::block_induced(tau, &arities)
                .and_then(|hat| compose(o, f, gs).and_then(|fg| o.right_action(&fg, &hat)));
            agree(lhs, rhs)
        },
    );

    suite.finish()
}

/// Every profile of at most three inputs of size at most two, under the
/// identity and the reversal, with every pair of reorderings.
#[allow(clippy::type_complexity)]
fn small_action_cases<S: Sampler>(
    o: &NetworkOperad<S>,
    budget: u128,
) -> Option<Vec<(Op<S>, Permutation, Permutation)>> {
    let model = o.model();
    let pieces = model.types(2);
    let mut profiles: Vec<Vec<S::Obj>> = vec![Vec::new()];
    let mut layer: Vec<Vec<S::Obj>> = vec![Vec::new()];
    for _ in 0..MAX_ARITY {
        layer = layer
            .iter()
            .flat_map(|p| {
                pieces.iter().map(move |t| {
                    let mut q = p.clone();
                    q.push(t.clone());
                    q
                })
            })
            .collect();
        profiles.extend(layer.iter().cloned());
    }
    let count = profiles
        .iter()
        .map(|p| {
            let k: u128 = (1..=p.len() as u128).product();
            2 * k * k
        })
        .sum();
    within(budget, count, || {
        let mut out = Vec::new();
        for inputs in profiles {
            let source = S::Obj::concat_all(&inputs);
            let n = source.len();
            let reversal = Permutation::from_images(&(1..=n).rev().collect::<Vec<_>>()).expect("bijection");
            for sigma in [Permutation::identity(n), reversal] {
                let output = source.permuted(&sigma).expect("degree matches");
                let f = o
                    .make_operation(
                        Profile::new(inputs.clone(), output.clone()),
                        sigma,
                        model.unit(&output),
                    )
                    .expect("well typed");
                for t1 in Permutation::all(inputs.len()) {
                    for t2 in Permutation::all(inputs.len()) {
                        out.push((f.clone(), t1.clone(), t2));
                    }
                }
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::PetriModel;
    use crate::netmodel::{Multigraphs, SimpleGraphs};
    use crate::oracle::{all_passed, Mode};
    use rand::SeedableRng;

    #[test]
    fn random_operations_are_well_typed() {
        let o = NetworkOperad::new(PetriModel::default());
        let mut rng = Rng::seed_from_u64(3);
        for _ in 0..200 {
            let t = o.model().random_type(5, &mut rng);
            let f = random_operation(&o, &t, 3, &Limits::default(), &mut rng);
            assert_eq!(f.output(), &t);
            assert_eq!(S0::concat_all(f.inputs()).permuted(f.perm()).unwrap(), t);
        }
        type S0 = crate::colored::ColorWord;
    }

    #[test]
    fn simple_and_multigraph_operads() {
        let cfg = CheckConfig {
            max_n: 7,
            samples: 300,
            exhaustive: true,
            limits: Limits { max_mult: 2 },
            ..CheckConfig::default()
        };
        for reports in [
            check_operad(&NetworkOperad::new(SimpleGraphs), &cfg),
            check_operad(&NetworkOperad::new(Multigraphs::SUM), &cfg),
        ] {
            assert!(all_passed(&reports), "{reports:#?}");
            let action = reports.iter().find(|r| r.law == "right-action").unwrap();
            assert_eq!(action.mode, Mode::Exhaustive);
        }
    }

    #[test]
    fn colored_operad() {
        let cfg = CheckConfig {
            samples: 200,
            ..CheckConfig::default()
        };
        let reports = check_operad(&NetworkOperad::new(PetriModel::default()), &cfg);
        assert!(all_passed(&reports), "{reports:#?}");
    }
}
