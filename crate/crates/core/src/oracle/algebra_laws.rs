//! Laws of operad algebras and of maps between them.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng as _;

use super::operad_laws::random_operation;
use super::sample::{random_permutation, Rng, Sampler};
use super::{agree, CheckConfig, LawReport, Suite};
use crate::algebra::{Algebra, PlanarPoint};
use crate::error::Result;
use crate::netmodel::NetworkModel;
use crate::operad::Op;

type ObjOf<A> = <<A as Algebra>::Model as NetworkModel>::Obj;

/// Draws an element of `A(t)`.
pub type ItemGen<'a, A> = dyn Fn(&ObjOf<A>, &mut Rng) -> <A as Algebra>::Elem + 'a;

const MAX_ARITY: usize = 3;

/// A point with coordinates in `{0, 1/2, ..., 3}`.
pub fn random_point(rng: &mut Rng) -> PlanarPoint {
    let mut coord = || BigRational::new(BigInt::from(rng.gen_range(0..=6)), BigInt::from(2));
    let x = coord();
    PlanarPoint { x, y: coord() }
}

fn items_for<A: Algebra>(gen: &ItemGen<'_, A>, f: &Op<A::Model>, rng: &mut Rng) -> Vec<A::Elem> {
    f.inputs().iter().map(|t| gen(t, rng)).collect()
}

/// Unit, composition, equivariance, and closure of the constrained subset.
pub fn check_algebra<A>(alg: &A, gen: &ItemGen<'_, A>, cfg: &CheckConfig) -> Vec<LawReport>
where
    A: Algebra,
    A::Model: Sampler,
{
    let o = alg.operad();
    let model = o.model();
    let limits = cfg.limits;
    let max_n = cfg.max_n;
    let top = |rng: &mut Rng| {
        let t = model.random_type(max_n, rng);
        random_operation(o, &t, MAX_ARITY, &limits, rng)
    };

    let mut suite = Suite::new(format!("algebra[{}]", alg.name()), cfg);

    suite.law(
        "unit",
        |_| None,
        |rng| gen(&model.random_type(max_n, rng), rng),
        |a| {
            let id = o.identity_op(&alg.object(a));
            agree(alg.act(&id, std::slice::from_ref(a)), Ok(a.clone()))
        },
    );

    suite.law(
        "composition",
        |_| None,
        |rng| {
            let f = top(rng);
            let gs: Vec<_> = f
                .inputs()
                .iter()
                .map(|t| random_operation(o, t, MAX_ARITY, &limits, rng))
                .collect();
            let items: Vec<Vec<A::Elem>> = gs.iter().map(|g| items_for::<A>(gen, g, rng)).collect();
            (f, gs, items)
        },
        |(f, gs, items)| {
            let flat: Vec<A::Elem> = items.iter().flatten().cloned().collect();
            let lhs = o.compose(f, gs).and_then(|fg| alg.act(&fg, &flat));
            let rhs = gs
                .iter()
                .zip(items)
                .map(|(g, xs)| alg.act(g, xs))
                .collect::<Result<Vec<_>>>()
                .and_then(|inner| alg.act(f, &inner));
            agree(lhs, rhs)
        },
    );

    suite.law(
        "equivariance",
        |_| None,
        |rng| {
            let f = top(rng);
            let items = items_for::<A>(gen, &f, rng);
            let tau = random_permutation(f.arity(), rng);
            (f, items, tau)
        },
        |(f, items, tau)| {
            let moved: Vec<A::Elem> = (1..=tau.degree())
                .map(|j| items[tau.image(j) - 1].clone())
                .collect();
            let lhs = o.right_action(f, tau).and_then(|ft| alg.act(&ft, &moved));
            agree(lhs, alg.act(f, items))
        },
    );

    suite.law(
        "closure",
        |_| None,
        |rng| {
            let f = top(rng);
            let items = items_for::<A>(gen, &f, rng);
            (f, items)
        },
        |(f, items)| match alg.act(f, items).and_then(|a| alg.validate(&a).map(|_| a)) {
            Ok(_) => None,
            Err(e) => Some((format!("error: {e}"), "an element of the algebra".into())),
        },
    );

    suite.finish()
}

/// `φ ∘ α(f) = β(f) ∘ φ^k` for a map `φ` from `source` to `target`.
pub fn check_homomorphism<A, B>(
    source: &A,
    target: &B,
    map: &dyn Fn(&A::Elem) -> B::Elem,
    gen: &ItemGen<'_, A>,
    cfg: &CheckConfig,
) -> Vec<LawReport>
where
    A: Algebra,
    A::Model: Sampler,
    B: Algebra<Model = A::Model>,
{
    let o = source.operad();
    let model = o.model();
    let limits = cfg.limits;
    let max_n = cfg.max_n;
    let mut suite = Suite::new(format!("hom[{}->{}]", source.name(), target.name()), cfg);
    suite.law(
        "commutes-with-action",
        |_| None,
        |rng| {
            let t = model.random_type(max_n, rng);
            let f = random_operation(o, &t, MAX_ARITY, &limits, rng);
            let items = items_for::<A>(gen, &f, rng);
            (f, items)
        },
        |(f, items)| {
            let lhs = source.act(f, items).map(|a| map(&a));
            let mapped: Vec<B::Elem> = items.iter().map(map).collect();
            agree(lhs, target.act(f, &mapped))
        },
    );
    suite.finish()
}
