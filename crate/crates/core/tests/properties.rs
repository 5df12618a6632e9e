use proptest::prelude::*;
use rand::SeedableRng;

use netop::catalog::{AnyModel, AnyNet};
use netop::cli::{
    deserialize, eval_term, parse_term, serialize, AlgebraSpec, AttrLit, Config, EdgeLit, Element, NetLit,
    OpSpec, Term,
};
use netop::netmodel::{SimpleGraph, SimpleGraphs};
use netop::operad::{NetworkOperad, Op};
use netop::oracle::{random_operation, Limits, Rng, Sampler};
use netop::Permutation;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn perm_pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (0..=max).prop_flat_map(|n| (perm(n), perm(n)))
}

proptest! {
    #[test]
    fn permutations_form_a_group((s, t) in perm_pair(7)) {
        let n = s.degree();
        prop_assert_eq!(s.compose(&s.inverse()).unwrap(), Permutation::identity(n));
        prop_assert_eq!(s.compose(&Permutation::identity(n)).unwrap(), s.clone());
        let st = s.compose(&t).unwrap();
        for i in 1..=n {
            prop_assert_eq!(st.image(i), s.image(t.image(i)));
        }
        prop_assert_eq!(st.inverse(), t.inverse().compose(&s.inverse()).unwrap());
    }

    #[test]
    fn block_sums_compose_blockwise((a, b) in perm_pair(4), (c, d) in perm_pair(4)) {
        let lhs = a.block_sum(&c).compose(&b.block_sum(&d)).unwrap();
        prop_assert_eq!(lhs, a.compose(&b).unwrap().block_sum(&c.compose(&d).unwrap()));
    }

    #[test]
    fn block_induced_keeps_blocks_intact(
        (tau, sizes) in (1usize..=4).prop_flat_map(|k| (perm(k), proptest::collection::vec(0usize..=3, k)))
    ) {
        let big = Permutation::block_induced(&tau, &sizes).unwrap();
        prop_assert_eq!(big.degree(), sizes.iter().sum::<usize>());
        // the source layout lists the blocks in the order τ(1), ..., τ(k)
        let source: Vec<usize> = (1..=sizes.len()).map(|j| sizes[tau.image(j) - 1]).collect();
        let mut start = 0;
        for &len in &source {
            for i in 1..len {
                prop_assert_eq!(big.image(start + i + 1), big.image(start + i) + 1);
            }
            start += len;
        }
        let twice = Permutation::block_induced(&tau.compose(&tau).unwrap(), &sizes).unwrap();
        let inner = Permutation::block_induced(&tau, &source).unwrap();
        prop_assert_eq!(big.compose(&inner).unwrap(), twice);
    }

    #[test]
    fn catalog_json_round_trips(seed in any::<u64>(), pick in 0usize..13, n in 0usize..=6) {
        let models = AnyModel::catalog();
        let m = &models[pick % models.len()];
        let g = m.sample(&n, &Limits::default(), &mut Rng::seed_from_u64(seed));
        let e = Element::Net(m.clone(), g);
        let text = serialize(&e).unwrap();
        prop_assert_eq!(&deserialize(&text).unwrap(), &e);
        prop_assert_eq!(serialize(&deserialize(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn terms_print_and_parse_back(t in term()) {
        let text = t.to_string();
        prop_assert_eq!(parse_term(&text).unwrap(), t);
    }

    #[test]
    fn nested_evaluation_equals_flattened(seed in any::<u64>()) {
        let (nested, flat) = nested_and_flat(seed);
        let cfg = Config { model: AnyModel::Sg, algebra: AlgebraSpec::Canonical };
        let a = eval_term(&nested, &cfg).unwrap();
        let b = eval_term(&flat, &cfg).unwrap();
        prop_assert_eq!(a, b);
    }
}

fn word() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9:*-]{0,6}".prop_filter("reserved", |w| {
        !matches!(w.as_str(), "net" | "compose" | "op" | "id" | "perm" | "at")
    })
}

fn netlit() -> impl Strategy<Value = NetLit> {
    let edge = (
        proptest::collection::vec(1usize..20, 1..4),
        proptest::option::of("[A-Za-z0-9]{1,3}"),
    )
        .prop_map(|(ends, label)| EdgeLit { ends, label });
    let attr = prop_oneof![
        ("-?[0-9]{1,2}(/[1-9])?", "-?[0-9]{1,2}(/[1-9])?").prop_map(|(x, y)| AttrLit::Point(x, y)),
        word().prop_map(AttrLit::Symbol),
    ];
    (
        word(),
        0usize..20,
        proptest::collection::vec(proptest::collection::vec(edge, 0..4), 1..3),
        proptest::option::of(proptest::collection::vec(attr, 0..4)),
    )
        .prop_map(|(model, n, groups, attrs)| NetLit {
            model,
            n,
            groups,
            attrs,
        })
}

fn term() -> impl Strategy<Value = Term> {
    netlit().prop_map(Term::Net).prop_recursive(3, 12, 3, |inner| {
        (
            proptest::collection::vec(0usize..9, 1..4),
            0usize..20,
            proptest::option::of(proptest::collection::vec(1usize..9, 1..5)),
            netlit(),
            proptest::collection::vec(inner, 1..4),
        )
            .prop_map(|(inputs, output, perm, net, children)| Term::Compose {
                op: OpSpec {
                    inputs,
                    output,
                    perm,
                    net,
                },
                children,
            })
    })
}

fn lit(g: &SimpleGraph) -> NetLit {
    NetLit {
        model: "sg".into(),
        n: g.n(),
        groups: vec![g
            .edges()
            .map(|(i, j)| EdgeLit {
                ends: vec![i, j],
                label: None,
            })
            .collect()],
        attrs: None,
    }
}

fn spec(f: &Op<SimpleGraphs>) -> OpSpec {
    OpSpec {
        inputs: f.inputs().to_vec(),
        output: *f.output(),
        perm: Some(f.perm().images()),
        net: lit(f.net()),
    }
}

/// A two-level term and the one-level term obtained by composing its
/// operations first.
fn nested_and_flat(seed: u64) -> (Term, Term) {
    let mut rng = Rng::seed_from_u64(seed);
    let o = NetworkOperad::new(SimpleGraphs);
    let limits = Limits::default();
    let n = SimpleGraphs.random_type(7, &mut rng);
    let f = random_operation(&o, &n, 3, &limits, &mut rng);
    let gs: Vec<_> = f
        .inputs()
        .iter()
        .map(|t| random_operation(&o, t, 3, &limits, &mut rng))
        .collect();
    let leaves: Vec<Vec<SimpleGraph>> = gs
        .iter()
        .map(|g| {
            g.inputs()
                .iter()
                .map(|t| SimpleGraphs.sample(t, &limits, &mut rng))
                .collect()
        })
        .collect();
    let nested = Term::Compose {
        op: spec(&f),
        children: gs
            .iter()
            .zip(&leaves)
            .map(|(g, hs)| Term::Compose {
                op: spec(g),
                children: hs.iter().map(|h| Term::Net(lit(h))).collect(),
            })
            .collect(),
    };
    let flat = Term::Compose {
        op: spec(&o.compose(&f, &gs).unwrap()),
        children: leaves.iter().flatten().map(|h| Term::Net(lit(h))).collect(),
    };
    (nested, flat)
}

#[test]
fn nested_terms_really_nest() {
    let (nested, flat) = nested_and_flat(5);
    let Term::Compose { children, .. } = &nested else {
        panic!()
    };
    assert!(children.iter().all(|c| matches!(c, Term::Compose { .. })));
    let Term::Compose { children, .. } = &flat else {
        panic!()
    };
    assert!(children.iter().all(|c| matches!(c, Term::Net(_))));
    // the flat network is a well-formed element of the model
    let e = eval_term(
        &flat,
        &Config {
            model: AnyModel::Sg,
            algebra: AlgebraSpec::Canonical,
        },
    )
    .unwrap();
    assert!(matches!(e, Element::Net(AnyModel::Sg, AnyNet::Sg(_))));
}
