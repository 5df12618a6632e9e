//! The acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::SeedableRng;

use netop::algebra::{AttributedNetwork, BoundedAlgebra, EdgeBound, TwoRange};
use netop::catalog::AnyModel;
use netop::cli::{check_algebra_spec, deserialize, eval_text, parse_term, serialize, AlgebraSpec, Config};
use netop::colored::PetriModel;
use netop::monoid::Monoid;
use netop::netmodel::{
    LabelingToSimple, ModelMorphism, Multigraphs, NetworkModel, SimpleGraphs, SimpleToLabeling,
    SupportMorphism,
};
use netop::operad::NetworkOperad;
use netop::oracle::mutation::{compose_ignoring_permutation, LossySimpleGraphs, Unclamped};
use netop::oracle::{
    check_algebra, check_graphic, check_inverse, check_model_laws, check_morphism, check_operad,
    check_operad_with, random_point, CheckConfig, GraphicBounds, LawReport, Limits, Mode, Rng, Sampler,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn failures(reports: &[LawReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| {
            let case = r.counterexample.as_ref().map_or("?", |c| c.case.as_str());
            format!("{}/{} at {case}", r.suite, r.law)
        })
        .collect()
}

fn require_all(reports: &[LawReport], min_cases: u64) -> Result<u64, String> {
    let bad = failures(reports);
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    if let Some(r) = reports
        .iter()
        .find(|r| r.mode == Mode::Randomized && r.cases < min_cases)
    {
        return Err(format!("{}/{} ran only {} cases", r.suite, r.law, r.cases));
    }
    Ok(reports.iter().map(|r| r.cases).sum())
}

fn worked_composite() -> Outcome {
    let text = std::fs::read_to_string(data("composite.net")).map_err(|e| e.to_string())?;
    let golden = std::fs::read_to_string(data("composite.json")).map_err(|e| e.to_string())?;
    let cfg = Config {
        model: AnyModel::Sg,
        algebra: AlgebraSpec::Canonical,
    };
    let start = Instant::now();
    let out = eval_text(&text, &cfg)
        .and_then(|e| serialize(&e))
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    if format!("{out}\n") != golden {
        return Err(format!("got {out}"));
    }
    if took >= Duration::from_millis(100) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("golden JSON matched in {took:?}"))
}

fn model_equations() -> Outcome {
    let exhaustive = CheckConfig {
        max_n: 3,
        exhaustive: true,
        ..CheckConfig::default()
    };
    let sampled = CheckConfig {
        max_n: 6,
        samples: 1000,
        seed: 1,
        limits: Limits { max_mult: 3 },
        ..CheckConfig::default()
    };
    let mut bad = Vec::new();
    let mut cases = 0;
    for m in AnyModel::catalog() {
        let reports = if m == AnyModel::Sg {
            let r = check_model_laws(&m, &exhaustive);
            if r.iter().any(|r| r.mode != Mode::Exhaustive) {
                bad.push("sg was not enumerated".to_string());
            }
            r
        } else {
            check_model_laws(&m, &sampled)
        };
        if reports.len() != 12 {
            bad.push(format!("{}: {} equations", m.id(), reports.len()));
        }
        match require_all(&reports, 1000) {
            Ok(n) => cases += n,
            Err(e) => bad.push(e),
        }
    }
    if bad.is_empty() {
        Ok(format!(
            "{} models, 12 equations each, {cases} cases",
            AnyModel::catalog().len()
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn operad_laws() -> Outcome {
    let cfg = CheckConfig {
        max_n: 7,
        samples: 1000,
        seed: 2,
        ..CheckConfig::default()
    };
    let mut cases = 0;
    for id in ["sg", "dg", "mgplus", "hg", "part-join", "gamma:bk:2", "sg*mg"] {
        let m = AnyModel::parse(id).map_err(|e| e.to_string())?;
        cases += require_all(&check_operad(&NetworkOperad::new(m), &cfg), 1000)?;
    }
    let petri = CheckConfig { max_n: 5, ..cfg };
    cases += require_all(
        &check_operad(&NetworkOperad::new(PetriModel::default()), &petri),
        1000,
    )?;
    Ok(format!("8 operads, {cases} cases"))
}

fn labelings_are_graphs() -> Outcome {
    let cfg = CheckConfig {
        max_n: 4,
        exhaustive: true,
        ..CheckConfig::default()
    };
    let count = SimpleGraphs.count(&4, &cfg.limits);
    if count != 64 {
        return Err(format!("{count} graphs on 4 vertices"));
    }
    let to = SimpleToLabeling::default();
    let back = LabelingToSimple::new(Monoid::Bool).map_err(|e| e.to_string())?;
    let mut reports = check_morphism(&to, &cfg);
    reports.extend(check_inverse(&to, &back, &cfg));
    reports.extend(check_morphism(&back, &cfg));
    if let Some(r) = reports
        .iter()
        .find(|r| r.mode != Mode::Exhaustive && !r.law.starts_with("operad"))
    {
        return Err(format!("{} was sampled", r.law));
    }
    Ok(format!("{} cases", require_all(&reports, 0)?))
}

fn cutoff_morphism() -> Outcome {
    let cfg = CheckConfig {
        max_n: 6,
        samples: 500,
        seed: 5,
        ..CheckConfig::default()
    };
    let phi = SupportMorphism::cutoff_one();
    let reports = check_morphism(&phi, &cfg);
    for law in ["operad-identities", "operad-composition"] {
        if !reports.iter().any(|r| r.law == law && r.cases >= 500) {
            return Err(format!("{law} missing or under 500 cases"));
        }
    }
    let cases = require_all(&reports, 500)?;
    let mut rng = Rng::seed_from_u64(5);
    for _ in 0..500 {
        let n = Multigraphs::SUM.random_type(6, &mut rng);
        let g = Multigraphs::SUM.sample(&n, &cfg.limits, &mut rng);
        let image = phi.apply(&g).map_err(|e| e.to_string())?;
        if image != g.support() {
            return Err(format!("{g:?} maps to {image:?}"));
        }
    }
    Ok(format!("{cases} cases, supports agree on 500 multigraphs"))
}

fn algebra_laws() -> Outcome {
    let cfg = CheckConfig {
        samples: 500,
        seed: 6,
        ..CheckConfig::default()
    };
    let param = |pairs: &[(&str, &str)]| -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    };
    let sg = AnyModel::Sg;
    let mgplus = AnyModel::parse("mgplus").map_err(|e| e.to_string())?;
    let suites = [
        (&sg, "canonical", param(&[])),
        (&mgplus, "canonical", param(&[])),
        (&sg, "attributes", param(&[])),
        (&sg, "range", param(&[("L", "3/2")])),
        (&mgplus, "two-range", param(&[("L1", "2"), ("L2", "1")])),
        (&sg, "degree-limited", param(&[])),
    ];
    let mut cases = 0;
    for (model, id, params) in suites {
        let spec = AlgebraSpec::parse(id, &params).map_err(|e| e.to_string())?;
        let reports = check_algebra_spec(model, &spec, &cfg).map_err(|e| e.to_string())?;
        for law in ["unit", "composition", "closure"] {
            if !reports.iter().any(|r| r.law == law) {
                return Err(format!("{id}: no {law} law"));
            }
        }
        cases += require_all(&reports, 500)?;
    }
    Ok(format!("6 algebras, {cases} cases"))
}

fn graphic_action() -> Outcome {
    let cfg = CheckConfig {
        exhaustive: true,
        budget: u128::MAX,
        ..CheckConfig::default()
    };
    let bounds = GraphicBounds::default();
    if (bounds.max_n, bounds.max_word, bounds.max_ports) != (4, 4, 2) {
        return Err(format!("bounds are {bounds:?}"));
    }
    let reports = check_graphic(bounds, &cfg);
    if reports.iter().any(|r| r.mode != Mode::Exhaustive) {
        return Err("not enumerated".into());
    }
    Ok(format!("{} cases", require_all(&reports, 0)?))
}

fn mutants_are_caught() -> Outcome {
    let cfg = CheckConfig {
        max_n: 3,
        exhaustive: true,
        ..CheckConfig::default()
    };
    let caught = |reports: &[LawReport], law: &str| -> Result<String, String> {
        let r = reports
            .iter()
            .find(|r| r.law == law)
            .ok_or_else(|| format!("no {law} law"))?;
        match (&r.counterexample, r.passed) {
            (Some(c), false) => {
                let case: String = c.case.chars().take(60).collect();
                Ok(format!("{law} at {case}..."))
            }
            _ => Err(format!("{law} missed the mutant")),
        }
    };
    let lossy = caught(&check_model_laws(&LossySimpleGraphs, &cfg), "overlay-associative")?;

    let sampled = CheckConfig {
        max_n: 6,
        samples: 1000,
        seed: 8,
        ..CheckConfig::default()
    };
    let o = NetworkOperad::new(SimpleGraphs);
    let dropped = caught(
        &check_operad_with(&o, &compose_ignoring_permutation, &sampled),
        "composition-matches-category",
    )?;

    let q = |n: i64| BigRational::from_integer(n.into());
    let bound = TwoRange::new(q(2), q(1)).map_err(|e| e.to_string())?;
    let alg = Unclamped(BoundedAlgebra::new(bound.clone()));
    let gen = |n: &usize, rng: &mut Rng| {
        let attrs: Vec<_> = (0..*n).map(|_| random_point(rng)).collect();
        let net = Multigraphs::SUM
            .sample(n, &sampled.limits, rng)
            .map_mult(|i, j, k| k.min(bound.bound(&attrs[i - 1], &attrs[j - 1])));
        AttributedNetwork { net, attrs }
    };
    let unclamped = caught(&check_algebra(&alg, &gen, &sampled), "closure")?;
    Ok(format!("{lossy}; {dropped}; {unclamped}"))
}

fn command_line() -> Outcome {
    let netop = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_netop"))
            .args(args)
            .env_remove("NETOP_SEED")
            .output()
            .map_err(|e| e.to_string())
    };
    let term = data("composite.net");
    let out = netop(&[
        "eval",
        "--model",
        "sg",
        "--algebra",
        "canonical",
        term.to_str().unwrap(),
    ])?;
    let golden = std::fs::read(data("composite.json")).map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) || out.stdout != golden {
        return Err("eval output differs from the golden file".into());
    }

    let text = std::fs::read_to_string(&term).map_err(|e| e.to_string())?;
    let t = parse_term(&text).map_err(|e| e.to_string())?;
    if parse_term(&t.to_string()).map_err(|e| e.to_string())? != t {
        return Err("term does not survive printing".into());
    }
    let mut rng = Rng::seed_from_u64(9);
    for m in AnyModel::catalog() {
        for n in 0..=5 {
            let e = netop::cli::Element::Net(m.clone(), m.sample(&n, &Limits::default(), &mut rng));
            let s = serialize(&e).map_err(|e| e.to_string())?;
            if deserialize(&s).map_err(|e| e.to_string())? != e {
                return Err(format!("{s} does not round-trip"));
            }
        }
    }

    let expect = |args: &[&str], code: i32| -> Result<Vec<u8>, String> {
        let out = netop(args)?;
        match out.status.code() {
            Some(c) if c == code => Ok(out.stdout),
            other => Err(format!("{args:?} exited {other:?}, expected {code}")),
        }
    };
    expect(
        &["check", "thm3", "--model", "sg", "--max-n", "3", "--exhaustive"],
        0,
    )?;
    let first = expect(
        &[
            "check", "operad", "--model", "mgplus", "--budget", "6", "--seed", "7",
        ],
        0,
    )?;
    let second = expect(
        &[
            "check", "operad", "--model", "mgplus", "--budget", "6", "--seed", "7",
        ],
        0,
    )?;
    if first != second {
        return Err("same seed gave different reports".into());
    }
    expect(&["check", "thm3", "--model", "nosuch"], 2)?;
    expect(&["check", "thm3", "--model", "part-meet", "--samples", "50"], 1)?;
    Ok("round trips, exit codes 0/1/2, reproducible reports".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 worked composite under the canonical algebra", worked_composite),
        ("2 network-model equations across the catalog", model_equations),
        ("3 operad laws and closed-form composition", operad_laws),
        (
            "4 edge labelings over booleans are simple graphs",
            labelings_are_graphs,
        ),
        ("5 cutoff morphism to supports", cutoff_morphism),
        ("6 algebra laws and safety invariants", algebra_laws),
        ("7 graphic action of attempt words", graphic_action),
        ("8 law breakers are detected", mutants_are_caught),
        ("9 command line", command_line),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name} ({took:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name} ({took:.2?}): {why}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
