//! Checks the operad laws for a few models, then shows a broken composition
//! being caught with a concrete counterexample.

use netop::netmodel::{Hypergraphs, Multigraphs, SimpleGraphs};
use netop::operad::NetworkOperad;
use netop::oracle::mutation::compose_ignoring_permutation;
use netop::oracle::{check_operad, check_operad_with, CheckConfig, LawReport};

fn summary(name: &str, reports: &[LawReport]) {
    println!("{name}");
    for r in reports {
        let verdict = if r.passed { "ok" } else { "FAILED" };
        println!("  {:<28} {:>5} cases  {verdict}", r.law, r.cases);
        if let Some(c) = &r.counterexample {
            for (label, text) in [("case", &c.case), ("lhs", &c.lhs), ("rhs", &c.rhs)] {
                println!("    {label:<4} {}", text.chars().take(100).collect::<String>());
            }
        }
    }
}

fn main() {
    let cfg = CheckConfig {
        max_n: 6,
        samples: 300,
        seed: 1,
        ..CheckConfig::default()
    };
    summary(
        "simple graphs",
        &check_operad(&NetworkOperad::new(SimpleGraphs), &cfg),
    );
    summary(
        "multigraphs",
        &check_operad(&NetworkOperad::new(Multigraphs::SUM), &cfg),
    );
    summary(
        "hypergraphs",
        &check_operad(&NetworkOperad::new(Hypergraphs), &cfg),
    );

    // Composition that forgets to relabel the inner networks.
    summary(
        "simple graphs, composition ignoring the permutation",
        &check_operad_with(
            &NetworkOperad::new(SimpleGraphs),
            &compose_ignoring_permutation,
            &cfg,
        ),
    );
}
