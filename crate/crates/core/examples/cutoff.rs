//! Monoid homomorphisms induce maps between edge-labeled network models.
//! Cutting multiplicities off at 1 sends a multigraph to its support.

use netop::monoid::{Monoid, MonoidHom};
use netop::netmodel::{
    GammaHom, ModelMorphism, Multigraph, MultigraphToLabeling, Multigraphs, SupportMorphism,
};
use netop::oracle::{all_passed, check_morphism, CheckConfig};

fn main() -> netop::Result<()> {
    let g = Multigraph::new(4, [(1, 2, 3), (2, 3, 1), (3, 4, 2)])?;
    let labels = MultigraphToLabeling::new(Multigraphs::SUM).apply(&g)?;
    println!(
        "as labels in {}: {:?}",
        labels.monoid(),
        labels.entries().collect::<Vec<_>>()
    );

    for k in 1..=3 {
        let cut = GammaHom::new(MonoidHom::cutoff(k)).apply(&labels)?;
        let shown: Vec<_> = cut
            .entries()
            .map(|(i, j, x)| format!("{i}-{j}:{}", cut.monoid().format(x)))
            .collect();
        println!("cutoff {k}: {}", shown.join(" "));
    }

    let support = SupportMorphism::cutoff_one().apply(&g)?;
    println!("support: {:?}", support.edges().collect::<Vec<_>>());

    let b2 = Monoid::parse("bk:2")?;
    println!(
        "in {b2}: 1 + 1 = {}, 2 + 1 = {}",
        b2.combine(1, 1)?,
        b2.combine(2, 1)?
    );

    let cfg = CheckConfig {
        samples: 300,
        ..CheckConfig::default()
    };
    let phi = SupportMorphism::cutoff_one();
    let reports = check_morphism(&phi, &cfg);
    println!(
        "{}: {} laws, all passed = {}",
        phi.name(),
        reports.len(),
        all_passed(&reports)
    );
    Ok(())
}
