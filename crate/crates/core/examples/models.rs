//! Overlay, disjoint union and relabeling in several network models, and a
//! randomized run of the model laws for each catalog entry.

use netop::catalog::AnyModel;
use netop::netmodel::{
    Lattice, Multigraph, Multigraphs, NetworkModel, Partition, Partitions, SimpleGraph, SimpleGraphs,
};
use netop::oracle::{check_model_laws, CheckConfig};
use netop::Permutation;

fn main() -> netop::Result<()> {
    let path = SimpleGraph::new(3, [(1, 2), (2, 3)])?;
    let chord = SimpleGraph::new(3, [(1, 3), (1, 2)])?;
    let triangle = SimpleGraphs.overlay(&path, &chord)?;
    println!("sg overlay:      {:?}", triangle.edges().collect::<Vec<_>>());
    let rotated = SimpleGraphs.act(&Permutation::from_images(&[2, 3, 1])?, &path)?;
    println!("sg relabeled:    {:?}", rotated.edges().collect::<Vec<_>>());
    let two = SimpleGraphs.djunion(&path, &chord)?;
    println!("sg disjoint:     {:?}", two.edges().collect::<Vec<_>>());

    let a = Multigraph::new(2, [(1, 2, 2)])?;
    let b = Multigraph::new(2, [(1, 2, 3)])?;
    println!(
        "mg overlay:      sum {}, max {}",
        Multigraphs::SUM.overlay(&a, &b)?.multiplicity(1, 2),
        Multigraphs::MAX.overlay(&a, &b)?.multiplicity(1, 2)
    );

    let p = Partition::new(4, [vec![1, 2], vec![3], vec![4]])?;
    let q = Partition::new(4, [vec![1], vec![2, 3], vec![4]])?;
    println!(
        "partition join:  {:?}",
        Partitions(Lattice::Join).overlay(&p, &q)?.blocks()
    );
    println!(
        "partition meet:  {:?}",
        Partitions(Lattice::Meet).overlay(&p, &q)?.blocks()
    );

    let cfg = CheckConfig {
        samples: 200,
        ..CheckConfig::default()
    };
    println!();
    for model in AnyModel::catalog() {
        let reports = check_model_laws(&model, &cfg);
        let failed: Vec<_> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.law.as_str())
            .collect();
        if failed.is_empty() {
            println!("{:<12} all {} laws hold", model.id(), reports.len());
        } else {
            println!("{:<12} fails {}", model.id(), failed.join(", "));
        }
    }
    Ok(())
}
