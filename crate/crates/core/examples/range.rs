//! Vertices placed in the plane can only link within a fixed range. Edges
//! that an operation asks for but the range forbids are dropped.

use netop::catalog::AnyModel;
use netop::cli::{eval_text, serialize, AlgebraSpec, Config};

fn main() -> netop::Result<()> {
    let term = "
(compose (op (2 2 -> 4) id (net sg 4 {1-3, 2-3, 2-4}))
  (net sg 2 {1-2} (at (0 0) (1 0)))
  (net sg 2 {} (at (5/2 0) (4 0))))";
    for limit in ["1", "3/2", "3"] {
        let cfg = Config {
            model: AnyModel::Sg,
            algebra: AlgebraSpec::parse("range", &[("L".into(), limit.into())])?,
        };
        println!("L = {limit:<3} {}", serialize(&eval_text(term, &cfg)?)?);
    }

    let cfg = Config {
        model: AnyModel::Sg,
        algebra: AlgebraSpec::parse("range", &[("L".into(), "1".into())])?,
    };
    match eval_text("(net sg 2 {1-2} (at (0 0) (3 4)))", &cfg) {
        Ok(_) => println!("unexpectedly accepted an out-of-range input"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
