//! Builds a network from pieces with the term language and evaluates it in
//! the canonical algebra of simple graphs.

use netop::catalog::AnyModel;
use netop::cli::{eval_text, parse_term, serialize, typecheck, AlgebraSpec, Config};

const TERM: &str = "
; a path, a nested composite and an edge side by side, joined through vertex 6
(compose (op (3 3 3 -> 9) id (net sg 9 {3-6, 6-7}))
  (net sg 3 {1-2, 2-3})
  (compose (op (1 2 -> 3) (perm 2 1 3) (net sg 3 {1-3}))
    (net sg 1 {})
    (net sg 2 {1-2}))
  (net sg 3 {2-3}))
";

fn main() -> netop::Result<()> {
    let term = parse_term(TERM)?;
    println!("term:   {term}");
    println!("type:   {}", typecheck(&term)?);

    let cfg = Config {
        model: AnyModel::Sg,
        algebra: AlgebraSpec::Canonical,
    };
    let result = eval_text(TERM, &cfg)?;
    println!("result: {}", serialize(&result)?);

    let broken = "(compose (op (1 1 -> 3) id (net sg 3 {})) (net sg 1 {}) (net sg 1 {}))";
    match eval_text(broken, &cfg) {
        Ok(_) => println!("unexpectedly evaluated {broken}"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
