//! The `netop` command language: terms that assemble networks, their
//! evaluation in an algebra, and the law-check drivers.

mod check;
mod eval;
mod term;

pub use check::{apply_cutoff, check_algebra_spec, check_morphisms_from, run_check, CheckKind};
pub use eval::{
    deserialize, eval_term, eval_text, literal_net, serialize, AlgebraSpec, Attr, Config, Element, TableBound,
};
pub use term::{parse_term, typecheck, AttrLit, EdgeLit, NetLit, OpSpec, Term};
