pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod colored;
pub mod error;
pub mod monoid;
pub mod netmodel;
pub mod operad;
pub mod oracle;
pub mod perm;

pub use error::{Error, Result};
pub use perm::Permutation;
