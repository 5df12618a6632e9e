//! Colored network models: types are words over a color set, and a
//! permutation may only move a vertex onto a position of the same color.

mod models;
mod petri;
mod word;

pub use models::{color_change, ColorChange, Colored, OneColor, PerColor, Pullback, Recolored};
pub use petri::{petri_djunion, petri_overlay, PetriModel, PetriNet};
pub use word::{Color, ColorWord, ColoredPermutation};
