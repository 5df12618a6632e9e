//! Monoids that parameterize edge-labeled network models, and homomorphisms
//! between them.
//!
//! Elements are `u64` throughout. The Boolean monoid uses `0` for `F` and `1`
//! for `T`; the ℕ-based monoids are bounded by `u64::MAX` and report overflow
//! instead of wrapping.

use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};

pub type Elem = u64;

/// A monoid from the built-in catalog, or a finite table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monoid {
    /// `{F, T}` under inclusive or.
    Bool,
    /// `(ℕ, +)`.
    NatPlus,
    /// `(ℕ, max)`.
    NatMax,
    /// `{0, ..., k}` under `(x + y) min k`.
    Truncated(u64),
    Table(Arc<TableMonoid>),
}

/// A finite monoid given by its multiplication table over `{0, ..., size-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableMonoid {
    name: String,
    unit: Elem,
    table: Vec<Vec<Elem>>,
}

#[derive(Deserialize)]
struct TableFile {
    name: String,
    unit: Elem,
    table: Vec<Vec<Elem>>,
}

impl TableMonoid {
    /// Validates closure, the unit laws and associativity over the whole table.
    pub fn new(name: impl Into<String>, unit: Elem, table: Vec<Vec<Elem>>) -> Result<Self> {
        let name = name.into();
        let size = table.len() as u64;
        let bad = |msg: String| Error::InvalidNetwork(format!("monoid table {name}: {msg}"));
        if unit >= size {
            return Err(bad(format!("unit {unit} outside carrier")));
        }
        for row in &table {
            if row.len() as u64 != size || row.iter().any(|&v| v >= size) {
                return Err(bad("table is not square over its carrier".into()));
            }
        }
        let m = |a: Elem, b: Elem| table[a as usize][b as usize];
        for x in 0..size {
            if m(unit, x) != x || m(x, unit) != x {
                return Err(bad(format!("unit law fails at {x}")));
            }
        }
        for x in 0..size {
            for y in 0..size {
                for z in 0..size {
                    if m(x, m(y, z)) != m(m(x, y), z) {
                        return Err(bad(format!("not associative at ({x},{y},{z})")));
                    }
                }
            }
        }
        Ok(TableMonoid { name, unit, table })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: TableFile = serde_json::from_str(text)?;
        TableMonoid::new(f.name, f.unit, f.table)
    }

    pub fn size(&self) -> u64 {
        self.table.len() as u64
    }
}

impl Monoid {
    /// Parses a catalog identifier: `bool`, `nat-plus`, `nat-max`, `bk:<k>`,
    /// or `table:<path>` for a JSON table file.
    pub fn parse(id: &str) -> Result<Self> {
        match id {
            "bool" => Ok(Monoid::Bool),
            "nat-plus" => Ok(Monoid::NatPlus),
            "nat-max" => Ok(Monoid::NatMax),
            _ => {
                if let Some(k) = id.strip_prefix("bk:") {
                    let k = k.parse().map_err(|_| Error::Unknown(format!("monoid {id}")))?;
                    Ok(Monoid::Truncated(k))
                } else if let Some(path) = id.strip_prefix("table:") {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Unknown(format!("monoid table {path}: {e}")))?;
                    Ok(Monoid::Table(Arc::new(TableMonoid::from_json(&text)?)))
                } else {
                    Err(Error::Unknown(format!("monoid {id}")))
                }
            }
        }
    }

    pub fn id(&self) -> String {
        match self {
            Monoid::Bool => "bool".into(),
            Monoid::NatPlus => "nat-plus".into(),
            Monoid::NatMax => "nat-max".into(),
            Monoid::Truncated(k) => format!("bk:{k}"),
            Monoid::Table(t) => format!("table:{}", t.name),
        }
    }

    pub fn unit(&self) -> Elem {
        match self {
            Monoid::Table(t) => t.unit,
            _ => 0,
        }
    }

    /// Number of elements, or `None` for the ℕ-based carriers.
    pub fn carrier_size(&self) -> Option<u64> {
        match self {
            Monoid::Bool => Some(2),
            Monoid::NatPlus | Monoid::NatMax => None,
            Monoid::Truncated(k) => Some(k + 1),
            Monoid::Table(t) => Some(t.size()),
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.carrier_size().is_none_or(|s| x < s)
    }

    pub fn check(&self, x: Elem) -> Result<Elem> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::NotInCarrier {
                monoid: self.id(),
                element: x.to_string(),
            })
        }
    }

    pub fn combine(&self, x: Elem, y: Elem) -> Result<Elem> {
        self.check(x)?;
        self.check(y)?;
        Ok(match self {
            Monoid::Bool => x | y,
            Monoid::NatPlus => x
                .checked_add(y)
                .ok_or_else(|| Error::Overflow(format!("{x} + {y} in nat-plus")))?,
            Monoid::NatMax => x.max(y),
            // x, y ≤ k so the sum cannot overflow unless k is near u64::MAX
            Monoid::Truncated(k) => x.saturating_add(y).min(*k),
            Monoid::Table(t) => t.table[x as usize][y as usize],
        })
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            Monoid::Table(t) => {
                let s = t.size();
                (0..s).all(|x| {
                    (0..s).all(|y| t.table[x as usize][y as usize] == t.table[y as usize][x as usize])
                })
            }
            _ => true,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            Monoid::Bool | Monoid::NatMax => true,
            Monoid::NatPlus => false,
            Monoid::Truncated(k) => *k == 0,
            Monoid::Table(t) => (0..t.size()).all(|x| t.table[x as usize][x as usize] == x),
        }
    }

    /// Renders an element: `T`/`F` for the Boolean monoid, decimal otherwise.
    pub fn format(&self, x: Elem) -> String {
        match self {
            Monoid::Bool => if x == 1 { "T" } else { "F" }.into(),
            _ => x.to_string(),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let x = match (self, s) {
            (Monoid::Bool, "T" | "true") => 1,
            (Monoid::Bool, "F" | "false") => 0,
            _ => s.parse::<Elem>().map_err(|_| Error::NotInCarrier {
                monoid: self.id(),
                element: s.to_string(),
            })?,
        };
        self.check(x)
    }
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum HomKind {
    Identity,
    /// `x ↦ min(x, k)`.
    Cutoff(u64),
    /// The isomorphisms `𝔹 ≅ B_1` in either direction; both are the identity on `{0, 1}`.
    Relabel,
    /// Applied right to left, like function composition.
    Composite(Vec<MonoidHom>),
}

/// A monoid homomorphism from the built-in catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidHom {
    source: Monoid,
    target: Monoid,
    kind: HomKind,
}

impl MonoidHom {
    pub fn identity(m: Monoid) -> Self {
        MonoidHom {
            source: m.clone(),
            target: m,
            kind: HomKind::Identity,
        }
    }

    /// `cutoff_k : (ℕ,+) → B_k`, `n ↦ min(n, k)`.
    pub fn cutoff(k: u64) -> Self {
        MonoidHom {
            source: Monoid::NatPlus,
            target: Monoid::Truncated(k),
            kind: HomKind::Cutoff(k),
        }
    }

    /// `B_j → B_k`, `x ↦ min(x, k)`; a homomorphism only when `k ≤ j`.
    pub fn truncate(j: u64, k: u64) -> Result<Self> {
        if k > j {
            return Err(Error::Constraint(format!(
                "min(·,{k}) is not a homomorphism bk:{j} → bk:{k}"
            )));
        }
        Ok(MonoidHom {
            source: Monoid::Truncated(j),
            target: Monoid::Truncated(k),
            kind: HomKind::Cutoff(k),
        })
    }

    pub fn bool_to_b1() -> Self {
        MonoidHom {
            source: Monoid::Bool,
            target: Monoid::Truncated(1),
            kind: HomKind::Relabel,
        }
    }

    pub fn b1_to_bool() -> Self {
        MonoidHom {
            source: Monoid::Truncated(1),
            target: Monoid::Bool,
            kind: HomKind::Relabel,
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &MonoidHom) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::ModelMismatch {
                expected: self.source.id(),
                found: first.target.id(),
            });
        }
        Ok(MonoidHom {
            source: first.source.clone(),
            target: self.target.clone(),
            kind: HomKind::Composite(vec![self.clone(), first.clone()]),
        })
    }

    pub fn source(&self) -> &Monoid {
        &self.source
    }

    pub fn target(&self) -> &Monoid {
        &self.target
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.kind, HomKind::Identity)
    }

    pub fn apply(&self, x: Elem) -> Result<Elem> {
        self.source.check(x)?;
        match &self.kind {
            HomKind::Identity | HomKind::Relabel => Ok(x),
            HomKind::Cutoff(k) => Ok(x.min(*k)),
            HomKind::Composite(parts) => parts.iter().rev().try_fold(x, |acc, h| h.apply(acc)),
        }
    }

    pub fn name(&self) -> String {
        match &self.kind {
            HomKind::Identity => format!("id[{}]", self.source),
            HomKind::Cutoff(k) => format!("cutoff{k}[{}]", self.source),
            HomKind::Relabel => format!("relabel[{}→{}]", self.source, self.target),
            HomKind::Composite(parts) => parts.iter().map(|p| p.name()).collect::<Vec<_>>().join("∘"),
        }
    }
}
