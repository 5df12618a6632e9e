//! Independent checkers for the laws of network models, network operads,
//! their algebras and morphisms.
//!
//! Every checker returns one [`LawReport`] per law. Small instances are
//! enumerated exhaustively when [`CheckConfig::exhaustive`] is set and the
//! case count fits in [`CheckConfig::budget`]; otherwise cases are drawn from
//! a seeded generator, so the same configuration always yields the same
//! reports.

mod algebra_laws;
mod compose;
mod graphic;
mod model_laws;
mod morphism_laws;
pub mod mutation;
mod operad_laws;
mod sample;

use std::fmt::Debug;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use serde::Serialize;

pub use algebra_laws::{check_algebra, check_homomorphism, random_point, ItemGen};
pub use compose::compose_via_category;
pub use graphic::{check_graphic, GraphicBounds};
pub use model_laws::check_model_laws;
pub use morphism_laws::{check_inverse, check_morphism};
pub use operad_laws::{check_operad, check_operad_with, random_operation, Composer};
pub use sample::{enumerate, random_permutation, Limits, Rng, Sampler};

use crate::error::Result;

/// How a law's cases were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Randomized,
}

/// The first failing case of a law, rendered for humans.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// The outcome of checking one law.
#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub suite: String,
    pub law: String,
    pub mode: Mode,
    pub seed: u64,
    pub cases: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for LawReport {
    /// Ignores timing.
    fn eq(&self, other: &Self) -> bool {
        (
            &self.suite,
            &self.law,
            self.mode,
            self.seed,
            self.cases,
            self.passed,
            &self.counterexample,
        ) == (
            &other.suite,
            &other.law,
            other.mode,
            other.seed,
            other.cases,
            other.passed,
            &other.counterexample,
        )
    }
}

impl LawReport {
    /// One JSON object with sorted keys and no timing, so reports from the
    /// same seed are byte-identical.
    pub fn to_json_line(&self) -> String {
        serde_json::to_value(self)
            .and_then(|v| serde_json::to_string(&v))
            .expect("reports serialize")
    }
}

pub fn all_passed(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Knobs shared by every checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    /// Largest type size drawn or enumerated.
    pub max_n: usize,
    /// Cases per law in randomized mode.
    pub samples: u64,
    pub seed: u64,
    /// Enumerate when the case count fits in `budget`.
    pub exhaustive: bool,
    pub budget: u128,
    pub limits: Limits,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_n: 4,
            samples: 1000,
            seed: 0,
            exhaustive: false,
            budget: 1_000_000,
            limits: Limits::default(),
        }
    }
}

/// `None` when both sides succeed and agree, otherwise the two sides.
pub(crate) fn agree<T: PartialEq + Debug>(lhs: Result<T>, rhs: Result<T>) -> Option<(String, String)> {
    let show = |r: &Result<T>| match r {
        Ok(v) => format!("{v:?}"),
        Err(e) => format!("error: {e}"),
    };
    match (&lhs, &rhs) {
        (Ok(a), Ok(b)) if a == b => None,
        _ => Some((show(&lhs), show(&rhs))),
    }
}

/// Combines the verdicts of several equations checked on one case.
pub(crate) fn first_failure(
    verdicts: impl IntoIterator<Item = Option<(String, String)>>,
) -> Option<(String, String)> {
    verdicts.into_iter().flatten().next()
}

/// Runs laws one after another, giving each its own random stream.
pub(crate) struct Suite<'a> {
    name: String,
    cfg: &'a CheckConfig,
    stream: u64,
    reports: Vec<LawReport>,
}

impl<'a> Suite<'a> {
    pub(crate) fn new(name: impl Into<String>, cfg: &'a CheckConfig) -> Self {
        Suite {
            name: name.into(),
            cfg,
            stream: 0,
            reports: Vec::new(),
        }
    }

    /// Checks one law. `exhaustive` is consulted only in exhaustive mode and
    /// returns `None` when the cases would not fit in the budget; `generate`
    /// draws a random case; `check` returns the disagreeing sides, if any.
    pub(crate) fn law<C: Debug>(
        &mut self,
        law: &str,
        exhaustive: impl FnOnce(u128) -> Option<Vec<C>>,
        mut generate: impl FnMut(&mut Rng) -> C,
        mut check: impl FnMut(&C) -> Option<(String, String)>,
    ) {
        let start = Instant::now();
        self.stream += 1;
        let listed = if self.cfg.exhaustive {
            exhaustive(self.cfg.budget)
        } else {
            None
        };
        let mut cases = 0u64;
        let mut counterexample = None;
        let mut run = |c: C| {
            cases += 1;
            match check(&c) {
                None => true,
                Some((lhs, rhs)) => {
                    counterexample = Some(Counterexample {
                        case: format!("{c:?}"),
                        lhs,
                        rhs,
                    });
                    false
                }
            }
        };
        let mode = match listed {
            Some(all) => {
                for c in all {
                    if !run(c) {
                        break;
                    }
                }
                Mode::Exhaustive
            }
            None => {
                let mut rng = Rng::seed_from_u64(self.cfg.seed);
                rng.set_stream(self.stream);
                for _ in 0..self.cfg.samples {
                    if !run(generate(&mut rng)) {
                        break;
                    }
                }
                Mode::Randomized
            }
        };
        self.reports.push(LawReport {
            suite: self.name.clone(),
            law: law.to_string(),
            mode,
            seed: self.cfg.seed,
            cases,
            passed: counterexample.is_none(),
            counterexample,
            elapsed: start.elapsed(),
        });
    }

    pub(crate) fn finish(self) -> Vec<LawReport> {
        self.reports
    }
}

/// `Some(build())` if `count` fits in `budget`.
pub(crate) fn within<C>(budget: u128, count: u128, build: impl FnOnce() -> Vec<C>) -> Option<Vec<C>> {
    (count <= budget).then(build)
}
