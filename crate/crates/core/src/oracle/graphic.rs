//! The graphic-monoid identities of edge-connection attempts, checked on
//! every small ported network.

use rand::seq::SliceRandom;
use rand::Rng as _;

use super::sample::{Limits, Sampler};
use super::{CheckConfig, LawReport, Suite};
use crate::algebra::PortedNetwork;
use crate::netmodel::SimpleGraphs;

/// Sizes of the exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphicBounds {
    pub max_n: usize,
    /// Longest combined word.
    pub max_word: usize,
    pub max_ports: u32,
}

impl Default for GraphicBounds {
    fn default() -> Self {
        GraphicBounds {
            max_n: 4,
            max_word: 4,
            max_ports: 2,
        }
    }
}

type Word = Vec<(usize, usize)>;

fn edges(n: usize) -> Word {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Every word over the edges of `K_n` of length at most `len`.
fn words(n: usize, len: usize) -> Vec<Word> {
    let alphabet = edges(n);
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&e| {
                    let mut v = w.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Every ported network on `n` vertices with at most `max_ports` ports each.
fn states(n: usize, max_ports: u32) -> Vec<PortedNetwork> {
    let graphs = SimpleGraphs.enumerate_all(&n, &Limits::default());
    let mut ports: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..n {
        ports = ports
            .into_iter()
            .flat_map(|p| {
                (0..=max_ports).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    graphs
        .iter()
        .flat_map(|g| {
            ports
                .iter()
                .filter_map(move |p| PortedNetwork::new(g.clone(), p.clone()).ok())
        })
        .collect()
}

fn run(state: &PortedNetwork, word: &[(usize, usize)]) -> PortedNetwork {
    let mut s = state.clone();
    s.process(word).expect("attempts on valid vertices");
    s
}

fn random_state(n: usize, max_ports: u32, rng: &mut super::Rng) -> PortedNetwork {
    let mut s = PortedNetwork::bare((0..n).map(|_| rng.gen_range(0..=max_ports)).collect());
    let alphabet = edges(n);
    let word: Word = (0..2 * n).filter_map(|_| alphabet.choose(rng).copied()).collect();
    s.process(&word).expect("valid attempts");
    s
}

fn random_word(n: usize, len: usize, rng: &mut super::Rng) -> Word {
    let alphabet = edges(n);
    (0..len).filter_map(|_| alphabet.choose(rng).copied()).collect()
}

/// `aba = ab` and the commutation of attempts on disjoint vertex pairs,
/// over every start state within `bounds`.
pub fn check_graphic(bounds: GraphicBounds, cfg: &CheckConfig) -> Vec<LawReport> {
    let b = bounds;
    let all_states: Vec<(usize, Vec<PortedNetwork>)> =
        (0..=b.max_n).map(|n| (n, states(n, b.max_ports))).collect();
    let mut suite = Suite::new("graphic", cfg);

    suite.law(
        "repeat-is-absorbed",
        |budget| {
            let count: u128 = all_states
                .iter()
                .map(|(n, s)| s.len() as u128 * words(*n, b.max_word).len() as u128)
                .sum();
            (count <= budget).then(|| {
                let mut out = Vec::new();
                for (n, ss) in &all_states {
                    let ws = words(*n, b.max_word);
                    for s in ss {
                        for w in &ws {
                            out.push((s.clone(), w.clone()));
                        }
                    }
                }
                out
            })
        },
        |rng| {
            let n = rng.gen_range(0..=b.max_n);
            let len = rng.gen_range(0..=b.max_word);
            (random_state(n, b.max_ports, rng), random_word(n, len, rng))
        },
        // each case covers every split of the word into `a b`
        |(s, ab)| {
            let after_ab = run(s, ab);
            (0..=ab.len()).find_map(|i| {
                let a = &ab[..i];
                let after_aba = run(&after_ab, a);
                (after_aba != after_ab).then(|| {
                    (
                        format!("a = {a:?}, b = {:?}: aba gives {after_aba:?}", &ab[i..]),
                        format!("ab gives {after_ab:?}"),
                    )
                })
            })
        },
    );

    suite.law(
        "disjoint-attempts-commute",
        |budget| {
            let count: u128 = all_states
                .iter()
                .map(|(n, s)| s.len() as u128 * words(*n, 2).len() as u128 * edges(*n).len().pow(2) as u128)
                .sum();
            (count <= budget).then(|| {
                let mut out = Vec::new();
                for (n, ss) in &all_states {
                    let es = edges(*n);
                    let ws = words(*n, 2);
                    for s in ss {
                        for &e in &es {
                            for &f in &es {
                                if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                                    continue;
                                }
                                for w in &ws {
                                    for cut in 0..=w.len() {
                                        out.push((s.clone(), e, f, w[..cut].to_vec(), w[cut..].to_vec()));
                                    }
                                }
                            }
                        }
                    }
                }
                out
            })
        },
        |rng| {
            let n = rng.gen_range(4..=b.max_n.max(4));
            let mut vs: Vec<usize> = (1..=n).collect();
            vs.shuffle(rng);
            let (e, f) = (
                (vs[0].min(vs[1]), vs[0].max(vs[1])),
                (vs[2].min(vs[3]), vs[2].max(vs[3])),
            );
            let u = random_word(n, rng.gen_range(0..=2), rng);
            let v = random_word(n, rng.gen_range(0..=2), rng);
            (random_state(n, b.max_ports, rng), e, f, u, v)
        },
        |(s, e, f, u, v)| {
            let one: Word = u.iter().chain([e, f]).chain(v).copied().collect();
            let two: Word = u.iter().chain([f, e]).chain(v).copied().collect();
            let (x, y) = (run(s, &one), run(s, &two));
            (x != y).then(|| (format!("{one:?} gives {x:?}"), format!("{two:?} gives {y:?}")))
        },
    );

    suite.finish()
}
