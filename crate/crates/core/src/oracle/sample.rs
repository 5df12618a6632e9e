//! Random sampling and exhaustive enumeration of types and networks.

use rand::seq::SliceRandom;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AttemptSequence, AttemptWords};
use crate::colored::{
    Color, ColorWord, Colored, OneColor, PerColor, PetriModel, PetriNet, Pullback, Recolored,
};
use crate::error::{Error, Result};
use crate::netmodel::{
    DirectedGraph, DirectedGraphs, DirectedMultigraph, DirectedMultigraphs, EdgeLabeling, Gamma, Hypergraph,
    Hypergraphs, Multigraph, Multigraphs, NetworkModel, Object, Partition, Partitions, SimpleGraph,
    SimpleGraphs, Tensor,
};
use crate::perm::Permutation;

pub type Rng = ChaCha8Rng;

/// Bounds on otherwise unbounded labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest multiplicity, label, or arc weight drawn for unbounded carriers.
    pub max_mult: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_mult: 3 }
    }
}

/// A network model whose types and networks can be drawn at random and,
/// for small types, listed.
pub trait Sampler: NetworkModel {
    /// Every type with at most `max_n` vertices, smallest first.
    fn types(&self, max_n: usize) -> Vec<Self::Obj>;

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> Self::Obj;

    fn sample(&self, t: &Self::Obj, limits: &Limits, rng: &mut Rng) -> Self::Net;

    /// `|F(t)|` under `limits`, saturating at `u128::MAX`.
    fn count(&self, t: &Self::Obj, limits: &Limits) -> u128;

    /// All of `F(t)`; callers check [`Sampler::count`] first.
    fn enumerate_all(&self, t: &Self::Obj, limits: &Limits) -> Vec<Self::Net>;
}

impl<S: Sampler + ?Sized> Sampler for &S {
    fn types(&self, max_n: usize) -> Vec<Self::Obj> {
        (**self).types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> Self::Obj {
        (**self).random_type(max_n, rng)
    }

    fn sample(&self, t: &Self::Obj, limits: &Limits, rng: &mut Rng) -> Self::Net {
        (**self).sample(t, limits, rng)
    }

    fn count(&self, t: &Self::Obj, limits: &Limits) -> u128 {
        (**self).count(t, limits)
    }

    fn enumerate_all(&self, t: &Self::Obj, limits: &Limits) -> Vec<Self::Net> {
        (**self).enumerate_all(t, limits)
    }
}

/// All of `F(t)`, or [`Error::BudgetExceeded`] if there are more than `budget`.
pub fn enumerate<S: Sampler>(model: &S, t: &S::Obj, limits: &Limits, budget: u128) -> Result<Vec<S::Net>> {
    let needed = model.count(t, limits);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(model.enumerate_all(t, limits))
}

pub fn random_permutation(n: usize, rng: &mut Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_zero_based(images).expect("a shuffle is a bijection")
}

/// Saturating product of counts.
pub(crate) fn product(counts: impl IntoIterator<Item = u128>) -> u128 {
    counts.into_iter().fold(1u128, |acc, c| acc.saturating_mul(c))
}

fn radix_count(radix: u64, slots: usize) -> u128 {
    product(std::iter::repeat_n(radix as u128, slots))
}

/// Every digit vector with `slots` digits in `0..radix`, last digit fastest.
fn digit_vectors(radix: u64, slots: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::with_capacity(slots)];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..radix).map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

fn cartesian<A: Clone, B: Clone>(a: &[A], b: &[B]) -> Vec<(A, B)> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect()
}

/// Non-empty subsets of `{1, ..., n}`.
fn hyperedges(n: usize) -> Vec<Vec<usize>> {
    (1u64..1 << n)
        .map(|m| (0..n).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect())
        .collect()
}

fn nat_types(max_n: usize) -> Vec<usize> {
    (0..=max_n).collect()
}

fn random_nat(max_n: usize, rng: &mut Rng) -> usize {
    rng.gen_range(0..=max_n)
}

fn random_word(palette: &[Color], max_n: usize, rng: &mut Rng) -> ColorWord {
    let len = rng.gen_range(0..=max_n);
    ColorWord::new((0..len).map(|_| palette.choose(rng).expect("non-empty palette").clone()))
}

fn mult_radix(limits: &Limits) -> u64 {
    limits.max_mult + 1
}

impl Sampler for SimpleGraphs {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    fn sample(&self, n: &usize, _: &Limits, rng: &mut Rng) -> SimpleGraph {
        let edges = pairs(*n).into_iter().filter(|_| rng.gen_bool(0.5));
        SimpleGraph::new(*n, edges).expect("valid pairs")
    }

    fn count(&self, n: &usize, _: &Limits) -> u128 {
        radix_count(2, pairs(*n).len())
    }

    fn enumerate_all(&self, n: &usize, _: &Limits) -> Vec<SimpleGraph> {
        let slots = pairs(*n);
        digit_vectors(2, slots.len())
            .into_iter()
            .map(|d| {
                let edges = slots.iter().zip(&d).filter(|(_, &b)| b == 1).map(|(&e, _)| e);
                SimpleGraph::new(*n, edges).expect("valid pairs")
            })
            .collect()
    }
}

impl Sampler for DirectedGraphs {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    fn sample(&self, n: &usize, _: &Limits, rng: &mut Rng) -> DirectedGraph {
        let edges = ordered_pairs(*n).into_iter().filter(|_| rng.gen_bool(0.5));
        DirectedGraph::new(*n, edges).expect("valid pairs")
    }

    fn count(&self, n: &usize, _: &Limits) -> u128 {
        radix_count(2, ordered_pairs(*n).len())
    }

    fn enumerate_all(&self, n: &usize, _: &Limits) -> Vec<DirectedGraph> {
        let slots = ordered_pairs(*n);
        digit_vectors(2, slots.len())
            .into_iter()
            .map(|d| {
                let edges = slots.iter().zip(&d).filter(|(_, &b)| b == 1).map(|(&e, _)| e);
                DirectedGraph::new(*n, edges).expect("valid pairs")
            })
            .collect()
    }
}

impl Sampler for Multigraphs {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    fn sample(&self, n: &usize, limits: &Limits, rng: &mut Rng) -> Multigraph {
        let entries = pairs(*n)
            .into_iter()
            .map(|(i, j)| (i, j, rng.gen_range(0..=limits.max_mult)));
        Multigraph::new(*n, entries).expect("valid pairs")
    }

    fn count(&self, n: &usize, limits: &Limits) -> u128 {
        radix_count(mult_radix(limits), pairs(*n).len())
    }

    fn enumerate_all(&self, n: &usize, limits: &Limits) -> Vec<Multigraph> {
        let slots = pairs(*n);
        digit_vectors(mult_radix(limits), slots.len())
            .into_iter()
            .map(|d| {
                let entries = slots.iter().zip(d).map(|(&(i, j), k)| (i, j, k));
                Multigraph::new(*n, entries).expect("valid pairs")
            })
            .collect()
    }
}

impl Sampler for DirectedMultigraphs {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    fn sample(&self, n: &usize, limits: &Limits, rng: &mut Rng) -> DirectedMultigraph {
        let entries = ordered_pairs(*n)
            .into_iter()
            .map(|(i, j)| (i, j, rng.gen_range(0..=limits.max_mult)));
        DirectedMultigraph::new(*n, entries).expect("valid pairs")
    }

    fn count(&self, n: &usize, limits: &Limits) -> u128 {
        radix_count(mult_radix(limits), ordered_pairs(*n).len())
    }

    fn enumerate_all(&self, n: &usize, limits: &Limits) -> Vec<DirectedMultigraph> {
        let slots = ordered_pairs(*n);
        digit_vectors(mult_radix(limits), slots.len())
            .into_iter()
            .map(|d| {
                let entries = slots.iter().zip(d).map(|(&(i, j), k)| (i, j, k));
                DirectedMultigraph::new(*n, entries).expect("valid pairs")
            })
            .collect()
    }
}

impl Sampler for Hypergraphs {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    fn sample(&self, n: &usize, _: &Limits, rng: &mut Rng) -> Hypergraph {
        let edges = hyperedges(*n).into_iter().filter(|_| rng.gen_bool(0.5));
        Hypergraph::new(*n, edges).expect("valid hyperedges")
    }

    fn count(&self, n: &usize, _: &Limits) -> u128 {
        if *n >= 64 {
            return u128::MAX;
        }
        radix_count(2, hyperedges(*n).len())
    }

    fn enumerate_all(&self, n: &usize, _: &Limits) -> Vec<Hypergraph> {
        let slots = hyperedges(*n);
        digit_vectors(2, slots.len())
            .into_iter()
            .map(|d| {
                let edges = slots
                    .iter()
                    .zip(&d)
                    .filter(|(_, &b)| b == 1)
                    .map(|(e, _)| e.clone());
                Hypergraph::new(*n, edges).expect("valid hyperedges")
            })
            .collect()
    }
}

fn bell(n: usize) -> u128 {
    // Bell triangle
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("non-empty row")];
        for x in &row {
            next.push(next.last().expect("non-empty row").saturating_add(*x));
        }
        row = next;
    }
    row[0]
}

impl Sampler for Partitions {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    fn sample(&self, n: &usize, _: &Limits, rng: &mut Rng) -> Partition {
        let n = *n;
        let labels = rng.gen_range(1..=n.max(1));
        let mut blocks = vec![Vec::new(); labels];
        for v in 1..=n {
            blocks[rng.gen_range(0..labels)].push(v);
        }
        Partition::new(n, blocks.into_iter().filter(|b| !b.is_empty())).expect("blocks cover")
    }

    fn count(&self, n: &usize, _: &Limits) -> u128 {
        bell(*n)
    }

    fn enumerate_all(&self, n: &usize, _: &Limits) -> Vec<Partition> {
        Partition::all(*n)
    }
}

impl Gamma {
    fn label_radix(&self, limits: &Limits) -> u64 {
        self.monoid().carrier_size().unwrap_or(limits.max_mult + 1)
    }
}

impl Sampler for Gamma {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    fn sample(&self, n: &usize, limits: &Limits, rng: &mut Rng) -> EdgeLabeling {
        let radix = self.label_radix(limits);
        let entries = pairs(*n)
            .into_iter()
            .map(|(i, j)| (i, j, rng.gen_range(0..radix)));
        EdgeLabeling::new(*n, self.monoid().clone(), entries).expect("labels in the carrier")
    }

    fn count(&self, n: &usize, limits: &Limits) -> u128 {
        radix_count(self.label_radix(limits), pairs(*n).len())
    }

    fn enumerate_all(&self, n: &usize, limits: &Limits) -> Vec<EdgeLabeling> {
        let slots = pairs(*n);
        digit_vectors(self.label_radix(limits), slots.len())
            .into_iter()
            .map(|d| {
                let entries = slots.iter().zip(d).map(|(&(i, j), x)| (i, j, x));
                EdgeLabeling::new(*n, self.monoid().clone(), entries).expect("labels in the carrier")
            })
            .collect()
    }
}

impl<A, B> Sampler for Tensor<A, B>
where
    A: Sampler,
    B: Sampler<Obj = A::Obj>,
{
    fn types(&self, max_n: usize) -> Vec<A::Obj> {
        self.left.types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> A::Obj {
        self.left.random_type(max_n, rng)
    }

    fn sample(&self, t: &A::Obj, limits: &Limits, rng: &mut Rng) -> Self::Net {
        (
            self.left.sample(t, limits, rng),
            self.right.sample(t, limits, rng),
        )
    }

    fn count(&self, t: &A::Obj, limits: &Limits) -> u128 {
        product([self.left.count(t, limits), self.right.count(t, limits)])
    }

    fn enumerate_all(&self, t: &A::Obj, limits: &Limits) -> Vec<Self::Net> {
        cartesian(
            &self.left.enumerate_all(t, limits),
            &self.right.enumerate_all(t, limits),
        )
    }
}

impl Sampler for AttemptWords {
    fn types(&self, max_n: usize) -> Vec<usize> {
        nat_types(max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> usize {
        random_nat(max_n, rng)
    }

    /// Words of length at most `max_mult`.
    fn sample(&self, n: &usize, limits: &Limits, rng: &mut Rng) -> AttemptSequence {
        let edges = pairs(*n);
        let len = if edges.is_empty() {
            0
        } else {
            rng.gen_range(0..=limits.max_mult)
        };
        let word = (0..len).map(|_| *edges.choose(rng).expect("non-empty"));
        AttemptSequence::new(*n, word).expect("valid pairs")
    }

    fn count(&self, n: &usize, limits: &Limits) -> u128 {
        let e = pairs(*n).len() as u128;
        let mut total = 0u128;
        let mut layer = 1u128;
        for _ in 0..=limits.max_mult {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(e);
        }
        total
    }

    fn enumerate_all(&self, n: &usize, limits: &Limits) -> Vec<AttemptSequence> {
        let edges = pairs(*n);
        let mut words = vec![Vec::new()];
        let mut layer = vec![Vec::new()];
        for _ in 0..limits.max_mult {
            layer = layer
                .iter()
                .flat_map(|w: &Vec<(usize, usize)>| {
                    edges.iter().map(move |&e| {
                        let mut v = w.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
            words.extend(layer.iter().cloned());
        }
        words
            .into_iter()
            .map(|w| AttemptSequence::new(*n, w).expect("valid pairs"))
            .collect()
    }
}

impl<F: Sampler<Obj = usize>> Sampler for Recolored<F> {
    fn types(&self, max_n: usize) -> Vec<ColorWord> {
        ColorWord::all(self.palette(), max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> ColorWord {
        random_word(self.palette(), max_n, rng)
    }

    fn sample(&self, w: &ColorWord, limits: &Limits, rng: &mut Rng) -> Self::Net {
        Colored::new(w.clone(), self.inner().sample(&w.len(), limits, rng))
    }

    fn count(&self, w: &ColorWord, limits: &Limits) -> u128 {
        self.inner().count(&w.len(), limits)
    }

    fn enumerate_all(&self, w: &ColorWord, limits: &Limits) -> Vec<Self::Net> {
        self.inner()
            .enumerate_all(&w.len(), limits)
            .into_iter()
            .map(|g| Colored::new(w.clone(), g))
            .collect()
    }
}

impl<F: Sampler<Obj = usize>> Sampler for OneColor<F> {
    fn types(&self, max_n: usize) -> Vec<ColorWord> {
        ColorWord::all(std::slice::from_ref(self.color()), max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> ColorWord {
        random_word(std::slice::from_ref(self.color()), max_n, rng)
    }

    fn sample(&self, w: &ColorWord, limits: &Limits, rng: &mut Rng) -> F::Net {
        self.inner().sample(&w.len(), limits, rng)
    }

    fn count(&self, w: &ColorWord, limits: &Limits) -> u128 {
        self.inner().count(&w.len(), limits)
    }

    fn enumerate_all(&self, w: &ColorWord, limits: &Limits) -> Vec<F::Net> {
        self.inner().enumerate_all(&w.len(), limits)
    }
}

impl<F: Sampler<Obj = usize>> PerColor<F> {
    fn palette_vec(&self) -> Vec<Color> {
        self.palette().cloned().collect()
    }
}

impl<F: Sampler<Obj = usize>> Sampler for PerColor<F> {
    fn types(&self, max_n: usize) -> Vec<ColorWord> {
        ColorWord::all(&self.palette_vec(), max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> ColorWord {
        random_word(&self.palette_vec(), max_n, rng)
    }

    fn sample(&self, w: &ColorWord, limits: &Limits, rng: &mut Rng) -> Self::Net {
        let parts = self
            .palette_vec()
            .into_iter()
            .map(|c| {
                let g = self
                    .component(&c)
                    .expect("palette color")
                    .sample(&w.count(&c), limits, rng);
                (c, g)
            })
            .collect::<Vec<_>>();
        self.element(w.clone(), parts).expect("sampled per color")
    }

    fn count(&self, w: &ColorWord, limits: &Limits) -> u128 {
        product(self.palette_vec().iter().map(|c| {
            self.component(c)
                .expect("palette color")
                .count(&w.count(c), limits)
        }))
    }

    fn enumerate_all(&self, w: &ColorWord, limits: &Limits) -> Vec<Self::Net> {
        let mut combos: Vec<Vec<(Color, F::Net)>> = vec![Vec::new()];
        for c in self.palette_vec() {
            let options = self
                .component(&c)
                .expect("palette color")
                .enumerate_all(&w.count(&c), limits);
            combos = cartesian(&combos, &options)
                .into_iter()
                .map(|(mut acc, g)| {
                    acc.push((c.clone(), g));
                    acc
                })
                .collect();
        }
        combos
            .into_iter()
            .map(|parts| self.element(w.clone(), parts).expect("enumerated per color"))
            .collect()
    }
}

impl<F: Sampler<Obj = ColorWord>> Sampler for Pullback<F> {
    fn types(&self, max_n: usize) -> Vec<ColorWord> {
        let palette: Vec<Color> = self.color_map().keys().cloned().collect();
        ColorWord::all(&palette, max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> ColorWord {
        let palette: Vec<Color> = self.color_map().keys().cloned().collect();
        random_word(&palette, max_n, rng)
    }

    fn sample(&self, w: &ColorWord, limits: &Limits, rng: &mut Rng) -> Self::Net {
        Colored::new(w.clone(), self.inner().sample(&self.push(w), limits, rng))
    }

    fn count(&self, w: &ColorWord, limits: &Limits) -> u128 {
        self.inner().count(&self.push(w), limits)
    }

    fn enumerate_all(&self, w: &ColorWord, limits: &Limits) -> Vec<Self::Net> {
        self.inner()
            .enumerate_all(&self.push(w), limits)
            .into_iter()
            .map(|g| Colored::new(w.clone(), g))
            .collect()
    }
}

impl PetriModel {
    fn palette_vec(&self) -> Vec<Color> {
        vec![self.place_color().clone(), self.transition_color().clone()]
    }

    fn shape(&self, w: &ColorWord) -> (usize, usize) {
        (w.count(self.place_color()), w.count(self.transition_color()))
    }
}

impl Sampler for PetriModel {
    fn types(&self, max_n: usize) -> Vec<ColorWord> {
        ColorWord::all(&self.palette_vec(), max_n)
    }

    fn random_type(&self, max_n: usize, rng: &mut Rng) -> ColorWord {
        random_word(&self.palette_vec(), max_n, rng)
    }

    fn sample(&self, w: &ColorWord, limits: &Limits, rng: &mut Rng) -> Colored<PetriNet> {
        let (m, n) = self.shape(w);
        let mut matrix = || -> Vec<Vec<u64>> {
            (0..m)
                .map(|_| (0..n).map(|_| rng.gen_range(0..=limits.max_mult)).collect())
                .collect()
        };
        let (input, output) = (matrix(), matrix());
        let net = PetriNet::new(m, n, input, output).expect("shaped");
        self.element(w.clone(), net).expect("shaped")
    }

    fn count(&self, w: &ColorWord, limits: &Limits) -> u128 {
        let (m, n) = self.shape(w);
        radix_count(mult_radix(limits), 2 * m * n)
    }

    fn enumerate_all(&self, w: &ColorWord, limits: &Limits) -> Vec<Colored<PetriNet>> {
        let (m, n) = self.shape(w);
        let rows = |d: &[u64]| -> Vec<Vec<u64>> { d.chunks(n.max(1)).take(m).map(<[u64]>::to_vec).collect() };
        digit_vectors(mult_radix(limits), 2 * m * n)
            .into_iter()
            .map(|d| {
                let (i, o) = d.split_at(m * n);
                let (input, output) = if n == 0 {
                    (vec![vec![]; m], vec![vec![]; m])
                } else {
                    (rows(i), rows(o))
                };
                let net = PetriNet::new(m, n, input, output).expect("shaped");
                self.element(w.clone(), net).expect("shaped")
            })
            .collect()
    }
}
