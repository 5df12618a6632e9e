//! Finite permutations of `{1, ..., n}`.
//!
//! Everything public is 1-based: `image(i)` takes and returns points of
//! `{1, ..., n}`, and the serialized form is the one-line image list,
//! e.g. `[4,5,6,7,1,2,3]`. Storage is 0-based.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}`; the morphisms of the symmetric groupoid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // map[i] = σ(i + 1) - 1
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen[v - 1] = true;
            map.push(v - 1);
        }
        Ok(Permutation { map })
    }

    /// Builds a permutation from 0-based images.
    pub(crate) fn from_zero_based(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(map.iter().map(|v| v + 1).collect()));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    ///
    /// Panics when `i` is out of range.
    pub fn image(&self, i: usize) -> usize {
        assert!(
            i >= 1 && i <= self.degree(),
            "point {i} outside 1..={}",
            self.degree()
        );
        self.map[i - 1] + 1
    }

    #[inline]
    pub(crate) fn image0(&self, i: usize) -> usize {
        self.map[i]
    }

    /// The 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `σ ∘ τ`: apply `τ` first, then `σ`.
    pub fn compose(&self, tau: &Permutation) -> Result<Self> {
        if self.degree() != tau.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: tau.degree(),
            });
        }
        Ok(Permutation {
            map: tau.map.iter().map(|&t| self.map[t]).collect(),
        })
    }

    /// The block sum `σ + τ`: `σ` on the first `σ.n` points, `τ` shifted on the rest.
    pub fn block_sum(&self, tau: &Permutation) -> Self {
        let m = self.degree();
        let mut map = self.map.clone();
        map.extend(tau.map.iter().map(|&t| t + m));
        Permutation { map }
    }

    /// Block sum of a whole sequence; the empty sum is the degree-0 permutation.
    pub fn block_sum_all<'a>(perms: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut map = Vec::new();
        for p in perms {
            let off = map.len();
            map.extend(p.map.iter().map(|&t| t + off));
        }
        Permutation { map }
    }

    /// `B_{m,n}`: swaps the first `m` points with the last `n`.
    pub fn block_swap(m: usize, n: usize) -> Self {
        let map = (0..m).map(|i| i + n).chain(0..n).collect();
        Permutation { map }
    }

    /// Promotes `τ ∈ S_k` to a block permutation of `Σ sizes` points.
    ///
    /// `sizes` is the original block layout `(n_1, ..., n_k)`. The source layout is
    /// the reordered one, `(n_{τ(1)}, ..., n_{τ(k)})`; block `j` of the source is sent,
    /// without reordering inside it, onto block `τ(j)` of the original layout.
    pub fn block_induced(tau: &Permutation, sizes: &[usize]) -> Result<Self> {
        if tau.degree() != sizes.len() {
            return Err(Error::DegreeMismatch {
                expected: sizes.len(),
                found: tau.degree(),
            });
        }
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &s in sizes {
            offsets.push(acc);
            acc += s;
        }
        let mut map = Vec::with_capacity(acc);
        for j in 0..sizes.len() {
            let block = tau.map[j];
            let start = offsets[block];
            map.extend(start..start + sizes[block]);
        }
        Ok(Permutation { map })
    }

    /// Applies the permutation to positions: `out[σ(i)] = items[i]`.
    pub fn permute_positions<T: Clone>(&self, items: &[T]) -> Result<Vec<T>> {
        if items.len() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: items.len(),
            });
        }
        let mut out: Vec<Option<T>> = vec![None; items.len()];
        for (i, x) in items.iter().enumerate() {
            out[self.map[i]] = Some(x.clone());
        }
        Ok(out.into_iter().map(|x| x.expect("bijection")).collect())
    }

    /// All `n!` permutations of degree `n` in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { map: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[3, 1]).is_err());
        assert_eq!(Permutation::from_images(&[]).unwrap(), Permutation::identity(0));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(
            Permutation::identity(3).compose(&p(&[2, 3, 1])).unwrap(),
            p(&[2, 3, 1])
        );
        assert_eq!(p(&[2, 1]).compose(&p(&[2, 1])).unwrap(), Permutation::identity(2));
        assert_eq!(
            p(&[2, 3, 1]).compose(&p(&[3, 1, 2])).unwrap(),
            Permutation::identity(3)
        );
        assert!(matches!(
            p(&[2, 1]).compose(&Permutation::identity(3)),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let sigma = p(&[2, 3, 1]);
        let tau = p(&[1, 3, 2]);
        let st = sigma.compose(&tau).unwrap();
        for i in 1..=3 {
            assert_eq!(st.image(i), sigma.image(tau.image(i)));
        }
    }

    #[test]
    fn block_sum_examples() {
        assert_eq!(p(&[2, 1]).block_sum(&Permutation::identity(2)), p(&[2, 1, 3, 4]));
        let s = p(&[3, 1, 2]);
        assert_eq!(Permutation::identity(0).block_sum(&s), s);
        assert_eq!(p(&[2, 1]).block_sum(&p(&[2, 1])), p(&[2, 1, 4, 3]));
    }

    #[test]
    fn block_swap_examples() {
        // one-line form of the cycle (1 4 7 3 6 2 5)
        let b = Permutation::block_swap(4, 3);
        assert_eq!(b.images(), vec![4, 5, 6, 7, 1, 2, 3]);
        let cycle = [1, 4, 7, 3, 6, 2, 5];
        for w in 0..cycle.len() {
            assert_eq!(b.image(cycle[w]), cycle[(w + 1) % cycle.len()]);
        }
        assert_eq!(Permutation::block_swap(0, 5), Permutation::identity(5));
        assert_eq!(Permutation::block_swap(1, 1), p(&[2, 1]));
    }

    /// Independent route: tag every point of the original layout with
    /// (block, offset), lay the blocks out in τ order, and search.
    fn block_induced_by_search(tau: &Permutation, sizes: &[usize]) -> Permutation {
        let original: Vec<(usize, usize)> = sizes
            .iter()
            .enumerate()
            .flat_map(|(b, &s)| (0..s).map(move |r| (b + 1, r)))
            .collect();
        let reordered: Vec<(usize, usize)> = (1..=sizes.len())
            .flat_map(|j| {
                let b = tau.image(j);
                (0..sizes[b - 1]).map(move |r| (b, r))
            })
            .collect();
        let images: Vec<usize> = reordered
            .iter()
            .map(|tag| original.iter().position(|t| t == tag).unwrap() + 1)
            .collect();
        p(&images)
    }

    #[test]
    fn block_induced_examples() {
        let sizes = [2, 0, 3];
        assert_eq!(
            Permutation::block_induced(&Permutation::identity(3), &sizes).unwrap(),
            Permutation::identity(5)
        );
        assert_eq!(
            Permutation::block_induced(&p(&[2, 1]), &[1, 1]).unwrap(),
            p(&[2, 1])
        );
        // frozen from block_induced_by_search
        assert_eq!(
            Permutation::block_induced(&p(&[2, 1]), &[2, 3]).unwrap(),
            p(&[3, 4, 5, 1, 2])
        );
        assert_eq!(
            Permutation::block_induced(&p(&[2, 1]), &[2, 3]).unwrap(),
            Permutation::block_swap(3, 2)
        );
        assert!(Permutation::block_induced(&p(&[2, 1]), &[1]).is_err());
    }

    #[test]
    fn block_induced_agrees_with_search_exhaustively() {
        for k in 0..=3 {
            for tau in Permutation::all(k) {
                let mut sizes = vec![0; k];
                loop {
                    assert_eq!(
                        Permutation::block_induced(&tau, &sizes).unwrap(),
                        block_induced_by_search(&tau, &sizes),
                        "tau={tau:?} sizes={sizes:?}"
                    );
                    let Some(i) = sizes.iter().position(|&s| s < 2) else {
                        break;
                    };
                    sizes[i] += 1;
                    sizes[..i].iter_mut().for_each(|s| *s = 0);
                }
            }
        }
    }

    #[test]
    fn group_laws_exhaustive() {
        for n in 0..=5 {
            let all = Permutation::all(n);
            assert_eq!(all.len(), (1..=n).product::<usize>());
            let id = Permutation::identity(n);
            for a in &all {
                assert_eq!(a.compose(&id).unwrap(), *a);
                assert_eq!(id.compose(a).unwrap(), *a);
                assert_eq!(a.compose(&a.inverse()).unwrap(), id);
                assert_eq!(a.inverse().compose(a).unwrap(), id);
            }
            if n <= 4 {
                for a in &all {
                    for b in &all {
                        for c in &all {
                            assert_eq!(
                                a.compose(&b.compose(c).unwrap()).unwrap(),
                                a.compose(b).unwrap().compose(c).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn block_swap_involution_exhaustive() {
        for total in 0..=6 {
            for m in 0..=total {
                let n = total - m;
                let prod = Permutation::block_swap(m, n)
                    .compose(&Permutation::block_swap(n, m))
                    .unwrap();
                assert_eq!(prod, Permutation::identity(total));
            }
        }
    }

    #[test]
    fn block_induced_on_singletons_is_tau() {
        for k in 0..=4 {
            for tau in Permutation::all(k) {
                assert_eq!(Permutation::block_induced(&tau, &vec![1; k]).unwrap(), tau);
            }
        }
    }

    #[test]
    fn block_induced_is_functorial() {
        // β(τ, n) ∘ β(τ', n∘τ) = β(τ∘τ', n)
        for k in 0..=3 {
            let sizes: Vec<usize> = (0..k).map(|i| i % 3 + 1).collect();
            for t in Permutation::all(k) {
                for t2 in Permutation::all(k) {
                    let reordered: Vec<usize> = (1..=k).map(|j| sizes[t.image(j) - 1]).collect();
                    let lhs = Permutation::block_induced(&t, &sizes)
                        .unwrap()
                        .compose(&Permutation::block_induced(&t2, &reordered).unwrap())
                        .unwrap();
                    let rhs = Permutation::block_induced(&t.compose(&t2).unwrap(), &sizes).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn block_sum_restricts_to_first_block() {
        for s in Permutation::all(3) {
            for t in Permutation::all(2) {
                let sum = s.block_sum(&t);
                for i in 1..=3 {
                    assert_eq!(sum.image(i), s.image(i));
                }
                for i in 1..=2 {
                    assert_eq!(sum.image(i + 3), t.image(i) + 3);
                }
            }
        }
    }

    #[test]
    fn json_is_one_based() {
        let b = Permutation::block_swap(4, 3);
        assert_eq!(serde_json::to_string(&b).unwrap(), "[4,5,6,7,1,2,3]");
        let back: Permutation = serde_json::from_str("[4,5,6,7,1,2,3]").unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
