use std::collections::BTreeMap;

use super::{act_degree, same_arity, NetworkModel};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A partition of `{1, ..., n}`.
///
/// Canonical form: each block sorted, blocks ordered by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidNetwork("empty block".into()));
            }
            for &v in &b {
                if v == 0 || v > n {
                    return Err(Error::InvalidNetwork(format!(
                        "block element {v} outside 1..={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidNetwork(format!("element {v} in two blocks")));
                }
                seen[v] = true;
            }
            b.sort_unstable();
            out.push(b);
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::InvalidNetwork(format!("element {v} not covered")));
        }
        Ok(Self::canonical(n, out))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { n, blocks }
    }

    /// The all-singletons partition (bottom of the refinement order).
    pub fn discrete(n: usize) -> Self {
        Partition {
            n,
            blocks: (1..=n).map(|v| vec![v]).collect(),
        }
    }

    /// The one-block partition (top), or no blocks when `n = 0`.
    pub fn indiscrete(n: usize) -> Self {
        Partition {
            n,
            blocks: if n == 0 { vec![] } else { vec![(1..=n).collect()] },
        }
    }

    /// Builds the finest partition in which every listed pair shares a block.
    pub fn generated_by(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        for (i, j) in pairs {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidNetwork(format!("pair ({i},{j}) outside 1..={n}")));
            }
            uf.union(i - 1, j - 1);
        }
        Ok(uf.into_partition())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index of every element, 0-based by element.
    fn labels(&self) -> Vec<usize> {
        let mut lab = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                lab[v - 1] = b;
            }
        }
        lab
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        if self.n != other.n {
            return false;
        }
        let lab = other.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| lab[v - 1] == lab[b[0] - 1]))
    }

    /// Least upper bound: union-find over the blocks of both partitions.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        same_arity(self.n, other.n)?;
        let mut uf = UnionFind::new(self.n);
        for block in self.blocks.iter().chain(&other.blocks) {
            for w in block.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        Ok(uf.into_partition())
    }

    /// Greatest lower bound: nonempty pairwise intersections of blocks.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        same_arity(self.n, other.n)?;
        let lab = other.labels();
        let mut blocks = Vec::new();
        for b in &self.blocks {
            let mut split: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &v in b {
                split.entry(lab[v - 1]).or_default().push(v);
            }
            blocks.extend(split.into_values());
        }
        Ok(Self::canonical(self.n, blocks))
    }

    /// Every partition of `{1, ..., n}`, via restricted growth strings.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); k];
            for (v, &b) in rgs.iter().enumerate() {
                blocks[b].push(v + 1);
            }
            out.push(Self::canonical(n, blocks));
            // advance the restricted growth string
            let mut i = n;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let bound = rgs[..i].iter().copied().max().unwrap_or(0) + 1;
                if rgs[i] < bound {
                    rgs[i] += 1;
                    rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                    break;
                }
            }
        }
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let r = self.find(v);
            by_root.entry(r).or_default().push(v + 1);
        }
        Partition::canonical(n, by_root.into_values().collect())
    }
}

/// Which lattice operation overlays partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lattice {
    Join,
    Meet,
}

/// `P^∨` or `P^∧`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Partitions(pub Lattice);

impl NetworkModel for Partitions {
    type Obj = usize;
    type Net = Partition;

    fn id(&self) -> String {
        match self.0 {
            Lattice::Join => "part-join".into(),
            Lattice::Meet => "part-meet".into(),
        }
    }

    fn object(&self, g: &Partition) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> Partition {
        match self.0 {
            Lattice::Join => Partition::discrete(*n),
            Lattice::Meet => Partition::indiscrete(*n),
        }
    }

    fn overlay(&self, g: &Partition, h: &Partition) -> Result<Partition> {
        match self.0 {
            Lattice::Join => g.join(h),
            Lattice::Meet => g.meet(h),
        }
    }

    fn act(&self, sigma: &Permutation, g: &Partition) -> Result<Partition> {
        act_degree(sigma, g.n)?;
        let blocks = g
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| sigma.image(v)).collect())
            .collect();
        Ok(Partition::canonical(g.n, blocks))
    }

    fn djunion(&self, g: &Partition, h: &Partition) -> Result<Partition> {
        let m = g.n;
        let mut blocks = g.blocks.clone();
        blocks.extend(h.blocks.iter().map(|b| b.iter().map(|v| v + m).collect()));
        Ok(Partition::canonical(m + h.n, blocks))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, b: &[&[usize]]) -> Partition {
        Partition::new(n, b.iter().map(|x| x.to_vec())).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(3, [vec![1, 2]]).is_err());
        assert!(Partition::new(2, [vec![1, 2], vec![2]]).is_err());
        assert!(Partition::new(2, [vec![1, 2], vec![]]).is_err());
        assert_eq!(part(3, &[&[3], &[2, 1]]).blocks(), &[vec![1, 2], vec![3]]);
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..=5).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn units() {
        assert_eq!(Partitions(Lattice::Join).unit(&3), part(3, &[&[1], &[2], &[3]]));
        assert_eq!(Partitions(Lattice::Meet).unit(&3), part(3, &[&[1, 2, 3]]));
        assert_eq!(Partitions(Lattice::Meet).unit(&0), Partition::discrete(0));
    }

    #[test]
    fn join_and_meet_examples() {
        let a = part(4, &[&[1, 2], &[3], &[4]]);
        let b = part(4, &[&[1], &[2, 3], &[4]]);
        assert_eq!(a.join(&b).unwrap(), part(4, &[&[1, 2, 3], &[4]]));
        let c = part(4, &[&[1, 2, 3], &[4]]);
        let d = part(4, &[&[1, 4], &[2, 3]]);
        assert_eq!(c.meet(&d).unwrap(), part(4, &[&[1], &[2, 3], &[4]]));
    }

    /// The join is the finest partition that both arguments refine; the meet
    /// is the coarsest partition refining both. Checked against brute-force
    /// search over all 15 × 15 pairs at n = 4.
    #[test]
    fn lattice_operations_match_brute_force() {
        for n in 0..=4 {
            let all = Partition::all(n);
            for a in &all {
                for b in &all {
                    let uppers: Vec<&Partition> =
                        all.iter().filter(|c| a.refines(c) && b.refines(c)).collect();
                    let least = uppers
                        .iter()
                        .find(|c| uppers.iter().all(|d| c.refines(d)))
                        .expect("join exists");
                    assert_eq!(&a.join(b).unwrap(), *least);

                    let lowers: Vec<&Partition> =
                        all.iter().filter(|c| c.refines(a) && c.refines(b)).collect();
                    let greatest = lowers
                        .iter()
                        .find(|c| lowers.iter().all(|d| d.refines(c)))
                        .expect("meet exists");
                    assert_eq!(&a.meet(b).unwrap(), *greatest);
                }
            }
        }
    }

    #[test]
    fn generated_by_pairs() {
        assert_eq!(
            Partition::generated_by(4, [(1, 3), (3, 4)]).unwrap(),
            part(4, &[&[1, 3, 4], &[2]])
        );
    }
}
