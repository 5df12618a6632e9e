use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::netmodel::Object;
use crate::perm::Permutation;

pub type Color = String;

/// A formal tensor product `c_1 ⊗ ... ⊗ c_n` of vertex colors; the empty
/// word is the monoidal unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorWord(Vec<Color>);

impl ColorWord {
    pub fn new<S: Into<Color>>(colors: impl IntoIterator<Item = S>) -> Self {
        ColorWord(colors.into_iter().map(Into::into).collect())
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    /// Every word of length at most `max_len` over `palette`, shortest first.
    pub fn all(palette: &[Color], max_len: usize) -> Vec<ColorWord> {
        let mut out = vec![ColorWord::default()];
        let mut layer = vec![ColorWord::default()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|w| {
                    palette.iter().map(move |c| {
                        let mut v = w.0.clone();
                        v.push(c.clone());
                        ColorWord(v)
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    pub fn count(&self, c: &str) -> usize {
        self.0.iter().filter(|x| x.as_str() == c).count()
    }

    /// Applies a color map letterwise (`f_*` on objects).
    pub fn recolor(&self, f: &BTreeMap<Color, Color>) -> Result<ColorWord> {
        self.0
            .iter()
            .map(|c| {
                f.get(c)
                    .cloned()
                    .ok_or_else(|| Error::Unknown(format!("color {c} has no image")))
            })
            .collect::<Result<Vec<_>>>()
            .map(ColorWord)
    }

    /// For every color, the restriction of `σ : self → σ_*(self)` to the
    /// vertices of that color, both sides numbered by order of occurrence.
    pub fn restrictions(&self, sigma: &Permutation) -> Result<BTreeMap<Color, Permutation>> {
        let target = self.permuted(sigma)?;
        let rank = |w: &ColorWord| {
            let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
            w.0.iter()
                .map(|c| {
                    let r = seen.entry(c.as_str()).or_insert(0);
                    *r += 1;
                    *r - 1
                })
                .collect::<Vec<_>>()
        };
        let (src_rank, tgt_rank) = (rank(self), rank(&target));
        let mut maps: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.0.iter().enumerate() {
            let v = maps.entry(c.clone()).or_insert_with(|| vec![0; self.count(c)]);
            v[src_rank[i]] = tgt_rank[sigma.image0(i)];
        }
        maps.into_iter()
            .map(|(c, m)| Ok((c, Permutation::from_zero_based(m)?)))
            .collect()
    }
}

impl Object for ColorWord {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn empty() -> Self {
        ColorWord(Vec::new())
    }

    fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        ColorWord(v)
    }

    fn permuted(&self, sigma: &Permutation) -> Result<Self> {
        // target[σ(i)] = source[i]
        sigma.permute_positions(&self.0).map(ColorWord)
    }

    fn describe(&self) -> String {
        self.to_string()
    }

    fn rearranges_to(&self, other: &Self) -> bool {
        let mut a = self.0.clone();
        let mut b = other.0.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    fn slice(&self, start: usize, end: usize) -> Self {
        ColorWord(self.0[start..end].to_vec())
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("I")
        } else {
            f.write_str(&self.0.join(","))
        }
    }
}

impl FromStr for ColorWord {
    type Err = Error;

    /// Comma-separated colors, e.g. `r,b,r`; the empty string is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ColorWord::default());
        }
        s.split(',')
            .map(|c| {
                let c = c.trim();
                if c.is_empty() || !c.chars().all(|ch| ch.is_alphanumeric() || ch == '_') {
                    Err(Error::Unknown(format!("color {c:?}")))
                } else {
                    Ok(c.to_string())
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(ColorWord)
    }
}

/// A morphism of the free symmetric monoidal category on a color set: a
/// permutation `σ` with `target[σ(i)] = source[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    source: ColorWord,
    target: ColorWord,
    perm: Permutation,
}

impl ColoredPermutation {
    pub fn new(source: ColorWord, target: ColorWord, perm: Permutation) -> Result<Self> {
        if source.len() != perm.degree() || target.len() != perm.degree() {
            return Err(Error::DegreeMismatch {
                expected: source.len(),
                found: perm.degree(),
            });
        }
        for i in 1..=perm.degree() {
            if target.0[perm.image(i) - 1] != source.0[i - 1] {
                return Err(Error::Constraint(format!(
                    "{perm} does not send {source} to {target}: position {i}"
                )));
            }
        }
        Ok(ColoredPermutation { source, target, perm })
    }

    /// The unique colored permutation out of `source` with underlying `perm`.
    pub fn from_source(source: ColorWord, perm: Permutation) -> Result<Self> {
        let target = source.permuted(&perm)?;
        Ok(ColoredPermutation { source, target, perm })
    }

    pub fn source(&self) -> &ColorWord {
        &self.source
    }

    pub fn target(&self) -> &ColorWord {
        &self.target
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ColoredPermutation) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::ArityMismatch {
                expected: self.source.to_string(),
                found: first.target.to_string(),
            });
        }
        Ok(ColoredPermutation {
            source: first.source.clone(),
            target: self.target.clone(),
            perm: self.perm.compose(&first.perm)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> ColorWord {
        s.parse().unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("r, b,r").colors(), &["r", "b", "r"]);
        assert_eq!(w("").len(), 0);
        assert_eq!(w("r,b").to_string(), "r,b");
        assert!("r,,b".parse::<ColorWord>().is_err());
    }

    #[test]
    fn validity_is_enforced() {
        assert!(ColoredPermutation::new(w("r,b"), w("b,r"), perm(&[2, 1])).is_ok());
        assert!(ColoredPermutation::new(w("r,b"), w("r,b"), perm(&[2, 1])).is_err());
        assert!(ColoredPermutation::new(w("r,b"), w("r,b,r"), perm(&[1, 2])).is_err());
    }

    #[test]
    fn restrictions_split_by_color() {
        // r b r → positions 3,1,2 → target word b r r? σ=[3,1,2]: target[3]=r, target[1]=b, target[2]=r
        let word = w("r,b,r");
        let sigma = perm(&[3, 1, 2]);
        assert_eq!(word.permuted(&sigma).unwrap(), w("b,r,r"));
        let r = word.restrictions(&sigma).unwrap();
        // first r (pos 1) goes to pos 3 = second r of target; second r (pos 3) → pos 2 = first r
        assert_eq!(r["r"], perm(&[2, 1]));
        assert_eq!(r["b"], perm(&[1]));
    }

    #[test]
    fn composition_stays_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let colors = ["a", "b", "c"];
        for _ in 0..500 {
            let n = rng.gen_range(0..=5);
            let word = ColorWord::new((0..n).map(|_| colors[rng.gen_range(0..3)]));
            let p1 = random_perm(n, &mut rng);
            let p2 = random_perm(n, &mut rng);
            let a = ColoredPermutation::from_source(word, p1).unwrap();
            let b = ColoredPermutation::from_source(a.target().clone(), p2).unwrap();
            let ba = b.after(&a).unwrap();
            let rebuilt =
                ColoredPermutation::new(ba.source().clone(), ba.target().clone(), ba.perm().clone());
            assert!(rebuilt.is_ok());
        }
    }

    fn random_perm(n: usize, rng: &mut impl Rng) -> Permutation {
        use rand::seq::SliceRandom;
        let mut v: Vec<usize> = (1..=n).collect();
        v.shuffle(rng);
        Permutation::from_images(&v).unwrap()
    }
}
