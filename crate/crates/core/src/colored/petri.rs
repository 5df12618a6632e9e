use serde::{Deserialize, Serialize};

use super::{Color, ColorWord, Colored};
use crate::error::{Error, Result};
use crate::netmodel::{NetworkModel, Object};
use crate::perm::Permutation;

/// A Petri net `(S, T, i, o)` with `|S| = m` places and `|T| = n`
/// transitions; `input[s][t]` and `output[s][t]` are arc multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PetriJson", into = "PetriJson")]
pub struct PetriNet {
    m: usize,
    n: usize,
    input: Vec<Vec<u64>>,
    output: Vec<Vec<u64>>,
}

impl PetriNet {
    pub fn new(m: usize, n: usize, input: Vec<Vec<u64>>, output: Vec<Vec<u64>>) -> Result<Self> {
        for (name, mat) in [("input", &input), ("output", &output)] {
            if mat.len() != m || mat.iter().any(|row| row.len() != n) {
                return Err(Error::InvalidNetwork(format!("{name} matrix is not {m}x{n}")));
            }
        }
        Ok(PetriNet { m, n, input, output })
    }

    /// The net with no arcs.
    pub fn zero(m: usize, n: usize) -> Self {
        PetriNet {
            m,
            n,
            input: vec![vec![0; n]; m],
            output: vec![vec![0; n]; m],
        }
    }

    pub fn places(&self) -> usize {
        self.m
    }

    pub fn transitions(&self) -> usize {
        self.n
    }

    pub fn input(&self) -> &[Vec<u64>] {
        &self.input
    }

    pub fn output(&self) -> &[Vec<u64>] {
        &self.output
    }

    /// The `S_m × S_n` action: `i'(σ(s), τ(t)) = i(s, t)`.
    pub fn permute(&self, places: &Permutation, transitions: &Permutation) -> Result<PetriNet> {
        if places.degree() != self.m || transitions.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.m,
                found: places.degree(),
            });
        }
        let move_matrix = |mat: &[Vec<u64>]| {
            let mut out = vec![vec![0; self.n]; self.m];
            for (s, row) in mat.iter().enumerate() {
                for (t, &x) in row.iter().enumerate() {
                    out[places.image0(s)][transitions.image0(t)] = x;
                }
            }
            out
        };
        Ok(PetriNet {
            m: self.m,
            n: self.n,
            input: move_matrix(&self.input),
            output: move_matrix(&self.output),
        })
    }
}

/// Entrywise sum of arc multiplicities.
pub fn petri_overlay(p: &PetriNet, q: &PetriNet) -> Result<PetriNet> {
    if (p.m, p.n) != (q.m, q.n) {
        return Err(Error::ArityMismatch {
            expected: format!("({}, {})", p.m, p.n),
            found: format!("({}, {})", q.m, q.n),
        });
    }
    let add = |a: &[Vec<u64>], b: &[Vec<u64>]| -> Result<Vec<Vec<u64>>> {
        a.iter()
            .zip(b)
            .map(|(ra, rb)| {
                ra.iter()
                    .zip(rb)
                    .map(|(x, y)| {
                        x.checked_add(*y)
                            .ok_or_else(|| Error::Overflow(format!("{x} + {y}")))
                    })
                    .collect()
            })
            .collect()
    };
    Ok(PetriNet {
        m: p.m,
        n: p.n,
        input: add(&p.input, &q.input)?,
        output: add(&p.output, &q.output)?,
    })
}

/// Block-diagonal placement: `p`'s places and transitions first.
pub fn petri_djunion(p: &PetriNet, q: &PetriNet) -> PetriNet {
    let (m, n) = (p.m + q.m, p.n + q.n);
    let block = |a: &[Vec<u64>], b: &[Vec<u64>]| {
        let mut out = vec![vec![0; n]; m];
        for (s, row) in a.iter().enumerate() {
            out[s][..p.n].copy_from_slice(row);
        }
        for (s, row) in b.iter().enumerate() {
            out[p.m + s][p.n..].copy_from_slice(row);
        }
        out
    };
    PetriNet {
        m,
        n,
        input: block(&p.input, &q.input),
        output: block(&p.output, &q.output),
    }
}

#[derive(Serialize, Deserialize)]
struct PetriJson {
    model: String,
    places: usize,
    transitions: usize,
    input: Vec<Vec<u64>>,
    output: Vec<Vec<u64>>,
}

impl TryFrom<PetriJson> for PetriNet {
    type Error = Error;

    fn try_from(j: PetriJson) -> Result<Self> {
        if j.model != "petri" {
            return Err(Error::ModelMismatch {
                expected: "petri".into(),
                found: j.model,
            });
        }
        PetriNet::new(j.places, j.transitions, j.input, j.output)
    }
}

impl From<PetriNet> for PetriJson {
    fn from(p: PetriNet) -> Self {
        PetriJson {
            model: "petri".into(),
            places: p.m,
            transitions: p.n,
            input: p.input,
            output: p.output,
        }
    }
}

/// The two-colored Petri net model over words in a place color and a
/// transition color. Each word position is a place or a transition, indexed
/// by order of occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PetriModel {
    place: Color,
    transition: Color,
}

impl Default for PetriModel {
    fn default() -> Self {
        PetriModel {
            place: "p".into(),
            transition: "t".into(),
        }
    }
}

impl PetriModel {
    pub fn new(place: impl Into<Color>, transition: impl Into<Color>) -> Self {
        PetriModel {
            place: place.into(),
            transition: transition.into(),
        }
    }

    pub fn place_color(&self) -> &Color {
        &self.place
    }

    pub fn transition_color(&self) -> &Color {
        &self.transition
    }

    fn counts(&self, w: &ColorWord) -> Result<(usize, usize)> {
        if let Some(c) = w
            .colors()
            .iter()
            .find(|c| **c != self.place && **c != self.transition)
        {
            return Err(Error::Unknown(format!(
                "color {c} is neither place nor transition"
            )));
        }
        Ok((w.count(&self.place), w.count(&self.transition)))
    }

    pub fn element(&self, word: ColorWord, net: PetriNet) -> Result<Colored<PetriNet>> {
        let (m, n) = self.counts(&word)?;
        if (m, n) != (net.m, net.n) {
            return Err(Error::ArityMismatch {
                expected: format!("({m}, {n})"),
                found: format!("({}, {})", net.m, net.n),
            });
        }
        Ok(Colored::new(word, net))
    }
}

impl NetworkModel for PetriModel {
    type Obj = ColorWord;
    type Net = Colored<PetriNet>;

    fn id(&self) -> String {
        "petri".into()
    }

    fn object(&self, g: &Self::Net) -> ColorWord {
        g.word.clone()
    }

    fn unit(&self, t: &ColorWord) -> Self::Net {
        let net = PetriNet::zero(t.count(&self.place), t.count(&self.transition));
        Colored::new(t.clone(), net)
    }

    fn overlay(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        if g.word != h.word {
            return Err(Error::ArityMismatch {
                expected: g.word.to_string(),
                found: h.word.to_string(),
            });
        }
        Ok(Colored::new(g.word.clone(), petri_overlay(&g.net, &h.net)?))
    }

    fn act(&self, sigma: &Permutation, g: &Self::Net) -> Result<Self::Net> {
        self.counts(&g.word)?;
        let split = g.word.restrictions(sigma)?;
        let empty = Permutation::identity(0);
        let s = split.get(&self.place).unwrap_or(&empty);
        let t = split.get(&self.transition).unwrap_or(&empty);
        Ok(Colored::new(g.word.permuted(sigma)?, g.net.permute(s, t)?))
    }

    fn djunion(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        Ok(Colored::new(
            g.word.concat(&h.word),
            petri_djunion(&g.net, &h.net),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn net(m: usize, n: usize, i: &[&[u64]], o: &[&[u64]]) -> PetriNet {
        PetriNet::new(
            m,
            n,
            i.iter().map(|r| r.to_vec()).collect(),
            o.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn shapes_are_validated() {
        assert!(PetriNet::new(1, 2, vec![vec![1]], vec![vec![0, 0]]).is_err());
        assert!(PetriNet::new(0, 0, vec![], vec![]).is_ok());
    }

    #[test]
    fn overlay_adds_entrywise() {
        let p = net(1, 1, &[&[1]], &[&[0]]);
        let q = net(1, 1, &[&[2]], &[&[1]]);
        assert_eq!(petri_overlay(&p, &q).unwrap(), net(1, 1, &[&[3]], &[&[1]]));
        assert_eq!(petri_overlay(&p, &PetriNet::zero(1, 1)).unwrap(), p);
        assert_eq!(petri_overlay(&q, &q).unwrap(), net(1, 1, &[&[4]], &[&[2]]));
        assert!(petri_overlay(&p, &PetriNet::zero(2, 1)).is_err());
    }

    #[test]
    fn djunion_is_block_diagonal() {
        let p = net(1, 1, &[&[2]], &[&[0]]);
        let q = net(1, 1, &[&[0]], &[&[1]]);
        assert_eq!(
            petri_djunion(&p, &q),
            net(2, 2, &[&[2, 0], &[0, 0]], &[&[0, 0], &[0, 1]])
        );
        assert_eq!(petri_djunion(&p, &PetriNet::zero(0, 0)), p);
        assert_eq!(
            petri_djunion(&PetriNet::zero(1, 2), &PetriNet::zero(2, 1)),
            PetriNet::zero(3, 3)
        );
    }

    #[test]
    fn action_moves_rows_and_columns() {
        let p = net(2, 1, &[&[1], &[0]], &[&[0], &[2]]);
        let swap = Permutation::from_images(&[2, 1]).unwrap();
        let moved = p.permute(&swap, &Permutation::identity(1)).unwrap();
        assert_eq!(moved, net(2, 1, &[&[0], &[1]], &[&[2], &[0]]));
    }

    #[test]
    fn word_action_factors_through_counts() {
        let model = PetriModel::default();
        let word: ColorWord = "p,t,p".parse().unwrap();
        let g = model
            .element(word, net(2, 1, &[&[1], &[0]], &[&[0], &[2]]))
            .unwrap();
        // send positions 1,2,3 to 3,1,2: word becomes t,p,p and places swap
        let sigma = Permutation::from_images(&[3, 1, 2]).unwrap();
        let h = model.act(&sigma, &g).unwrap();
        assert_eq!(h.word, "t,p,p".parse().unwrap());
        assert_eq!(h.net, net(2, 1, &[&[0], &[1]], &[&[2], &[0]]));
    }

    #[test]
    fn json_shape() {
        let p = net(2, 1, &[&[1], &[0]], &[&[0], &[2]]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(
            text,
            r#"{"model":"petri","places":2,"transitions":1,"input":[[1],[0]],"output":[[0],[2]]}"#
        );
        assert_eq!(serde_json::from_str::<PetriNet>(&text).unwrap(), p);
        assert!(serde_json::from_str::<PetriNet>(&text.replace("[[0],[2]]", "[[0]]")).is_err());
    }
}
