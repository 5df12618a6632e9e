use std::collections::BTreeMap;

use super::{act_degree, check_pair, same_arity, unordered, ModelMorphism, NetworkModel};
use crate::error::{Error, Result};
use crate::monoid::{Elem, Monoid, MonoidHom};
use crate::perm::Permutation;

/// A labeling of the edges of the complete graph on `{1, ..., n}` by
/// elements of a monoid. Edges labeled with the unit are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    n: usize,
    monoid: Monoid,
    labels: BTreeMap<(usize, usize), Elem>,
}

impl EdgeLabeling {
    pub fn new(
        n: usize,
        monoid: Monoid,
        entries: impl IntoIterator<Item = (usize, usize, Elem)>,
    ) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for (i, j, x) in entries {
            let e = check_pair(n, i, j, false)?;
            monoid.check(x)?;
            if labels.contains_key(&e) {
                return Err(Error::InvalidNetwork(format!("edge {{{i},{j}}} labeled twice")));
            }
            if x != monoid.unit() {
                labels.insert(e, x);
            }
        }
        Ok(EdgeLabeling { n, monoid, labels })
    }

    pub fn unit(n: usize, monoid: Monoid) -> Self {
        EdgeLabeling {
            n,
            monoid,
            labels: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    /// `g({i, j})`.
    pub fn label(&self, i: usize, j: usize) -> Elem {
        self.labels
            .get(&unordered(i, j))
            .copied()
            .unwrap_or_else(|| self.monoid.unit())
    }

    /// Non-unit labels in key order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Elem)> + '_ {
        self.labels.iter().map(|(&(i, j), &x)| (i, j, x))
    }

    /// Applies a monoid homomorphism to every label.
    pub fn map_labels(&self, f: &MonoidHom) -> Result<EdgeLabeling> {
        if f.source() != &self.monoid {
            return Err(Error::ModelMismatch {
                expected: f.source().id(),
                found: self.monoid.id(),
            });
        }
        let target = f.target().clone();
        let unit = target.unit();
        // f preserves the unit, so unstored edges stay unstored
        let mut labels = BTreeMap::new();
        for (&e, &x) in &self.labels {
            let y = f.apply(x)?;
            if y != unit {
                labels.insert(e, y);
            }
        }
        Ok(EdgeLabeling {
            n: self.n,
            monoid: target,
            labels,
        })
    }
}

/// `Γ_M`: edge labelings by a monoid `M`, overlaid pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma {
    monoid: Monoid,
}

impl Gamma {
    pub fn new(monoid: Monoid) -> Self {
        Gamma { monoid }
    }

    pub fn monoid(&self) -> &Monoid {
        &self.monoid
    }

    fn own(&self, g: &EdgeLabeling) -> Result<()> {
        if g.monoid == self.monoid {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                expected: self.id(),
                found: format!("gamma:{}", g.monoid.id()),
            })
        }
    }
}

impl NetworkModel for Gamma {
    type Obj = usize;
    type Net = EdgeLabeling;

    fn id(&self) -> String {
        format!("gamma:{}", self.monoid.id())
    }

    fn object(&self, g: &EdgeLabeling) -> usize {
        g.n
    }

    fn unit(&self, n: &usize) -> EdgeLabeling {
        EdgeLabeling::unit(*n, self.monoid.clone())
    }

    fn overlay(&self, g: &EdgeLabeling, h: &EdgeLabeling) -> Result<EdgeLabeling> {
        self.own(g)?;
        self.own(h)?;
        same_arity(g.n, h.n)?;
        let unit = self.monoid.unit();
        let mut labels = BTreeMap::new();
        let keys = g.labels.keys().chain(h.labels.keys());
        for &e in keys {
            if labels.contains_key(&e) {
                continue;
            }
            let a = g.labels.get(&e).copied().unwrap_or(unit);
            let b = h.labels.get(&e).copied().unwrap_or(unit);
            labels.insert(e, self.monoid.combine(a, b)?);
        }
        labels.retain(|_, x| *x != unit);
        Ok(EdgeLabeling {
            n: g.n,
            monoid: self.monoid.clone(),
            labels,
        })
    }

    fn act(&self, sigma: &Permutation, g: &EdgeLabeling) -> Result<EdgeLabeling> {
        self.own(g)?;
        act_degree(sigma, g.n)?;
        // σ(g)(e) = g(σ⁻¹(e)): the label on {i,j} moves to {σ(i),σ(j)}
        let labels = g
            .labels
            .iter()
            .map(|(&(i, j), &x)| (unordered(sigma.image(i), sigma.image(j)), x))
            .collect();
        Ok(EdgeLabeling {
            n: g.n,
            monoid: self.monoid.clone(),
            labels,
        })
    }

    fn djunion(&self, g: &EdgeLabeling, h: &EdgeLabeling) -> Result<EdgeLabeling> {
        self.own(g)?;
        self.own(h)?;
        let m = g.n;
        let mut labels = g.labels.clone();
        labels.extend(h.labels.iter().map(|(&(i, j), &x)| ((i + m, j + m), x)));
        Ok(EdgeLabeling {
            n: m + h.n,
            monoid: self.monoid.clone(),
            labels,
        })
    }
}

/// `Γ_f : Γ_M → Γ_M'`, applying a monoid homomorphism to every edge label.
#[derive(Clone, Debug)]
pub struct GammaHom {
    hom: MonoidHom,
    source: Gamma,
    target: Gamma,
}

impl GammaHom {
    pub fn new(hom: MonoidHom) -> Self {
        GammaHom {
            source: Gamma::new(hom.source().clone()),
            target: Gamma::new(hom.target().clone()),
            hom,
        }
    }

    pub fn hom(&self) -> &MonoidHom {
        &self.hom
    }
}

impl ModelMorphism for GammaHom {
    type Source = Gamma;
    type Target = Gamma;

    fn source(&self) -> &Gamma {
        &self.source
    }

    fn target(&self) -> &Gamma {
        &self.target
    }

    fn map_object(&self, t: &usize) -> usize {
        *t
    }

    fn apply(&self, g: &EdgeLabeling) -> Result<EdgeLabeling> {
        g.map_labels(&self.hom)
    }

    fn name(&self) -> String {
        format!("gamma[{}]", self.hom.name())
    }
}
