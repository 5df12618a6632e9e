use std::collections::BTreeMap;

use super::{Color, ColorWord};
use crate::error::{Error, Result};
use crate::netmodel::{ModelMorphism, NetworkModel, Object};
use crate::perm::Permutation;

/// A network tagged with the color word it lives over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colored<N> {
    pub word: ColorWord,
    pub net: N,
}

impl<N> Colored<N> {
    pub fn new(word: ColorWord, net: N) -> Self {
        Colored { word, net }
    }
}

fn same_word(a: &ColorWord, b: &ColorWord) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ArityMismatch {
            expected: a.to_string(),
            found: b.to_string(),
        })
    }
}

/// `F ∘ !_*`: a one-colored model read over color words by forgetting colors.
#[derive(Clone, Debug)]
pub struct Recolored<F> {
    inner: F,
    palette: Vec<Color>,
}

impl<F: NetworkModel<Obj = usize>> Recolored<F> {
    pub fn new<S: Into<Color>>(inner: F, palette: impl IntoIterator<Item = S>) -> Self {
        Recolored {
            inner,
            palette: palette.into_iter().map(Into::into).collect(),
        }
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }

    pub fn palette(&self) -> &[Color] {
        &self.palette
    }

    pub fn element(&self, word: ColorWord, net: F::Net) -> Result<Colored<F::Net>> {
        if let Some(c) = word.colors().iter().find(|c| !self.palette.contains(c)) {
            return Err(Error::Unknown(format!("color {c} outside the palette")));
        }
        let n = self.inner.object(&net);
        if n != word.len() {
            return Err(Error::ArityMismatch {
                expected: word.len().to_string(),
                found: n.to_string(),
            });
        }
        Ok(Colored { word, net })
    }
}

impl<F: NetworkModel<Obj = usize>> NetworkModel for Recolored<F> {
    type Obj = ColorWord;
    type Net = Colored<F::Net>;

    fn id(&self) -> String {
        format!("colored({})", self.inner.id())
    }

    fn object(&self, g: &Self::Net) -> ColorWord {
        g.word.clone()
    }

    fn unit(&self, t: &ColorWord) -> Self::Net {
        Colored::new(t.clone(), self.inner.unit(&t.len()))
    }

    fn overlay(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        same_word(&g.word, &h.word)?;
        Ok(Colored::new(g.word.clone(), self.inner.overlay(&g.net, &h.net)?))
    }

    fn act(&self, sigma: &Permutation, g: &Self::Net) -> Result<Self::Net> {
        Ok(Colored::new(
            g.word.permuted(sigma)?,
            self.inner.act(sigma, &g.net)?,
        ))
    }

    fn djunion(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        Ok(Colored::new(
            g.word.concat(&h.word),
            self.inner.djunion(&g.net, &h.net)?,
        ))
    }
}

/// `∏_c F_c ∘ (count of c)`: one network per color, on the vertices of that
/// color numbered by order of occurrence. Edges never join different colors.
#[derive(Clone, Debug)]
pub struct PerColor<F> {
    components: BTreeMap<Color, F>,
}

impl<F: NetworkModel<Obj = usize>> PerColor<F> {
    pub fn new(components: impl IntoIterator<Item = (Color, F)>) -> Self {
        PerColor {
            components: components.into_iter().collect(),
        }
    }

    pub fn palette(&self) -> impl Iterator<Item = &Color> {
        self.components.keys()
    }

    pub fn component(&self, c: &str) -> Option<&F> {
        self.components.get(c)
    }

    fn check_word(&self, w: &ColorWord) -> Result<()> {
        match w.colors().iter().find(|c| !self.components.contains_key(*c)) {
            Some(c) => Err(Error::Unknown(format!("color {c} outside the palette"))),
            None => Ok(()),
        }
    }

    /// Builds an element from per-color networks; missing colors get the unit.
    pub fn element(
        &self,
        word: ColorWord,
        parts: impl IntoIterator<Item = (Color, F::Net)>,
    ) -> Result<Colored<BTreeMap<Color, F::Net>>> {
        self.check_word(&word)?;
        let mut out = self.unit(&word);
        for (c, net) in parts {
            let model = self
                .components
                .get(&c)
                .ok_or_else(|| Error::Unknown(format!("color {c} outside the palette")))?;
            let n = model.object(&net);
            if n != word.count(&c) {
                return Err(Error::ArityMismatch {
                    expected: word.count(&c).to_string(),
                    found: n.to_string(),
                });
            }
            out.net.insert(c, net);
        }
        Ok(out)
    }
}

impl<F: NetworkModel<Obj = usize>> NetworkModel for PerColor<F> {
    type Obj = ColorWord;
    type Net = Colored<BTreeMap<Color, F::Net>>;

    fn id(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(c, f)| format!("{c}:{}", f.id()))
            .collect();
        format!("percolor({})", parts.join(","))
    }

    fn object(&self, g: &Self::Net) -> ColorWord {
        g.word.clone()
    }

    fn unit(&self, t: &ColorWord) -> Self::Net {
        let parts = self
            .components
            .iter()
            .map(|(c, f)| (c.clone(), f.unit(&t.count(c))))
            .collect();
        Colored::new(t.clone(), parts)
    }

    fn overlay(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        same_word(&g.word, &h.word)?;
        let mut parts = BTreeMap::new();
        for (c, f) in &self.components {
            parts.insert(c.clone(), f.overlay(&g.net[c], &h.net[c])?);
        }
        Ok(Colored::new(g.word.clone(), parts))
    }

    fn act(&self, sigma: &Permutation, g: &Self::Net) -> Result<Self::Net> {
        self.check_word(&g.word)?;
        let restricted = g.word.restrictions(sigma)?;
        let empty = Permutation::identity(0);
        let mut parts = BTreeMap::new();
        for (c, f) in &self.components {
            let s = restricted.get(c).unwrap_or(&empty);
            parts.insert(c.clone(), f.act(s, &g.net[c])?);
        }
        Ok(Colored::new(g.word.permuted(sigma)?, parts))
    }

    fn djunion(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        let mut parts = BTreeMap::new();
        for (c, f) in &self.components {
            parts.insert(c.clone(), f.djunion(&g.net[c], &h.net[c])?);
        }
        Ok(Colored::new(g.word.concat(&h.word), parts))
    }
}

/// A one-colored model viewed as a model over words in a single color.
#[derive(Clone, Debug)]
pub struct OneColor<F> {
    inner: F,
    color: Color,
}

impl<F: NetworkModel<Obj = usize>> OneColor<F> {
    pub fn new(inner: F, color: impl Into<Color>) -> Self {
        OneColor {
            inner,
            color: color.into(),
        }
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }

    pub fn color(&self) -> &Color {
        &self.color
    }
}

impl<F: NetworkModel<Obj = usize>> NetworkModel for OneColor<F> {
    type Obj = ColorWord;
    type Net = F::Net;

    fn id(&self) -> String {
        self.inner.id()
    }

    fn object(&self, g: &F::Net) -> ColorWord {
        ColorWord::new(vec![self.color.clone(); self.inner.object(g)])
    }

    fn unit(&self, t: &ColorWord) -> F::Net {
        self.inner.unit(&t.len())
    }

    fn overlay(&self, g: &F::Net, h: &F::Net) -> Result<F::Net> {
        self.inner.overlay(g, h)
    }

    fn act(&self, sigma: &Permutation, g: &F::Net) -> Result<F::Net> {
        self.inner.act(sigma, g)
    }

    fn djunion(&self, g: &F::Net, h: &F::Net) -> Result<F::Net> {
        self.inner.djunion(g, h)
    }
}

/// `G = F' ∘ f_*` for a color map `f : C → C'`. Colors outside the domain of
/// `f` are left unchanged.
#[derive(Clone, Debug)]
pub struct Pullback<F> {
    f: BTreeMap<Color, Color>,
    inner: F,
}

impl<F: NetworkModel<Obj = ColorWord>> Pullback<F> {
    pub fn color_map(&self) -> &BTreeMap<Color, Color> {
        &self.f
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }

    pub fn push(&self, w: &ColorWord) -> ColorWord {
        ColorWord::new(w.colors().iter().map(|c| self.f.get(c).unwrap_or(c).clone()))
    }

    /// Tags a network of the target model with a word over the source colors.
    pub fn element(&self, word: ColorWord, net: F::Net) -> Result<Colored<F::Net>> {
        let pushed = self.push(&word);
        let found = self.inner.object(&net);
        if pushed != found {
            return Err(Error::ArityMismatch {
                expected: pushed.to_string(),
                found: found.to_string(),
            });
        }
        Ok(Colored { word, net })
    }
}

impl<F: NetworkModel<Obj = ColorWord>> NetworkModel for Pullback<F> {
    type Obj = ColorWord;
    type Net = Colored<F::Net>;

    fn id(&self) -> String {
        let parts: Vec<String> = self.f.iter().map(|(a, b)| format!("{a}>{b}")).collect();
        format!("pullback[{}]({})", parts.join(","), self.inner.id())
    }

    fn object(&self, g: &Self::Net) -> ColorWord {
        g.word.clone()
    }

    fn unit(&self, t: &ColorWord) -> Self::Net {
        Colored::new(t.clone(), self.inner.unit(&self.push(t)))
    }

    fn overlay(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        same_word(&g.word, &h.word)?;
        Ok(Colored::new(g.word.clone(), self.inner.overlay(&g.net, &h.net)?))
    }

    fn act(&self, sigma: &Permutation, g: &Self::Net) -> Result<Self::Net> {
        Ok(Colored::new(
            g.word.permuted(sigma)?,
            self.inner.act(sigma, &g.net)?,
        ))
    }

    fn djunion(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        Ok(Colored::new(
            g.word.concat(&h.word),
            self.inner.djunion(&g.net, &h.net)?,
        ))
    }
}

/// The morphism `G → F'` whose components are identities; on types it
/// recolors the word by `f`.
#[derive(Clone, Debug)]
pub struct ColorChange<F> {
    source: Pullback<F>,
    target: F,
}

/// Pulls `target` back along `f`, returning the comparison morphism; its
/// source is the pulled-back model.
pub fn color_change<F>(f: BTreeMap<Color, Color>, target: F) -> ColorChange<F>
where
    F: NetworkModel<Obj = ColorWord> + Clone,
{
    ColorChange {
        source: Pullback {
            f,
            inner: target.clone(),
        },
        target,
    }
}

impl<F: NetworkModel<Obj = ColorWord>> ModelMorphism for ColorChange<F> {
    type Source = Pullback<F>;
    type Target = F;

    fn source(&self) -> &Pullback<F> {
        &self.source
    }

    fn target(&self) -> &F {
        &self.target
    }

    fn map_object(&self, t: &ColorWord) -> ColorWord {
        self.source.push(t)
    }

    fn apply(&self, g: &Colored<F::Net>) -> Result<F::Net> {
        Ok(g.net.clone())
    }

    fn name(&self) -> String {
        format!("recolor[{}]", self.source.id())
    }
}
