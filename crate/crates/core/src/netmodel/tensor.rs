use super::NetworkModel;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `F ⊗ F'`: pairs of networks over the same type, with every structure map
/// applied componentwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<A, B> {
    pub left: A,
    pub right: B,
}

impl<A, B> Tensor<A, B> {
    pub fn new(left: A, right: B) -> Self {
        Tensor { left, right }
    }
}

impl<A, B> NetworkModel for Tensor<A, B>
where
    A: NetworkModel,
    B: NetworkModel<Obj = A::Obj>,
{
    type Obj = A::Obj;
    type Net = (A::Net, B::Net);

    fn id(&self) -> String {
        format!("{}*{}", self.left.id(), self.right.id())
    }

    fn object(&self, g: &Self::Net) -> A::Obj {
        self.left.object(&g.0)
    }

    fn unit(&self, t: &A::Obj) -> Self::Net {
        (self.left.unit(t), self.right.unit(t))
    }

    fn overlay(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        Ok((self.left.overlay(&g.0, &h.0)?, self.right.overlay(&g.1, &h.1)?))
    }

    fn act(&self, sigma: &Permutation, g: &Self::Net) -> Result<Self::Net> {
        Ok((self.left.act(sigma, &g.0)?, self.right.act(sigma, &g.1)?))
    }

    fn djunion(&self, g: &Self::Net, h: &Self::Net) -> Result<Self::Net> {
        Ok((self.left.djunion(&g.0, &h.0)?, self.right.djunion(&g.1, &h.1)?))
    }
}

impl<A, B> Tensor<A, B>
where
    A: NetworkModel,
    B: NetworkModel<Obj = A::Obj>,
{
    /// Pairs two networks, checking that they share a type.
    pub fn pair(&self, a: A::Net, b: B::Net) -> Result<(A::Net, B::Net)> {
        let (ta, tb) = (self.left.object(&a), self.right.object(&b));
        if ta != tb {
            return Err(Error::ArityMismatch {
                expected: format!("{ta:?}"),
                found: format!("{tb:?}"),
            });
        }
        Ok((a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netmodel::{
        DirectedGraph, DirectedGraphs, Multigraph, Multigraphs, SimpleGraph, SimpleGraphs,
    };

    #[test]
    fn unit_is_pair_of_units() {
        let t = Tensor::new(DirectedGraphs, Multigraphs::MAX);
        assert_eq!(t.unit(&3), (DirectedGraphs.unit(&3), Multigraphs::MAX.unit(&3)));
        assert_eq!(t.id(), "dg*mg");
    }

    #[test]
    fn pairs_share_vertices() {
        let t = Tensor::new(DirectedGraphs, Multigraphs::MAX);
        let red = DirectedGraph::new(3, [(1, 2)]).unwrap();
        let blue = Multigraph::new(3, [(2, 3, 2)]).unwrap();
        let g = t.pair(red.clone(), blue.clone()).unwrap();
        let sigma = Permutation::from_images(&[2, 3, 1]).unwrap();
        let moved = t.act(&sigma, &g).unwrap();
        assert_eq!(moved.0, DirectedGraphs.act(&sigma, &red).unwrap());
        assert_eq!(moved.1, Multigraphs::MAX.act(&sigma, &blue).unwrap());
        assert!(t.pair(red, Multigraph::empty(2)).is_err());
    }

    #[test]
    fn colored_edges_as_tensor_power() {
        // SG^{⊗B} with |B| = 2
        let t = Tensor::new(SimpleGraphs, SimpleGraphs);
        let g = (SimpleGraph::new(2, [(1, 2)]).unwrap(), SimpleGraph::empty(2));
        let h = (SimpleGraph::empty(2), SimpleGraph::new(2, [(1, 2)]).unwrap());
        let both = t.overlay(&g, &h).unwrap();
        assert_eq!(both.0.edge_count(), 1);
        assert_eq!(both.1.edge_count(), 1);
    }
}
