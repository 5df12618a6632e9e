use std::fmt::Debug;
use std::marker::PhantomData;

use num_rational::BigRational;

use super::{act_attributes, Algebra, AttributedNetwork, PlanarPoint};
use crate::error::{Error, Result};
use crate::netmodel::{Multigraph, Multigraphs};
use crate::operad::{NetworkOperad, Op};

/// A symmetric cap on the number of edges between two attribute values.
pub trait EdgeBound<X> {
    fn bound(&self, a: &X, b: &X) -> u64;

    fn describe(&self) -> String;
}

/// Wraps a closure as a bound; the closure must be symmetric.
#[derive(Clone)]
pub struct FnBound<F> {
    name: String,
    f: F,
}

impl<F> FnBound<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnBound { name: name.into(), f }
    }
}

impl<F> Debug for FnBound<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FnBound({})", self.name)
    }
}

impl<X, F: Fn(&X, &X) -> u64> EdgeBound<X> for FnBound<F> {
    fn bound(&self, a: &X, b: &X) -> u64 {
        (self.f)(a, b)
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// Two radio ranges `L2 ≤ L1`: two edges within `L2`, one edge within
/// `L1`, none beyond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRange {
    long: BigRational,
    short: BigRational,
    long_sq: BigRational,
    short_sq: BigRational,
}

impl TwoRange {
    pub fn new(long: BigRational, short: BigRational) -> Result<Self> {
        if short > long || short < BigRational::default() {
            return Err(Error::Constraint(format!(
                "need 0 <= L2 <= L1, got L1 = {long}, L2 = {short}"
            )));
        }
        Ok(TwoRange {
            long_sq: &long * &long,
            short_sq: &short * &short,
            long,
            short,
        })
    }
}

impl EdgeBound<PlanarPoint> for TwoRange {
    fn bound(&self, a: &PlanarPoint, b: &PlanarPoint) -> u64 {
        let d = a.distance_squared(b);
        if d > self.long_sq {
            0
        } else if d > self.short_sq {
            1
        } else {
            2
        }
    }

    fn describe(&self) -> String {
        format!("two-range({},{})", self.long, self.short)
    }
}

fn check_bound<X, B: EdgeBound<X> + ?Sized>(b: &B, a: &AttributedNetwork<Multigraph, X>) -> Result<()> {
    if a.attrs.len() != a.net.n() {
        return Err(Error::ArityMismatch {
            expected: format!("{} attributes", a.net.n()),
            found: a.attrs.len().to_string(),
        });
    }
    for (i, j, k) in a.net.entries() {
        let cap = b.bound(&a.attrs[i - 1], &a.attrs[j - 1]);
        if k > cap {
            return Err(Error::Constraint(format!(
                "edge {i}-{j} has multiplicity {k} above {} bound {cap}",
                b.describe()
            )));
        }
    }
    Ok(())
}

/// `α_b`: acts as `α_X` on `MG⁺`, then clamps every multiplicity to
/// `min(g(i, j), b(x(i), x(j)))`.
pub fn act_bounded<X, B>(
    b: &B,
    f: &Op<Multigraphs>,
    items: &[AttributedNetwork<Multigraph, X>],
) -> Result<AttributedNetwork<Multigraph, X>>
where
    X: Clone,
    B: EdgeBound<X> + ?Sized,
{
    if f.model() != "mgplus" {
        return Err(Error::ModelMismatch {
            expected: "mgplus".into(),
            found: f.model().to_string(),
        });
    }
    for (slot, a) in items.iter().enumerate() {
        check_bound(b, a).map_err(|e| Error::Constraint(format!("input {}: {e}", slot + 1)))?;
    }
    let raw = act_attributes(&Multigraphs::SUM, f, items)?;
    let attrs = raw.attrs;
    let net = raw
        .net
        .map_mult(|i, j, k| k.min(b.bound(&attrs[i - 1], &attrs[j - 1])));
    Ok(AttributedNetwork { net, attrs })
}

/// `A_b`: attributed `MG⁺` networks with `g(i, j) ≤ b(x(i), x(j))`.
#[derive(Clone, Debug)]
pub struct BoundedAlgebra<B, X> {
    operad: NetworkOperad<Multigraphs>,
    bound: B,
    _attr: PhantomData<fn() -> X>,
}

impl<B: EdgeBound<X>, X> BoundedAlgebra<B, X> {
    pub fn new(bound: B) -> Self {
        BoundedAlgebra {
            operad: NetworkOperad::new(Multigraphs::SUM),
            bound,
            _attr: PhantomData,
        }
    }

    pub fn bound(&self) -> &B {
        &self.bound
    }

    pub fn element(&self, net: Multigraph, attrs: Vec<X>) -> Result<AttributedNetwork<Multigraph, X>> {
        let a = AttributedNetwork { net, attrs };
        check_bound(&self.bound, &a)?;
        Ok(a)
    }
}

impl<B, X> Algebra for BoundedAlgebra<B, X>
where
    B: EdgeBound<X>,
    X: Clone + PartialEq + Debug,
{
    type Model = Multigraphs;
    type Elem = AttributedNetwork<Multigraph, X>;

    fn operad(&self) -> &NetworkOperad<Multigraphs> {
        &self.operad
    }

    fn name(&self) -> String {
        format!("bounded[{}]", self.bound.describe())
    }

    fn object(&self, a: &Self::Elem) -> usize {
        a.net.n()
    }

    fn validate(&self, a: &Self::Elem) -> Result<()> {
        check_bound(&self.bound, a)
    }

    fn act(&self, f: &Op<Multigraphs>, items: &[Self::Elem]) -> Result<Self::Elem> {
        act_bounded(&self.bound, f, items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;
    use crate::operad::Profile;
    use crate::perm::Permutation;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn mg(n: usize, e: &[(usize, usize, u64)]) -> Multigraph {
        Multigraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn two_range_levels() {
        let b = TwoRange::new(q("2"), q("1")).unwrap();
        let o = PlanarPoint::from_ints(0, 0);
        assert_eq!(b.bound(&o, &PlanarPoint::parse("1.5", "0").unwrap()), 1);
        assert_eq!(b.bound(&o, &PlanarPoint::from_ints(1, 0)), 2);
        assert_eq!(b.bound(&o, &PlanarPoint::from_ints(2, 0)), 1);
        assert_eq!(b.bound(&o, &PlanarPoint::from_ints(2, 1)), 0);
        assert!(TwoRange::new(q("1"), q("2")).is_err());
    }

    #[test]
    fn overlaid_multiplicity_is_clamped() {
        let alg = BoundedAlgebra::new(TwoRange::new(q("2"), q("1")).unwrap());
        let pts = vec![
            PlanarPoint::from_ints(0, 0),
            PlanarPoint::parse("1.5", "0").unwrap(),
        ];
        let f = alg
            .operad()
            .make_operation(
                Profile::new(vec![2], 2),
                Permutation::identity(2),
                mg(2, &[(1, 2, 1)]),
            )
            .unwrap();
        let h = alg.element(mg(2, &[(1, 2, 1)]), pts.clone()).unwrap();
        let out = alg.act(&f, &[h]).unwrap();
        assert_eq!(out.net.multiplicity(1, 2), 1);
        assert_eq!(out.attrs, pts);
    }

    #[test]
    fn explicit_bound_table() {
        let table = FnBound::new("two", |_: &u8, _: &u8| 2u64);
        let alg = BoundedAlgebra::new(table);
        let f = alg
            .operad()
            .make_operation(
                Profile::new(vec![1, 1], 2),
                Permutation::identity(2),
                mg(2, &[(1, 2, 3)]),
            )
            .unwrap();
        let one = |x: u8| alg.element(mg(1, &[]), vec![x]).unwrap();
        assert_eq!(alg.act(&f, &[one(0), one(1)]).unwrap().net, mg(2, &[(1, 2, 2)]));

        let zero = BoundedAlgebra::new(FnBound::new("zero", |_: &u8, _: &u8| 0u64));
        let g = zero.act(&f, &[one(0), one(1)]).unwrap();
        assert_eq!(g.net.entries().count(), 0);
        assert!(zero.element(mg(2, &[(1, 2, 1)]), vec![0, 1]).is_err());
    }

    #[test]
    fn only_mgplus_operations() {
        let alg = BoundedAlgebra::new(FnBound::new("one", |_: &u8, _: &u8| 1u64));
        let f = NetworkOperad::new(Multigraphs::MAX).identity_op(&1);
        let a = alg.element(mg(1, &[]), vec![0]).unwrap();
        assert!(matches!(alg.act(&f, &[a]), Err(Error::ModelMismatch { .. })));
    }
}
