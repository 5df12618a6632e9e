use std::fmt::{self, Debug};
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{act_attributes, Algebra, AttributedNetwork};
use crate::error::{Error, Result};
use crate::netmodel::{SimpleGraph, SimpleGraphs};
use crate::operad::{NetworkOperad, Op};

/// A symmetric rule deciding which attribute pairs may be joined by an edge.
pub trait EdgePredicate<X> {
    fn allows(&self, a: &X, b: &X) -> bool;

    fn describe(&self) -> String;
}

/// Wraps a closure as a predicate; the closure must be symmetric.
#[derive(Clone)]
pub struct FnPredicate<F> {
    name: String,
    f: F,
}

impl<F> FnPredicate<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnPredicate { name: name.into(), f }
    }
}

impl<F> Debug for FnPredicate<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FnPredicate({})", self.name)
    }
}

impl<X, F: Fn(&X, &X) -> bool> EdgePredicate<X> for FnPredicate<F> {
    fn allows(&self, a: &X, b: &X) -> bool {
        (self.f)(a, b)
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl PlanarPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        PlanarPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        PlanarPoint {
            x: BigRational::from_integer(x.into()),
            y: BigRational::from_integer(y.into()),
        }
    }

    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Ok(PlanarPoint {
            x: parse_rational(x)?,
            y: parse_rational(y)?,
        })
    }

    pub fn distance_squared(&self, other: &PlanarPoint) -> BigRational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Display for PlanarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Parses an exact rational from `3`, `-1.25`, `2.5e-3` or `7/3`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Unknown(format!("not a rational number: {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - i32::try_from(frac.len()).map_err(|_| bad())?;
    let ten = BigRational::from_integer(10.into());
    let mut q = BigRational::from_integer(all);
    if scale >= 0 {
        q *= num_traits::pow(ten, scale as usize);
    } else {
        q /= num_traits::pow(ten, scale.unsigned_abs() as usize);
    }
    Ok(if neg { -q } else { q })
}

/// `d(x, y) ≤ L` for planar points, compared exactly as `d² ≤ L²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeLimit {
    limit: BigRational,
    limit_sq: BigRational,
}

impl RangeLimit {
    pub fn new(limit: BigRational) -> Result<Self> {
        if limit.is_negative() {
            return Err(Error::Constraint(format!("negative range {limit}")));
        }
        Ok(RangeLimit {
            limit_sq: &limit * &limit,
            limit,
        })
    }

    pub fn limit(&self) -> &BigRational {
        &self.limit
    }
}

impl EdgePredicate<PlanarPoint> for RangeLimit {
    fn allows(&self, a: &PlanarPoint, b: &PlanarPoint) -> bool {
        a.distance_squared(b) <= self.limit_sq
    }

    fn describe(&self) -> String {
        format!("range<={}", self.limit)
    }
}

/// `τ_p`: removes exactly the edges `{i, j}` with `p(x(i), x(j))` false.
pub fn enforce_predicate<X, P: EdgePredicate<X> + ?Sized>(
    p: &P,
    a: &AttributedNetwork<SimpleGraph, X>,
) -> AttributedNetwork<SimpleGraph, X>
where
    X: Clone,
{
    let mut net = a.net.clone();
    net.retain(|i, j| p.allows(&a.attrs[i - 1], &a.attrs[j - 1]));
    AttributedNetwork {
        net,
        attrs: a.attrs.clone(),
    }
}

/// `α_p = τ_p ∘ α_X` on inputs that already satisfy the predicate.
pub fn act_predicate<X, P>(
    p: &P,
    f: &Op<SimpleGraphs>,
    items: &[AttributedNetwork<SimpleGraph, X>],
) -> Result<AttributedNetwork<SimpleGraph, X>>
where
    X: Clone,
    P: EdgePredicate<X> + ?Sized,
{
    for (slot, a) in items.iter().enumerate() {
        check_predicate(p, a).map_err(|e| Error::Constraint(format!("input {}: {e}", slot + 1)))?;
    }
    Ok(enforce_predicate(p, &act_attributes(&SimpleGraphs, f, items)?))
}

fn check_predicate<X, P: EdgePredicate<X> + ?Sized>(
    p: &P,
    a: &AttributedNetwork<SimpleGraph, X>,
) -> Result<()> {
    if a.attrs.len() != a.net.n() {
        return Err(Error::ArityMismatch {
            expected: format!("{} attributes", a.net.n()),
            found: a.attrs.len().to_string(),
        });
    }
    match a
        .net
        .edges()
        .find(|&(i, j)| !p.allows(&a.attrs[i - 1], &a.attrs[j - 1]))
    {
        Some((i, j)) => Err(Error::Constraint(format!(
            "edge {i}-{j} violates {}",
            p.describe()
        ))),
        None => Ok(()),
    }
}

/// `A_p`: attributed simple graphs whose edges all satisfy `p`.
#[derive(Clone, Debug)]
pub struct PredicateAlgebra<P, X> {
    operad: NetworkOperad<SimpleGraphs>,
    predicate: P,
    _attr: PhantomData<fn() -> X>,
}

impl<P: EdgePredicate<X>, X> PredicateAlgebra<P, X> {
    pub fn new(predicate: P) -> Self {
        PredicateAlgebra {
            operad: NetworkOperad::new(SimpleGraphs),
            predicate,
            _attr: PhantomData,
        }
    }

    pub fn predicate(&self) -> &P {
        &self.predicate
    }

    /// Builds an element, refusing graphs with forbidden edges.
    pub fn element(&self, net: SimpleGraph, attrs: Vec<X>) -> Result<AttributedNetwork<SimpleGraph, X>> {
        let a = AttributedNetwork { net, attrs };
        check_predicate(&self.predicate, &a)?;
        Ok(a)
    }
}

impl<P, X> Algebra for PredicateAlgebra<P, X>
where
    P: EdgePredicate<X>,
    X: Clone + PartialEq + Debug,
{
    type Model = SimpleGraphs;
    type Elem = AttributedNetwork<SimpleGraph, X>;

    fn operad(&self) -> &NetworkOperad<SimpleGraphs> {
        &self.operad
    }

    fn name(&self) -> String {
        format!("predicate[{}]", self.predicate.describe())
    }

    fn object(&self, a: &Self::Elem) -> usize {
        a.net.n()
    }

    fn validate(&self, a: &Self::Elem) -> Result<()> {
        check_predicate(&self.predicate, a)
    }

    fn act(&self, f: &Op<SimpleGraphs>, items: &[Self::Elem]) -> Result<Self::Elem> {
        act_predicate(&self.predicate, f, items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::Profile;
    use crate::perm::Permutation;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn sg(n: usize, e: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(q("1.5"), BigRational::new(3.into(), 2.into()));
        assert_eq!(q("-0.25"), BigRational::new((-1).into(), 4.into()));
        assert_eq!(q("7/3"), BigRational::new(7.into(), 3.into()));
        assert_eq!(q("2.5e-1"), BigRational::new(1.into(), 4.into()));
        assert_eq!(q("3E2"), BigRational::from_integer(300.into()));
        assert_eq!(q(".5"), BigRational::new(1.into(), 2.into()));
        for bad in ["", "-", "1.2.3", "1/0", "abc", "1e"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn range_is_inclusive() {
        let p = RangeLimit::new(q("1")).unwrap();
        assert!(p.allows(&PlanarPoint::from_ints(0, 0), &PlanarPoint::from_ints(0, 1)));
        assert!(!p.allows(&PlanarPoint::from_ints(0, 0), &PlanarPoint::from_ints(1, 1)));
        assert!(RangeLimit::new(q("-1")).is_err());
    }

    #[test]
    fn enforcement_examples() {
        let far = AttributedNetwork {
            net: sg(2, &[(1, 2)]),
            attrs: vec![PlanarPoint::from_ints(0, 0), PlanarPoint::from_ints(0, 2)],
        };
        let p = RangeLimit::new(q("1")).unwrap();
        assert_eq!(enforce_predicate(&p, &far).net, sg(2, &[]));

        let all = FnPredicate::new("true", |_: &u8, _: &u8| true);
        let a = AttributedNetwork {
            net: sg(3, &[(1, 2), (1, 3)]),
            attrs: vec![1u8, 2, 3],
        };
        assert_eq!(enforce_predicate(&all, &a), a);
        let not_13 = FnPredicate::new("not13", |x: &u8, y: &u8| (x.min(y), x.max(y)) != (&1, &3));
        let once = enforce_predicate(&not_13, &a);
        assert_eq!(once.net, sg(3, &[(1, 2)]));
        assert_eq!(enforce_predicate(&not_13, &once), once);
    }

    #[test]
    fn collinear_points_keep_short_edges() {
        let alg = PredicateAlgebra::new(RangeLimit::new(q("1")).unwrap());
        let f = alg
            .operad()
            .make_operation(
                Profile::new(vec![1, 1, 1], 3),
                Permutation::identity(3),
                sg(3, &[(1, 2), (1, 3), (2, 3)]),
            )
            .unwrap();
        let items: Vec<_> = (0..3)
            .map(|y| {
                alg.element(sg(1, &[]), vec![PlanarPoint::from_ints(0, y)])
                    .unwrap()
            })
            .collect();
        assert_eq!(alg.act(&f, &items).unwrap().net, sg(3, &[(1, 2), (2, 3)]));
    }

    #[test]
    fn constrained_inputs_are_required() {
        let alg = PredicateAlgebra::new(RangeLimit::new(q("1")).unwrap());
        let bad = AttributedNetwork {
            net: sg(2, &[(1, 2)]),
            attrs: vec![PlanarPoint::from_ints(0, 0), PlanarPoint::from_ints(5, 0)],
        };
        assert!(alg.element(bad.net.clone(), bad.attrs.clone()).is_err());
        let id = alg.operad().identity_op(&2);
        assert!(matches!(alg.act(&id, &[bad]), Err(Error::Constraint(_))));
    }
}
