//! Inequality descriptions of the four poset polytopes, lattice-point and
//! left enriched P-partition enumeration, vertices, and Ehrhart polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::enriched::{enumerate_signed_antichains, enumerate_signed_filters, preceq_maximal, SignVector};
use crate::error::{Error, Result};
use crate::lp::hull_membership;
use crate::polynomial::Polynomial;
use crate::poset::{ChainKind, Poset, Region};
use crate::rat::{rat, PointFn, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolytopeKind {
    OrderPoly,
    ChainPoly,
    EnrichedOrderPoly,
    EnrichedChainPoly,
}

impl PolytopeKind {
    pub const ALL: [PolytopeKind; 4] = [
        PolytopeKind::OrderPoly,
        PolytopeKind::ChainPoly,
        PolytopeKind::EnrichedOrderPoly,
        PolytopeKind::EnrichedChainPoly,
    ];

    pub fn is_enriched(self) -> bool {
        matches!(self, PolytopeKind::EnrichedOrderPoly | PolytopeKind::EnrichedChainPoly)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            PolytopeKind::OrderPoly => "o",
            PolytopeKind::ChainPoly => "c",
            PolytopeKind::EnrichedOrderPoly => "eo",
            PolytopeKind::EnrichedChainPoly => "ec",
        }
    }

    /// Smallest coordinate of any lattice point in the unit polytope.
    fn low(self) -> i64 {
        if self.is_enriched() {
            -1
        } else {
            0
        }
    }
}

impl fmt::Display for PolytopeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for PolytopeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "o" | "order" => Ok(PolytopeKind::OrderPoly),
            "c" | "chain" => Ok(PolytopeKind::ChainPoly),
            "eo" | "enriched-order" => Ok(PolytopeKind::EnrichedOrderPoly),
            "ec" | "enriched-chain" => Ok(PolytopeKind::EnrichedChainPoly),
            other => Err(Error::InvalidArgument(format!("unknown polytope kind `{other}`"))),
        }
    }
}

/// Exact scalars the inequalities can be evaluated over.
pub trait Scalar: Clone + Ord + Zero + Signed + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn from_int(n: i64) -> Self;
}

impl Scalar for i64 {
    fn from_int(n: i64) -> Self {
        n
    }
}

impl Scalar for Rat {
    fn from_int(n: i64) -> Self {
        rat(n)
    }
}

/// One defining inequality `Σ c_v x(v) <= b` (or `Σ c_v |x(v)| <= b` when
/// `absolute`), where `b` is `m` for the `m`-th dilate, or `0` when
/// `homogeneous`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub terms: Vec<(usize, i64)>,
    pub absolute: bool,
    pub homogeneous: bool,
}

impl Inequality {
    fn linear(terms: Vec<(usize, i64)>) -> Inequality {
        Inequality { terms, absolute: false, homogeneous: false }
    }

    fn last_coordinate(&self) -> usize {
        self.terms.iter().map(|t| t.0).max().unwrap_or(0)
    }

    pub fn value<T: Scalar>(&self, x: &[T]) -> T {
        self.terms.iter().fold(T::zero(), |acc, &(v, c)| {
            let xv = if self.absolute { x[v].abs() } else { x[v].clone() };
            acc + T::from_int(c) * xv
        })
    }

    pub fn holds<T: Scalar>(&self, x: &[T], m: &T) -> bool {
        let rhs = if self.homogeneous { T::zero() } else { m.clone() };
        self.value(x) <= rhs
    }
}

/// Chain-functional coefficients: `T^±` for a top-down chain.
fn t_terms(chain: &[usize], last_sign: i64) -> Vec<(usize, i64)> {
    let r = chain.len();
    chain
        .iter()
        .enumerate()
        .map(|(i, &v)| if i + 1 == r { (v, last_sign << (r - 1)) } else { (v, -(1 << i)) })
        .collect()
}

/// The defining inequality system of a polytope of the given kind.
#[derive(Clone, Debug)]
pub struct Inequalities {
    pub kind: PolytopeKind,
    pub dim: usize,
    pub rows: Vec<Inequality>,
}

impl Inequalities {
    pub fn new(kind: PolytopeKind, p: &Poset) -> Result<Inequalities> {
        let d = p.len();
        let mut rows = Vec::new();
        match kind {
            PolytopeKind::OrderPoly => {
                for v in 0..d {
                    rows.push(Inequality { terms: vec![(v, -1)], absolute: false, homogeneous: true });
                    rows.push(Inequality::linear(vec![(v, 1)]));
                }
                for &(a, b) in p.cover_pairs() {
                    rows.push(Inequality { terms: vec![(a, 1), (b, -1)], absolute: false, homogeneous: true });
                }
            }
            PolytopeKind::ChainPoly => {
                for v in 0..d {
                    rows.push(Inequality { terms: vec![(v, -1)], absolute: false, homogeneous: true });
                }
                for c in p.chains_of(Region::All, ChainKind::Maximal)? {
                    rows.push(Inequality::linear(c.elems.iter().map(|&v| (v, 1)).collect()));
                }
            }
            PolytopeKind::EnrichedOrderPoly => {
                let maxes = p.maximal_elements();
                for c in p.chains_of(Region::All, ChainKind::Saturated)? {
                    if maxes.contains(c.top().expect("chains are nonempty")) {
                        rows.push(Inequality::linear(t_terms(&c.elems, 1)));
                    }
                }
                for c in p.chains_of(Region::All, ChainKind::Maximal)? {
                    rows.push(Inequality::linear(t_terms(&c.elems, -1)));
                }
            }
            PolytopeKind::EnrichedChainPoly => {
                for c in p.chains_of(Region::All, ChainKind::Maximal)? {
                    rows.push(Inequality {
                        terms: c.elems.iter().map(|&v| (v, 1)).collect(),
                        absolute: true,
                        homogeneous: false,
                    });
                }
            }
        }
        Ok(Inequalities { kind, dim: d, rows })
    }

    pub fn contains<T: Scalar>(&self, x: &[T], m: &T) -> bool {
        self.rows.iter().all(|r| r.holds(x, m))
    }

    /// Whether every non-homogeneous inequality is strict and every
    /// homogeneous one is strict as well.
    pub fn strictly_contains<T: Scalar>(&self, x: &[T], m: &T) -> bool {
        self.rows.iter().all(|r| {
            let rhs = if r.homogeneous { T::zero() } else { m.clone() };
            r.value(x) < rhs
        })
    }
}

/// Membership of `x` in the `m`-th dilate of the polytope.
pub fn membership(kind: PolytopeKind, p: &Poset, x: &PointFn, m: &Rat) -> Result<bool> {
    x.check_dim(p.len())?;
    if m.is_negative() {
        return Err(Error::InvalidArgument("dilation factor must be nonnegative".into()));
    }
    Ok(Inequalities::new(kind, p)?.contains(x.values(), m))
}

fn guard_box(p: &Poset, width: i64) -> Result<()> {
    let size = (width as u128).checked_pow(p.len() as u32).unwrap_or(u128::MAX);
    if size > p.limits().max_box {
        return Err(Error::SizeGuard { what: "lattice box size", size, limit: p.limits().max_box });
    }
    Ok(())
}

/// Depth-first scan of the box `[low, high]^d` in odometer order (coordinate 0
/// most significant), checking each constraint as soon as its last coordinate
/// is fixed.
fn scan_box<F>(d: usize, low: i64, high: i64, checks: &[Vec<usize>], mut ok: F, emit: &mut dyn FnMut(&[i64]))
where
    F: FnMut(usize, &[i64]) -> bool,
{
    let mut x = vec![0i64; d];
    fn rec<F: FnMut(usize, &[i64]) -> bool>(
        k: usize,
        x: &mut Vec<i64>,
        low: i64,
        high: i64,
        checks: &[Vec<usize>],
        ok: &mut F,
        emit: &mut dyn FnMut(&[i64]),
    ) {
        if k == x.len() {
            emit(x);
            return;
        }
        for val in low..=high {
            x[k] = val;
            if checks[k].iter().all(|&c| ok(c, &x[..])) {
                rec(k + 1, x, low, high, checks, ok, emit);
            }
        }
    }
    if d == 0 {
        emit(&x);
        return;
    }
    rec(0, &mut x, low, high, checks, &mut ok, emit);
}

fn scan_polytope(kind: PolytopeKind, p: &Poset, m: i64, emit: &mut dyn FnMut(&[i64])) -> Result<()> {
    if m < 0 {
        return Err(Error::InvalidArgument("dilation factor must be nonnegative".into()));
    }
    let low = kind.low() * m;
    guard_box(p, m - low + 1)?;
    let ineq = Inequalities::new(kind, p)?;
    let mut checks = vec![Vec::new(); p.len().max(1)];
    for (i, row) in ineq.rows.iter().enumerate() {
        checks[row.last_coordinate()].push(i);
    }
    scan_box(p.len(), low, m, &checks, |i, x| ineq.rows[i].holds(x, &m), emit);
    Ok(())
}

/// Integer points of the `m`-th dilate, in odometer order.
pub fn lattice_points(kind: PolytopeKind, p: &Poset, m: i64) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    scan_polytope(kind, p, m, &mut |x| out.push(x.to_vec()))?;
    Ok(out)
}

pub fn count_lattice_points(kind: PolytopeKind, p: &Poset, m: i64) -> Result<u128> {
    let mut n = 0u128;
    scan_polytope(kind, p, m, &mut |_| n += 1)?;
    Ok(n)
}

/// Left enriched P-partitions `h` with `|h| <= m`, enumerated directly from
/// the two defining conditions over the box `[-m, m]^P`.
pub fn enumerate_left_enriched(p: &Poset, m: i64) -> Result<Vec<Vec<i64>>> {
    if m < 0 {
        return Err(Error::InvalidArgument("bound must be nonnegative".into()));
    }
    guard_box(p, 2 * m + 1)?;
    let mut pairs = Vec::new();
    let mut checks = vec![Vec::new(); p.len().max(1)];
    for w in 0..p.len() {
        for v in p.strictly_below(w).iter() {
            checks[v.max(w)].push(pairs.len());
            pairs.push((v, w));
        }
    }
    let ok = |i: usize, h: &[i64]| {
        let (v, w) = pairs[i];
        let (a, b) = (h[v].abs(), h[w].abs());
        a < b || (a == b && h[w] >= 0)
    };
    let mut out = Vec::new();
    scan_box(p.len(), -m, m, &checks, ok, &mut |h| out.push(h.to_vec()));
    Ok(out)
}

/// Vertices of the polytope. For the enriched kinds these are the
/// `⪯`-maximal signed filters resp. signed antichains; for the classical
/// kinds the characteristic functions of all filters resp. antichains.
pub fn vertices(kind: PolytopeKind, p: &Poset) -> Result<Vec<PointFn>> {
    Ok(match kind {
        PolytopeKind::EnrichedOrderPoly => {
            preceq_maximal(&enumerate_signed_filters(p)?).iter().map(SignVector::to_point).collect()
        }
        PolytopeKind::EnrichedChainPoly => {
            preceq_maximal(&enumerate_signed_antichains(p)?).iter().map(SignVector::to_point).collect()
        }
        PolytopeKind::OrderPoly => characteristic_points(p, &p.order_filters()?),
        PolytopeKind::ChainPoly => characteristic_points(p, &p.antichains()?),
    })
}

fn characteristic_points(p: &Poset, sets: &[crate::poset::ElemSet]) -> Vec<PointFn> {
    sets.iter().map(|s| PointFn::from_ints(&(0..p.len()).map(|v| s.contains(v) as i64).collect::<Vec<_>>())).collect()
}

/// The lattice points of the unit polytope, which generate it.
pub fn generators(kind: PolytopeKind, p: &Poset) -> Result<Vec<PointFn>> {
    Ok(match kind {
        PolytopeKind::EnrichedOrderPoly => enumerate_signed_filters(p)?.iter().map(SignVector::to_point).collect(),
        PolytopeKind::EnrichedChainPoly => enumerate_signed_antichains(p)?.iter().map(SignVector::to_point).collect(),
        PolytopeKind::OrderPoly => characteristic_points(p, &p.order_filters()?),
        PolytopeKind::ChainPoly => characteristic_points(p, &p.antichains()?),
    })
}

/// Vertices among `generators` by the LP oracle: a generator is a vertex iff it
/// is not in the convex hull of the other (distinct) generators.
pub fn vertices_by_lp(generators: &[PointFn]) -> Result<Vec<PointFn>> {
    let mut out = Vec::new();
    for g in generators {
        let others: Vec<PointFn> = generators.iter().filter(|h| *h != g).cloned().collect();
        if others.is_empty() || !hull_membership(g, &others)? {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// The Ehrhart polynomial, interpolated from lattice-point counts at
/// `m = 0..=d` and checked against the count at `m = d + 1`.
pub fn ehrhart(kind: PolytopeKind, p: &Poset) -> Result<Polynomial> {
    let d = p.len() as i64;
    let pts = (0..=d)
        .map(|m| Ok((rat(m), Rat::from_integer(count_lattice_points(kind, p, m)?.into()))))
        .collect::<Result<Vec<_>>>()?;
    let poly = Polynomial::interpolate(&pts)?;
    let check = Rat::from_integer(count_lattice_points(kind, p, d + 1)?.into());
    if poly.eval(&rat(d + 1)) != check {
        return Err(Error::Verification(format!(
            "Ehrhart interpolant predicts {} points at m = {} but {} were counted",
            poly.eval(&rat(d + 1)),
            d + 1,
            check
        )));
    }
    Ok(poly)
}

/// The zero map is interior; report whether any other lattice point of the
/// unit polytope satisfies every inequality strictly.
pub fn interior_lattice_points(kind: PolytopeKind, p: &Poset, m: i64) -> Result<Vec<Vec<i64>>> {
    let ineq = Inequalities::new(kind, p)?;
    Ok(lattice_points(kind, p, m)?.into_iter().filter(|x| ineq.strictly_contains(x, &m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use PolytopeKind::*;

    fn lambda() -> Poset {
        Poset::parse("elements: u v w\ncovers: u<w v<w").unwrap()
    }

    #[test]
    fn membership_examples() {
        let p = lambda();
        assert!(membership(EnrichedOrderPoly, &p, &PointFn::from_ints(&[0, 0, -1]), &rat(1)).unwrap());
        assert!(!membership(EnrichedOrderPoly, &p, &PointFn::from_ints(&[1, 0, 0]), &rat(1)).unwrap());
        assert!(membership(EnrichedChainPoly, &p, &PointFn::from_ints(&[1, -2, 0]), &rat(2)).unwrap());
        assert!(membership(EnrichedOrderPoly, &p, &PointFn::from_ints(&[-1, 0, 1]), &rat(1)).unwrap());
        assert!(membership(OrderPoly, &p, &PointFn::new(vec![ratio(1, 2), rat(0), ratio(1, 2)]), &rat(1)).unwrap());
        assert!(!membership(OrderPoly, &p, &PointFn::from_ints(&[1, 0, 0]), &rat(1)).unwrap());
        assert!(membership(ChainPoly, &p, &PointFn::from_ints(&[1, 0, 0]), &rat(1)).unwrap());
        assert!(membership(EnrichedOrderPoly, &p, &PointFn::from_ints(&[0, 0]), &rat(1)).is_err());
        assert!(membership(EnrichedOrderPoly, &p, &PointFn::zero(3), &rat(-1)).is_err());
    }

    #[test]
    fn lambda_lattice_points() {
        let p = lambda();
        let unit = lattice_points(EnrichedOrderPoly, &p, 1).unwrap();
        let mut expected: Vec<Vec<i64>> = enumerate_signed_filters(&p)
            .unwrap()
            .iter()
            .map(|f| f.values().iter().map(|&s| s as i64).collect())
            .collect();
        expected.sort();
        assert_eq!(unit, expected);
        assert_eq!(count_lattice_points(EnrichedOrderPoly, &p, 2).unwrap(), 45);
        for kind in PolytopeKind::ALL {
            assert_eq!(lattice_points(kind, &p, 0).unwrap(), vec![vec![0, 0, 0]]);
        }
    }

    #[test]
    fn left_enriched_counts() {
        let p = lambda();
        assert_eq!(enumerate_left_enriched(&p, 1).unwrap().len(), 11);
        assert_eq!(enumerate_left_enriched(&p, 2).unwrap().len(), 45);
        for m in 0..4 {
            assert_eq!(enumerate_left_enriched(&Poset::chain(1), m).unwrap().len() as i64, 2 * m + 1);
        }
    }

    #[test]
    fn box_guard() {
        let p = Poset::antichain(5).with_limits(crate::poset::Limits { max_elements: 20, max_box: 100 });
        assert!(matches!(lattice_points(EnrichedChainPoly, &p, 1), Err(Error::SizeGuard { .. })));
        assert!(matches!(enumerate_left_enriched(&p, 1), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn vertex_examples() {
        let p = lambda();
        let eo = vertices(EnrichedOrderPoly, &p).unwrap();
        let expected: Vec<PointFn> = [[0, 0, -1], [1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]
            .iter()
            .map(|v| PointFn::from_ints(v))
            .collect();
        assert_eq!(sorted(eo.clone()), sorted(expected));
        assert_eq!(vertices(EnrichedChainPoly, &p).unwrap().len(), 6);
        let single = vertices(EnrichedOrderPoly, &Poset::chain(1)).unwrap();
        assert_eq!(sorted(single), sorted(vec![PointFn::from_ints(&[1]), PointFn::from_ints(&[-1])]));
        let gens = generators(EnrichedOrderPoly, &p).unwrap();
        assert_eq!(sorted(vertices_by_lp(&gens).unwrap()), sorted(eo));
    }

    fn sorted(mut v: Vec<PointFn>) -> Vec<PointFn> {
        v.sort();
        v
    }

    #[test]
    fn ehrhart_examples() {
        let p = lambda();
        let l = ehrhart(EnrichedOrderPoly, &p).unwrap();
        assert_eq!(l, Polynomial::new(vec![rat(1), ratio(10, 3), rat(4), ratio(8, 3)]));
        assert_eq!(ehrhart(EnrichedOrderPoly, &Poset::chain(1)).unwrap(), Polynomial::from_ints(&[1, 2]));
        assert_eq!(ehrhart(EnrichedOrderPoly, &Poset::chain(2)).unwrap(), Polynomial::from_ints(&[1, 2, 2]));
        assert_eq!(ehrhart(EnrichedChainPoly, &p).unwrap(), l);
    }

    #[test]
    fn zero_is_the_only_interior_point() {
        let p = lambda();
        for kind in [EnrichedOrderPoly, EnrichedChainPoly] {
            assert_eq!(interior_lattice_points(kind, &p, 1).unwrap(), vec![vec![0, 0, 0]]);
        }
    }
}
