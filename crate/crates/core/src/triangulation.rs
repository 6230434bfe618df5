//! Unimodular triangulations of the order and chain polytopes and of their
//! enriched analogues: facet data, facet inequality ladders, exact volumes,
//! coverage checks and flag vectors of the graded poset of signed filters.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::enriched::{
    enumerate_signed_filters, filters_of_extension, gt_unchecked, maximal_echain, total_signatures, EChain, SignVector,
    Signature,
};
use crate::error::{Error, Result};
use crate::geometry::{ehrhart, membership, PolytopeKind};
use crate::poset::{ElemSet, Poset};
use crate::rat::{format_rat, rat, PointFn, Rat};
use crate::report::{all_passed, CheckOutcome};
use crate::sample;
use crate::transfer::{enriched_phi, stanley_phi};

/// An affinely independent list of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    vertices: Vec<PointFn>,
}

impl Simplex {
    pub fn new(vertices: Vec<PointFn>) -> Result<Simplex> {
        let Some(first) = vertices.first() else {
            return Err(Error::InvalidArgument("a simplex needs at least one vertex".into()));
        };
        let d = first.dim();
        for v in &vertices {
            v.check_dim(d)?;
        }
        let edges: Vec<Vec<Rat>> = vertices[1..].iter().map(|v| v.sub(first).into_values()).collect();
        if rank(edges) != vertices.len() - 1 {
            return Err(Error::InvalidArgument("simplex vertices are affinely dependent".into()));
        }
        Ok(Simplex { vertices })
    }

    pub fn vertices(&self) -> &[PointFn] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.vertices.iter().map(PointFn::to_json).collect())
    }
}

fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        for i in r + 1..rows.len() {
            if !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &rows[r][c];
                for j in c..cols {
                    let t = &factor * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn det_rat(mut a: Vec<Vec<Rat>>) -> Rat {
    let n = a.len();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Rat::zero() };
        if piv != c {
            a.swap(piv, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let factor = &a[i][c] / &a[c][c];
                for j in c..n {
                    let t = &factor * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    det
}

/// Fraction-free (Bareiss) determinant.
fn det_int(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(i) = (k + 1..n).find(|&i| a[i][k] != 0) else { return 0 };
            a.swap(k, i);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Normalized volume `|det(v_1 - v_0, ..., v_d - v_0)|`; a lattice simplex is
/// unimodular iff this is 1.
pub fn unimodular_volume(s: &Simplex) -> Result<Rat> {
    let d = s.ambient_dim();
    if s.vertices.len() != d + 1 {
        return Err(Error::InvalidArgument(format!(
            "a full-dimensional simplex in dimension {d} needs {} vertices, got {}",
            d + 1,
            s.vertices.len()
        )));
    }
    let v0 = &s.vertices[0];
    let edges = s.vertices[1..].iter().map(|v| v.sub(v0).into_values()).collect();
    Ok(det_rat(edges).abs())
}

/// Which family of ladder functionals describes a facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `L̃_i(x) = Σ_{v ∈ C_i} ε(v) x(v)`, for chain-polytope facets.
    Chain,
    /// `M̃_i(x)`, for order-polytope facets.
    Order,
}

impl Side {
    pub fn of(kind: PolytopeKind) -> Side {
        match kind {
            PolytopeKind::OrderPoly | PolytopeKind::EnrichedOrderPoly => Side::Order,
            PolytopeKind::ChainPoly | PolytopeKind::EnrichedChainPoly => Side::Chain,
        }
    }
}

/// The combinatorial data of a maximal facet: a linear extension listed
/// smallest first, its filters `F_i = {v_i, ..., v_d}`, the saturated chains
/// `C_i` (bottom-up, ending at `v_i`) and a total signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetData {
    pub extension: Vec<usize>,
    pub filters: Vec<ElemSet>,
    pub chains: Vec<Vec<usize>>,
    pub sign: Signature,
}

impl FacetData {
    pub fn from_extension(p: &Poset, order: &[usize], sign: &[i8]) -> Result<FacetData> {
        if !p.is_linear_extension(order) {
            return Err(Error::InvalidChain("not a linear extension".into()));
        }
        if sign.len() != p.len() {
            return Err(Error::DimensionMismatch { expected: p.len(), got: sign.len() });
        }
        if sign.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("facet signatures take values ±1".into()));
        }
        let d = order.len();
        let mut filters = filters_of_extension(order);
        filters.pop();
        let mut chains: Vec<Vec<usize>> = Vec::with_capacity(d);
        for i in 0..d {
            let mut c = match (0..i).rev().find(|&j| p.covers(order[j], order[i])) {
                Some(j) => chains[j].clone(),
                None => Vec::new(),
            };
            c.push(order[i]);
            chains.push(c);
        }
        Ok(FacetData { extension: order.to_vec(), filters, chains, sign: sign.to_vec() })
    }

    /// Facet data of a classical facet, `ε ≡ 1`.
    pub fn classical(p: &Poset, order: &[usize]) -> Result<FacetData> {
        FacetData::from_extension(p, order, &vec![1; p.len()])
    }

    pub fn dim(&self) -> usize {
        self.extension.len()
    }

    /// The coefficient matrix of the ladder functionals, one row per `i`.
    pub fn rows(&self, side: Side) -> Vec<Vec<i64>> {
        let d = self.dim();
        self.chains
            .iter()
            .map(|c| {
                let mut row = vec![0i64; d];
                match side {
                    Side::Chain => {
                        for &v in c {
                            row[v] = self.sign[v] as i64;
                        }
                    }
                    Side::Order => {
                        for (l, &u) in c.iter().enumerate() {
                            let tail: i64 = c[l + 1..].iter().map(|&w| 1 - self.sign[w] as i64).product();
                            row[u] = self.sign[u] as i64 * tail;
                        }
                    }
                }
                row
            })
            .collect()
    }

    pub fn to_json(&self, p: &Poset) -> Value {
        json!({
            "extension": self.extension.iter().map(|&v| p.label(v)).collect::<Vec<_>>(),
            "chains": self.chains.iter()
                .map(|c| c.iter().map(|&v| p.label(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "sign": self.sign,
        })
    }
}

/// Facet data of a maximal chain of signed filters.
pub fn facet_data(p: &Poset, k: &EChain) -> Result<FacetData> {
    if !k.is_maximal(p) {
        return Err(Error::InvalidChain(format!(
            "a facet needs a maximal chain of {} links, got {}",
            p.len() + 1,
            k.len()
        )));
    }
    let supp = k.supp_chain();
    // F_i \ F_{i+1} = {v_i}.
    let order: Vec<usize> =
        supp.windows(2).map(|w| w[0].difference(w[1]).iter().next().expect("strict chain")).collect();
    FacetData::from_extension(p, &order, &k.signature(p))
}

/// Ladder values `val_1..val_d` of `x` for a facet.
pub fn facet_functionals(f: &FacetData, x: &PointFn, side: Side) -> Result<Vec<Rat>> {
    x.check_dim(f.dim())?;
    Ok(f.rows(side)
        .iter()
        .map(|row| row.iter().enumerate().filter(|(_, &c)| c != 0).map(|(v, &c)| rat(c) * &x[v]).sum())
        .collect())
}

/// Position of a point relative to a ladder `0 <= val_1 <= ... <= val_d <= m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    Outside,
    Boundary,
    Interior,
}

pub fn ladder(vals: &[Rat], m: &Rat) -> Ladder {
    let zero = Rat::zero();
    let mut prev = &zero;
    let mut strict = true;
    for v in vals.iter().chain(std::iter::once(m)) {
        if v < prev {
            return Ladder::Outside;
        }
        strict &= v > prev;
        prev = v;
    }
    if strict {
        Ladder::Interior
    } else {
        Ladder::Boundary
    }
}

/// Stanley's simplices of a maximal filter chain (top-down, the empty filter
/// optional): `S_C` with vertices the characteristic points, and `T_C` its
/// image under the transfer map. Vertices are listed from zero upwards.
pub fn stanley_simplices(p: &Poset, chain: &[ElemSet]) -> Result<(Simplex, Simplex)> {
    let chain: Vec<ElemSet> = chain.iter().copied().filter(|f| !f.is_empty()).collect();
    for &f in &chain {
        p.check_set(f)?;
        if !p.is_filter(f) {
            return Err(Error::InvalidChain(format!("{} is not an order filter", p.format_set(f))));
        }
    }
    let maximal = chain.len() == p.len()
        && chain.iter().enumerate().all(|(i, f)| f.len() == p.len() - i)
        && chain.windows(2).all(|w| w[1].is_subset(w[0]));
    if !maximal {
        return Err(Error::InvalidChain("not a maximal chain of order filters".into()));
    }
    let mut s = vec![PointFn::zero(p.len())];
    for f in chain.iter().rev() {
        s.push(PointFn::from_ints(&(0..p.len()).map(|v| f.contains(v) as i64).collect::<Vec<_>>()));
    }
    let t = s.iter().map(|x| stanley_phi(p, x)).collect::<Result<Vec<_>>>()?;
    Ok((Simplex::new(s)?, Simplex::new(t)?))
}

/// `S^(e)_K`, the convex hull of the links of `K`, and `T^(e)_K`, its image
/// under the enriched transfer map. Vertices are listed bottom link first.
pub fn enriched_simplices(p: &Poset, k: &EChain) -> Result<(Simplex, Simplex)> {
    if k.is_empty() {
        return Err(Error::InvalidChain("an empty chain spans no simplex".into()));
    }
    let s: Vec<PointFn> = k.links().iter().rev().map(SignVector::to_point).collect();
    let t = s.iter().map(|x| enriched_phi(p, x)).collect::<Result<Vec<_>>>()?;
    Ok((Simplex::new(s)?, Simplex::new(t)?))
}

/// One maximal simplex of a triangulation with its ladder description.
#[derive(Clone, Debug)]
pub struct Facet {
    pub data: FacetData,
    pub side: Side,
    pub simplex: Simplex,
}

impl Facet {
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.rows(self.side)
    }

    pub fn ladder(&self, x: &PointFn, m: &Rat) -> Result<Ladder> {
        Ok(ladder(&facet_functionals(&self.data, x, self.side)?, m))
    }

    pub fn to_json(&self, p: &Poset) -> Value {
        json!({
            "data": self.data.to_json(p),
            "vertices": self.simplex.to_json(),
            "coefficients": self.rows(),
        })
    }
}

/// All facets of the triangulation of the given polytope: for the enriched
/// kinds one per linear extension and total signature, for the classical
/// kinds one per linear extension.
pub fn facets(kind: PolytopeKind, p: &Poset) -> Result<Vec<Facet>> {
    let side = Side::of(kind);
    let exts = p.linear_extensions()?;
    let mut out = Vec::new();
    if kind.is_enriched() {
        let signs = total_signatures(p.len());
        for ext in &exts {
            for sign in &signs {
                let k = maximal_echain(p, &ext.order, sign)?;
                let (s, t) = enriched_simplices(p, &k)?;
                let simplex = if side == Side::Order { s } else { t };
                out.push(Facet { data: FacetData::from_extension(p, &ext.order, sign)?, side, simplex });
            }
        }
    } else {
        for ext in &exts {
            let (s, t) = stanley_simplices(p, &filters_of_extension(&ext.order))?;
            let simplex = if side == Side::Order { s } else { t };
            out.push(Facet { data: FacetData::classical(p, &ext.order)?, side, simplex });
        }
    }
    Ok(out)
}

/// Tuning for [`verify_triangulation_with`].
#[derive(Clone, Debug)]
pub struct TriangulationOptions {
    pub samples: usize,
    pub seed: u64,
    /// Largest poset size for the quadratic pairwise-intersection check.
    pub pairwise_max_dim: usize,
}

impl Default for TriangulationOptions {
    fn default() -> Self {
        TriangulationOptions { samples: 200, seed: 0, pairwise_max_dim: 4 }
    }
}

#[derive(Clone, Debug)]
pub struct TriangulationReport {
    pub kind: PolytopeKind,
    pub facets: Vec<Facet>,
    pub volumes: Vec<Rat>,
    pub checks: Vec<CheckOutcome>,
}

impl TriangulationReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }

    pub fn volume_sum(&self) -> Rat {
        self.volumes.iter().sum()
    }

    pub fn to_json(&self, p: &Poset) -> Value {
        json!({
            "kind": self.kind.short_name(),
            "facet_count": self.facets.len(),
            "volume_sum": format_rat(&self.volume_sum()),
            "facets": self.facets.iter().map(|f| f.to_json(p)).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(CheckOutcome::to_json).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

pub fn verify_triangulation(kind: PolytopeKind, p: &Poset, samples: usize, seed: u64) -> Result<TriangulationReport> {
    verify_triangulation_with(kind, p, &TriangulationOptions { samples, seed, ..Default::default() })
}

/// Builds the facets and checks count, unimodularity, total volume, sampled
/// coverage and (for small posets) pairwise intersections.
pub fn verify_triangulation_with(
    kind: PolytopeKind,
    p: &Poset,
    opts: &TriangulationOptions,
) -> Result<TriangulationReport> {
    let d = p.len();
    let facets = facets(kind, p)?;
    let mut checks = Vec::new();

    let e = p.count_linear_extensions()?;
    let expected = if kind.is_enriched() { e << d } else { e };
    checks.push(CheckOutcome::new(
        "facet_count",
        facets.len() as u128 == expected,
        format!("{} facets, expected {expected}", facets.len()),
    ));

    let volumes = facets.iter().map(|f| unimodular_volume(&f.simplex)).collect::<Result<Vec<_>>>()?;
    let bad = volumes.iter().filter(|v| !v.is_one()).count();
    checks.push(CheckOutcome::new(
        "unimodular",
        bad == 0,
        format!("{bad} of {} facets have volume != 1", facets.len()),
    ));

    let one = Rat::one();
    let mut stray = 0;
    for f in &facets {
        for v in f.simplex.vertices() {
            if f.ladder(v, &one)? == Ladder::Outside {
                stray += 1;
            }
        }
    }
    checks.push(CheckOutcome::new(
        "vertices_satisfy_ladder",
        stray == 0,
        format!("{stray} facet vertices violate their own ladder"),
    ));

    let total: Rat = volumes.iter().sum();
    checks.push(match ehrhart(kind, p) {
        Ok(poly) => {
            let target = poly.leading() * factorial(d);
            CheckOutcome::new(
                "volume_sum",
                total == target,
                format!("sum {} vs d! * leading coefficient {}", format_rat(&total), format_rat(&target)),
            )
        }
        Err(Error::SizeGuard { .. }) => CheckOutcome::skipped("volume_sum", "Ehrhart polynomial exceeds size limit"),
        Err(err) => return Err(err),
    });

    checks.push(coverage_check(kind, p, &facets, opts)?);

    checks.push(if d <= opts.pairwise_max_dim {
        pairwise_check(&facets)?
    } else {
        CheckOutcome::skipped("pairwise_intersections", format!("skipped for {d} > {} elements", opts.pairwise_max_dim))
    });

    Ok(TriangulationReport { kind, facets, volumes, checks })
}

fn factorial(n: usize) -> Rat {
    Rat::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

fn coverage_check(
    kind: PolytopeKind,
    p: &Poset,
    facets: &[Facet],
    opts: &TriangulationOptions,
) -> Result<CheckOutcome> {
    let d = p.len();
    let one = Rat::one();
    let mut rng = sample::rng(opts.seed);
    let mut failures: Vec<String> = Vec::new();
    let (mut inside, mut outside) = (0usize, 0usize);
    for i in 0..opts.samples {
        let (x, expect_inside) = if i % 2 == 0 {
            let f = &facets[rng.gen_range(0..facets.len())];
            let x = if i % 4 == 0 {
                sample::random_face_point(&mut rng, f.simplex.vertices(), 3)
            } else {
                sample::random_convex_combination(&mut rng, f.simplex.vertices(), 5)
            };
            (x, true)
        } else {
            let x = if kind.is_enriched() {
                sample::random_point(&mut rng, d, 1, 4)
            } else {
                sample::random_unit_point(&mut rng, d, 4)
            };
            let inside = membership(kind, p, &x, &one)?;
            (x, inside)
        };
        let mut count = 0;
        let mut interior = false;
        for f in facets {
            match f.ladder(&x, &one)? {
                Ladder::Outside => {}
                Ladder::Boundary => count += 1,
                Ladder::Interior => {
                    count += 1;
                    interior = true;
                }
            }
        }
        let ok = if expect_inside {
            inside += 1;
            count >= 1 && (!interior || count == 1)
        } else {
            outside += 1;
            count == 0
        };
        if !ok && failures.len() < 3 {
            failures.push(format!("{x} lies in {count} facets"));
        }
    }
    let detail = if failures.is_empty() {
        format!("{inside} inside and {outside} outside samples")
    } else {
        failures.join("; ")
    };
    Ok(CheckOutcome::new("coverage", failures.is_empty(), detail))
}

/// Rows `a x <= b` of a facet's ladder: `-val_1 <= 0`, `val_i - val_{i+1} <=
/// 0`, `val_d <= 1`.
fn ladder_constraints(f: &Facet) -> Vec<(Vec<i128>, i128)> {
    let rows: Vec<Vec<i128>> = f.rows().iter().map(|r| r.iter().map(|&c| c as i128).collect()).collect();
    let d = rows.len();
    let mut out = Vec::with_capacity(d + 1);
    if d == 0 {
        return out;
    }
    out.push((rows[0].iter().map(|c| -c).collect(), 0));
    for i in 0..d - 1 {
        out.push((rows[i].iter().zip(&rows[i + 1]).map(|(a, b)| a - b).collect(), 0));
    }
    out.push((rows[d - 1].clone(), 1));
    out
}

type RatVertex = (Vec<i128>, i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Vertices of `{x : a x <= b}` by solving every nonsingular square
/// subsystem with Cramer's rule and keeping feasible solutions.
fn polytope_vertices(cons: &[(Vec<i128>, i128)], d: usize) -> BTreeSet<RatVertex> {
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (0..d).collect();
    if d == 0 {
        out.insert((Vec::new(), 1));
        return out;
    }
    let n = cons.len();
    if n < d {
        return out;
    }
    loop {
        let a: Vec<Vec<i128>> = idx.iter().map(|&i| cons[i].0.clone()).collect();
        let mut det = det_int(a.clone());
        if det != 0 {
            let mut num: Vec<i128> = (0..d)
                .map(|j| {
                    let mut aj = a.clone();
                    for (r, &i) in idx.iter().enumerate() {
                        aj[r][j] = cons[i].1;
                    }
                    det_int(aj)
                })
                .collect();
            if det < 0 {
                det = -det;
                num.iter_mut().for_each(|x| *x = -*x);
            }
            let feasible =
                cons.iter().all(|(row, b)| row.iter().zip(&num).map(|(c, x)| c * x).sum::<i128>() <= b * det);
            if feasible {
                let g = num.iter().fold(det, |g, &x| gcd(g, x));
                out.insert((num.iter().map(|x| x / g).collect(), det / g));
            }
        }
        // Next d-subset in lexicographic order.
        let Some(pos) = (0..d).rev().find(|&k| idx[k] < n - d + k) else { break };
        idx[pos] += 1;
        for k in pos + 1..d {
            idx[k] = idx[k - 1] + 1;
        }
    }
    out
}

fn integral_vertices(f: &Facet) -> BTreeSet<RatVertex> {
    f.simplex
        .vertices()
        .iter()
        .map(|v| {
            let ints = v.to_ints().expect("facet vertices are lattice points");
            (ints.into_iter().map(i128::from).collect(), 1)
        })
        .collect()
}

fn pairwise_check(facets: &[Facet]) -> Result<CheckOutcome> {
    let d = facets.first().map_or(0, |f| f.data.dim());
    let cons: Vec<_> = facets.iter().map(ladder_constraints).collect();
    let verts: Vec<_> = facets.iter().map(integral_vertices).collect();
    let mut pairs = 0usize;
    let mut failures = Vec::new();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            pairs += 1;
            let mut joint: Vec<(Vec<i128>, i128)> = cons[a].clone();
            for c in &cons[b] {
                if !joint.contains(c) {
                    joint.push(c.clone());
                }
            }
            let found = polytope_vertices(&joint, d);
            let shared: BTreeSet<RatVertex> = verts[a].intersection(&verts[b]).cloned().collect();
            if found != shared && failures.len() < 3 {
                failures.push(format!("facets {a} and {b} meet in {} vertices, share {}", found.len(), shared.len()));
            }
        }
    }
    let detail = if failures.is_empty() { format!("{pairs} pairs checked") } else { failures.join("; ") };
    Ok(CheckOutcome::new("pairwise_intersections", failures.is_empty(), detail))
}

/// Flag numbers of the graded poset of nonzero signed filters, ranked by
/// support size. Rank sets `S ⊆ {1..d}` are bitmasks with bit `i - 1` for
/// rank `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVectors {
    pub d: usize,
    pub f: Vec<u128>,
    pub h: Vec<i128>,
}

impl FlagVectors {
    fn mask(ranks: &[usize]) -> usize {
        ranks.iter().fold(0, |m, &r| m | 1 << (r - 1))
    }

    pub fn f_of(&self, ranks: &[usize]) -> u128 {
        self.f[Self::mask(ranks)]
    }

    pub fn h_of(&self, ranks: &[usize]) -> i128 {
        self.h[Self::mask(ranks)]
    }

    /// `h_i = Σ_{|S| = i} h_S` for `i = 0..=d`.
    pub fn h_polynomial(&self) -> Vec<i128> {
        let mut out = vec![0i128; self.d + 1];
        for (s, &h) in self.h.iter().enumerate() {
            out[s.count_ones() as usize] += h;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let sets = |s: usize| (1..=self.d).filter(|r| s >> (r - 1) & 1 == 1).collect::<Vec<_>>();
        json!({
            "f": (0..self.f.len()).map(|s| json!({"ranks": sets(s), "value": self.f[s].to_string()})).collect::<Vec<_>>(),
            "h": (0..self.h.len()).map(|s| json!({"ranks": sets(s), "value": self.h[s].to_string()})).collect::<Vec<_>>(),
            "h_polynomial": self.h_polynomial().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })
    }
}

pub fn flag_vectors(p: &Poset) -> Result<FlagVectors> {
    let d = p.len();
    let elements = enumerate_signed_filters(p)?;
    let work = (elements.len() as u128) << d;
    let limit = p.limits().max_box;
    if work > limit {
        return Err(Error::SizeGuard { what: "flag vector computation", size: work, limit });
    }
    let mut by_rank: Vec<Vec<&[i8]>> = vec![Vec::new(); d + 1];
    for f in &elements {
        by_rank[f.rank()].push(f.values());
    }
    // below[a][b][y]: elements of rank a strictly below the y-th element of rank b.
    let mut below: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
    for b in 1..=d {
        for a in 1..b {
            let lists = by_rank[b]
                .iter()
                .map(|y| (0..by_rank[a].len()).filter(|&x| gt_unchecked(p, y, by_rank[a][x])).collect())
                .collect();
            below.insert((a, b), lists);
        }
    }
    let n = 1usize << d;
    let mut f = vec![0u128; n];
    f[0] = 1;
    // counts[S][y]: S-flags whose top is the y-th element of rank max(S).
    let mut counts: Vec<Vec<u128>> = vec![Vec::new(); n];
    for s in 1..n {
        let top = usize::BITS as usize - s.leading_zeros() as usize;
        let rest = s & !(1 << (top - 1));
        counts[s] = if rest == 0 {
            vec![1; by_rank[top].len()]
        } else {
            let prev = usize::BITS as usize - rest.leading_zeros() as usize;
            below[&(prev, top)].iter().map(|xs| xs.iter().map(|&x| counts[rest][x]).sum()).collect()
        };
        f[s] = counts[s].iter().sum();
    }
    let mut h = vec![0i128; n];
    for s in 0..n {
        let mut t = s;
        loop {
            let sign = if (s & !t).count_ones() % 2 == 0 { 1 } else { -1 };
            h[s] += sign * f[t] as i128;
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
    }
    Ok(FlagVectors { d, f, h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use PolytopeKind::*;

    fn lambda() -> Poset {
        Poset::parse("elements: u v w\ncovers: u<w v<w").unwrap()
    }

    fn pts(v: &[&[i64]]) -> Vec<PointFn> {
        v.iter().map(|x| PointFn::from_ints(x)).collect()
    }

    fn sorted(mut v: Vec<PointFn>) -> Vec<PointFn> {
        v.sort_by_key(|x| x.to_ints());
        v
    }

    #[test]
    fn facet_data_chains() {
        let p = lambda();
        let k = maximal_echain(&p, &[0, 1, 2], &[1, 1, 1]).unwrap();
        let f = facet_data(&p, &k).unwrap();
        assert_eq!(f.extension, vec![0, 1, 2]);
        assert_eq!(f.chains, vec![vec![0], vec![1], vec![1, 2]]);
        assert_eq!(f.sign, vec![1, 1, 1]);
        let k = maximal_echain(&p, &[1, 0, 2], &[1, -1, 1]).unwrap();
        let f = facet_data(&p, &k).unwrap();
        assert_eq!(f.chains[2], vec![0, 2]);
        assert_eq!(f.sign, vec![1, -1, 1]);
        let short = EChain::new(&p, k.links()[1..].to_vec()).unwrap();
        assert!(facet_data(&p, &short).is_err());
    }

    #[test]
    fn stanley_example() {
        let p = lambda();
        let (s, t) = stanley_simplices(&p, &filters_of_extension(&[0, 1, 2])).unwrap();
        assert_eq!(s.vertices(), pts(&[&[0, 0, 0], &[0, 0, 1], &[0, 1, 1], &[1, 1, 1]]).as_slice());
        assert_eq!(t.vertices(), pts(&[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0], &[1, 1, 0]]).as_slice());
        let single = Poset::chain(1);
        let (s, t) = stanley_simplices(&single, &[ElemSet::full(1)]).unwrap();
        assert_eq!(s, t);
        assert!(stanley_simplices(&p, &[ElemSet::from_iter([0])]).is_err());
    }

    #[test]
    fn enriched_example_and_reflection() {
        let p = lambda();
        let sign = [1, -1, 1];
        let k = maximal_echain(&p, &[0, 1, 2], &sign).unwrap();
        let (s, t) = enriched_simplices(&p, &k).unwrap();
        assert_eq!(sorted(s.vertices().to_vec()), sorted(pts(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 1], &[1, -1, 1]])));
        assert_eq!(sorted(t.vertices().to_vec()), sorted(pts(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0], &[1, -1, 0]])));
        let (_, tc) = stanley_simplices(&p, &filters_of_extension(&[0, 1, 2])).unwrap();
        let reflected: Vec<PointFn> =
            tc.vertices().iter().map(|x| crate::transfer::reflect(&sign, x).unwrap()).collect();
        assert_eq!(sorted(reflected), sorted(t.vertices().to_vec()));
        let point = EChain::new(&p, vec![k.links()[2].clone()]).unwrap();
        let (s, _) = enriched_simplices(&p, &point).unwrap();
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn functional_examples() {
        let p = lambda();
        let f = FacetData::from_extension(&p, &[0, 1, 2], &[1, -1, 1]).unwrap();
        let ones = vec![rat(1); 3];
        assert_eq!(facet_functionals(&f, &PointFn::from_ints(&[1, -1, 0]), Side::Chain).unwrap(), ones);
        assert_eq!(facet_functionals(&f, &PointFn::from_ints(&[1, -1, 1]), Side::Order).unwrap(), ones);
        assert_eq!(ladder(&ones, &rat(1)), Ladder::Boundary);
        assert_eq!(ladder(&[ratio(1, 4), ratio(1, 2), ratio(3, 4)], &rat(1)), Ladder::Interior);
        assert_eq!(ladder(&[ratio(1, 2), ratio(1, 4)], &rat(1)), Ladder::Outside);
    }

    #[test]
    fn volumes() {
        let s = Simplex::new(pts(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 1], &[1, -1, 1]])).unwrap();
        assert_eq!(unimodular_volume(&s).unwrap(), rat(1));
        let unit = Simplex::new(pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(unimodular_volume(&unit).unwrap(), rat(1));
        let doubled = Simplex::new(pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap();
        assert_eq!(unimodular_volume(&doubled).unwrap(), rat(2));
        assert!(Simplex::new(pts(&[&[0, 0], &[1, 1], &[2, 2]])).is_err());
        let seg = Simplex::new(pts(&[&[0, 0], &[1, 0]])).unwrap();
        assert!(unimodular_volume(&seg).is_err());
    }

    #[test]
    fn integer_determinant_matches_rational() {
        let a = vec![vec![2i128, -1, 0, 3], vec![1, 4, -2, 0], vec![0, 0, 5, 1], vec![-3, 1, 1, 2]];
        let r: Vec<Vec<Rat>> = a.iter().map(|row| row.iter().map(|&x| rat(x as i64)).collect()).collect();
        assert_eq!(rat(det_int(a) as i64), det_rat(r));
        assert_eq!(det_int(vec![vec![0, 1], vec![1, 0]]), -1);
    }

    #[test]
    fn verify_examples() {
        let p = lambda();
        let r = verify_triangulation(EnrichedChainPoly, &p, 60, 7).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.facets.len(), 16);
        assert_eq!(r.volume_sum(), rat(16));
        let r = verify_triangulation(EnrichedOrderPoly, &Poset::chain(2), 40, 1).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!((r.facets.len(), r.volume_sum()), (4, rat(4)));
        let r = verify_triangulation(EnrichedOrderPoly, &Poset::chain(1), 20, 1).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.facets.len(), 2);
        for kind in [OrderPoly, ChainPoly, EnrichedOrderPoly] {
            let r = verify_triangulation(kind, &p, 40, 3).unwrap();
            assert!(r.passed(), "{kind}: {:?}", r.checks);
        }
    }

    #[test]
    fn flag_vector_examples() {
        let fv = flag_vectors(&lambda()).unwrap();
        let got: Vec<u128> =
            [&[1][..], &[2], &[3], &[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]].iter().map(|s| fv.f_of(s)).collect();
        assert_eq!(got, vec![2, 4, 4, 8, 8, 8, 16]);
        assert_eq!(fv.f_of(&[]), 1);
        assert_eq!(fv.h_polynomial(), vec![1, 7, 7, 1]);
        let single = flag_vectors(&Poset::chain(1)).unwrap();
        assert_eq!(single.f_of(&[1]), 2);
        assert_eq!(single.h_polynomial(), vec![1, 1]);
    }
}
