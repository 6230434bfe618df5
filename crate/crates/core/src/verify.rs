//! The end-to-end invariant suite: every identity between independently
//! computed objects, checked on one poset.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::enriched::{enumerate_signed_antichains, enumerate_signed_filters, maximal_echains, SignVector};
use crate::error::{Error, Result};
use crate::geometry::{
    enumerate_left_enriched, generators, interior_lattice_points, lattice_points, membership, vertices, vertices_by_lp,
    Inequalities, PolytopeKind,
};
use crate::lp::hull_membership;
use crate::poset::{ChainKind, Poset, Region};
use crate::rat::{pow2, rat, PointFn, Rat};
use crate::report::{all_passed, CheckOutcome};
use crate::sample;
use crate::statistics::Statistics;
use crate::transfer::{
    enriched_phi, enriched_psi, max_chain_sum, pi_map, reflect, stanley_phi, stanley_psi, theta_map,
};
use crate::triangulation::{
    enriched_simplices, facet_data, facet_functionals, stanley_simplices, verify_triangulation_with, Side,
    TriangulationOptions,
};
use num_traits::Signed;
use rand::Rng;

/// Decides membership in a dilated polytope. The suite takes the oracle as a
/// parameter so a corrupted oracle can be shown to be caught.
pub trait MembershipOracle {
    fn contains(&self, kind: PolytopeKind, p: &Poset, x: &PointFn, m: &Rat) -> Result<bool>;
}

/// The defining inequality systems.
pub struct InequalityOracle;

impl MembershipOracle for InequalityOracle {
    fn contains(&self, kind: PolytopeKind, p: &Poset, x: &PointFn, m: &Rat) -> Result<bool> {
        membership(kind, p, x, m)
    }
}

/// An oracle backed by an explicit inequality system, which callers may edit.
pub struct SystemOracle {
    pub systems: Vec<Inequalities>,
}

impl MembershipOracle for SystemOracle {
    fn contains(&self, kind: PolytopeKind, p: &Poset, x: &PointFn, m: &Rat) -> Result<bool> {
        x.check_dim(p.len())?;
        match self.systems.iter().find(|s| s.kind == kind) {
            Some(s) => Ok(s.contains(x.values(), m)),
            None => membership(kind, p, x, m),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub m_max: i64,
    pub seed: u64,
    /// Sampled points per triangulation coverage check.
    pub samples: usize,
    /// Random rational points for the transfer round trips.
    pub transfer_points: usize,
    /// Random points for the saturated-chain inequality.
    pub chain_points: usize,
    /// Integer points of `[-hull_box, hull_box]^P` compared against the LP.
    pub hull_box: i64,
    /// Random points per facet for the ladder identity.
    pub facet_points: usize,
    /// Largest poset for the quadratic per-facet checks.
    pub facet_max_dim: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            m_max: 2,
            seed: 0,
            samples: 100,
            transfer_points: 200,
            chain_points: 100,
            hull_box: 2,
            facet_points: 50,
            facet_max_dim: 4,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.failed()).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "failures": self.failures(),
            "checks": self.checks.iter().map(CheckOutcome::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn verify_suite(p: &Poset, m_max: i64, seed: u64) -> VerifyReport {
    verify_suite_with(p, &VerifyOptions { m_max, seed, ..Default::default() }, &InequalityOracle)
}

/// Runs the suite in a fixed order. Errors inside a check become failed
/// entries; size-guard errors become skipped entries.
pub fn verify_suite_with(p: &Poset, opts: &VerifyOptions, oracle: &dyn MembershipOracle) -> VerifyReport {
    type Check<'a> = (&'static str, Box<dyn Fn() -> Result<CheckOutcome> + 'a>);
    let checks: Vec<Check> = vec![
        ("counts", Box::new(|| counts(p, opts))),
        ("transfer_round_trip", Box::new(|| round_trip(p, opts))),
        ("transfer_lattice_bijection", Box::new(|| lattice_bijection(p, opts))),
        ("transfer_transport", Box::new(|| transport(p, opts, oracle))),
        ("transfer_vertex_behavior", Box::new(|| vertex_behavior(p))),
        ("pi_theta", Box::new(|| pi_theta(p, opts))),
        ("order_restriction", Box::new(|| order_restriction(p, opts))),
        ("psi_nonnegative", Box::new(|| psi_nonnegative(p, opts))),
        ("membership_vs_hull", Box::new(|| membership_vs_hull(p, opts, oracle))),
        ("chain_inequality", Box::new(|| chain_inequality(p, opts))),
        ("vertices_vs_lp", Box::new(|| vertices_vs_lp(p))),
        ("unique_interior_point", Box::new(|| unique_interior(p))),
        ("reflection_identity", Box::new(|| reflection_identity(p))),
        ("facet_identity", Box::new(|| facet_identity(p, opts))),
    ];
    let mut out = Vec::new();
    for (name, check) in checks {
        out.push(settle(name, check()));
    }
    for kind in PolytopeKind::ALL {
        let name = format!("triangulation_{}", kind.short_name());
        let topts =
            TriangulationOptions { samples: opts.samples, seed: opts.seed, pairwise_max_dim: opts.facet_max_dim };
        match verify_triangulation_with(kind, p, &topts) {
            Ok(r) => {
                let failed: Vec<String> = r.checks.iter().filter(|c| c.failed()).map(|c| c.to_string()).collect();
                let detail = if failed.is_empty() {
                    format!("{} facets, volume sum {}", r.facets.len(), r.volume_sum())
                } else {
                    failed.join("; ")
                };
                out.push(CheckOutcome::new(name, failed.is_empty(), detail));
            }
            Err(e) => out.push(settle(&name, Err(e))),
        }
    }
    match Statistics::compute(p) {
        Ok(s) => out.extend(s.checks().into_iter().map(|mut c| {
            c.name = format!("statistics_{}", c.name);
            c
        })),
        Err(e) => out.push(settle("statistics", Err(e))),
    }
    VerifyReport { checks: out }
}

fn settle(name: &str, r: Result<CheckOutcome>) -> CheckOutcome {
    match r {
        Ok(c) => c,
        Err(e @ Error::SizeGuard { .. }) => CheckOutcome::skipped(name, e.to_string()),
        Err(e) => CheckOutcome::new(name, false, format!("error: {e}")),
    }
}

fn int_points(pts: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    pts.iter().cloned().collect()
}

fn point_ints(x: &PointFn) -> Vec<i64> {
    x.to_ints().expect("integral point")
}

fn counts(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    use PolytopeKind::*;
    let mut rows = Vec::new();
    let mut ok = true;
    for m in 1..=opts.m_max {
        let eo = lattice_points(EnrichedOrderPoly, p, m)?.len();
        let ec = lattice_points(EnrichedChainPoly, p, m)?.len();
        let lepp = enumerate_left_enriched(p, m)?.len();
        let o = lattice_points(OrderPoly, p, m)?.len();
        let c = lattice_points(ChainPoly, p, m)?.len();
        ok &= eo == ec && ec == lepp && o == c;
        rows.push(format!("m={m}: eO {eo}, eC {ec}, E_m {lepp}, O {o}, C {c}"));
    }
    let ef = enumerate_signed_filters(p)?.len();
    let ea = enumerate_signed_antichains(p)?.len();
    let eo1 = lattice_points(EnrichedOrderPoly, p, 1)?.len();
    ok &= ef == ea && ef == eo1;
    rows.push(format!("eF {ef}, eA {ea}"));
    Ok(CheckOutcome::new("counts", ok, rows.join("; ")))
}

fn round_trip(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut rng = sample::rng(opts.seed);
    let mut bad = 0;
    for _ in 0..opts.transfer_points {
        let f = sample::random_point(&mut rng, p.len(), 2, 6);
        if enriched_psi(p, &enriched_phi(p, &f)?)? != f || enriched_phi(p, &enriched_psi(p, &f)?)? != f {
            bad += 1;
        }
    }
    Ok(CheckOutcome::new(
        "transfer_round_trip",
        bad == 0,
        format!("{bad} of {} random points fail a round trip", opts.transfer_points),
    ))
}

fn lattice_bijection(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut ok = true;
    for m in 1..=opts.m_max {
        let eo = lattice_points(PolytopeKind::EnrichedOrderPoly, p, m)?;
        let ec = int_points(&lattice_points(PolytopeKind::EnrichedChainPoly, p, m)?);
        let image: BTreeSet<Vec<i64>> = eo
            .iter()
            .map(|x| enriched_phi(p, &PointFn::from_ints(x)).map(|y| point_ints(&y)))
            .collect::<Result<_>>()?;
        ok &= image.len() == eo.len() && image == ec;
    }
    Ok(CheckOutcome::new("transfer_lattice_bijection", ok, format!("m = 1..={}", opts.m_max)))
}

fn box_points(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out.into_iter().flat_map(|x| (lo..=hi).map(move |c| [x.clone(), vec![c]].concat())).collect();
    }
    out
}

fn guard_box(p: &Poset, r: i64) -> Result<()> {
    let size = ((2 * r + 1) as u128).saturating_pow(p.len() as u32);
    let limit = p.limits().max_box;
    if size > limit {
        return Err(Error::SizeGuard { what: "verification box", size, limit });
    }
    Ok(())
}

fn transport(p: &Poset, opts: &VerifyOptions, oracle: &dyn MembershipOracle) -> Result<CheckOutcome> {
    let mut bad = 0;
    let mut total = 0;
    for m in 1..=opts.m_max {
        guard_box(p, m)?;
        let mr = rat(m);
        for x in box_points(p.len(), -m, m) {
            let f = PointFn::from_ints(&x);
            let g = enriched_phi(p, &f)?;
            total += 1;
            if oracle.contains(PolytopeKind::EnrichedOrderPoly, p, &f, &mr)?
                != oracle.contains(PolytopeKind::EnrichedChainPoly, p, &g, &mr)?
            {
                bad += 1;
            }
        }
    }
    Ok(CheckOutcome::new("transfer_transport", bad == 0, format!("{bad} of {total} box points disagree")))
}

fn vertex_behavior(p: &Poset) -> Result<CheckOutcome> {
    let ea: BTreeSet<Vec<i8>> = enumerate_signed_antichains(p)?.iter().map(|a| a.signs().to_vec()).collect();
    let mut image = BTreeSet::new();
    let mut bad = 0;
    for f in enumerate_signed_filters(p)? {
        let g = enriched_phi(p, &f.to_point())?;
        let signs: Vec<i8> = point_ints(&g).iter().map(|&c| c as i8).collect();
        let supp: Vec<usize> = g.support();
        if supp != p.min_of(f.support()).to_vec() {
            bad += 1;
        }
        image.insert(signs);
    }
    let ok = bad == 0 && image == ea;
    Ok(CheckOutcome::new(
        "transfer_vertex_behavior",
        ok,
        format!("{} images, {} signed antichains, {bad} support mismatches", image.len(), ea.len()),
    ))
}

fn pi_theta(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut ok = true;
    let mut detail = Vec::new();
    for m in 1..=opts.m_max {
        let lepp = enumerate_left_enriched(p, m)?;
        let ec = int_points(&lattice_points(PolytopeKind::EnrichedChainPoly, p, m)?);
        let eo = int_points(&lattice_points(PolytopeKind::EnrichedOrderPoly, p, m)?);
        let mut pis = BTreeSet::new();
        let mut thetas = BTreeSet::new();
        let mut composite = 0;
        for h in &lepp {
            let pi = pi_map(p, h, m)?;
            let theta = theta_map(p, h, m)?;
            if enriched_psi(p, &PointFn::from_ints(&pi))? != PointFn::from_ints(&theta) {
                composite += 1;
            }
            pis.insert(pi);
            thetas.insert(theta);
        }
        let good = pis.len() == lepp.len() && thetas.len() == lepp.len() && pis == ec && thetas == eo && composite == 0;
        ok &= good;
        detail.push(format!("m={m}: {} maps, {composite} composite mismatches", lepp.len()));
    }
    Ok(CheckOutcome::new("pi_theta", ok, detail.join("; ")))
}

/// A random order-preserving map `P -> [0,1]`: raise each value to the
/// maximum below it, visiting a linear extension bottom-up.
fn random_order_point<R: Rng>(rng: &mut R, p: &Poset) -> PointFn {
    let mut x = sample::random_unit_point(rng, p.len(), 6);
    for &v in p.canonical_extension() {
        for w in p.strictly_below(v).iter() {
            if x[w] > x[v] {
                let val = x[w].clone();
                x.set(v, val);
            }
        }
    }
    x
}

fn order_restriction(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut rng = sample::rng(opts.seed ^ 0x1);
    let mut bad = 0;
    for _ in 0..opts.transfer_points {
        let f = random_order_point(&mut rng, p);
        if enriched_phi(p, &f)? != stanley_phi(p, &f)? {
            bad += 1;
        }
    }
    Ok(CheckOutcome::new(
        "order_restriction",
        bad == 0,
        format!("{bad} of {} points of O(P) disagree", opts.transfer_points),
    ))
}

fn psi_nonnegative(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let mut rng = sample::rng(opts.seed ^ 0x2);
    let mut bad = 0;
    for _ in 0..opts.transfer_points {
        let g = sample::random_point(&mut rng, p.len(), 2, 6).abs();
        if stanley_psi(p, &g)? != enriched_psi(p, &g)? {
            bad += 1;
        }
    }
    Ok(CheckOutcome::new("psi_nonnegative", bad == 0, format!("{bad} disagreements")))
}

fn membership_vs_hull(p: &Poset, opts: &VerifyOptions, oracle: &dyn MembershipOracle) -> Result<CheckOutcome> {
    guard_box(p, opts.hull_box)?;
    let one = rat(1);
    let mut bad = Vec::new();
    let mut total = 0;
    for kind in [PolytopeKind::EnrichedOrderPoly, PolytopeKind::EnrichedChainPoly] {
        let gens = generators(kind, p)?;
        let gen_set: BTreeSet<Vec<i64>> = gens.iter().map(point_ints).collect();
        for x in box_points(p.len(), -opts.hull_box, opts.hull_box) {
            total += 1;
            let f = PointFn::from_ints(&x);
            let by_ineq = oracle.contains(kind, p, &f, &one)?;
            // Generators are members; points outside [-1,1]^P never are.
            let by_hull = if gen_set.contains(&x) {
                true
            } else if x.iter().any(|c| c.abs() > 1) {
                false
            } else {
                hull_membership(&f, &gens)?
            };
            if by_ineq != by_hull && bad.len() < 3 {
                bad.push(format!("{kind} {f}: inequalities {by_ineq}, hull {by_hull}"));
            }
        }
    }
    let detail = if bad.is_empty() { format!("{total} points agree") } else { bad.join("; ") };
    Ok(CheckOutcome::new("membership_vs_hull", bad.is_empty(), detail))
}

fn chain_inequality(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    let chains = p.chains_of(Region::All, ChainKind::Saturated)?;
    let mut rng = sample::rng(opts.seed ^ 0x3);
    let mut bad = 0;
    for _ in 0..opts.chain_points {
        let g = sample::random_point(&mut rng, p.len(), 2, 6);
        let below: Vec<Rat> =
            (0..p.len()).map(|v| max_chain_sum(p, &g, Region::StrictlyBelow(v))).collect::<Result<_>>()?;
        for c in &chains {
            let r = c.elems.len();
            let top = c.elems[0];
            let bottom = c.elems[r - 1];
            let mut lhs = pow2(r - 1) * (g[bottom].abs() + &below[bottom]);
            for i in 1..r {
                let v = c.elems[r - 1 - i];
                lhs += pow2(r - i - 1) * (g[v].abs() - &below[v]);
            }
            if lhs > max_chain_sum(p, &g, Region::Below(top))? {
                bad += 1;
            }
        }
    }
    Ok(CheckOutcome::new(
        "chain_inequality",
        bad == 0,
        format!("{bad} violations over {} saturated chains", chains.len()),
    ))
}

fn vertices_vs_lp(p: &Poset) -> Result<CheckOutcome> {
    let mut ok = true;
    let mut detail = Vec::new();
    for kind in PolytopeKind::ALL {
        let mut a: Vec<Vec<i64>> = vertices(kind, p)?.iter().map(point_ints).collect();
        let mut b: Vec<Vec<i64>> = vertices_by_lp(&generators(kind, p)?)?.iter().map(point_ints).collect();
        a.sort();
        b.sort();
        ok &= a == b;
        detail.push(format!("{kind}: {} vs {}", a.len(), b.len()));
    }
    Ok(CheckOutcome::new("vertices_vs_lp", ok, detail.join("; ")))
}

fn unique_interior(p: &Poset) -> Result<CheckOutcome> {
    let mut ok = true;
    for kind in [PolytopeKind::EnrichedOrderPoly, PolytopeKind::EnrichedChainPoly] {
        ok &= interior_lattice_points(kind, p, 1)? == vec![vec![0; p.len()]];
    }
    Ok(CheckOutcome::new("unique_interior_point", ok, "zero is the only interior lattice point"))
}

fn reflection_identity(p: &Poset) -> Result<CheckOutcome> {
    let mut bad = 0;
    let mut orthant = 0;
    let chains = maximal_echains(p)?;
    for k in &chains {
        let sign = k.signature(p);
        let (_, t) = enriched_simplices(p, k)?;
        let mut filters = k.supp_chain();
        filters.retain(|f| !f.is_empty());
        let (_, tc) = stanley_simplices(p, &filters)?;
        let mut lhs: Vec<Vec<i64>> = t.vertices().iter().map(point_ints).collect();
        let mut rhs: Vec<Vec<i64>> =
            tc.vertices().iter().map(|x| reflect(&sign, x).map(|y| point_ints(&y))).collect::<Result<_>>()?;
        lhs.sort();
        rhs.sort();
        if lhs != rhs {
            bad += 1;
        }
        if lhs.iter().any(|x| x.iter().zip(&sign).any(|(&c, &s)| c * (s as i64) < 0)) {
            orthant += 1;
        }
    }
    Ok(CheckOutcome::new(
        "reflection_identity",
        bad == 0 && orthant == 0,
        format!("{} maximal chains, {bad} reflection and {orthant} orthant failures", chains.len()),
    ))
}

/// `M̃_i(f) = L̃_i(Φ^(e) f)` on random points of every maximal facet.
pub fn facet_identity(p: &Poset, opts: &VerifyOptions) -> Result<CheckOutcome> {
    if p.len() > opts.facet_max_dim {
        return Ok(CheckOutcome::skipped(
            "facet_identity",
            format!("{} elements exceed {}", p.len(), opts.facet_max_dim),
        ));
    }
    let mut rng = sample::rng(opts.seed ^ 0x4);
    let mut bad = 0;
    let mut total = 0;
    for k in maximal_echains(p)? {
        let data = facet_data(p, &k)?;
        let (s, _) = enriched_simplices(p, &k)?;
        for i in 0..opts.facet_points {
            let f = if i % 2 == 0 {
                sample::random_convex_combination(&mut rng, s.vertices(), 7)
            } else {
                sample::random_face_point(&mut rng, s.vertices(), 4)
            };
            total += 1;
            let order = facet_functionals(&data, &f, Side::Order)?;
            let chain = facet_functionals(&data, &enriched_phi(p, &f)?, Side::Chain)?;
            if order != chain {
                bad += 1;
            }
        }
    }
    Ok(CheckOutcome::new("facet_identity", bad == 0, format!("{bad} of {total} facet points disagree")))
}
