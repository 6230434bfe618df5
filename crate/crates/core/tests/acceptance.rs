//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any failure.
//!
//! All comparisons are exact; the pinned constants below are sample sizes,
//! seeds and ranges, not numeric tolerances.

use std::collections::BTreeMap;

use epoly::corpus;
use epoly::enriched::{enumerate_signed_antichains, enumerate_signed_filters, SignVector};
use epoly::geometry::{ehrhart, enumerate_left_enriched, generators, lattice_points, vertices, vertices_by_lp};
use epoly::polynomial::Polynomial;
use epoly::rat::{rat, ratio};
use epoly::report::Status;
use epoly::statistics::{d_vector, gamma_polynomial, hstar_from_ehrhart, peak_distribution, DRoute};
use epoly::triangulation::{flag_vectors, verify_triangulation};
use epoly::verify::{facet_identity, verify_suite_with, InequalityOracle, VerifyOptions};
use epoly::{PointFn, PolytopeKind, Poset};

const SEED: u64 = 20_240_601;
const TRIANGULATION_SAMPLES: usize = 200;
const ROUND_TRIP_POINTS: usize = 200;
const CHAIN_INEQUALITY_POINTS: usize = 100;
const HULL_BOX: i64 = 2;
const M_MAX: i64 = 2;
const FACET_POINTS: usize = 50;
const FACET_MAX_DIM: usize = 4;

type Outcome = Result<(), String>;

fn lambda() -> Poset {
    corpus::builtin("lambda").expect("built-in lambda")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sorted(mut pts: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    pts.sort();
    pts
}

fn ints(pts: &[PointFn]) -> Vec<Vec<i64>> {
    sorted(pts.iter().map(|x| x.to_ints().expect("lattice point")).collect())
}

fn c1_generating_sets() -> Outcome {
    let p = lambda();
    let ef: Vec<Vec<i8>> =
        enumerate_signed_filters(&p).map_err(|e| e.to_string())?.iter().map(|f| f.signs().to_vec()).collect();
    let ea: Vec<Vec<i8>> =
        enumerate_signed_antichains(&p).map_err(|e| e.to_string())?.iter().map(|a| a.signs().to_vec()).collect();
    let want_ef: Vec<Vec<i8>> = vec![
        vec![0, 0, 0],
        vec![0, 0, 1],
        vec![0, 0, -1],
        vec![1, 0, 1],
        vec![-1, 0, 1],
        vec![0, 1, 1],
        vec![0, -1, 1],
        vec![1, 1, 1],
        vec![1, -1, 1],
        vec![-1, 1, 1],
        vec![-1, -1, 1],
    ];
    let want_ea: Vec<Vec<i8>> = vec![
        vec![0, 0, 0],
        vec![1, 0, 0],
        vec![-1, 0, 0],
        vec![0, 1, 0],
        vec![0, -1, 0],
        vec![0, 0, 1],
        vec![0, 0, -1],
        vec![1, 1, 0],
        vec![1, -1, 0],
        vec![-1, 1, 0],
        vec![-1, -1, 0],
    ];
    ensure(ef == want_ef, || format!("signed filters {ef:?}"))?;
    ensure(ea == want_ea, || format!("signed antichains {ea:?}"))
}

fn c2_counting_identity() -> Outcome {
    let p = lambda();
    for (m, want) in [(1, 11), (2, 45), (3, 119)] {
        let eo = lattice_points(PolytopeKind::EnrichedOrderPoly, &p, m).map_err(|e| e.to_string())?.len();
        let ec = lattice_points(PolytopeKind::EnrichedChainPoly, &p, m).map_err(|e| e.to_string())?.len();
        let lepp = enumerate_left_enriched(&p, m).map_err(|e| e.to_string())?.len();
        ensure(eo == want && ec == want && lepp == want, || format!("m={m}: eO {eo}, eC {ec}, E_m {lepp}"))?;
    }
    Ok(())
}

fn c3_ehrhart() -> Outcome {
    let p = lambda();
    let want = Polynomial::new(vec![rat(1), ratio(10, 3), rat(4), ratio(8, 3)]);
    let eo = ehrhart(PolytopeKind::EnrichedOrderPoly, &p).map_err(|e| e.to_string())?;
    let ec = ehrhart(PolytopeKind::EnrichedChainPoly, &p).map_err(|e| e.to_string())?;
    ensure(eo == want, || format!("L_eO = {}", eo.display_in("m")))?;
    let h_eo = hstar_from_ehrhart(&eo, 3).map_err(|e| e.to_string())?;
    let h_ec = hstar_from_ehrhart(&ec, 3).map_err(|e| e.to_string())?;
    let h_flags = flag_vectors(&p).map_err(|e| e.to_string())?.h_polynomial();
    let target = vec![1, 7, 7, 1];
    ensure(h_eo == target && h_ec == target && h_flags == target, || {
        format!("h* eO {h_eo:?}, eC {h_ec:?}, flags {h_flags:?}")
    })
}

fn c4_triangulations() -> Outcome {
    let p = lambda();
    for kind in [PolytopeKind::EnrichedOrderPoly, PolytopeKind::EnrichedChainPoly] {
        let r = verify_triangulation(kind, &p, TRIANGULATION_SAMPLES, SEED).map_err(|e| e.to_string())?;
        ensure(r.facets.len() == 16, || format!("{kind}: {} facets", r.facets.len()))?;
        ensure(r.volumes.iter().all(|v| *v == rat(1)), || format!("{kind}: non-unit volume"))?;
        ensure(r.volume_sum() == rat(16) && rat(16) == rat(6) * ratio(8, 3), || {
            format!("{kind}: sum {}", r.volume_sum())
        })?;
        ensure(r.passed(), || format!("{kind}: {:?}", r.checks))?;
    }
    Ok(())
}

fn c5_statistics() -> Outcome {
    let p = lambda();
    let h = hstar_from_ehrhart(&ehrhart(PolytopeKind::EnrichedOrderPoly, &p).map_err(|e| e.to_string())?, 3)
        .map_err(|e| e.to_string())?;
    let gamma = gamma_polynomial(&h, 3).map_err(|e| e.to_string())?;
    ensure(gamma == vec![1, 4], || format!("gamma {gamma:?}"))?;
    let via_gamma = d_vector(&p, DRoute::ViaGamma).map_err(|e| e.to_string())?;
    let via_peaks = d_vector(&p, DRoute::ViaPeaks).map_err(|e| e.to_string())?;
    ensure(via_gamma == vec![1, 2] && via_peaks == via_gamma, || format!("d {via_gamma:?} / {via_peaks:?}"))?;
    let peaks = peak_distribution(&p).map_err(|e| e.to_string())?;
    ensure(peaks == BTreeMap::from([(0, 1), (1, 1)]), || format!("peaks {peaks:?}"))
}

fn c6_vertices() -> Outcome {
    let p = lambda();
    let cases: [(PolytopeKind, Vec<Vec<i64>>); 2] = [
        (
            PolytopeKind::EnrichedOrderPoly,
            vec![vec![1, 1, 1], vec![1, -1, 1], vec![-1, 1, 1], vec![-1, -1, 1], vec![0, 0, -1]],
        ),
        (
            PolytopeKind::EnrichedChainPoly,
            vec![vec![1, 1, 0], vec![1, -1, 0], vec![-1, 1, 0], vec![-1, -1, 0], vec![0, 0, 1], vec![0, 0, -1]],
        ),
    ];
    for (kind, want) in cases {
        let ours = ints(&vertices(kind, &p).map_err(|e| e.to_string())?);
        let lp = ints(&vertices_by_lp(&generators(kind, &p).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?);
        ensure(ours == sorted(want), || format!("{kind}: {ours:?}"))?;
        ensure(ours == lp, || format!("{kind}: LP oracle gives {lp:?}"))?;
    }
    Ok(())
}

fn c7_corpus_suite() -> Outcome {
    let opts = VerifyOptions {
        m_max: M_MAX,
        seed: SEED,
        samples: TRIANGULATION_SAMPLES / 2,
        transfer_points: ROUND_TRIP_POINTS,
        chain_points: CHAIN_INEQUALITY_POINTS,
        hull_box: HULL_BOX,
        facet_points: FACET_POINTS,
        facet_max_dim: FACET_MAX_DIM,
    };
    let required = [
        "transfer_round_trip",
        "transfer_lattice_bijection",
        "pi_theta",
        "order_restriction",
        "membership_vs_hull",
        "chain_inequality",
    ];
    for (name, p) in corpus::all() {
        let r = verify_suite_with(&p, &opts, &InequalityOracle);
        ensure(r.passed(), || format!("{name}: {:?}", r.checks.iter().filter(|c| c.failed()).collect::<Vec<_>>()))?;
        for req in required {
            let ran = r.checks.iter().any(|c| c.name == req && c.status == Status::Passed);
            ensure(ran, || format!("{name}: {req} did not run"))?;
        }
    }
    Ok(())
}

fn c8_closed_forms() -> Outcome {
    let err = |e: epoly::Error| e.to_string();
    let chain2 = corpus::builtin("chain2").map_err(err)?;
    let l = ehrhart(PolytopeKind::EnrichedOrderPoly, &chain2).map_err(err)?;
    let h = hstar_from_ehrhart(&l, 2).map_err(err)?;
    ensure(h == vec![1, 2, 1], || format!("2-chain h* {h:?}"))?;
    let n = vertices(PolytopeKind::EnrichedOrderPoly, &chain2).map_err(err)?.len();
    ensure(n == 3, || format!("2-chain has {n} vertices"))?;
    let r = verify_triangulation(PolytopeKind::EnrichedOrderPoly, &chain2, TRIANGULATION_SAMPLES, SEED).map_err(err)?;
    ensure(r.facets.len() == 4 && r.volume_sum() == rat(4) && r.passed(), || {
        format!("2-chain: {} facets, volume {}", r.facets.len(), r.volume_sum())
    })?;
    let d = d_vector(&chain2, DRoute::ViaGamma).map_err(err)?;
    ensure(d == vec![1, 0], || format!("2-chain d {d:?}"))?;

    let anti2 = corpus::builtin("antichain2").map_err(err)?;
    let h = hstar_from_ehrhart(&ehrhart(PolytopeKind::EnrichedOrderPoly, &anti2).map_err(err)?, 2).map_err(err)?;
    ensure(h == vec![1, 6, 1], || format!("2-antichain h* {h:?}"))?;
    let g = gamma_polynomial(&h, 2).map_err(err)?;
    ensure(g == vec![1, 4], || format!("2-antichain gamma {g:?}"))?;
    let d = d_vector(&anti2, DRoute::ViaPeaks).map_err(err)?;
    ensure(d == vec![1, 2] && d == d_vector(&anti2, DRoute::ViaGamma).map_err(err)?, || {
        format!("2-antichain d {d:?}")
    })?;

    let single = corpus::builtin("chain1").map_err(err)?;
    let l = ehrhart(PolytopeKind::EnrichedOrderPoly, &single).map_err(err)?;
    ensure(l == Polynomial::from_ints(&[1, 2]), || format!("single element L = {l}"))
}

fn c9_facet_identity() -> Outcome {
    let opts =
        VerifyOptions { seed: SEED, facet_points: FACET_POINTS, facet_max_dim: FACET_MAX_DIM, ..Default::default() };
    for (name, p) in corpus::all().into_iter().filter(|(_, p)| p.len() <= FACET_MAX_DIM) {
        let c = facet_identity(&p, &opts).map_err(|e| e.to_string())?;
        ensure(c.status == Status::Passed, || format!("{name}: {c}"))?;
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("Lambda generating sets eF, eA (11 points each)", c1_generating_sets),
        ("Lambda counts 11/45/119 by three enumerators", c2_counting_identity),
        ("Lambda Ehrhart polynomial and h* = (1,7,7,1) three ways", c3_ehrhart),
        ("Lambda triangulations: 16 unimodular facets, volume 16", c4_triangulations),
        ("Lambda gamma (1,4), d-vector (1,2), peak distribution", c5_statistics),
        ("Lambda vertices match the LP oracle", c6_vertices),
        ("corpus property suite", c7_corpus_suite),
        ("small closed forms", c8_closed_forms),
        ("facet functional identity on corpus facets", c9_facet_identity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
