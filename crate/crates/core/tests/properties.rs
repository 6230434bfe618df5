use epoly::geometry::{ehrhart, lattice_points, membership};
use epoly::rat::{rat, ratio, Rat};
use epoly::statistics::{gamma_expand, gamma_polynomial, hstar_from_ehrhart};
use epoly::transfer::{enriched_phi, enriched_psi, reflect, stanley_phi, stanley_psi};
use epoly::triangulation::flag_vectors;
use epoly::verify::{facet_identity, VerifyOptions};
use epoly::{PointFn, PolytopeKind, Poset};
use proptest::prelude::*;

/// Posets on up to five elements, generated from relations `i < j` with
/// `i < j` as indices so the relation set is always acyclic.
fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|d| {
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        let n = pairs.len();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |keep| {
            let rel: Vec<(usize, usize)> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&r, _)| r).collect();
            Poset::new((0..d).map(|i| format!("x{i}")).collect(), &rel).unwrap()
        })
    })
}

fn point(d: usize) -> impl Strategy<Value = PointFn> {
    proptest::collection::vec((-12i64..=12, 1i64..=4), d)
        .prop_map(|v| PointFn::new(v.into_iter().map(|(n, k)| ratio(n, k)).collect()))
}

fn with_point(max: usize) -> impl Strategy<Value = (Poset, PointFn)> {
    poset(max).prop_flat_map(|p| {
        let d = p.len();
        (Just(p), point(d))
    })
}

fn signs(d: usize) -> impl Strategy<Value = Vec<i8>> {
    proptest::collection::vec(prop_oneof![Just(-1i8), Just(1i8)], d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enriched_maps_are_inverse((p, f) in with_point(5)) {
        prop_assert_eq!(enriched_psi(&p, &enriched_phi(&p, &f).unwrap()).unwrap(), f.clone());
        prop_assert_eq!(enriched_phi(&p, &enriched_psi(&p, &f).unwrap()).unwrap(), f);
    }

    #[test]
    fn stanley_maps_invert_on_order_points(p in poset(4)) {
        for x in lattice_points(PolytopeKind::OrderPoly, &p, 2).unwrap() {
            let f = PointFn::from_ints(&x);
            let g = stanley_phi(&p, &f).unwrap();
            prop_assert!(membership(PolytopeKind::ChainPoly, &p, &g, &rat(2)).unwrap());
            prop_assert_eq!(stanley_psi(&p, &g).unwrap(), f);
        }
    }

    #[test]
    fn reflection_is_an_involution((p, f) in with_point(5), s in signs(5)) {
        let s = &s[..p.len()];
        prop_assert_eq!(reflect(s, &reflect(s, &f).unwrap()).unwrap(), f);
    }

    #[test]
    fn enriched_phi_transports_membership((p, f) in with_point(5), m in 1i64..=3) {
        let m = rat(m);
        let g = enriched_phi(&p, &f).unwrap();
        prop_assert_eq!(
            membership(PolytopeKind::EnrichedOrderPoly, &p, &f, &m).unwrap(),
            membership(PolytopeKind::EnrichedChainPoly, &p, &g, &m).unwrap()
        );
    }

    #[test]
    fn enriched_chain_points_have_small_chain_sums((p, f) in with_point(5)) {
        let m = rat(3);
        if membership(PolytopeKind::EnrichedChainPoly, &p, &f, &m).unwrap() {
            for c in p.chains_of(epoly::poset::Region::All, epoly::poset::ChainKind::Maximal).unwrap() {
                let s: Rat = c.elems.iter().map(|&v| num_traits::Signed::abs(&f[v])).sum();
                prop_assert!(s <= m);
            }
        }
    }

    #[test]
    fn gamma_round_trips(gamma in proptest::collection::vec(-20i128..=20, 1..=4), extra in 0usize..=1) {
        let d = 2 * (gamma.len() - 1) + extra;
        let h = gamma_expand(&gamma, d);
        prop_assert_eq!(gamma_polynomial(&h, d).unwrap(), gamma);
    }

    #[test]
    fn extension_count_matches_listing(p in poset(5)) {
        prop_assert_eq!(p.count_linear_extensions().unwrap(), p.linear_extensions().unwrap().len() as u128);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn flag_h_is_hstar_and_palindromic(p in poset(4)) {
        let d = p.len();
        let h = flag_vectors(&p).unwrap().h_polynomial();
        prop_assert!((0..=d).all(|i| h[i] == h[d - i]));
        let l = ehrhart(PolytopeKind::EnrichedOrderPoly, &p).unwrap();
        prop_assert_eq!(hstar_from_ehrhart(&l, d).unwrap(), h);
    }

    #[test]
    fn facet_identity_holds(p in poset(4), seed in any::<u64>()) {
        let opts = VerifyOptions { seed, facet_points: 20, ..VerifyOptions::default() };
        let outcome = facet_identity(&p, &opts).unwrap();
        prop_assert!(!outcome.failed(), "{}", outcome);
    }
}
