//! Chain functionals, Stanley's transfer map and its enriched analogue, the
//! coordinate reflections, and the bijections from left enriched P-partitions
//! to lattice points of the dilated enriched polytopes.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poset::{PChain, Poset, Region};
use crate::rat::{pow2, PointFn, Rat};

/// The three functionals of a chain `v_1 > ... > v_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainValues {
    /// `|f(v_1)| + ... + |f(v_r)|`
    pub s: Rat,
    /// `-f(v_1) - 2f(v_2) - ... - 2^{r-2} f(v_{r-1}) + 2^{r-1} f(v_r)`
    pub t_plus: Rat,
    /// As `t_plus` with the last sign negative.
    pub t_minus: Rat,
}

pub fn chain_functionals(p: &Poset, f: &PointFn, chain: &PChain) -> Result<ChainValues> {
    f.check_dim(p.len())?;
    let r = chain.len();
    if r == 0 {
        return Err(Error::InvalidChain("chain functionals need a nonempty chain".into()));
    }
    for &v in &chain.elems {
        p.check_element(v)?;
    }
    let s = chain.elems.iter().map(|&v| f[v].abs()).sum();
    let head: Rat = chain.elems[..r - 1].iter().enumerate().map(|(i, &v)| -(pow2(i) * &f[v])).sum();
    let last = pow2(r - 1) * &f[chain.elems[r - 1]];
    Ok(ChainValues { s, t_plus: &head + &last, t_minus: head - last })
}

/// `A(v) = max{S(g; C) : C ∈ MC(P_{<v})}` for every `v`, zero when `v` is
/// minimal, via `A(v) = max_{w ⋖ v} (|g(w)| + A(w))` along a linear extension.
pub(crate) fn strict_chain_maxima(p: &Poset, g: &PointFn) -> Vec<Rat> {
    let mut below = vec![Rat::zero(); p.len()];
    for &v in p.canonical_extension() {
        below[v] = p.lower_covers(v).iter().map(|&w| g[w].abs() + &below[w]).max().unwrap_or_else(Rat::zero);
    }
    below
}

/// Maximum of `S(g; C)` over the maximal chains of a region; zero when the
/// region is empty.
pub fn max_chain_sum(p: &Poset, g: &PointFn, region: Region) -> Result<Rat> {
    g.check_dim(p.len())?;
    let below = strict_chain_maxima(p, g);
    Ok(match region {
        Region::StrictlyBelow(v) => {
            p.check_element(v)?;
            below[v].clone()
        }
        Region::Below(v) => {
            p.check_element(v)?;
            g[v].abs() + &below[v]
        }
        Region::All => p.maximal_elements().iter().map(|v| g[v].abs() + &below[v]).max().unwrap_or_else(Rat::zero),
    })
}

/// Stanley's transfer map: `f(v) - max{f(w) : w ⋖ v}`, and `f(v)` at
/// minimal elements.
pub fn stanley_phi(p: &Poset, f: &PointFn) -> Result<PointFn> {
    f.check_dim(p.len())?;
    let values = (0..p.len())
        .map(|v| match p.lower_covers(v).iter().map(|&w| &f[w]).max() {
            Some(m) => &f[v] - m,
            None => f[v].clone(),
        })
        .collect();
    Ok(PointFn::new(values))
}

/// Inverse of Stanley's transfer map on nonnegative points:
/// `g(v) + max` of the chain sums strictly below `v`.
pub fn stanley_psi(p: &Poset, g: &PointFn) -> Result<PointFn> {
    g.check_dim(p.len())?;
    if let Some(v) = (0..p.len()).find(|&v| g[v].is_negative()) {
        return Err(Error::NegativeInput(format!("coordinate `{}` is negative", p.label(v))));
    }
    enriched_psi(p, g)
}

/// The enriched transfer map. Computed in linear-extension order, so the
/// chain maxima are taken over values of the image already determined.
pub fn enriched_phi(p: &Poset, f: &PointFn) -> Result<PointFn> {
    f.check_dim(p.len())?;
    let mut g = PointFn::zero(p.len());
    let mut below = vec![Rat::zero(); p.len()];
    for &v in p.canonical_extension() {
        let m = p.lower_covers(v).iter().map(|&w| g[w].abs() + &below[w]).max().unwrap_or_else(Rat::zero);
        g.set(v, &f[v] - &m);
        below[v] = m;
    }
    Ok(g)
}

/// Inverse of the enriched transfer map: `g(v) + max{S(g; C) : C ∈ MC(P_{<v})}`.
pub fn enriched_psi(p: &Poset, g: &PointFn) -> Result<PointFn> {
    g.check_dim(p.len())?;
    let below = strict_chain_maxima(p, g);
    let values = (0..p.len()).map(|v| if p.is_minimal(v) { g[v].clone() } else { &g[v] + &below[v] }).collect();
    Ok(PointFn::new(values))
}

/// Negates the coordinates where `sign` is `-1`.
pub fn reflect(sign: &[i8], g: &PointFn) -> Result<PointFn> {
    g.check_dim(sign.len())?;
    let values = g.values().iter().zip(sign).map(|(x, &s)| if s == -1 { -x.clone() } else { x.clone() }).collect();
    Ok(PointFn::new(values))
}

/// Checks that `h` is a left enriched P-partition bounded by `m`:
/// `v <= w` implies `|h(v)| <= |h(w)|`, with `h(w) >= 0` on ties.
pub fn check_left_enriched(p: &Poset, h: &[i64], m: i64) -> Result<()> {
    if h.len() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), got: h.len() });
    }
    if m < 0 {
        return Err(Error::InvalidArgument(format!("dilation {m} is negative")));
    }
    if let Some(v) = (0..p.len()).find(|&v| h[v].abs() > m) {
        return Err(Error::NotLeftEnriched(format!("|h({})| = {} exceeds {m}", p.label(v), h[v].abs())));
    }
    for w in 0..p.len() {
        for v in p.strictly_below(w).iter() {
            let (a, b) = (h[v].abs(), h[w].abs());
            if a > b {
                return Err(Error::NotLeftEnriched(format!(
                    "|h({})| > |h({})| although {} < {}",
                    p.label(v),
                    p.label(w),
                    p.label(v),
                    p.label(w)
                )));
            }
            if a == b && h[w] < 0 {
                return Err(Error::NotLeftEnriched(format!(
                    "|h({})| = |h({})| but h({}) < 0",
                    p.label(v),
                    p.label(w),
                    p.label(w)
                )));
            }
        }
    }
    Ok(())
}

fn max_abs_lower(p: &Poset, h: &[i64], v: usize) -> Option<i64> {
    p.lower_covers(v).iter().map(|&w| h[w].abs()).max()
}

/// Bijection from left enriched P-partitions bounded by `m` onto the lattice
/// points of the `m`-th dilate of the enriched chain polytope.
pub fn pi_map(p: &Poset, h: &[i64], m: i64) -> Result<Vec<i64>> {
    check_left_enriched(p, h, m)?;
    Ok((0..p.len())
        .map(|v| match max_abs_lower(p, h, v) {
            None => h[v],
            Some(k) if h[v] >= 0 => h[v] - k,
            Some(k) => h[v] + k,
        })
        .collect())
}

/// Bijection from left enriched P-partitions bounded by `m` onto the lattice
/// points of the `m`-th dilate of the enriched order polytope.
pub fn theta_map(p: &Poset, h: &[i64], m: i64) -> Result<Vec<i64>> {
    check_left_enriched(p, h, m)?;
    Ok((0..p.len())
        .map(|v| match max_abs_lower(p, h, v) {
            Some(k) if h[v] < 0 => h[v] + 2 * k,
            _ => h[v],
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::ChainKind;
    use crate::rat::{rat, ratio};

    fn lambda() -> Poset {
        Poset::parse("elements: u v w\ncovers: u<w v<w").unwrap()
    }

    fn pt(v: &[(i64, i64)]) -> PointFn {
        PointFn::new(v.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    fn ints(v: &[i64]) -> PointFn {
        PointFn::from_ints(v)
    }

    /// Enriched transfer by the defining formula: max over *all* chains of
    /// `P_{<v}`, evaluated recursively in a linear extension.
    fn phi_by_all_chains(p: &Poset, f: &PointFn) -> PointFn {
        let mut g = PointFn::zero(p.len());
        for &v in p.canonical_extension() {
            let m = p
                .chains_of(Region::StrictlyBelow(v), ChainKind::All)
                .unwrap()
                .iter()
                .map(|c| c.elems.iter().map(|&w| g[w].abs()).sum::<Rat>())
                .max()
                .unwrap_or_else(Rat::zero);
            g.set(v, &f[v] - m);
        }
        g
    }

    #[test]
    fn chain_functional_examples() {
        let p = lambda();
        let c = PChain { elems: vec![2, 0] };
        let vals = chain_functionals(&p, &pt(&[(1, 2), (0, 1), (1, 1)]), &c).unwrap();
        assert_eq!(vals, ChainValues { s: ratio(3, 2), t_plus: rat(0), t_minus: rat(-2) });

        let f = pt(&[(-3, 4), (0, 1), (0, 1)]);
        let single = chain_functionals(&p, &f, &PChain { elems: vec![0] }).unwrap();
        assert_eq!(single, ChainValues { s: ratio(3, 4), t_plus: ratio(-3, 4), t_minus: ratio(3, 4) });

        let c3 = Poset::chain(3);
        let vals = chain_functionals(&c3, &ints(&[1, 1, 1]), &PChain { elems: vec![2, 1, 0] }).unwrap();
        assert_eq!(vals, ChainValues { s: rat(3), t_plus: rat(1), t_minus: rat(-7) });
        assert!(chain_functionals(&p, &f, &PChain { elems: vec![] }).is_err());
        assert!(chain_functionals(&p, &ints(&[1, 1]), &c).is_err());
    }

    #[test]
    fn max_chain_sum_examples() {
        let p = lambda();
        assert_eq!(max_chain_sum(&p, &ints(&[1, -2, 0]), Region::StrictlyBelow(2)).unwrap(), rat(2));
        assert_eq!(max_chain_sum(&p, &ints(&[1, -2, 0]), Region::StrictlyBelow(0)).unwrap(), rat(0));
        let c3 = Poset::chain(3);
        assert_eq!(max_chain_sum(&c3, &ints(&[1, 1, 1]), Region::Below(2)).unwrap(), rat(3));
        assert_eq!(max_chain_sum(&c3, &ints(&[1, 1, 1]), Region::All).unwrap(), rat(3));
        assert!(max_chain_sum(&p, &ints(&[1, 1, 1]), Region::Below(3)).is_err());
    }

    #[test]
    fn stanley_examples() {
        let p = lambda();
        let f = pt(&[(3, 10), (7, 10), (9, 10)]);
        let g = stanley_phi(&p, &f).unwrap();
        assert_eq!(g, pt(&[(3, 10), (7, 10), (1, 5)]));
        assert_eq!(stanley_psi(&p, &g).unwrap(), f);
        assert_eq!(stanley_phi(&p, &ints(&[1, 0, 1])).unwrap(), ints(&[1, 0, 0]));
        assert_eq!(stanley_psi(&p, &ints(&[1, 0, 0])).unwrap(), ints(&[1, 0, 1]));
        assert!(stanley_phi(&p, &PointFn::zero(3)).unwrap().is_zero());
        assert!(stanley_psi(&p, &PointFn::zero(3)).unwrap().is_zero());
        assert!(matches!(stanley_psi(&p, &ints(&[1, -1, 0])), Err(Error::NegativeInput(_))));
    }

    #[test]
    fn enriched_phi_examples() {
        let p = lambda();
        assert_eq!(enriched_phi(&p, &ints(&[1, 1, 1])).unwrap(), ints(&[1, 1, 0]));
        assert_eq!(enriched_phi(&p, &pt(&[(-1, 2), (1, 4), (1, 2)])).unwrap(), pt(&[(-1, 2), (1, 4), (0, 1)]));
        assert!(enriched_phi(&p, &PointFn::zero(3)).unwrap().is_zero());
        assert_eq!(enriched_phi(&p, &ints(&[-1, 0, 1])).unwrap(), ints(&[-1, 0, 0]));
    }

    #[test]
    fn enriched_psi_examples() {
        let p = lambda();
        assert_eq!(enriched_psi(&p, &ints(&[1, 1, 0])).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(enriched_psi(&p, &ints(&[0, 0, -1])).unwrap(), ints(&[0, 0, -1]));
        assert_eq!(enriched_psi(&p, &ints(&[1, -1, 0])).unwrap(), ints(&[1, -1, 1]));
    }

    #[test]
    fn dp_matches_all_chain_definition() {
        let p = Poset::parse("elements: a b c d e\ncovers: a<c b<c b<d c<e d<e").unwrap();
        let f = pt(&[(1, 3), (-2, 5), (7, 4), (-1, 1), (2, 7)]);
        assert_eq!(enriched_phi(&p, &f).unwrap(), phi_by_all_chains(&p, &f));
        assert_eq!(enriched_psi(&p, &enriched_phi(&p, &f).unwrap()).unwrap(), f);
    }

    #[test]
    fn reflect_examples() {
        let g = ints(&[1, 1, 1]);
        assert_eq!(reflect(&[0, 0, -1], &g).unwrap(), ints(&[1, 1, -1]));
        assert_eq!(reflect(&[0, 0, 0], &g).unwrap(), g);
        let h = pt(&[(1, 2), (-3, 1), (2, 5)]);
        let s = [-1, 1, -1];
        assert_eq!(reflect(&s, &reflect(&s, &h).unwrap()).unwrap(), h);
        assert!(reflect(&[1], &g).is_err());
    }

    #[test]
    fn pi_and_theta_examples() {
        let p = lambda();
        assert_eq!(pi_map(&p, &[1, -2, 2], 2).unwrap(), vec![1, -2, 0]);
        assert_eq!(pi_map(&p, &[0, 1, 1], 1).unwrap(), vec![0, 1, 0]);
        assert!(matches!(pi_map(&p, &[1, 0, -1], 1), Err(Error::NotLeftEnriched(_))));
        assert!(matches!(pi_map(&p, &[2, 0, 2], 1), Err(Error::NotLeftEnriched(_))));
        assert!(matches!(pi_map(&p, &[2, 0, 1], 2), Err(Error::NotLeftEnriched(_))));
        assert_eq!(theta_map(&p, &[1, -2, 2], 2).unwrap(), vec![1, -2, 2]);
        assert_eq!(theta_map(&p, &[1, 1, -2], 2).unwrap(), vec![1, 1, 0]);
        assert_eq!(theta_map(&p, &[0, 0, 0], 3).unwrap(), vec![0, 0, 0]);
        assert!(matches!(theta_map(&p, &[1, 0, -1], 1), Err(Error::NotLeftEnriched(_))));
    }
}
