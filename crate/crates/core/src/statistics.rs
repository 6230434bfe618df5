//! h*-polynomials from Ehrhart data, γ-polynomials, d-vectors by two
//! independent routes, and the equalities tying them to flag vectors.

use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{ehrhart, PolytopeKind};
use crate::polynomial::{binomial, Polynomial};
use crate::poset::Poset;
use crate::rat::{rat, Rat};
use crate::report::CheckOutcome;
use crate::triangulation::{flag_vectors, FlagVectors};

/// `h*` of a `d`-dimensional lattice polytope with Ehrhart polynomial `l`:
/// `h*_k = Σ_j (-1)^j C(d+1, j) L(k - j)`.
pub fn hstar_from_ehrhart(l: &Polynomial, d: usize) -> Result<Vec<i128>> {
    if l.degree() != Some(d) {
        return Err(Error::Polynomial(format!("expected an Ehrhart polynomial of degree {d}, got {l}")));
    }
    if l.coeff(0) != rat(1) {
        return Err(Error::Polynomial(format!("Ehrhart polynomial {l} has constant term != 1")));
    }
    (0..=d)
        .map(|k| {
            let h: Rat = (0..=k)
                .map(|j| {
                    let term = binomial(d + 1, j) * l.eval(&rat((k - j) as i64));
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            to_count(&h).ok_or_else(|| Error::Polynomial(format!("h*_{k} = {h} is not a nonnegative integer")))
        })
        .collect()
}

fn to_count(x: &Rat) -> Option<i128> {
    (x.is_integer() && !x.is_negative()).then(|| x.to_integer().to_i128()).flatten()
}

fn binom_row(n: usize) -> Vec<i128> {
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

/// `Σ γ_i x^i (1+x)^{d-2i}` as a coefficient list of length `d + 1`.
pub fn gamma_expand(gamma: &[i128], d: usize) -> Vec<i128> {
    let mut h = vec![0i128; d + 1];
    for (i, &g) in gamma.iter().enumerate() {
        if g == 0 {
            continue;
        }
        for (j, c) in binom_row(d - 2 * i).into_iter().enumerate() {
            h[i + j] += g * c;
        }
    }
    h
}

/// The unique `γ` (length `⌊d/2⌋ + 1`) with `h = Σ γ_i x^i (1+x)^{d-2i}`.
pub fn gamma_polynomial(h: &[i128], d: usize) -> Result<Vec<i128>> {
    if h.len() > d + 1 && h[d + 1..].iter().any(|&c| c != 0) {
        return Err(Error::Polynomial(format!("degree exceeds {d}")));
    }
    let mut rest: Vec<i128> = (0..=d).map(|i| h.get(i).copied().unwrap_or(0)).collect();
    if (0..=d).any(|i| rest[i] != rest[d - i]) {
        return Err(Error::Polynomial(format!("{h:?} is not palindromic of degree {d}")));
    }
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest[i];
        gamma.push(g);
        for (j, c) in binom_row(d - 2 * i).into_iter().enumerate() {
            rest[i + j] -= g * c;
        }
    }
    debug_assert!(rest.iter().all(|&c| c == 0));
    Ok(gamma)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DRoute {
    /// `δ_i = γ_i / 2^i` from `h*(eO(P))`.
    ViaGamma,
    /// `δ_i = 2^i #{π : peak(π) = i}` over linear extensions.
    ViaPeaks,
}

/// Number of linear extensions with each left-peak count, under the canonical
/// natural labeling.
pub fn peak_distribution(p: &Poset) -> Result<BTreeMap<usize, u128>> {
    let mut out = BTreeMap::new();
    for ext in p.linear_extensions()? {
        *out.entry(ext.left_peaks).or_insert(0) += 1;
    }
    Ok(out)
}

pub fn d_vector(p: &Poset, route: DRoute) -> Result<Vec<i128>> {
    let d = p.len();
    match route {
        DRoute::ViaGamma => {
            let h = hstar_from_ehrhart(&ehrhart(PolytopeKind::EnrichedOrderPoly, p)?, d)?;
            gamma_polynomial(&h, d)?
                .iter()
                .enumerate()
                .map(|(i, &g)| {
                    if g % (1i128 << i) != 0 {
                        return Err(Error::Verification(format!("γ_{i} = {g} is not divisible by 2^{i}")));
                    }
                    Ok(g >> i)
                })
                .collect()
        }
        DRoute::ViaPeaks => {
            let peaks = peak_distribution(p)?;
            Ok((0..=d / 2).map(|i| (peaks.get(&i).copied().unwrap_or(0) as i128) << i).collect())
        }
    }
}

pub fn h_polynomial_from_flags(f: &FlagVectors) -> Vec<i128> {
    f.h_polynomial()
}

/// Every statistic of a poset, computed along independent routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statistics {
    pub ehrhart_eo: Polynomial,
    pub ehrhart_ec: Polynomial,
    pub hstar_eo: Vec<i128>,
    pub hstar_ec: Vec<i128>,
    pub h_flags: Vec<i128>,
    pub gamma: Vec<i128>,
    pub d_via_gamma: Vec<i128>,
    pub d_via_peaks: Vec<i128>,
    pub peaks: BTreeMap<usize, u128>,
}

impl Statistics {
    pub fn compute(p: &Poset) -> Result<Statistics> {
        let d = p.len();
        let ehrhart_eo = ehrhart(PolytopeKind::EnrichedOrderPoly, p)?;
        let ehrhart_ec = ehrhart(PolytopeKind::EnrichedChainPoly, p)?;
        let hstar_eo = hstar_from_ehrhart(&ehrhart_eo, d)?;
        let hstar_ec = hstar_from_ehrhart(&ehrhart_ec, d)?;
        let h_flags = h_polynomial_from_flags(&flag_vectors(p)?);
        let gamma = gamma_polynomial(&hstar_eo, d)?;
        Ok(Statistics {
            ehrhart_eo,
            ehrhart_ec,
            hstar_eo,
            hstar_ec,
            h_flags,
            gamma,
            d_via_gamma: d_vector(p, DRoute::ViaGamma)?,
            d_via_peaks: d_vector(p, DRoute::ViaPeaks)?,
            peaks: peak_distribution(p)?,
        })
    }

    /// The equalities that must hold between the independently computed data.
    pub fn checks(&self) -> Vec<CheckOutcome> {
        let d = self.hstar_eo.len() - 1;
        let peak_gamma: Vec<i128> =
            (0..=d / 2).map(|i| (self.peaks.get(&i).copied().unwrap_or(0) as i128) << (2 * i)).collect();
        vec![
            CheckOutcome::new(
                "ehrhart_eo_eq_ec",
                self.ehrhart_eo == self.ehrhart_ec,
                format!("{} vs {}", self.ehrhart_eo.display_in("m"), self.ehrhart_ec.display_in("m")),
            ),
            CheckOutcome::new(
                "hstar_eq_flags",
                self.hstar_eo == self.hstar_ec && self.hstar_eo == self.h_flags,
                format!("eO {:?}, eC {:?}, flags {:?}", self.hstar_eo, self.hstar_ec, self.h_flags),
            ),
            CheckOutcome::new(
                "hstar_palindromic",
                (0..=d).all(|i| self.hstar_eo[i] == self.hstar_eo[d - i]),
                format!("{:?}", self.hstar_eo),
            ),
            CheckOutcome::new("gamma_nonnegative", self.gamma.iter().all(|&g| g >= 0), format!("{:?}", self.gamma)),
            CheckOutcome::new(
                "gamma_round_trip",
                gamma_expand(&self.gamma, d) == self.hstar_eo,
                format!("{:?}", self.gamma),
            ),
            CheckOutcome::new(
                "gamma_eq_peaks",
                self.gamma == peak_gamma,
                format!("γ {:?} vs 4^i·peaks {:?}", self.gamma, peak_gamma),
            ),
            CheckOutcome::new(
                "d_vector_routes_agree",
                self.d_via_gamma == self.d_via_peaks,
                format!("via γ {:?}, via peaks {:?}", self.d_via_gamma, self.d_via_peaks),
            ),
        ]
    }

    pub fn to_json(&self) -> Value {
        let ints = |v: &[i128]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        json!({
            "ehrhart": self.ehrhart_eo.to_json(),
            "ehrhart_text": self.ehrhart_eo.display_in("m"),
            "hstar_eo": ints(&self.hstar_eo),
            "hstar_ec": ints(&self.hstar_ec),
            "h_flags": ints(&self.h_flags),
            "gamma": ints(&self.gamma),
            "d_vector": ints(&self.d_via_gamma),
            "d_vector_via_peaks": ints(&self.d_via_peaks),
            "peaks": self.peaks.iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>(),
        })
    }
}
