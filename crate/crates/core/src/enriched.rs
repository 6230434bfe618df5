//! Signed characteristic points: the vertex-generating sets of the enriched
//! order and chain polytopes, the graded order on signed filters, and the
//! correspondence between chains of signed filters and (filter chain,
//! signature) pairs.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{ElemSet, Poset};
use crate::rat::PointFn;

/// A map `P -> {1, 0, -1}`.
pub type Signature = Vec<i8>;

/// Common access to the sign vector of a signed point.
pub trait SignVector {
    fn signs(&self) -> &[i8];

    fn support(&self) -> ElemSet {
        ElemSet::from_iter(self.signs().iter().enumerate().filter(|(_, &s)| s != 0).map(|(i, _)| i))
    }

    fn to_point(&self) -> PointFn {
        PointFn::from_signs(self.signs())
    }
}

fn check_signs(p: &Poset, values: &[i8]) -> Result<()> {
    if values.len() != p.len() {
        return Err(Error::DimensionMismatch { expected: p.len(), got: values.len() });
    }
    if let Some(bad) = values.iter().find(|&&s| !(-1..=1).contains(&s)) {
        return Err(Error::InvalidPoint(format!("value {bad} outside {{-1,0,1}}")));
    }
    Ok(())
}

/// A `{-1,0,1}`-valued function whose support is an order filter and which
/// takes the value `-1` only at minimal elements of its support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedFilter {
    values: Vec<i8>,
}

impl SignedFilter {
    pub fn new(p: &Poset, values: Vec<i8>) -> Result<SignedFilter> {
        check_signs(p, &values)?;
        let f = SignedFilter { values };
        let supp = f.support();
        if !p.is_filter(supp) {
            return Err(Error::InvalidPoint(format!("support {} is not an order filter", p.format_set(supp))));
        }
        let mins = p.min_of(supp);
        if let Some(v) = supp.iter().find(|&v| f.values[v] == -1 && !mins.contains(v)) {
            return Err(Error::InvalidPoint(format!(
                "value -1 at `{}`, which is not minimal in the support",
                p.label(v)
            )));
        }
        Ok(f)
    }

    pub fn zero(d: usize) -> SignedFilter {
        SignedFilter { values: vec![0; d] }
    }

    /// The characteristic function of an order filter.
    pub fn characteristic(p: &Poset, filter: ElemSet) -> Result<SignedFilter> {
        let values = (0..p.len()).map(|v| filter.contains(v) as i8).collect();
        SignedFilter::new(p, values)
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.support().len()
    }
}

impl SignVector for SignedFilter {
    fn signs(&self) -> &[i8] {
        &self.values
    }
}

/// A `{-1,0,1}`-valued function whose support is an antichain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedAntichain {
    values: Vec<i8>,
}

impl SignedAntichain {
    pub fn new(p: &Poset, values: Vec<i8>) -> Result<SignedAntichain> {
        check_signs(p, &values)?;
        let a = SignedAntichain { values };
        if !p.is_antichain(a.support()) {
            return Err(Error::InvalidPoint(format!("support {} is not an antichain", p.format_set(a.support()))));
        }
        Ok(a)
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }
}

impl SignVector for SignedAntichain {
    fn signs(&self) -> &[i8] {
        &self.values
    }
}

fn fmt_signs(values: &[i8], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    write!(f, "({})", parts.join(","))
}

impl fmt::Display for SignedFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_signs(&self.values, f)
    }
}

impl fmt::Display for SignedAntichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_signs(&self.values, f)
    }
}

/// Sign patterns on `slots`: `+1` before `-1`, first slot varying slowest.
fn sign_patterns(d: usize, base: &[i8], slots: &[usize]) -> Vec<Vec<i8>> {
    let k = slots.len();
    (0..1u64 << k)
        .map(|mask| {
            let mut values = base.to_vec();
            debug_assert_eq!(values.len(), d);
            for (j, &v) in slots.iter().enumerate() {
                values[v] = if mask >> (k - 1 - j) & 1 == 0 { 1 } else { -1 };
            }
            values
        })
        .collect()
}

/// All signed filters: for each order filter `F` (graded lexicographic order)
/// every sign choice on `min F`, with 1 at the remaining elements of `F`.
pub fn enumerate_signed_filters(p: &Poset) -> Result<Vec<SignedFilter>> {
    let d = p.len();
    let mut out = Vec::new();
    for filter in p.order_filters()? {
        let base: Vec<i8> = (0..d).map(|v| filter.contains(v) as i8).collect();
        let mins = p.min_of(filter).to_vec();
        for values in sign_patterns(d, &base, &mins) {
            out.push(SignedFilter { values });
        }
    }
    Ok(out)
}

/// All signed antichains: every sign choice on every antichain.
pub fn enumerate_signed_antichains(p: &Poset) -> Result<Vec<SignedAntichain>> {
    let d = p.len();
    let mut out = Vec::new();
    for anti in p.antichains()? {
        for values in sign_patterns(d, &vec![0; d], &anti.to_vec()) {
            out.push(SignedAntichain { values });
        }
    }
    Ok(out)
}

fn check_pair(p: &Poset, f: &[i8], g: &[i8]) -> Result<()> {
    for x in [f, g] {
        if x.len() != p.len() {
            return Err(Error::DimensionMismatch { expected: p.len(), got: x.len() });
        }
    }
    Ok(())
}

/// `f > g` in the graded order on signed filters: the support of `f` strictly
/// contains that of `g`, `f >= g` pointwise on `supp g`, and the two agree at
/// every element of `supp g` that is minimal in `supp f`.
pub fn efilter_gt(p: &Poset, f: &SignedFilter, g: &SignedFilter) -> Result<bool> {
    check_pair(p, &f.values, &g.values)?;
    Ok(gt_unchecked(p, &f.values, &g.values))
}

pub(crate) fn gt_unchecked(p: &Poset, f: &[i8], g: &[i8]) -> bool {
    let sf = ElemSet::from_iter((0..f.len()).filter(|&v| f[v] != 0));
    let sg = ElemSet::from_iter((0..g.len()).filter(|&v| g[v] != 0));
    if sf == sg || !sg.is_subset(sf) {
        return false;
    }
    let mins = p.min_of(sf);
    sg.iter().all(|v| f[v] >= g[v] && (!mins.contains(v) || f[v] == g[v]))
}

/// Whether `g > f`.
pub fn efilter_less(p: &Poset, f: &SignedFilter, g: &SignedFilter) -> Result<bool> {
    efilter_gt(p, g, f)
}

/// `f ⪯ f'`: the support of `f` is contained in that of `f'` and the two agree
/// on `supp f`.
pub fn support_preceq<S: SignVector>(f: &S, g: &S) -> Result<bool> {
    let (a, b) = (f.signs(), g.signs());
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    Ok(a.iter().zip(b).all(|(&x, &y)| x == 0 || x == y))
}

/// Elements of `points` that are maximal for `⪯`.
pub fn preceq_maximal<S: SignVector + Clone>(points: &[S]) -> Vec<S> {
    points
        .iter()
        .filter(|f| !points.iter().any(|g| g.signs() != f.signs() && support_preceq(*f, g).unwrap_or(false)))
        .cloned()
        .collect()
}

/// The Hasse diagram of the graded poset of signed filters.
#[derive(Clone, Debug)]
pub struct EFilterHasse {
    pub elements: Vec<SignedFilter>,
    /// Cover pairs `(lower, upper)` as indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

impl EFilterHasse {
    pub fn rank(&self, i: usize) -> usize {
        self.elements[i].rank()
    }

    /// Number of elements at each rank `0..=d`.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.elements.iter().map(SignedFilter::rank).max().unwrap_or(0);
        let mut sizes = vec![0; top + 1];
        for f in &self.elements {
            sizes[f.rank()] += 1;
        }
        sizes
    }

    /// Number of maximal chains, by counting upward paths from the minimum.
    pub fn count_maximal_chains(&self) -> u128 {
        let n = self.elements.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.rank(i));
        let mut up = vec![Vec::new(); n];
        for &(lo, hi) in &self.covers {
            up[lo].push(hi);
        }
        let mut paths = vec![0u128; n];
        for &i in &order {
            if self.rank(i) == 0 {
                paths[i] = 1;
            }
            for &j in &up[i] {
                paths[j] += paths[i];
            }
        }
        (0..n).filter(|&i| up[i].is_empty()).map(|i| paths[i]).sum()
    }
}

/// Cover relation of `(eF(P), >=)`: pairs `f > g` whose ranks differ by one.
pub fn efilter_hasse(p: &Poset) -> Result<EFilterHasse> {
    let elements = enumerate_signed_filters(p)?;
    let mut by_rank: Vec<Vec<usize>> = vec![Vec::new(); p.len() + 1];
    for (i, f) in elements.iter().enumerate() {
        by_rank[f.rank()].push(i);
    }
    let mut covers = Vec::new();
    for r in 0..p.len() {
        for &lo in &by_rank[r] {
            for &hi in &by_rank[r + 1] {
                if gt_unchecked(p, &elements[hi].values, &elements[lo].values) {
                    covers.push((lo, hi));
                }
            }
        }
    }
    covers.sort_unstable();
    Ok(EFilterHasse { elements, covers })
}

/// A chain `f_1 > f_2 > ... > f_k` of signed filters, stored top-down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EChain {
    links: Vec<SignedFilter>,
}

impl EChain {
    pub fn new(p: &Poset, links: Vec<SignedFilter>) -> Result<EChain> {
        for f in &links {
            if f.values.len() != p.len() {
                return Err(Error::DimensionMismatch { expected: p.len(), got: f.values.len() });
            }
        }
        if let Some(w) = links.windows(2).find(|w| !gt_unchecked(p, &w[0].values, &w[1].values)) {
            return Err(Error::InvalidChain(format!("links {} and {} are not decreasing", w[0], w[1])));
        }
        Ok(EChain { links })
    }

    pub fn empty() -> EChain {
        EChain { links: Vec::new() }
    }

    pub fn links(&self) -> &[SignedFilter] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// Whether this is a maximal chain of `eF(P)`: `d + 1` links, down to the
    /// zero map.
    pub fn is_maximal(&self, p: &Poset) -> bool {
        self.links.len() == p.len() + 1 && self.links.last().is_some_and(|f| f.rank() == 0)
    }

    pub fn supp_chain(&self) -> Vec<ElemSet> {
        self.links.iter().map(|f| f.support()).collect()
    }

    /// `sgn(K)`: the value of the links at elements that are minimal in some
    /// link's support, zero elsewhere.
    pub fn signature(&self, p: &Poset) -> Signature {
        let mut sgn = vec![0; p.len()];
        for f in &self.links {
            for v in p.min_of(f.support()).iter() {
                sgn[v] = f.values[v];
            }
        }
        sgn
    }
}

/// The support chain and signature of an EChain.
pub fn echain_signature(p: &Poset, k: &EChain) -> (Vec<ElemSet>, Signature) {
    (k.supp_chain(), k.signature(p))
}

/// The unique chain of signed filters with support chain `chain` (top-down,
/// strictly decreasing filters) and signature `sign`. Requires
/// `supp(sign)` to equal the union of `min F` over the chain.
pub fn echain_from_pair(p: &Poset, chain: &[ElemSet], sign: &[i8]) -> Result<EChain> {
    check_signs(p, sign)?;
    for &f in chain {
        p.check_set(f)?;
        if !p.is_filter(f) {
            return Err(Error::InvalidChain(format!("{} is not an order filter", p.format_set(f))));
        }
    }
    if let Some(w) = chain.windows(2).find(|w| !(w[1].is_subset(w[0]) && w[1] != w[0])) {
        return Err(Error::InvalidChain(format!(
            "filters {} and {} are not strictly decreasing",
            p.format_set(w[0]),
            p.format_set(w[1])
        )));
    }
    let mins = chain.iter().fold(ElemSet::EMPTY, |acc, &f| acc.union(p.min_of(f)));
    let supp = ElemSet::from_iter((0..p.len()).filter(|&v| sign[v] != 0));
    if supp != mins {
        return Err(Error::InvalidChain(format!(
            "signature support {} differs from the union of minimal elements {}",
            p.format_set(supp),
            p.format_set(mins)
        )));
    }
    let links = chain
        .iter()
        .map(|&f| {
            let m = p.min_of(f);
            let values = (0..p.len())
                .map(|v| {
                    if !f.contains(v) {
                        0
                    } else if m.contains(v) {
                        sign[v]
                    } else {
                        1
                    }
                })
                .collect();
            SignedFilter { values }
        })
        .collect();
    EChain::new(p, links)
}

/// Filter chain `F_1 ⊋ ... ⊋ F_d ⊋ ∅` of a linear extension listed
/// smallest-first, with `F_i = {v_i, ..., v_d}`.
pub fn filters_of_extension(order: &[usize]) -> Vec<ElemSet> {
    (0..=order.len()).map(|i| ElemSet::from_iter(order[i..].iter().copied())).collect()
}

/// The maximal chain of `eF(P)` with support chain given by a linear
/// extension and total signature `sign` (values `±1`).
pub fn maximal_echain(p: &Poset, order: &[usize], sign: &[i8]) -> Result<EChain> {
    if !p.is_linear_extension(order) {
        return Err(Error::InvalidChain("not a linear extension".into()));
    }
    echain_from_pair(p, &filters_of_extension(order), sign)
}

/// Every total signature `{±1}^d`, `+1` first.
pub fn total_signatures(d: usize) -> Vec<Signature> {
    sign_patterns(d, &vec![0; d], &(0..d).collect::<Vec<_>>())
}

/// All maximal chains of `eF(P)`: one per (linear extension, total
/// signature), extensions in lexicographic order.
pub fn maximal_echains(p: &Poset) -> Result<Vec<EChain>> {
    let signs = total_signatures(p.len());
    let mut out = Vec::new();
    for ext in p.linear_extensions()? {
        for s in &signs {
            out.push(maximal_echain(p, &ext.order, s)?);
        }
    }
    Ok(out)
}
