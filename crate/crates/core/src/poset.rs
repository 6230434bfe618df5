//! Finite posets: ingestion, order filters, antichains, chains and linear
//! extensions with the left-peak statistic.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest poset the bitset representation supports.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of poset elements, stored as a bitmask over element indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(d: usize) -> ElemSet {
        if d == 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << d) - 1)
        }
    }

    pub fn singleton(v: usize) -> ElemSet {
        ElemSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Sort key for the graded lexicographic order used by every enumeration:
    /// by size, then lexicographically by the sorted element indices.
    pub fn graded_lex_key(self) -> (usize, Vec<usize>) {
        (self.len(), self.to_vec())
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> ElemSet {
        ElemSet(it.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }
}

/// Enumeration guards. Chain, extension and signed-point enumerations refuse
/// posets larger than `max_elements`; box scans refuse more than `max_box`
/// candidate points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_box: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_elements: 20, max_box: 50_000_000 }
    }
}

impl Limits {
    /// Default limits with `EPOLY_SIZE_LIMIT` applied. The variable holds the
    /// element limit, optionally followed by `,<box limit>`.
    pub fn from_env() -> Result<Limits> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var("EPOLY_SIZE_LIMIT") {
            let bad = || Error::InvalidArgument(format!("bad EPOLY_SIZE_LIMIT `{raw}`"));
            let mut parts = raw.split(',');
            if let Some(d) = parts.next().filter(|s| !s.trim().is_empty()) {
                limits.max_elements = d.trim().parse().map_err(|_| bad())?;
            }
            if let Some(b) = parts.next() {
                limits.max_box = b.trim().parse().map_err(|_| bad())?;
            }
        }
        Ok(limits)
    }
}

/// A chain `v_1 > v_2 > ... > v_r` of poset elements, stored top-down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PChain {
    pub elems: Vec<usize>,
}

impl PChain {
    pub fn top(&self) -> Option<usize> {
        self.elems.first().copied()
    }

    pub fn bottom(&self) -> Option<usize> {
        self.elems.last().copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_saturated(&self, p: &Poset) -> bool {
        self.elems.windows(2).all(|w| p.covers(w[1], w[0]))
    }
}

/// Which part of the poset a chain query ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    All,
    Below(usize),
    StrictlyBelow(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainKind {
    All,
    Saturated,
    Maximal,
}

/// A linear extension listed smallest-first, with its left-peak count under a
/// natural labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExtension {
    pub order: Vec<usize>,
    pub left_peaks: usize,
}

/// A finite poset on elements `0..d`, with labels, cover relations and the
/// strict up/down sets of every element.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    below: Vec<ElemSet>,
    above: Vec<ElemSet>,
    canonical_extension: Vec<usize>,
    limits: Limits,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from labels and order relations `(lower, upper)`. The
    /// relations need not be covers; they are closed transitively and reduced.
    pub fn new(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        let d = labels.len();
        if d > MAX_ELEMENTS {
            return Err(Error::SizeGuard { what: "poset element count", size: d as u128, limit: MAX_ELEMENTS as u128 });
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut below = vec![ElemSet::EMPTY; d];
        for &(a, b) in relations {
            if a >= d {
                return Err(Error::UnknownElement(a));
            }
            if b >= d {
                return Err(Error::UnknownElement(b));
            }
            if a == b {
                return Err(Error::Cycle(labels[a].clone()));
            }
            below[b].insert(a);
        }
        // Transitive closure by repeated propagation; d is at most 64.
        loop {
            let mut changed = false;
            for v in 0..d {
                let mut acc = below[v];
                for w in below[v].iter() {
                    acc = acc.union(below[w]);
                }
                if acc != below[v] {
                    below[v] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(v) = (0..d).find(|&v| below[v].contains(v)) {
            return Err(Error::Cycle(labels[v].clone()));
        }
        let mut above = vec![ElemSet::EMPTY; d];
        for v in 0..d {
            for w in below[v].iter() {
                above[w].insert(v);
            }
        }
        let mut covers = Vec::new();
        let mut lower_covers = vec![Vec::new(); d];
        let mut upper_covers = vec![Vec::new(); d];
        for v in 0..d {
            for w in below[v].iter() {
                let between = below[v].intersection(above[w]);
                if between.is_empty() {
                    covers.push((w, v));
                    lower_covers[v].push(w);
                    upper_covers[w].push(v);
                }
            }
        }
        covers.sort_unstable();
        let mut p = Poset {
            labels,
            index,
            covers,
            lower_covers,
            upper_covers,
            below,
            above,
            canonical_extension: Vec::new(),
            limits: Limits::default(),
        };
        p.canonical_extension = p.lex_first_extension(|v| v);
        Ok(p)
    }

    pub fn from_labels(labels: &[&str], relations: &[(&str, &str)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let lookup = |s: &str| labels.iter().position(|l| l == s).ok_or_else(|| Error::UnknownLabel(s.to_string()));
        let rels = relations.iter().map(|&(a, b)| Ok((lookup(a)?, lookup(b)?))).collect::<Result<Vec<_>>>()?;
        Poset::new(labels, &rels)
    }

    /// The chain `1 < 2 < ... < n`.
    pub fn chain(n: usize) -> Poset {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let rels: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(labels, &rels).expect("chain is a valid poset")
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Poset {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Poset::new(labels, &[]).expect("antichain is a valid poset")
    }

    /// The order-dual poset, with the same labels.
    pub fn dual(&self) -> Poset {
        let rels: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::new(self.labels.clone(), &rels).expect("dual of a poset is a poset").with_limits(self.limits)
    }

    pub fn with_limits(mut self, limits: Limits) -> Poset {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Parses the line format
    ///
    /// ```text
    /// # comment
    /// elements: u v w
    /// covers: u<w v<w
    /// ```
    ///
    /// or the JSON form `{"elements": [...], "covers": [["u","w"], ...]}`.
    /// A standalone `/` also separates lines.
    pub fn parse(text: &str) -> Result<Poset> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return Poset::parse_json(trimmed);
        }
        let mut labels: Option<Vec<String>> = None;
        let mut relations: Vec<(String, String)> = Vec::new();
        let normalized = text.replace(" / ", "\n");
        for raw in normalized.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) =
                line.split_once(':').ok_or_else(|| Error::Parse(format!("expected `key: ...`, got `{line}`")))?;
            match key.trim() {
                "elements" => {
                    let list = labels.get_or_insert_with(Vec::new);
                    list.extend(rest.split_whitespace().map(str::to_string));
                }
                "covers" | "relations" => {
                    for tok in rest.split_whitespace() {
                        let (a, b) = tok
                            .split_once('<')
                            .filter(|(a, b)| !a.is_empty() && !b.is_empty())
                            .ok_or_else(|| Error::Parse(format!("bad relation token `{tok}`")))?;
                        relations.push((a.to_string(), b.to_string()));
                    }
                }
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let labels = labels.ok_or_else(|| Error::Parse("missing `elements:` line".into()))?;
        Poset::from_named(labels, &relations)
    }

    fn parse_json(text: &str) -> Result<Poset> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let elements = value
            .get("elements")
            .and_then(|e| e.as_array())
            .ok_or_else(|| Error::Parse("JSON poset needs an `elements` array".into()))?;
        let labels = elements
            .iter()
            .map(|e| e.as_str().map(str::to_string))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse("element labels must be strings".into()))?;
        let mut relations = Vec::new();
        if let Some(cov) = value.get("covers") {
            let cov = cov.as_array().ok_or_else(|| Error::Parse("`covers` must be an array".into()))?;
            for pair in cov {
                let pair = pair
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| Error::Parse("each cover must be a pair".into()))?;
                let a = pair[0].as_str().ok_or_else(|| Error::Parse("cover labels must be strings".into()))?;
                let b = pair[1].as_str().ok_or_else(|| Error::Parse("cover labels must be strings".into()))?;
                relations.push((a.to_string(), b.to_string()));
            }
        }
        Poset::from_named(labels, &relations)
    }

    fn from_named(labels: Vec<String>, relations: &[(String, String)]) -> Result<Poset> {
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownLabel(s.to_string()));
        let rels = relations.iter().map(|(a, b)| Ok((lookup(a)?, lookup(b)?))).collect::<Result<Vec<_>>>()?;
        Poset::new(labels, &rels)
    }

    /// Text serialization in the line format accepted by [`Poset::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("elements: {}\n", self.labels.join(" "));
        if !self.covers.is_empty() {
            let toks: Vec<String> =
                self.covers.iter().map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b])).collect();
            out.push_str(&format!("covers: {}\n", toks.join(" ")));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn cover_pairs(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.lower_covers[v]
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.upper_covers[v]
    }

    /// `P_{<v}`.
    pub fn strictly_below(&self, v: usize) -> ElemSet {
        self.below[v]
    }

    /// `P_{<=v}`.
    pub fn below(&self, v: usize) -> ElemSet {
        let mut s = self.below[v];
        s.insert(v);
        s
    }

    pub fn strictly_above(&self, v: usize) -> ElemSet {
        self.above[v]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `a ⋖ b`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        self.below[v].is_empty()
    }

    pub fn is_maximal(&self, v: usize) -> bool {
        self.above[v].is_empty()
    }

    pub fn minimal_elements(&self) -> ElemSet {
        self.min_of(self.all())
    }

    pub fn maximal_elements(&self) -> ElemSet {
        self.max_of(self.all())
    }

    /// Minimal elements of the induced subposet on `s`.
    pub fn min_of(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_iter(s.iter().filter(|&v| self.below[v].intersection(s).is_empty()))
    }

    pub fn max_of(&self, s: ElemSet) -> ElemSet {
        ElemSet::from_iter(s.iter().filter(|&v| self.above[v].intersection(s).is_empty()))
    }

    pub fn is_filter(&self, s: ElemSet) -> bool {
        s.iter().all(|v| self.above[v].is_subset(s))
    }

    pub fn is_antichain(&self, s: ElemSet) -> bool {
        s.iter().all(|v| self.below[v].intersection(s).is_empty())
    }

    pub fn check_element(&self, v: usize) -> Result<()> {
        if v >= self.len() {
            return Err(Error::UnknownElement(v));
        }
        Ok(())
    }

    pub fn check_set(&self, s: ElemSet) -> Result<()> {
        match s.difference(self.all()).iter().next() {
            Some(v) => Err(Error::UnknownElement(v)),
            None => Ok(()),
        }
    }

    pub(crate) fn guard_elements(&self, what: &'static str) -> Result<()> {
        if self.len() > self.limits.max_elements {
            return Err(Error::SizeGuard { what, size: self.len() as u128, limit: self.limits.max_elements as u128 });
        }
        Ok(())
    }

    /// The smallest order filter containing `s`.
    pub fn filter_closure(&self, s: ElemSet) -> Result<ElemSet> {
        self.check_set(s)?;
        Ok(s.iter().fold(s, |acc, v| acc.union(self.above[v])))
    }

    /// All antichains in graded lexicographic order.
    pub fn antichains(&self) -> Result<Vec<ElemSet>> {
        self.guard_elements("antichain enumeration")?;
        let mut out = Vec::new();
        self.antichain_rec(0, ElemSet::EMPTY, &mut out);
        out.sort_by_key(|s| s.graded_lex_key());
        Ok(out)
    }

    fn antichain_rec(&self, start: usize, current: ElemSet, out: &mut Vec<ElemSet>) {
        out.push(current);
        for v in start..self.len() {
            if current.iter().all(|w| !self.comparable(v, w)) {
                let mut next = current;
                next.insert(v);
                self.antichain_rec(v + 1, next, out);
            }
        }
    }

    /// All order filters in graded lexicographic order, obtained as the
    /// upward closures of the antichains.
    pub fn order_filters(&self) -> Result<Vec<ElemSet>> {
        let mut out: Vec<ElemSet> =
            self.antichains()?.into_iter().map(|a| a.iter().fold(a, |acc, v| acc.union(self.above[v]))).collect();
        out.sort_by_key(|s| s.graded_lex_key());
        Ok(out)
    }

    fn region_set(&self, region: Region) -> Result<ElemSet> {
        Ok(match region {
            Region::All => self.all(),
            Region::Below(v) => {
                self.check_element(v)?;
                self.below(v)
            }
            Region::StrictlyBelow(v) => {
                self.check_element(v)?;
                self.strictly_below(v)
            }
        })
    }

    /// Nonempty chains of the region, each listed top-down, ordered by top
    /// element and then lexicographically.
    pub fn chains_of(&self, region: Region, kind: ChainKind) -> Result<Vec<PChain>> {
        self.guard_elements("chain enumeration")?;
        let r = self.region_set(region)?;
        let tops: Vec<usize> = match kind {
            ChainKind::Maximal => self.max_of(r).to_vec(),
            _ => r.to_vec(),
        };
        let mins = self.min_of(r);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for t in tops {
            stack.clear();
            stack.push(t);
            self.chain_rec(r, mins, kind, &mut stack, &mut out);
        }
        Ok(out)
    }

    fn chain_rec(&self, r: ElemSet, mins: ElemSet, kind: ChainKind, stack: &mut Vec<usize>, out: &mut Vec<PChain>) {
        let last = *stack.last().unwrap();
        match kind {
            ChainKind::Maximal => {
                if mins.contains(last) {
                    out.push(PChain { elems: stack.clone() });
                }
            }
            _ => out.push(PChain { elems: stack.clone() }),
        }
        let next: Vec<usize> = match kind {
            ChainKind::All => self.below[last].intersection(r).to_vec(),
            _ => self.lower_covers[last].iter().copied().filter(|&w| r.contains(w)).collect(),
        };
        for w in next {
            stack.push(w);
            self.chain_rec(r, mins, kind, stack, out);
            stack.pop();
        }
    }

    fn lex_first_extension(&self, key: impl Fn(usize) -> usize) -> Vec<usize> {
        let d = self.len();
        let mut placed = ElemSet::EMPTY;
        let mut order = Vec::with_capacity(d);
        for _ in 0..d {
            let v = (0..d)
                .filter(|&v| !placed.contains(v) && self.below[v].is_subset(placed))
                .min_by_key(|&v| key(v))
                .expect("acyclic order always has an available element");
            placed.insert(v);
            order.push(v);
        }
        order
    }

    /// The lexicographically smallest linear extension by element index.
    pub fn canonical_extension(&self) -> &[usize] {
        &self.canonical_extension
    }

    /// The canonical natural labeling: element `v` gets its 1-based position in
    /// the canonical extension.
    pub fn natural_labeling(&self) -> Vec<usize> {
        labeling_from_extension(&self.canonical_extension)
    }

    /// A second natural labeling, from the lexicographically largest linear
    /// extension.
    pub fn alternate_natural_labeling(&self) -> Vec<usize> {
        let d = self.len();
        labeling_from_extension(&self.lex_first_extension(|v| d - v))
    }

    pub fn is_natural_labeling(&self, labels: &[usize]) -> bool {
        let d = self.len();
        let mut seen = vec![false; d + 1];
        labels.len() == d
            && labels.iter().all(|&l| l >= 1 && l <= d && !std::mem::replace(&mut seen[l], true))
            && self.covers.iter().all(|&(a, b)| labels[a] < labels[b])
    }

    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        if order.len() != self.len() {
            return false;
        }
        let mut placed = ElemSet::EMPTY;
        for &v in order {
            if v >= self.len() || placed.contains(v) || !self.below[v].is_subset(placed) {
                return false;
            }
            placed.insert(v);
        }
        true
    }

    /// All linear extensions in lexicographic order, with left peaks counted
    /// under the canonical natural labeling.
    pub fn linear_extensions(&self) -> Result<Vec<LinearExtension>> {
        self.linear_extensions_labeled(&self.natural_labeling())
    }

    /// Linear extensions with left peaks counted under the given natural
    /// labeling (`labels[v]` in `1..=d`).
    pub fn linear_extensions_labeled(&self, labels: &[usize]) -> Result<Vec<LinearExtension>> {
        self.guard_elements("linear extension enumeration")?;
        if !self.is_natural_labeling(labels) {
            return Err(Error::InvalidArgument("labeling is not a natural labeling".into()));
        }
        let mut out = Vec::new();
        let mut order = Vec::with_capacity(self.len());
        self.extension_rec(ElemSet::EMPTY, &mut order, &mut |ord| {
            out.push(LinearExtension { order: ord.to_vec(), left_peaks: left_peaks(ord, labels) });
        });
        Ok(out)
    }

    /// e(P), counted by dynamic programming over order ideals rather than by
    /// listing the extensions.
    pub fn count_linear_extensions(&self) -> Result<u128> {
        self.guard_elements("linear extension count")?;
        let mut memo: HashMap<u64, u128> = HashMap::new();
        Ok(self.count_rec(ElemSet::EMPTY, &mut memo))
    }

    fn count_rec(&self, placed: ElemSet, memo: &mut HashMap<u64, u128>) -> u128 {
        if placed == self.all() {
            return 1;
        }
        if let Some(&c) = memo.get(&placed.0) {
            return c;
        }
        let mut total = 0;
        for v in self.all().difference(placed).iter() {
            if self.below[v].is_subset(placed) {
                let mut next = placed;
                next.insert(v);
                total += self.count_rec(next, memo);
            }
        }
        memo.insert(placed.0, total);
        total
    }

    fn extension_rec(&self, placed: ElemSet, order: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        if order.len() == self.len() {
            emit(order);
            return;
        }
        for v in 0..self.len() {
            if !placed.contains(v) && self.below[v].is_subset(placed) {
                order.push(v);
                let mut next = placed;
                next.insert(v);
                self.extension_rec(next, order, emit);
                order.pop();
            }
        }
    }

    pub fn format_set(&self, s: ElemSet) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn labeling_from_extension(ext: &[usize]) -> Vec<usize> {
    let mut labels = vec![0; ext.len()];
    for (pos, &v) in ext.iter().enumerate() {
        labels[v] = pos + 1;
    }
    labels
}

/// Number of indices `1 <= i <= d-1` with `π_{i-1} < π_i > π_{i+1}`, where
/// `π_0 = 0` and `π_i` is the label of the `i`-th element of `order`.
pub fn left_peaks(order: &[usize], labels: &[usize]) -> usize {
    let pi: Vec<usize> = std::iter::once(0).chain(order.iter().map(|&v| labels[v])).collect();
    (1..order.len()).filter(|&i| pi[i - 1] < pi[i] && pi[i] > pi[i + 1]).count()
}
