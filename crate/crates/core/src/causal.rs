//! Finite causal spaces: event sets, causal relations and the K+ closure.
//!
//! On a finite event set every subset is closed, so the smallest closed
//! and transitive relation containing the raw relation is its
//! reflexive-transitive closure. The diagonal is always included so that
//! K-causal precedence of measures is reflexive.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// Subset of the events of a space, indexed by event position.
pub type EventSubset = BitSet;

#[derive(Debug, Clone)]
pub struct EventSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    coords: Option<Vec<Vec<f64>>>,
}

impl PartialEq for EventSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.coords == other.coords
    }
}

impl EventSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyEventSet);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::EmptyLabel(i));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(EventSet {
            labels,
            index,
            coords: None,
        })
    }

    /// Attaches coordinate vectors, time component first.
    pub fn with_coords(mut self, coords: Vec<Vec<f64>>) -> Result<Self> {
        if coords.len() != self.labels.len() {
            return Err(Error::RelationSize {
                expected: self.labels.len(),
                found: coords.len(),
            });
        }
        let dim = coords[0].len();
        for (i, c) in coords.iter().enumerate() {
            if c.len() != dim || dim < 2 {
                return Err(Error::CoordDimension {
                    index: i,
                    expected: dim.max(2),
                    found: c.len(),
                });
            }
        }
        self.coords = Some(coords);
        Ok(self)
    }

    /// Labels `e0..e{n-1}`, zero-padded so lexicographic and index order agree.
    pub fn numbered(n: usize) -> Result<Self> {
        let width = n.saturating_sub(1).to_string().len();
        EventSet::new((0..n).map(|i| format!("e{i:0width$}")))
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

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn coords(&self) -> Option<&[Vec<f64>]> {
        self.coords.as_deref()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn subset<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<EventSubset> {
        let mut s = BitSet::new(self.len());
        for l in labels {
            s.insert(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    /// Labels of a subset in event order.
    pub fn labels_of(&self, subset: &EventSubset) -> Vec<&str> {
        subset.iter().map(|i| self.label(i)).collect()
    }

    /// Event indices sorted by label.
    pub fn lexicographic_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        order
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationFlags {
    pub reflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
}

/// Boolean n×n incidence structure; row = cause, column = effect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CausalRelation {
    rows: Vec<BitSet>,
    flags: RelationFlags,
}

impl CausalRelation {
    pub fn from_rows(rows: Vec<BitSet>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.capacity() != n) {
            return Err(Error::RelationSize {
                expected: n,
                found: bad.capacity(),
            });
        }
        let flags = compute_flags(&rows);
        Ok(CausalRelation { rows, flags })
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = vec![BitSet::new(n); n];
        for (p, q) in pairs {
            for i in [p, q] {
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, len: n });
                }
            }
            rows[p].insert(q);
        }
        CausalRelation::from_rows(rows)
    }

    pub fn empty(n: usize) -> Self {
        CausalRelation::from_rows(vec![BitSet::new(n); n]).expect("square by construction")
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn flags(&self) -> RelationFlags {
        self.flags
    }

    #[inline]
    pub fn contains(&self, p: usize, q: usize) -> bool {
        self.rows[p].contains(q)
    }

    pub fn row(&self, p: usize) -> &BitSet {
        &self.rows[p]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(p, r)| r.iter().map(move |q| (p, q)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn transpose(&self) -> CausalRelation {
        let n = self.len();
        let mut rows = vec![BitSet::new(n); n];
        for (p, q) in self.pairs() {
            rows[q].insert(p);
        }
        CausalRelation {
            rows,
            flags: self.flags,
        }
    }

    /// First pair `p < q` (by index) with both `(p,q)` and `(q,p)` present.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        self.pairs()
            .find(|&(p, q)| p < q && self.contains(q, p))
    }
}

fn compute_flags(rows: &[BitSet]) -> RelationFlags {
    let reflexive = rows.iter().enumerate().all(|(i, r)| r.contains(i));
    let transitive = rows
        .iter()
        .all(|r| r.iter().all(|j| rows[j].is_subset(r)));
    let antisymmetric = rows
        .iter()
        .enumerate()
        .all(|(p, r)| r.iter().all(|q| q == p || !rows[q].contains(p)));
    RelationFlags {
        reflexive,
        transitive,
        antisymmetric,
    }
}

/// Smallest reflexive and transitive relation containing `raw`.
///
/// Strongly connected components are condensed first (Kosaraju), then
/// reachability rows are accumulated over the component DAG from the
/// sinks upward, so the cost is O(n·m/64) rather than cubic.
pub fn kplus_closure(raw: &CausalRelation) -> CausalRelation {
    let n = raw.len();
    let succ: Vec<Vec<usize>> = raw.rows.iter().map(|r| r.iter().collect()).collect();
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (p, qs) in succ.iter().enumerate() {
        for &q in qs {
            pred[q].push(p);
        }
    }

    // first pass: finishing order on the forward graph
    let mut visited = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        stack.push((root, 0));
        while let Some((v, next)) = stack.last_mut() {
            if let Some(&w) = succ[*v].get(*next) {
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                finish.push(*v);
                stack.pop();
            }
        }
    }

    // second pass on the transpose; components come out in topological order
    const UNSET: usize = usize::MAX;
    let mut comp = vec![UNSET; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for &root in finish.iter().rev() {
        if comp[root] != UNSET {
            continue;
        }
        let c = members.len();
        let mut group = vec![root];
        comp[root] = c;
        let mut todo = vec![root];
        while let Some(v) = todo.pop() {
            for &w in &pred[v] {
                if comp[w] == UNSET {
                    comp[w] = c;
                    group.push(w);
                    todo.push(w);
                }
            }
        }
        members.push(group);
    }

    let k = members.len();
    let mut reach: Vec<BitSet> = vec![BitSet::new(n); k];
    for c in (0..k).rev() {
        let mut row = BitSet::new(n);
        let mut seen = BitSet::new(k);
        for &v in &members[c] {
            row.insert(v);
            for &w in &succ[v] {
                let d = comp[w];
                if d != c && seen.insert(d) {
                    row.union_with(&reach[d]);
                }
            }
        }
        reach[c] = row;
    }

    let rows: Vec<BitSet> = (0..n).map(|v| reach[comp[v]].clone()).collect();
    let antisymmetric = members.iter().all(|m| m.len() == 1);
    CausalRelation {
        rows,
        flags: RelationFlags {
            reflexive: true,
            transitive: true,
            antisymmetric,
        },
    }
}

/// A finite event set together with its raw causal relation and cached K+.
#[derive(Debug, Clone)]
pub struct CausalSpace {
    events: Arc<EventSet>,
    raw: CausalRelation,
    kplus: CausalRelation,
    kminus: CausalRelation,
}

impl CausalSpace {
    pub fn new(events: EventSet, raw: CausalRelation) -> Result<Self> {
        if raw.len() != events.len() {
            return Err(Error::RelationSize {
                expected: events.len(),
                found: raw.len(),
            });
        }
        let kplus = kplus_closure(&raw);
        let kminus = kplus.transpose();
        Ok(CausalSpace {
            events: Arc::new(events),
            raw,
            kplus,
            kminus,
        })
    }

    /// Builds a space from labels and labelled raw pairs.
    pub fn from_labelled_pairs<S, P>(labels: impl IntoIterator<Item = S>, pairs: P) -> Result<Self>
    where
        S: Into<String>,
        P: IntoIterator,
        P::Item: LabelPair,
    {
        let events = EventSet::new(labels)?;
        let mut idx = Vec::new();
        for pair in pairs {
            let (a, b) = pair.labels();
            idx.push((events.index_of(a)?, events.index_of(b)?));
        }
        let raw = CausalRelation::from_pairs(events.len(), idx)?;
        CausalSpace::new(events, raw)
    }

    pub fn events(&self) -> &Arc<EventSet> {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn raw(&self) -> &CausalRelation {
        &self.raw
    }

    pub fn kplus(&self) -> &CausalRelation {
        &self.kplus
    }

    pub fn precedes(&self, p: usize, q: usize) -> bool {
        self.kplus.contains(p, q)
    }

    pub fn subset<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<EventSubset> {
        self.events.subset(labels)
    }

    pub fn empty_subset(&self) -> EventSubset {
        BitSet::new(self.len())
    }

    pub fn all_events(&self) -> EventSubset {
        BitSet::full(self.len())
    }

    /// K+(X): every event reachable from some member of `x`.
    pub fn future_set(&self, x: &EventSubset) -> EventSubset {
        union_rows(&self.kplus, x)
    }

    /// K-(X): every event from which some member of `x` is reachable.
    pub fn past_set(&self, x: &EventSubset) -> EventSubset {
        union_rows(&self.kminus, x)
    }

    pub fn future_of(&self, p: usize) -> &EventSubset {
        self.kplus.row(p)
    }

    pub fn past_of(&self, p: usize) -> &EventSubset {
        self.kminus.row(p)
    }

    /// Strict future K+({p}) \ {p}, the finite stand-in for I+(p).
    pub fn strict_future_of(&self, p: usize) -> EventSubset {
        let mut s = self.kplus.row(p).clone();
        s.remove(p);
        s
    }

    pub fn is_upset(&self, x: &EventSubset) -> bool {
        x.iter().all(|p| self.kplus.row(p).is_subset(x))
    }

    pub fn is_past_set(&self, y: &EventSubset) -> bool {
        y.iter().all(|p| self.kminus.row(p).is_subset(y))
    }

    /// Checks `[K+(X) ⊆ X] ⇔ [K-(Xᶜ) ⊆ Xᶜ]` for one subset.
    pub fn complement_duality_check(&self, x: &EventSubset) -> bool {
        let forward = self.future_set(x).is_subset(x);
        let complement = x.complement();
        let backward = self.past_set(&complement).is_subset(&complement);
        forward == backward
    }

    pub fn is_stably_causal(&self) -> bool {
        self.kplus.flags().antisymmetric
    }

    /// Errors with the first pair witnessing a causal cycle.
    pub fn require_stably_causal(&self) -> Result<()> {
        match self.kplus.antisymmetry_violation() {
            None => Ok(()),
            Some((p, q)) => Err(Error::NotStablyCausal(
                self.events.label(p).to_string(),
                self.events.label(q).to_string(),
            )),
        }
    }

    /// K+ rows as bitmasks; only for spaces with at most `bound` (≤ 64) events.
    pub fn kplus_masks(&self, bound: usize) -> Result<Vec<u64>> {
        let n = self.len();
        if n > bound.min(64) {
            return Err(Error::TooManyEvents { n, bound });
        }
        Ok((0..n).map(|p| self.kplus.row(p).to_mask()).collect())
    }

    /// Every up-set of the space. Exponential; refuses above `bound` events.
    pub fn enumerate_upsets(&self, bound: usize) -> Result<Vec<EventSubset>> {
        let rows = self.kplus_masks(bound.min(30))?;
        let n = self.len();
        Ok((0u64..1 << n)
            .filter(|&m| mask_is_upset(&rows, m))
            .map(|m| BitSet::from_mask(n, m))
            .collect())
    }
}

pub(crate) fn mask_is_upset(rows: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let p = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if rows[p] & !mask != 0 {
            return false;
        }
    }
    true
}

pub(crate) fn mask_future(rows: &[u64], mask: u64) -> u64 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let p = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= rows[p];
    }
    out
}

fn union_rows(rel: &CausalRelation, x: &EventSubset) -> EventSubset {
    let mut out = BitSet::new(rel.len());
    for p in x.iter() {
        out.union_with(rel.row(p));
    }
    out
}

/// A pair of event labels, for building spaces from literal pair lists.
pub trait LabelPair {
    fn labels(&self) -> (&str, &str);
}

impl<A: AsRef<str>, B: AsRef<str>> LabelPair for (A, B) {
    fn labels(&self) -> (&str, &str) {
        (self.0.as_ref(), self.1.as_ref())
    }
}

impl<T: LabelPair> LabelPair for &T {
    fn labels(&self) -> (&str, &str) {
        (**self).labels()
    }
}

impl<A: AsRef<str>> LabelPair for [A; 2] {
    fn labels(&self) -> (&str, &str) {
        (self[0].as_ref(), self[1].as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> CausalSpace {
        CausalSpace::from_labelled_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn diamond() -> CausalSpace {
        CausalSpace::from_labelled_pairs(
            ["a", "b", "c", "d"],
            [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap()
    }

    fn labelled(space: &CausalSpace, s: &EventSubset) -> Vec<String> {
        space.events().labels_of(s).into_iter().map(String::from).collect()
    }

    #[test]
    fn closure_of_three_chain() {
        let s = chain();
        let mut got: Vec<(usize, usize)> = s.kplus().pairs().collect();
        got.sort();
        assert_eq!(got, vec![(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]);
        let f = s.kplus().flags();
        assert!(f.reflexive && f.transitive && f.antisymmetric);
    }

    #[test]
    fn closure_of_empty_relation_is_diagonal() {
        let s = CausalSpace::from_labelled_pairs(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        let got: Vec<_> = s.kplus().pairs().collect();
        assert_eq!(got, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn two_cycle_closes_to_full_relation() {
        let s = CausalSpace::from_labelled_pairs(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(s.kplus().pair_count(), 4);
        assert!(!s.is_stably_causal());
        match s.require_stably_causal() {
            Err(Error::NotStablyCausal(a, b)) => assert_eq!((a.as_str(), b.as_str()), ("a", "b")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn closure_is_idempotent_with_cycles() {
        let raw = CausalRelation::from_pairs(5, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 3)]).unwrap();
        let once = kplus_closure(&raw);
        let twice = kplus_closure(&once);
        assert_eq!(once, twice);
        assert!(once.contains(1, 0) && once.contains(0, 3) && !once.contains(3, 0));
        assert_eq!(once.flags(), compute_flags(&once.rows));
    }

    #[test]
    fn future_and_past_sets() {
        let c = chain();
        let d = diamond();
        assert_eq!(labelled(&c, &c.future_set(&c.subset(["a"]).unwrap())), ["a", "b", "c"]);
        assert!(c.future_set(&c.empty_subset()).is_empty());
        assert_eq!(labelled(&d, &d.future_set(&d.subset(["b", "c"]).unwrap())), ["b", "c", "d"]);
        assert_eq!(labelled(&c, &c.past_set(&c.subset(["c"]).unwrap())), ["a", "b", "c"]);
        assert_eq!(c.past_set(&c.all_events()), c.all_events());
        assert_eq!(labelled(&d, &d.past_set(&d.subset(["b"]).unwrap())), ["a", "b"]);
    }

    #[test]
    fn unknown_label_is_an_input_error() {
        assert!(matches!(chain().subset(["z"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn upset_examples() {
        let c = chain();
        assert!(c.is_upset(&c.subset(["b", "c"]).unwrap()));
        assert!(!c.is_upset(&c.subset(["a"]).unwrap()));
        assert!(c.is_upset(&c.empty_subset()));
        assert!(c.is_upset(&c.all_events()));
        let ups = c.enumerate_upsets(20).unwrap();
        assert_eq!(ups.len(), 4);
    }

    #[test]
    fn complement_equivalence_examples() {
        let c = chain();
        assert!(c.complement_duality_check(&c.subset(["b", "c"]).unwrap()));
        assert!(c.complement_duality_check(&c.subset(["b"]).unwrap()));
    }

    #[test]
    fn event_set_validation() {
        assert!(matches!(EventSet::new(Vec::<String>::new()), Err(Error::EmptyEventSet)));
        assert!(matches!(EventSet::new(["a", ""]), Err(Error::EmptyLabel(1))));
        assert!(matches!(EventSet::new(["a", "a"]), Err(Error::DuplicateLabel(_))));
        let e = EventSet::new(["a", "b"]).unwrap();
        assert!(e.clone().with_coords(vec![vec![0.0], vec![1.0]]).is_err());
        assert!(e.clone().with_coords(vec![vec![0.0, 1.0], vec![1.0]]).is_err());
        assert!(e.with_coords(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).is_ok());
    }

    #[test]
    fn numbered_labels_sort_like_indices() {
        let e = EventSet::numbered(12).unwrap();
        assert_eq!(e.label(3), "e03");
        assert_eq!(e.lexicographic_order(), (0..12).collect::<Vec<_>>());
    }
}
