//! Couplings and the decision procedure for K-causal precedence.
//!
//! `μ ⪯_K ν` holds iff some coupling of `μ` and `ν` puts all of its mass on
//! K+. That is a bipartite transportation feasibility problem: push `μ(p)`
//! from a source to `p`, through any `(p, q) ∈ K+` to `q`, and out to a sink
//! with capacity `ν(q)`. Feasible iff the max flow is exactly 1. When it is
//! not, the source side of a minimum cut is a subset `B` with
//! `μ(B) > ν(K+(B))`.

mod flow;
mod strassen;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::causal::{CausalSpace, EventSet, EventSubset};
use crate::error::{Error, Result};
use crate::measure::{same_events, Measure};
use crate::rational::{self, Rational};

pub use strassen::{strassen_check, StrassenOutcome, StrassenSide, StrassenViolation, DEFAULT_ORACLE_BOUND};

use flow::FlowNetwork;

/// Middle arcs carry this capacity; it exceeds the total mass, so no
/// minimum cut ever crosses them.
const UNBOUNDED: i64 = 2;

/// Joint probability measure on ordered event pairs, stored sparsely.
#[derive(Debug, Clone)]
pub struct Coupling {
    events: Arc<EventSet>,
    weights: BTreeMap<(usize, usize), Rational>,
}

impl PartialEq for Coupling {
    fn eq(&self, other: &Self) -> bool {
        same_events(&self.events, &other.events) && self.weights == other.weights
    }
}

impl Coupling {
    pub fn new(
        events: Arc<EventSet>,
        entries: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Result<Self> {
        let n = events.len();
        let mut weights: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for ((p, q), w) in entries {
            if let Some(&index) = [p, q].iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange { index, len: n });
            }
            *weights.entry((p, q)).or_insert_with(Rational::zero) += w;
        }
        if let Some(((p, q), w)) = weights.iter().find(|(_, w)| w.is_negative()) {
            return Err(Error::NegativeWeight {
                label: format!("({}, {})", events.label(*p), events.label(*q)),
                weight: rational::format(w),
            });
        }
        weights.retain(|_, w| !w.is_zero());
        let total: Rational = weights.values().sum();
        if !total.is_one() {
            return Err(Error::NotNormalized(rational::format(&total)));
        }
        Ok(Coupling { events, weights })
    }

    pub fn from_labels<S: AsRef<str>>(
        events: Arc<EventSet>,
        entries: impl IntoIterator<Item = (S, S, Rational)>,
    ) -> Result<Self> {
        let mut idx = Vec::new();
        for (a, b, w) in entries {
            idx.push(((events.index_of(a.as_ref())?, events.index_of(b.as_ref())?), w));
        }
        Coupling::new(events, idx)
    }

    /// Builds a coupling and checks it against declared marginals.
    pub fn with_marginals(
        events: Arc<EventSet>,
        entries: impl IntoIterator<Item = ((usize, usize), Rational)>,
        first: &Measure,
        second: &Measure,
    ) -> Result<Self> {
        let c = Coupling::new(events, entries)?;
        let (a, b) = c.marginals();
        if a != *first {
            return Err(Error::MarginalMismatch("first marginal differs".into()));
        }
        if b != *second {
            return Err(Error::MarginalMismatch("second marginal differs".into()));
        }
        Ok(c)
    }

    /// The diagonal coupling of `mu` with itself.
    pub fn identity(mu: &Measure) -> Self {
        let weights = mu
            .weights()
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_positive())
            .map(|(p, w)| ((p, p), w.clone()))
            .collect();
        Coupling {
            events: mu.events().clone(),
            weights,
        }
    }

    pub fn product(mu: &Measure, nu: &Measure) -> Result<Self> {
        mu.check_same(nu)?;
        let mut weights = BTreeMap::new();
        for p in mu.support().iter() {
            for q in nu.support().iter() {
                weights.insert((p, q), mu.weight(p) * nu.weight(q));
            }
        }
        Ok(Coupling {
            events: mu.events().clone(),
            weights,
        })
    }

    pub fn events(&self) -> &Arc<EventSet> {
        &self.events
    }

    /// Positive-weight entries in (cause, effect) index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.weights.iter().map(|(k, w)| (*k, w))
    }

    pub fn weight(&self, p: usize, q: usize) -> Rational {
        self.weights.get(&(p, q)).cloned().unwrap_or_default()
    }

    /// Row sums and column sums.
    pub fn marginals(&self) -> (Measure, Measure) {
        let n = self.events.len();
        let mut first = vec![Rational::zero(); n];
        let mut second = vec![Rational::zero(); n];
        for ((p, q), w) in &self.weights {
            first[*p] += w;
            second[*q] += w;
        }
        let mk = |w| Measure::new(self.events.clone(), w).expect("marginal of a probability coupling");
        (mk(first), mk(second))
    }

    /// ω(K+).
    pub fn mass_on_kplus(&self, space: &CausalSpace) -> Rational {
        self.weights
            .iter()
            .filter(|((p, q), _)| space.precedes(*p, *q))
            .map(|(_, w)| w)
            .sum()
    }

    pub fn is_k_causal(&self, space: &CausalSpace) -> bool {
        self.weights.keys().all(|&(p, q)| space.precedes(p, q))
    }

    pub fn convex_combination(lambda: &Rational, a: &Coupling, b: &Coupling) -> Result<Coupling> {
        if !same_events(&a.events, &b.events) {
            return Err(Error::MismatchedSpaces);
        }
        if !rational::in_unit_interval(lambda) {
            return Err(Error::LambdaOutOfRange(rational::format(lambda)));
        }
        let rest = Rational::one() - lambda;
        let entries = a
            .entries()
            .map(|(k, w)| (k, lambda * w))
            .chain(b.entries().map(|(k, w)| (k, &rest * w)));
        Coupling::new(a.events.clone(), entries)
    }
}

/// Outcome of a decision, with the evidence that justifies it.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Feasible {
        witness: Coupling,
    },
    /// `mu_b = μ(B) > nu_future_b = ν(K+(B))`.
    Infeasible {
        violator: EventSubset,
        mu_b: Rational,
        nu_future_b: Rational,
    },
}

impl Certificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Certificate::Feasible { .. })
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_feasible() {
            "feasible"
        } else {
            "infeasible"
        }
    }

    pub fn witness(&self) -> Option<&Coupling> {
        match self {
            Certificate::Feasible { witness } => Some(witness),
            Certificate::Infeasible { .. } => None,
        }
    }

    pub fn violator(&self) -> Option<&EventSubset> {
        match self {
            Certificate::Infeasible { violator, .. } => Some(violator),
            Certificate::Feasible { .. } => None,
        }
    }

    /// Re-checks the certificate from scratch against the inputs.
    pub fn is_sound(&self, space: &CausalSpace, mu: &Measure, nu: &Measure) -> bool {
        match self {
            Certificate::Feasible { witness } => verify_coupling(space, witness, mu, nu),
            Certificate::Infeasible {
                violator,
                mu_b,
                nu_future_b,
            } => {
                let a = mu.measure_of(violator);
                let b = nu.measure_of(&space.future_set(violator));
                a == *mu_b && b == *nu_future_b && a > b
            }
        }
    }
}

/// Decides `μ ⪯_K ν` and returns a witness coupling or a violating subset.
pub fn decide_k_causal(space: &CausalSpace, mu: &Measure, nu: &Measure) -> Result<Certificate> {
    decide_with_flow_value(space, mu, nu).map(|(c, _)| c)
}

/// As [`decide_k_causal`], also returning the exact max-flow value.
pub fn decide_with_flow_value(
    space: &CausalSpace,
    mu: &Measure,
    nu: &Measure,
) -> Result<(Certificate, Rational)> {
    mu.check_on(space.events())?;
    nu.check_on(space.events())?;

    let left: Vec<usize> = mu.support().iter().collect();
    let right: Vec<usize> = nu.support().iter().collect();
    let (source, sink) = (0, 1);
    let left_node = |i: usize| 2 + i;
    let right_node = |j: usize| 2 + left.len() + j;

    let mut net = FlowNetwork::new(2 + left.len() + right.len());
    for (i, &p) in left.iter().enumerate() {
        net.add_edge(source, left_node(i), mu.weight(p).clone());
    }
    let mut middle = Vec::new();
    for (i, &p) in left.iter().enumerate() {
        let future = space.future_of(p);
        for (j, &q) in right.iter().enumerate() {
            if future.contains(q) {
                let e = net.add_edge(left_node(i), right_node(j), rational::int(UNBOUNDED));
                middle.push((e, p, q));
            }
        }
    }
    for (j, &q) in right.iter().enumerate() {
        net.add_edge(right_node(j), sink, nu.weight(q).clone());
    }

    let value = net.max_flow(source, sink);
    let certificate = if value.is_one() {
        let entries = middle
            .iter()
            .map(|&(e, p, q)| ((p, q), net.flow_on(e).clone()));
        Certificate::Feasible {
            witness: Coupling::new(space.events().clone(), entries)?,
        }
    } else {
        let reach = net.residual_reach(source);
        let mut violator = space.empty_subset();
        for (i, &p) in left.iter().enumerate() {
            if reach.contains(left_node(i)) {
                violator.insert(p);
            }
        }
        let mu_b = mu.measure_of(&violator);
        let nu_future_b = nu.measure_of(&space.future_set(&violator));
        debug_assert!(mu_b > nu_future_b);
        Certificate::Infeasible {
            violator,
            mu_b,
            nu_future_b,
        }
    };
    Ok((certificate, value))
}

/// True iff `omega` has marginals `(mu, nu)` exactly and lives on K+.
pub fn verify_coupling(space: &CausalSpace, omega: &Coupling, mu: &Measure, nu: &Measure) -> bool {
    if !same_events(omega.events(), space.events()) {
        return false;
    }
    let (a, b) = omega.marginals();
    a == *mu && b == *nu && omega.is_k_causal(space)
}

/// Glues `ω₁ ∈ Π(μ, ν)` and `ω₂ ∈ Π(ν, ρ)` into a coupling of `(μ, ρ)`:
/// `ω(p, r) = Σ_q ω₁(p, q)·ω₂(q, r) / ν(q)`, skipping `ν(q) = 0`.
pub fn compose_couplings(first: &Coupling, second: &Coupling) -> Result<Coupling> {
    if !same_events(first.events(), second.events()) {
        return Err(Error::MismatchedSpaces);
    }
    let (_, middle) = first.marginals();
    let (middle2, _) = second.marginals();
    if middle != middle2 {
        return Err(Error::MarginalMismatch(
            "second marginal of the first coupling differs from the first marginal of the second".into(),
        ));
    }
    let n = first.events.len();
    let mut outgoing: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); n];
    for ((q, r), w) in second.entries() {
        outgoing[q].push((r, w));
    }
    let mut entries = Vec::new();
    for ((p, q), w1) in first.entries() {
        let m = middle.weight(q);
        if m.is_zero() {
            continue;
        }
        for &(r, w2) in &outgoing[q] {
            entries.push(((p, r), w1 * w2 / m));
        }
    }
    Coupling::new(first.events.clone(), entries)
}
