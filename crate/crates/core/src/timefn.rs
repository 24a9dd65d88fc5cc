//! Time functions on finite causal spaces.
//!
//! A time function is a labelling strictly increasing along every
//! non-diagonal K+ pair; one exists iff K+ is antisymmetric. Superlevel
//! sets only depend on the order the values induce, so "all time
//! functions" is represented by the linear extensions of K+, each
//! labelled with its ranks `0..n`.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::causal::{CausalSpace, EventSet, EventSubset};
use crate::error::{Error, Result};
use crate::measure::{same_events, Measure};
use crate::rational::{self, Rational};
use crate::subsets::{canonical_subsets, mask_sum, with_scaled, Mass, MassVisitor};

pub const DEFAULT_ENUMERATION_BOUND: usize = 8;
pub const DEFAULT_UPSET_BOUND: usize = 20;

#[derive(Debug, Clone)]
pub struct TimeFunction {
    events: Arc<EventSet>,
    values: Vec<Rational>,
}

impl PartialEq for TimeFunction {
    fn eq(&self, other: &Self) -> bool {
        same_events(&self.events, &other.events) && self.values == other.values
    }
}

impl TimeFunction {
    /// Validates strict monotonicity along K+.
    pub fn new(space: &CausalSpace, values: Vec<Rational>) -> Result<Self> {
        if values.len() != space.len() {
            return Err(Error::RelationSize {
                expected: space.len(),
                found: values.len(),
            });
        }
        space.require_stably_causal()?;
        if let Some((p, q)) = space
            .kplus()
            .pairs()
            .find(|&(p, q)| p != q && values[p] >= values[q])
        {
            let e = space.events();
            return Err(Error::NotTimeFunction(e.label(p).into(), e.label(q).into()));
        }
        Ok(TimeFunction {
            events: space.events().clone(),
            values,
        })
    }

    /// Rank labelling of a linear extension given as an event sequence.
    fn from_order_unchecked(space: &CausalSpace, order: &[usize]) -> Self {
        let mut values = vec![Rational::zero(); order.len()];
        for (rank, &p) in order.iter().enumerate() {
            values[p] = rational::int(rank as i64);
        }
        TimeFunction {
            events: space.events().clone(),
            values,
        }
    }

    pub fn events(&self) -> &Arc<EventSet> {
        &self.events
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, p: usize) -> &Rational {
        &self.values[p]
    }

    /// `T⁻¹((α, ∞))` or `T⁻¹([α, ∞))`.
    pub fn superlevel(&self, alpha: &Rational, half_line: HalfLine) -> EventSubset {
        let mut s = EventSubset::new(self.values.len());
        for (p, v) in self.values.iter().enumerate() {
            if half_line.contains(alpha, v) {
                s.insert(p);
            }
        }
        s
    }

    /// One threshold below the minimum, every attained value, every
    /// midpoint between consecutive values and one above the maximum.
    pub fn thresholds(&self) -> Vec<Rational> {
        let levels = self.levels();
        let one = Rational::one();
        let mut out = Vec::with_capacity(2 * levels.len() + 1);
        out.push(&levels[0] - &one);
        for (i, v) in levels.iter().enumerate() {
            if i > 0 {
                out.push((&levels[i - 1] + v) / rational::int(2));
            }
            out.push(v.clone());
        }
        out.push(levels.last().expect("nonempty") + one);
        out
    }

    fn levels(&self) -> Vec<Rational> {
        let mut v = self.values.clone();
        v.sort();
        v.dedup();
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfLine {
    /// `(α, ∞)`
    Open,
    /// `[α, ∞)`
    Closed,
}

impl HalfLine {
    fn contains(self, alpha: &Rational, v: &Rational) -> bool {
        match self {
            HalfLine::Open => v > alpha,
            HalfLine::Closed => v >= alpha,
        }
    }
}

pub fn is_stably_causal(space: &CausalSpace) -> bool {
    space.is_stably_causal()
}

fn check_bound(space: &CausalSpace, bound: usize) -> Result<()> {
    if space.len() > bound {
        return Err(Error::TooManyEvents {
            n: space.len(),
            bound,
        });
    }
    Ok(())
}

/// Streams every linear extension of K+ (as an event sequence) to `f`,
/// in lexicographic order of event indices. `f` returns `false` to stop.
pub fn for_each_linear_extension(
    space: &CausalSpace,
    bound: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> Result<()> {
    space.require_stably_causal()?;
    check_bound(space, bound)?;
    let n = space.len();
    let mut indegree: Vec<usize> = (0..n).map(|q| space.past_of(q).count() - 1).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);

    fn step(
        space: &CausalSpace,
        indegree: &mut [usize],
        placed: &mut [bool],
        order: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = indegree.len();
        if order.len() == n {
            return f(order);
        }
        for p in 0..n {
            if placed[p] || indegree[p] != 0 {
                continue;
            }
            placed[p] = true;
            order.push(p);
            for q in space.future_of(p).iter().filter(|&q| q != p) {
                indegree[q] -= 1;
            }
            let go_on = step(space, indegree, placed, order, f);
            for q in space.future_of(p).iter().filter(|&q| q != p) {
                indegree[q] += 1;
            }
            order.pop();
            placed[p] = false;
            if !go_on {
                return false;
            }
        }
        true
    }

    step(space, &mut indegree, &mut placed, &mut order, &mut f);
    Ok(())
}

/// One rank-valued time function per linear extension of K+.
pub fn enumerate_time_functions(space: &CausalSpace, bound: usize) -> Result<Vec<TimeFunction>> {
    let mut out = Vec::new();
    for_each_linear_extension(space, bound, |order| {
        out.push(TimeFunction::from_order_unchecked(space, order));
        true
    })?;
    Ok(out)
}

/// The linear extension that always places the lowest-index minimal event next.
pub fn canonical_time_function(space: &CausalSpace) -> Result<TimeFunction> {
    let mut first = None;
    for_each_linear_extension(space, usize::MAX, |order| {
        first = Some(TimeFunction::from_order_unchecked(space, order));
        false
    })?;
    Ok(first.expect("a stably causal space has a linear extension"))
}

pub fn sample_time_function(space: &CausalSpace, seed: u64) -> Result<TimeFunction> {
    sample_time_function_with(space, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Uniformly random choice among minimal events at each step, labelled
/// with strictly increasing random rationals.
pub fn sample_time_function_with<R: Rng>(space: &CausalSpace, rng: &mut R) -> Result<TimeFunction> {
    space.require_stably_causal()?;
    let n = space.len();
    let mut indegree: Vec<usize> = (0..n).map(|q| space.past_of(q).count() - 1).collect();
    let mut available: Vec<usize> = (0..n).filter(|&p| indegree[p] == 0).collect();
    let mut values = vec![Rational::zero(); n];
    let mut level = 0i64;
    while !available.is_empty() {
        let p = available.swap_remove(rng.gen_range(0..available.len()));
        level += rng.gen_range(1..=8);
        values[p] = rational::ratio(level, 4);
        for q in space.future_of(p).iter().filter(|&q| q != p) {
            indegree[q] -= 1;
            if indegree[q] == 0 {
                available.push(q);
            }
        }
        // keep the candidate pool order independent of removal history
        available.sort_unstable();
    }
    Ok(TimeFunction {
        events: space.events().clone(),
        values,
    })
}

/// `η(K+({p}) ∩ Y)`.
pub fn future_volume_in(space: &CausalSpace, eta: &Measure, y: &EventSubset, p: usize) -> Rational {
    let mut s = space.future_of(p).clone();
    s.intersect_with(y);
    eta.measure_of(&s)
}

/// `t(p) = −η(K+({p}) ∩ Y) − λ·η(K+({p}) \ Y)` for a full-support `η`,
/// `λ ∈ (0, 1]` and a past set `Y`.
pub fn future_volume_timefn(
    space: &CausalSpace,
    eta: &Measure,
    lambda: &Rational,
    y: &EventSubset,
) -> Result<TimeFunction> {
    eta.check_on(space.events())?;
    space.require_stably_causal()?;
    if let Some(p) = (0..space.len()).find(|&p| eta.weight(p).is_zero()) {
        return Err(Error::NotAdmissible(space.events().label(p).into()));
    }
    if !lambda.is_positive() || *lambda > Rational::one() {
        return Err(Error::LambdaOutOfRange(rational::format(lambda)));
    }
    let mut past = space.past_set(y);
    past.difference_with(y);
    if let Some(p) = past.iter().next() {
        return Err(Error::NotPastSet(space.events().label(p).into()));
    }
    let values = (0..space.len())
        .map(|p| {
            let future = space.future_of(p);
            let inside = future_volume_in(space, eta, y, p);
            let outside = eta.measure_of(future) - &inside;
            -inside - lambda * outside
        })
        .collect();
    TimeFunction::new(space, values)
}

/// `χ_U + ε·t₀` with `t₀` the canonical rank extension. For `ε` below
/// `1/(2·(1 + range t₀))` its superlevel set above 1/2 is exactly `U`.
pub fn indicator_time_function(space: &CausalSpace, upset: &EventSubset, epsilon: &Rational) -> Result<TimeFunction> {
    let base = canonical_time_function(space)?;
    let values = base
        .values
        .iter()
        .enumerate()
        .map(|(p, v)| {
            let jump = if upset.contains(p) { Rational::one() } else { Rational::zero() };
            jump + epsilon * v
        })
        .collect();
    TimeFunction::new(space, values)
}

/// Default `ε = 1/(2·(1 + max t₀ − min t₀))` for the rank extension.
pub fn default_epsilon(space: &CausalSpace) -> Rational {
    rational::ratio(1, 2 * space.len() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition4Mode {
    Exhaustive { bound: usize },
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition5Mode {
    Exact { bound: usize },
    Sampled { samples: usize, seed: u64 },
}

/// A time function and threshold whose superlevel set carries more
/// `μ`-mass than `ν`-mass.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdViolation {
    pub time_function: TimeFunction,
    pub alpha: Rational,
    pub half_line: HalfLine,
    pub mu_mass: Rational,
    pub nu_mass: Rational,
}

/// A time function whose `μ`-integral exceeds its `ν`-integral.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralViolation {
    pub time_function: TimeFunction,
    pub mu_integral: Rational,
    pub nu_integral: Rational,
}

fn threshold_violation(
    t: &TimeFunction,
    mu: &Measure,
    nu: &Measure,
    half_line: HalfLine,
) -> Option<ThresholdViolation> {
    // tail sums over sorted levels
    let levels = t.levels();
    let k = levels.len();
    let mut mu_tail = vec![Rational::zero(); k + 1];
    let mut nu_tail = vec![Rational::zero(); k + 1];
    for (p, v) in t.values.iter().enumerate() {
        let i = levels.binary_search(v).expect("value is a level");
        mu_tail[i] += mu.weight(p);
        nu_tail[i] += nu.weight(p);
    }
    for i in (0..k).rev() {
        let (m, n) = (mu_tail[i + 1].clone(), nu_tail[i + 1].clone());
        mu_tail[i] += m;
        nu_tail[i] += n;
    }
    for alpha in t.thresholds() {
        let i = levels.partition_point(|v| !half_line.contains(&alpha, v));
        if mu_tail[i] > nu_tail[i] {
            return Some(ThresholdViolation {
                time_function: t.clone(),
                alpha,
                half_line,
                mu_mass: mu_tail[i].clone(),
                nu_mass: nu_tail[i].clone(),
            });
        }
    }
    None
}

/// Searches for a time function `T` and `α` with
/// `μ(T⁻¹(half-line)) > ν(T⁻¹(half-line))`.
pub fn condition4_search(
    space: &CausalSpace,
    mu: &Measure,
    nu: &Measure,
    half_line: HalfLine,
    mode: Condition4Mode,
) -> Result<Option<ThresholdViolation>> {
    mu.check_on(space.events())?;
    nu.check_on(space.events())?;
    space.require_stably_causal()?;
    let mut found = None;
    match mode {
        Condition4Mode::Exhaustive { bound } => {
            for_each_linear_extension(space, bound, |order| {
                let t = TimeFunction::from_order_unchecked(space, order);
                found = threshold_violation(&t, mu, nu, half_line);
                found.is_none()
            })?;
        }
        Condition4Mode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let t = sample_time_function_with(space, &mut rng)?;
                found = threshold_violation(&t, mu, nu, half_line);
                if found.is_some() {
                    break;
                }
            }
        }
    }
    Ok(found)
}

pub fn condition4_check(
    space: &CausalSpace,
    mu: &Measure,
    nu: &Measure,
    half_line: HalfLine,
    mode: Condition4Mode,
) -> Result<bool> {
    condition4_search(space, mu, nu, half_line, mode).map(|v| v.is_none())
}

fn integral_violation(t: &TimeFunction, mu: &Measure, nu: &Measure) -> Result<Option<IntegralViolation>> {
    let a = mu.integrate(&t.values)?;
    let b = nu.integrate(&t.values)?;
    Ok((a > b).then(|| IntegralViolation {
        time_function: t.clone(),
        mu_integral: a,
        nu_integral: b,
    }))
}

/// Searches for a time function with `∫T dμ > ∫T dν`.
///
/// Exact mode decides the quantified statement: every time function's
/// integral is a positive combination of its superlevel-set masses plus a
/// constant, and every superlevel set is an up-set, so the inequality
/// holds for all `T` iff `μ(U) ≤ ν(U)` for every up-set `U`. When some
/// `U` has gap `g = μ(U) − ν(U) > 0`, the time function
/// `χ_U + ε·t₀` with `ε = g/(2·(1 + range t₀))` is returned as an explicit
/// falsifier.
pub fn condition5_search(
    space: &CausalSpace,
    mu: &Measure,
    nu: &Measure,
    mode: Condition5Mode,
) -> Result<Option<IntegralViolation>> {
    mu.check_on(space.events())?;
    nu.check_on(space.events())?;
    space.require_stably_causal()?;
    match mode {
        Condition5Mode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let t = sample_time_function_with(space, &mut rng)?;
                if let Some(v) = integral_violation(&t, mu, nu)? {
                    return Ok(Some(v));
                }
            }
            Ok(None)
        }
        Condition5Mode::Exact { bound } => {
            let Some(upset) = first_heavy_upset(space, mu, nu, bound)? else {
                return Ok(None);
            };
            let gap = mu.measure_of(&upset) - nu.measure_of(&upset);
            let epsilon = gap * default_epsilon(space);
            let t = indicator_time_function(space, &upset, &epsilon)?;
            let v = integral_violation(&t, mu, nu)?;
            debug_assert!(v.is_some(), "indicator construction must falsify");
            Ok(v)
        }
    }
}

pub fn condition5_check(space: &CausalSpace, mu: &Measure, nu: &Measure, mode: Condition5Mode) -> Result<bool> {
    condition5_search(space, mu, nu, mode).map(|v| v.is_none())
}

/// First up-set (size, then label order) with `μ(U) > ν(U)`.
pub(crate) fn first_heavy_upset(
    space: &CausalSpace,
    mu: &Measure,
    nu: &Measure,
    bound: usize,
) -> Result<Option<EventSubset>> {
    check_bound(space, bound)?;
    let rows = space.kplus_masks(bound.min(30))?;
    let order = space.events().lexicographic_order();
    struct Heavy<'a> {
        rows: &'a [u64],
        order: &'a [usize],
    }
    impl MassVisitor for Heavy<'_> {
        type Out = Option<u64>;
        fn visit<T: Mass>(self, mu: &[T], nu: &[T]) -> Option<u64> {
            canonical_subsets(self.order, |m| {
                (crate::causal::mask_is_upset(self.rows, m) && mask_sum(mu, m) > mask_sum(nu, m)).then_some(m)
            })
        }
    }
    let found = with_scaled(mu, nu, Heavy { rows: &rows, order: &order });
    Ok(found.map(|m| crate::bits::BitSet::from_mask(space.len(), m)))
}

/// True iff `T(p) ≤ T(q)` for every enumerated time function.
pub fn ordered_by_every_time_function(space: &CausalSpace, p: usize, q: usize, bound: usize) -> Result<bool> {
    for i in [p, q] {
        if i >= space.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: space.len(),
            });
        }
    }
    let mut all = true;
    for_each_linear_extension(space, bound, |order| {
        let pos_p = order.iter().position(|&e| e == p);
        let pos_q = order.iter().position(|&e| e == q);
        all = pos_p <= pos_q;
        all
    })?;
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn chain(n: usize) -> CausalSpace {
        let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        let pairs: Vec<(String, String)> = labels.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        CausalSpace::from_labelled_pairs(labels.clone(), pairs.iter()).unwrap()
    }

    fn antichain() -> CausalSpace {
        CausalSpace::from_labelled_pairs(["a", "b"], Vec::<(&str, &str)>::new()).unwrap()
    }

    fn diamond() -> CausalSpace {
        CausalSpace::from_labelled_pairs(
            ["a", "b", "c", "d"],
            [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap()
    }

    fn cycle() -> CausalSpace {
        CausalSpace::from_labelled_pairs(["a", "b"], [("a", "b"), ("b", "a")]).unwrap()
    }

    fn ranks(t: &TimeFunction) -> Vec<i64> {
        t.values().iter().map(|v| v.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn stable_causality_examples() {
        assert!(is_stably_causal(&chain(3)));
        assert!(!is_stably_causal(&cycle()));
    }

    #[test]
    fn enumeration_examples() {
        let anti = enumerate_time_functions(&antichain(), 8).unwrap();
        assert_eq!(anti.iter().map(ranks).collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0]]);
        let ch = enumerate_time_functions(&chain(3), 8).unwrap();
        assert_eq!(ch.iter().map(ranks).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
        let d = enumerate_time_functions(&diamond(), 8).unwrap();
        assert_eq!(d.len(), 2);
        assert!(matches!(
            enumerate_time_functions(&cycle(), 8),
            Err(Error::NotStablyCausal(_, _))
        ));
        assert!(matches!(
            enumerate_time_functions(&chain(9), 8),
            Err(Error::TooManyEvents { .. })
        ));
    }

    #[test]
    fn sampling_is_seeded_and_monotone() {
        let c = chain(3);
        let t = sample_time_function(&c, 11).unwrap();
        assert!(t.value(0) < t.value(1) && t.value(1) < t.value(2));
        assert_eq!(t, sample_time_function(&c, 11).unwrap());
        assert!(sample_time_function(&cycle(), 0).is_err());
    }

    #[test]
    fn sampling_reaches_both_antichain_orders() {
        let s = antichain();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut a_first = 0;
        for _ in 0..1000 {
            let t = sample_time_function_with(&s, &mut rng).unwrap();
            if t.value(0) < t.value(1) {
                a_first += 1;
            }
        }
        assert!(a_first > 0 && a_first < 1000, "{a_first}");
    }

    #[test]
    fn future_volume_examples() {
        let c = chain(3);
        let eta = Measure::uniform(c.events().clone());
        let t = future_volume_timefn(&c, &eta, &int(1), &c.empty_subset()).unwrap();
        assert_eq!(t.values(), &[int(-1), ratio(-2, 3), ratio(-1, 3)]);
        let t = future_volume_timefn(&c, &eta, &ratio(1, 2), &c.empty_subset()).unwrap();
        assert_eq!(t.values(), &[ratio(-1, 2), ratio(-1, 3), ratio(-1, 6)]);
        // Y = {a} is a past set
        let y = c.subset(["a"]).unwrap();
        let t = future_volume_timefn(&c, &eta, &ratio(1, 2), &y).unwrap();
        assert_eq!(t.values(), &[ratio(-2, 3), ratio(-1, 3), ratio(-1, 6)]);
    }

    #[test]
    fn future_volume_preconditions() {
        let c = chain(3);
        let eta = Measure::uniform(c.events().clone());
        let not_past = c.subset(["b"]).unwrap();
        assert!(matches!(
            future_volume_timefn(&c, &eta, &int(1), &not_past),
            Err(Error::NotPastSet(l)) if l == "a"
        ));
        let point = Measure::dirac(c.events().clone(), 0).unwrap();
        assert!(matches!(
            future_volume_timefn(&c, &point, &int(1), &c.empty_subset()),
            Err(Error::NotAdmissible(_))
        ));
        assert!(future_volume_timefn(&c, &eta, &int(0), &c.empty_subset()).is_err());
        let cy = cycle();
        let eta = Measure::uniform(cy.events().clone());
        assert!(future_volume_timefn(&cy, &eta, &int(1), &cy.empty_subset()).is_err());
    }

    #[test]
    fn condition4_examples() {
        let c = chain(2);
        let a = Measure::dirac(c.events().clone(), 0).unwrap();
        let b = Measure::dirac(c.events().clone(), 1).unwrap();
        let ex = Condition4Mode::Exhaustive { bound: 8 };
        for half in [HalfLine::Open, HalfLine::Closed] {
            assert!(condition4_check(&c, &a, &b, half, ex).unwrap());
            assert!(!condition4_check(&c, &b, &a, half, ex).unwrap());
        }
        let v = condition4_search(&c, &b, &a, HalfLine::Open, ex).unwrap().unwrap();
        assert_eq!(v.mu_mass, int(1));
        assert_eq!(v.nu_mass, int(0));
        assert!(condition4_check(&cycle(), &a, &a, HalfLine::Open, ex).is_err());
    }

    #[test]
    fn condition5_examples() {
        let c = chain(3);
        let h = ratio(1, 2);
        let mu = Measure::from_labels(c.events().clone(), [("a", h.clone()), ("b", h.clone())]).unwrap();
        let nu = Measure::from_labels(c.events().clone(), [("b", h.clone()), ("c", h.clone())]).unwrap();
        let t = TimeFunction::new(&c, vec![int(0), int(1), int(2)]).unwrap();
        assert_eq!(mu.integrate(t.values()).unwrap(), ratio(1, 2));
        assert_eq!(nu.integrate(t.values()).unwrap(), ratio(3, 2));
        for mode in [Condition5Mode::Exact { bound: 20 }, Condition5Mode::Sampled { samples: 50, seed: 1 }] {
            assert!(condition5_check(&c, &mu, &nu, mode).unwrap());
            assert!(condition5_check(&c, &mu, &mu, mode).unwrap());
            assert!(!condition5_check(&c, &nu, &mu, mode).unwrap());
        }
        let v = condition5_search(&c, &nu, &mu, Condition5Mode::Exact { bound: 20 }).unwrap().unwrap();
        assert!(v.mu_integral > v.nu_integral);
    }

    #[test]
    fn indicator_superlevel_recovers_upset() {
        let d = diamond();
        let eps = default_epsilon(&d);
        for u in d.enumerate_upsets(20).unwrap() {
            let t = indicator_time_function(&d, &u, &eps).unwrap();
            assert_eq!(t.superlevel(&ratio(1, 2), HalfLine::Open), u);
        }
    }

    #[test]
    fn ordered_by_every_time_function_examples() {
        let c = chain(2);
        assert!(ordered_by_every_time_function(&c, 0, 1, 8).unwrap());
        assert!(!ordered_by_every_time_function(&c, 1, 0, 8).unwrap());
        let a = antichain();
        assert!(!ordered_by_every_time_function(&a, 0, 1, 8).unwrap());
        assert!(ordered_by_every_time_function(&a, 0, 0, 8).unwrap());
        assert!(ordered_by_every_time_function(&cycle(), 0, 1, 8).is_err());
    }

    #[test]
    fn rejects_non_monotone_values() {
        let c = chain(2);
        assert!(matches!(
            TimeFunction::new(&c, vec![int(1), int(1)]),
            Err(Error::NotTimeFunction(_, _))
        ));
    }

    #[test]
    fn thresholds_cover_levels_and_gaps() {
        let c = chain(2);
        let t = TimeFunction::new(&c, vec![int(0), int(2)]).unwrap();
        assert_eq!(t.thresholds(), vec![int(-1), int(0), int(1), int(2), int(3)]);
        assert_eq!(t.superlevel(&int(0), HalfLine::Open).count(), 1);
        assert_eq!(t.superlevel(&int(0), HalfLine::Closed).count(), 2);
    }
}
