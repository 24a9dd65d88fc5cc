//! Exact-rational probability measures on a finite event set.
//!
//! Narrow convergence on a finite discrete space is total-variation
//! convergence, so [`Measure::tv_distance`] is the topology used for
//! closedness arguments. Admissible measures are exactly the
//! full-support ones.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::causal::{EventSet, EventSubset};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone)]
pub struct Measure {
    events: Arc<EventSet>,
    weights: Vec<Rational>,
}

impl PartialEq for Measure {
    fn eq(&self, other: &Self) -> bool {
        same_events(&self.events, &other.events) && self.weights == other.weights
    }
}

pub(crate) fn same_events(a: &Arc<EventSet>, b: &Arc<EventSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Measure {
    pub fn new(events: Arc<EventSet>, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != events.len() {
            return Err(Error::RelationSize {
                expected: events.len(),
                found: weights.len(),
            });
        }
        for (i, w) in weights.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::NegativeWeight {
                    label: events.label(i).to_string(),
                    weight: rational::format(w),
                });
            }
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::NotNormalized(rational::format(&total)));
        }
        Ok(Measure { events, weights })
    }

    /// Weights given per label; unmentioned events get zero.
    pub fn from_labels<S: AsRef<str>>(
        events: Arc<EventSet>,
        entries: impl IntoIterator<Item = (S, Rational)>,
    ) -> Result<Self> {
        let mut weights = vec![Rational::zero(); events.len()];
        for (label, w) in entries {
            weights[events.index_of(label.as_ref())?] += w;
        }
        Measure::new(events, weights)
    }

    pub fn dirac(events: Arc<EventSet>, p: usize) -> Result<Self> {
        if p >= events.len() {
            return Err(Error::IndexOutOfRange {
                index: p,
                len: events.len(),
            });
        }
        let mut weights = vec![Rational::zero(); events.len()];
        weights[p] = Rational::one();
        Ok(Measure { events, weights })
    }

    pub fn uniform(events: Arc<EventSet>) -> Self {
        let n = events.len() as i64;
        let weights = vec![rational::ratio(1, n); events.len()];
        Measure { events, weights }
    }

    pub fn events(&self) -> &Arc<EventSet> {
        &self.events
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, p: usize) -> &Rational {
        &self.weights[p]
    }

    pub fn support(&self) -> EventSubset {
        let mut s = EventSubset::new(self.weights.len());
        for (i, w) in self.weights.iter().enumerate() {
            if w.is_positive() {
                s.insert(i);
            }
        }
        s
    }

    /// Full support, the finite form of admissibility.
    pub fn is_admissible(&self) -> bool {
        self.weights.iter().all(Signed::is_positive)
    }

    pub fn measure_of(&self, x: &EventSubset) -> Rational {
        x.iter().map(|i| &self.weights[i]).sum()
    }

    /// Half the l1 distance between weight vectors.
    pub fn tv_distance(&self, other: &Measure) -> Result<Rational> {
        self.check_same(other)?;
        let sum: Rational = self
            .weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| (a - b).abs())
            .sum();
        Ok(sum / rational::int(2))
    }

    /// `lambda·mu + (1 − lambda)·nu` for `lambda` in [0, 1].
    pub fn convex_combination(lambda: &Rational, mu: &Measure, nu: &Measure) -> Result<Measure> {
        mu.check_same(nu)?;
        if !rational::in_unit_interval(lambda) {
            return Err(Error::LambdaOutOfRange(rational::format(lambda)));
        }
        let rest = Rational::one() - lambda;
        let weights = mu
            .weights
            .iter()
            .zip(&nu.weights)
            .map(|(a, b)| lambda * a + &rest * b)
            .collect();
        Ok(Measure {
            events: mu.events.clone(),
            weights,
        })
    }

    /// `Σ_p f(p)·μ(p)`.
    pub fn integrate(&self, f: &[Rational]) -> Result<Rational> {
        if f.len() != self.weights.len() {
            return Err(Error::RelationSize {
                expected: self.weights.len(),
                found: f.len(),
            });
        }
        Ok(self.weights.iter().zip(f).map(|(w, v)| w * v).sum())
    }

    pub(crate) fn check_same(&self, other: &Measure) -> Result<()> {
        if same_events(&self.events, &other.events) {
            Ok(())
        } else {
            Err(Error::MismatchedSpaces)
        }
    }

    pub(crate) fn check_on(&self, events: &Arc<EventSet>) -> Result<()> {
        if same_events(&self.events, events) {
            Ok(())
        } else {
            Err(Error::MismatchedSpaces)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn events(labels: &[&str]) -> Arc<EventSet> {
        Arc::new(EventSet::new(labels.iter().copied()).unwrap())
    }

    fn half_half(e: &Arc<EventSet>, a: &str, b: &str) -> Measure {
        Measure::from_labels(e.clone(), [(a, ratio(1, 2)), (b, ratio(1, 2))]).unwrap()
    }

    #[test]
    fn measure_of_examples() {
        let e = events(&["a", "b", "c"]);
        let mu = half_half(&e, "a", "b");
        assert_eq!(mu.measure_of(&e.subset(["a"]).unwrap()), ratio(1, 2));
        assert_eq!(mu.measure_of(&EventSubset::new(3)), int(0));
        let u = Measure::uniform(e.clone());
        assert_eq!(u.measure_of(&e.subset(["a", "c"]).unwrap()), ratio(2, 3));
        assert_eq!(u.measure_of(&EventSubset::full(3)), int(1));
    }

    #[test]
    fn tv_examples() {
        let e = events(&["a", "b"]);
        let a = Measure::dirac(e.clone(), 0).unwrap();
        let b = Measure::dirac(e.clone(), 1).unwrap();
        assert_eq!(a.tv_distance(&a).unwrap(), int(0));
        assert_eq!(a.tv_distance(&b).unwrap(), int(1));
        assert_eq!(half_half(&e, "a", "b").tv_distance(&a).unwrap(), ratio(1, 2));
    }

    #[test]
    fn convex_combination_examples() {
        let e = events(&["a", "b"]);
        let a = Measure::dirac(e.clone(), 0).unwrap();
        let b = Measure::dirac(e.clone(), 1).unwrap();
        assert_eq!(Measure::convex_combination(&int(1), &a, &b).unwrap(), a);
        assert_eq!(Measure::convex_combination(&int(0), &a, &b).unwrap(), b);
        assert_eq!(
            Measure::convex_combination(&ratio(1, 2), &a, &b).unwrap(),
            half_half(&e, "a", "b")
        );
        assert!(matches!(
            Measure::convex_combination(&ratio(3, 2), &a, &b),
            Err(Error::LambdaOutOfRange(_))
        ));
    }

    #[test]
    fn integrate_examples() {
        let e = events(&["a", "b", "c"]);
        let f = vec![int(0), int(1), int(2)];
        assert_eq!(Measure::uniform(e.clone()).integrate(&[int(1), int(1), int(1)]).unwrap(), int(1));
        assert_eq!(half_half(&e, "a", "b").integrate(&f).unwrap(), ratio(1, 2));
        assert_eq!(half_half(&e, "b", "c").integrate(&f).unwrap(), ratio(3, 2));
        assert!(half_half(&e, "b", "c").integrate(&f[..2]).is_err());
    }

    #[test]
    fn validation_errors() {
        let e = events(&["a", "b"]);
        assert!(matches!(
            Measure::new(e.clone(), vec![ratio(1, 2), ratio(1, 3)]),
            Err(Error::NotNormalized(s)) if s == "5/6"
        ));
        assert!(matches!(
            Measure::new(e.clone(), vec![int(2), int(-1)]),
            Err(Error::NegativeWeight { .. })
        ));
        assert!(matches!(
            Measure::from_labels(e.clone(), [("z", int(1))]),
            Err(Error::UnknownLabel(_))
        ));
        let other = events(&["x", "y"]);
        let a = Measure::dirac(e, 0).unwrap();
        let x = Measure::dirac(other, 0).unwrap();
        assert!(matches!(a.tv_distance(&x), Err(Error::MismatchedSpaces)));
    }

    #[test]
    fn admissibility_is_full_support() {
        let e = events(&["a", "b"]);
        assert!(Measure::uniform(e.clone()).is_admissible());
        assert!(!Measure::dirac(e, 1).unwrap().is_admissible());
    }
}
