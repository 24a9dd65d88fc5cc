//! Brute-force Strassen-type oracle: enumerate every subset `B` and check
//! `μ(B) ≤ ν(K+(B))` and `μ(K-(B)) ≥ ν(B)`.
//!
//! This path never touches the flow network, so it serves as the
//! independent cross-check for [`super::decide_k_causal`].

use crate::causal::{mask_future, CausalSpace, EventSubset};
use crate::error::{Error, Result};
use crate::measure::Measure;
use crate::rational::Rational;
use crate::subsets::{canonical_subsets, mask_sum, with_scaled, Mass, MassVisitor};
use crate::bits::BitSet;

pub const DEFAULT_ORACLE_BOUND: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrassenSide {
    /// `μ(B) > ν(K+(B))`
    Future,
    /// `μ(K-(B)) < ν(B)`
    Past,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StrassenViolation {
    pub subset: EventSubset,
    pub side: StrassenSide,
    /// `μ(B)` or `μ(K-(B))`.
    pub mu_side: Rational,
    /// `ν(K+(B))` or `ν(B)`.
    pub nu_side: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StrassenOutcome {
    pub holds: bool,
    pub violation: Option<StrassenViolation>,
}

/// Exhaustive over all `2^n` subsets, by increasing size and then label
/// order. Refuses spaces with more than `bound` events.
pub fn strassen_check(space: &CausalSpace, mu: &Measure, nu: &Measure, bound: usize) -> Result<StrassenOutcome> {
    mu.check_on(space.events())?;
    nu.check_on(space.events())?;
    let n = space.len();
    if n > bound || n > 30 {
        return Err(Error::TooManyEvents { n, bound });
    }
    let future = space.kplus_masks(30)?;
    let mut past = vec![0u64; n];
    for (p, &row) in future.iter().enumerate() {
        for q in BitSet::from_mask(n, row).iter() {
            past[q] |= 1 << p;
        }
    }
    let order = space.events().lexicographic_order();

    struct Search<'a> {
        future: &'a [u64],
        past: &'a [u64],
        order: &'a [usize],
    }
    impl MassVisitor for Search<'_> {
        type Out = Option<(u64, StrassenSide)>;
        fn visit<T: Mass>(self, mu: &[T], nu: &[T]) -> Self::Out {
            canonical_subsets(self.order, |b| {
                if mask_sum(mu, b) > mask_sum(nu, mask_future(self.future, b)) {
                    return Some((b, StrassenSide::Future));
                }
                if mask_sum(mu, mask_future(self.past, b)) < mask_sum(nu, b) {
                    return Some((b, StrassenSide::Past));
                }
                None
            })
        }
    }

    let found = with_scaled(
        mu,
        nu,
        Search {
            future: &future,
            past: &past,
            order: &order,
        },
    );
    Ok(match found {
        None => StrassenOutcome {
            holds: true,
            violation: None,
        },
        Some((mask, side)) => {
            let subset = BitSet::from_mask(n, mask);
            let (mu_side, nu_side) = match side {
                StrassenSide::Future => (mu.measure_of(&subset), nu.measure_of(&space.future_set(&subset))),
                StrassenSide::Past => (mu.measure_of(&space.past_set(&subset)), nu.measure_of(&subset)),
            };
            StrassenOutcome {
                holds: false,
                violation: Some(StrassenViolation {
                    subset,
                    side,
                    mu_side,
                    nu_side,
                }),
            }
        }
    })
}
