//! Subset-quantified conditions and the full implication-chain evaluation.

use crate::causal::{mask_future, mask_is_upset, CausalSpace};
use crate::error::Result;
use crate::measure::Measure;
use crate::subsets::{canonical_subsets, mask_sum, with_scaled, Mass, MassVisitor};
use crate::timefn::{self, Condition4Mode, Condition5Mode, HalfLine, DEFAULT_ENUMERATION_BOUND, DEFAULT_UPSET_BOUND};
use crate::transport::decide_k_causal;

struct SubsetSearch<'a> {
    rows: &'a [u64],
    order: &'a [usize],
    upsets_only: bool,
}

impl MassVisitor for SubsetSearch<'_> {
    type Out = bool;
    fn visit<T: Mass>(self, mu: &[T], nu: &[T]) -> bool {
        canonical_subsets(self.order, |c| {
            let set = if self.upsets_only {
                if !mask_is_upset(self.rows, c) {
                    return None;
                }
                c
            } else {
                mask_future(self.rows, c)
            };
            (mask_sum(mu, set) > mask_sum(nu, set)).then_some(())
        })
        .is_none()
    }
}

fn subset_condition(space: &CausalSpace, mu: &Measure, nu: &Measure, bound: usize, upsets_only: bool) -> Result<bool> {
    mu.check_on(space.events())?;
    nu.check_on(space.events())?;
    let rows = space.kplus_masks(bound)?;
    let order = space.events().lexicographic_order();
    Ok(with_scaled(
        mu,
        nu,
        SubsetSearch {
            rows: &rows,
            order: &order,
            upsets_only,
        },
    ))
}

/// `μ(K+(C)) ≤ ν(K+(C))` for every subset `C` (every subset is compact).
pub fn condition2_check(space: &CausalSpace, mu: &Measure, nu: &Measure, bound: usize) -> Result<bool> {
    subset_condition(space, mu, nu, bound, false)
}

/// `μ(X) ≤ ν(X)` for every up-set `X`.
pub fn condition3_check(space: &CausalSpace, mu: &Measure, nu: &Measure, bound: usize) -> Result<bool> {
    subset_condition(space, mu, nu, bound, true)
}

/// Verdicts of the five equivalent conditions on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ChainVerdict {
    pub coupling: bool,
    pub compact_futures: bool,
    pub upsets: bool,
    pub superlevels: bool,
    pub integrals: bool,
}

impl ChainVerdict {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.coupling,
            self.compact_futures,
            self.upsets,
            self.superlevels,
            self.integrals,
        ]
    }

    /// Implications that fail on this vector: 1⇔2⇔3, 3⇒4, 4⇒5 and, in the
    /// finite model, 5⇒2.
    pub fn broken_links(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.coupling != self.compact_futures {
            out.push("1<=>2");
        }
        if self.compact_futures != self.upsets {
            out.push("2<=>3");
        }
        if self.upsets && !self.superlevels {
            out.push("3=>4");
        }
        if self.superlevels && !self.integrals {
            out.push("4=>5");
        }
        if self.integrals && !self.compact_futures {
            out.push("5=>2");
        }
        out
    }
}

/// Evaluates each condition with its own checker. Conditions 4 and 5
/// require a stably causal space.
pub fn implication_chain_trial(space: &CausalSpace, mu: &Measure, nu: &Measure) -> Result<ChainVerdict> {
    Ok(ChainVerdict {
        coupling: decide_k_causal(space, mu, nu)?.is_feasible(),
        compact_futures: condition2_check(space, mu, nu, DEFAULT_UPSET_BOUND)?,
        upsets: condition3_check(space, mu, nu, DEFAULT_UPSET_BOUND)?,
        superlevels: timefn::condition4_check(
            space,
            mu,
            nu,
            HalfLine::Open,
            Condition4Mode::Exhaustive {
                bound: DEFAULT_ENUMERATION_BOUND,
            },
        )?,
        integrals: timefn::condition5_check(
            space,
            mu,
            nu,
            Condition5Mode::Exact {
                bound: DEFAULT_UPSET_BOUND,
            },
        )?,
    })
}
