//! Decide K-causal precedence between probability measures on finite
//! causal spaces, with witness couplings, violation certificates and
//! randomized theorem suites.
//!
//! A [`CausalSpace`] is a finite event set with a raw causal relation; its
//! K+ relation is the reflexive-transitive closure. A [`Measure`] is an
//! exact-rational probability vector over the events. `μ ⪯_K ν` holds when
//! some coupling of `μ` and `ν` is supported on K+:
//!
//! ```
//! use kcausal::{decide_k_causal, CausalSpace, Measure};
//!
//! let space = CausalSpace::from_labelled_pairs(["a", "b"], [("a", "b")]).unwrap();
//! let events = space.events().clone();
//! let mu = Measure::dirac(events.clone(), 0).unwrap();
//! let nu = Measure::dirac(events, 1).unwrap();
//! assert!(decide_k_causal(&space, &mu, &nu).unwrap().is_feasible());
//! assert!(!decide_k_causal(&space, &nu, &mu).unwrap().is_feasible());
//! ```
//!
//! See the crate's `examples/` directory for one runnable program per
//! capability.

pub mod bits;
pub mod causal;
pub mod cli;
pub mod error;
pub mod generate;
pub mod harness;
pub mod json;
pub mod measure;
pub mod rational;
mod subsets;
pub mod timefn;
pub mod transport;

pub use causal::{kplus_closure, CausalRelation, CausalSpace, EventSet, EventSubset};
pub use error::{Error, Result};
pub use generate::{generate, GeneratorSpec};
pub use measure::Measure;
pub use rational::Rational;
pub use transport::{
    compose_couplings, decide_k_causal, strassen_check, verify_coupling, Certificate, Coupling,
};
