//! Seeded random instances: small spaces and exact measures with a fixed
//! denominator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::causal::CausalSpace;
use crate::generate::{generate, GeneratorSpec};
use crate::measure::Measure;
use crate::rational;

/// Every random measure has weights in `(1/24)·ℤ`.
pub const MEASURE_DENOMINATOR: u32 = 24;

#[derive(Debug, Clone)]
pub struct Instance {
    pub space: CausalSpace,
    pub mu: Measure,
    pub nu: Measure,
}

/// Per-trial seed. Independent of the suite, so every suite run with the
/// same seed sees the same corpus.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    splitmix64(seed ^ splitmix64(trial as u64 ^ 0x5eed_0fc0_ffee))
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(seed, trial))
}

/// A random DAG (three times in four) or a 2D sprinkling with
/// `1..=max_events` events.
pub fn random_space<R: Rng>(rng: &mut R, max_events: usize) -> CausalSpace {
    let n = rng.gen_range(1..=max_events.max(1));
    let seed = rng.gen();
    let spec = if rng.gen_ratio(3, 4) {
        let edge_prob = [0.15, 0.3, 0.5, 0.75][rng.gen_range(0..4)];
        GeneratorSpec::RandomDag { n, edge_prob, seed }
    } else {
        GeneratorSpec::unit_sprinkle(n, 2, seed)
    };
    generate(&spec).expect("generator parameters are valid")
}

/// Integer composition of `MEASURE_DENOMINATOR` units over a random support.
pub fn random_units<R: Rng>(rng: &mut R, n: usize) -> Vec<u32> {
    let k = rng.gen_range(1..=n);
    let mut events: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        events.swap(i, j);
    }
    let mut units = vec![0; n];
    for _ in 0..MEASURE_DENOMINATOR {
        units[events[rng.gen_range(0..k)]] += 1;
    }
    units
}

/// Moves every unit of mass to a uniformly random event of its K+ future.
/// The result is K-causally preceded by the input.
pub fn push_forward<R: Rng>(rng: &mut R, space: &CausalSpace, units: &[u32]) -> Vec<u32> {
    let mut out = vec![0; units.len()];
    for (p, &u) in units.iter().enumerate() {
        let future: Vec<usize> = space.future_of(p).iter().collect();
        for _ in 0..u {
            out[future[rng.gen_range(0..future.len())]] += 1;
        }
    }
    out
}

pub fn units_to_measure(space: &CausalSpace, units: &[u32]) -> Measure {
    let d = MEASURE_DENOMINATOR as i64;
    let weights = units.iter().map(|&u| rational::ratio(u as i64, d)).collect();
    Measure::new(space.events().clone(), weights).expect("units sum to the denominator")
}

/// Random space with a source measure and a target that is, with equal
/// odds, independent, a push-forward (feasible), or a push-forward with
/// one unit moved anywhere.
pub fn random_instance<R: Rng>(rng: &mut R, max_events: usize) -> Instance {
    let space = random_space(rng, max_events);
    let n = space.len();
    let mu_units = random_units(rng, n);
    let nu_units = match rng.gen_range(0..3) {
        0 => random_units(rng, n),
        1 => push_forward(rng, &space, &mu_units),
        _ => {
            let mut v = push_forward(rng, &space, &mu_units);
            let from = (0..n).find(|&p| v[p] > 0).expect("nonempty");
            v[from] -= 1;
            v[rng.gen_range(0..n)] += 1;
            v
        }
    };
    Instance {
        mu: units_to_measure(&space, &mu_units),
        nu: units_to_measure(&space, &nu_units),
        space,
    }
}

/// The `trials` instances a suite run with this seed works on.
pub fn corpus(seed: u64, trials: usize, max_events: usize) -> Vec<Instance> {
    (0..trials)
        .map(|t| random_instance(&mut trial_rng(seed, t), max_events))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transport::decide_k_causal;

    #[test]
    fn push_forward_is_feasible() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let space = random_space(&mut rng, 7);
            let u = random_units(&mut rng, space.len());
            let v = push_forward(&mut rng, &space, &u);
            let (mu, nu) = (units_to_measure(&space, &u), units_to_measure(&space, &v));
            assert!(decide_k_causal(&space, &mu, &nu).unwrap().is_feasible());
        }
    }

    #[test]
    fn corpus_is_reproducible_and_mixed() {
        let a = corpus(3, 60, 7);
        let b = corpus(3, 60, 7);
        let feasible = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                assert_eq!(x.space.raw(), y.space.raw());
                assert_eq!(x.mu, y.mu);
                assert_eq!(x.nu, y.nu);
                decide_k_causal(&x.space, &x.mu, &x.nu).unwrap().is_feasible()
            })
            .filter(|f| *f)
            .count();
        assert!(feasible > 10 && feasible < 50, "{feasible}");
    }
}
