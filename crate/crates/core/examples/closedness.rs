//! Convex interpolation towards a K-causally ordered pair stays ordered,
//! and so does its limit.

use kcausal::harness::closedness_trial;
use kcausal::rational::ratio;
use kcausal::{decide_k_causal, CausalSpace, Measure};
use num_traits::One;

fn main() -> kcausal::Result<()> {
    let space = CausalSpace::from_labelled_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])?;
    let e = space.events().clone();
    let mu = Measure::dirac(e.clone(), 0)?;
    let nu = Measure::dirac(e.clone(), 2)?;
    let mu2 = Measure::uniform(e.clone());
    let nu2 = Measure::dirac(e, 2)?;

    let base = mu2.tv_distance(&mu)?;
    for n in [1i64, 2, 5, 10] {
        let keep = kcausal::Rational::one() - ratio(1, n);
        let mu_n = Measure::convex_combination(&keep, &mu, &mu2)?;
        let nu_n = Measure::convex_combination(&keep, &nu, &nu2)?;
        let verdict = decide_k_causal(&space, &mu_n, &nu_n)?.verdict();
        println!("n = {n:>2}: tv = {} = ({base})/{n}, {verdict}", mu_n.tv_distance(&mu)?);
    }
    println!("full trial: {}", closedness_trial(&space, &mu, &nu, &mu2, &nu2, 10)?);
    Ok(())
}
