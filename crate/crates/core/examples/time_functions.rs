//! Time functions: linear extensions, random samples, and the threshold
//! and integral tests they induce.

use kcausal::rational::ratio;
use kcausal::timefn::{
    self, condition4_search, condition5_search, Condition4Mode, Condition5Mode, HalfLine,
};
use kcausal::{json, CausalSpace, Measure};

fn main() -> kcausal::Result<()> {
    let space = CausalSpace::from_labelled_pairs(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )?;
    let all = timefn::enumerate_time_functions(&space, 8)?;
    println!("{} linear extensions", all.len());
    for t in &all {
        println!("  {}", json::time_function_to_value(t));
    }
    println!("sampled: {}", json::time_function_to_value(&timefn::sample_time_function(&space, 7)?));

    // K+ is recovered from the time functions alone.
    let (b, c) = (1, 2);
    println!(
        "a before d on every extension: {}, b before c: {}",
        timefn::ordered_by_every_time_function(&space, 0, 3, 8)?,
        timefn::ordered_by_every_time_function(&space, b, c, 8)?
    );

    let e = space.events().clone();
    let h = ratio(1, 2);
    let mu = Measure::from_labels(e.clone(), [("b", h.clone()), ("c", h.clone())])?;
    let nu = Measure::from_labels(e, [("a", h.clone()), ("d", h)])?;
    let exhaustive = Condition4Mode::Exhaustive { bound: 8 };
    if let Some(v) = condition4_search(&space, &mu, &nu, HalfLine::Open, exhaustive)? {
        println!(
            "threshold test fails at alpha = {}: mu = {} > nu = {}",
            v.alpha, v.mu_mass, v.nu_mass
        );
    }
    if let Some(v) = condition5_search(&space, &mu, &nu, Condition5Mode::Exact { bound: 20 })? {
        println!(
            "integral test fails for {}: {} > {}",
            json::time_function_to_value(&v.time_function),
            v.mu_integral,
            v.nu_integral
        );
    }
    Ok(())
}
