//! Time functions built from the measure of causal futures.

use kcausal::rational::{int, ratio};
use kcausal::timefn::future_volume_timefn;
use kcausal::{json, CausalSpace, Measure};

fn main() -> kcausal::Result<()> {
    let space = CausalSpace::from_labelled_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])?;
    let eta = Measure::uniform(space.events().clone());

    let everything = space.all_events();
    let t = future_volume_timefn(&space, &eta, &int(1), &everything)?;
    println!("Y = everything: {}", json::time_function_to_value(&t));

    // Events outside the past set Y are discounted by lambda.
    let y = space.subset(["a"])?;
    for lambda in [ratio(1, 2), ratio(1, 10)] {
        let t = future_volume_timefn(&space, &eta, &lambda, &y)?;
        println!("Y = {{a}}, lambda = {lambda}: {}", json::time_function_to_value(&t));
    }

    let not_past = space.subset(["b"])?;
    if let Err(e) = future_volume_timefn(&space, &eta, &int(1), &not_past) {
        println!("Y = {{b}}: {e}");
    }
    Ok(())
}
