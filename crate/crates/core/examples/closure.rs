//! Build spaces from explicit pairs, Minkowski points and seeded
//! generators, then inspect K+ and its up-sets.

use kcausal::generate::{generate, GeneratorSpec};
use kcausal::{CausalSpace, EventSubset};

fn show(space: &CausalSpace, x: &EventSubset) -> String {
    format!("{:?}", space.events().labels_of(x))
}

fn main() -> kcausal::Result<()> {
    let chain = CausalSpace::from_labelled_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])?;
    println!("chain: {} raw pairs, {} in K+", chain.raw().pair_count(), chain.kplus().pair_count());
    let b = chain.subset(["b"])?;
    println!("future of b: {}  past of b: {}", show(&chain, &chain.future_set(&b)), show(&chain, &chain.past_set(&b)));
    for u in chain.enumerate_upsets(20)? {
        println!("  up-set {}", show(&chain, &u));
    }

    // A 2-cycle collapses into one K+ class and is not stably causal.
    let cycle = CausalSpace::from_labelled_pairs(["a", "b"], [("a", "b"), ("b", "a")])?;
    println!("cycle stably causal: {}", cycle.is_stably_causal());

    let light_cone = generate(&GeneratorSpec::Minkowski {
        labels: Some(vec!["o".into(), "x".into(), "y".into()]),
        points: vec![vec![0.0, 0.0], vec![1.0, 0.5], vec![1.0, 2.0]],
    })?;
    println!("o < x: {}  o < y: {}", light_cone.precedes(0, 1), light_cone.precedes(0, 2));

    let sprinkle = generate(&GeneratorSpec::unit_sprinkle(300, 2, 42))?;
    let dag = generate(&GeneratorSpec::RandomDag { n: 300, edge_prob: 0.02, seed: 42 })?;
    for (name, s) in [("sprinkle", &sprinkle), ("random dag", &dag)] {
        println!("{name}: {} events, {} related pairs", s.len(), s.kplus().pair_count());
    }
    Ok(())
}
