//! Decide precedence between two 200-atom measures on a 2000-event
//! sprinkling of 1+1 Minkowski space.

use std::time::Instant;

use kcausal::cli::random_measure;
use kcausal::generate::{generate, GeneratorSpec};
use kcausal::decide_k_causal;

fn main() -> kcausal::Result<()> {
    let start = Instant::now();
    let space = generate(&GeneratorSpec::unit_sprinkle(2000, 2, 11))?;
    println!("closure: {} related pairs in {:?}", space.kplus().pair_count(), start.elapsed());

    let mu = random_measure(&space, 200, 1)?;
    let nu = random_measure(&space, 200, 2)?;
    let start = Instant::now();
    let cert = decide_k_causal(&space, &mu, &nu)?;
    println!("{} in {:?}", cert.verdict(), start.elapsed());
    if let Some(b) = cert.violator() {
        println!("violator has {} events", b.count());
    }
    Ok(())
}
