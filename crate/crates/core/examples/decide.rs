//! Decide K-causal precedence and read the certificate.
//!
//! ```text
//! cargo run --example decide
//! ```

use kcausal::json;
use kcausal::rational::ratio;
use kcausal::{decide_k_causal, strassen_check, verify_coupling, CausalSpace, Certificate, Measure};

fn main() -> kcausal::Result<()> {
    // a < b < d and a < c < d, with b and c unrelated.
    let diamond = CausalSpace::from_labelled_pairs(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )?;
    let events = diamond.events().clone();
    let half = ratio(1, 2);

    let early = Measure::from_labels(events.clone(), [("a", half.clone()), ("b", half.clone())])?;
    let late = Measure::from_labels(events.clone(), [("c", half.clone()), ("d", half.clone())])?;
    let cert = decide_k_causal(&diamond, &early, &late)?;
    println!("{{a,b}} -> {{c,d}}: {}", cert.verdict());
    if let Some(w) = cert.witness() {
        println!("witness: {}", json::coupling_to_value(w));
        assert!(verify_coupling(&diamond, w, &early, &late));
    }

    // The middle events cannot all be sent to the bottom and top at once.
    let middle = Measure::from_labels(events.clone(), [("b", half.clone()), ("c", half.clone())])?;
    let ends = Measure::from_labels(events.clone(), [("a", half.clone()), ("d", half)])?;
    let cert = decide_k_causal(&diamond, &middle, &ends)?;
    if let Certificate::Infeasible { violator, mu_b, nu_future_b } = &cert {
        println!(
            "{{b,c}} -> {{a,d}}: infeasible, B = {:?}, mu(B) = {mu_b} > nu(K+(B)) = {nu_future_b}",
            events.labels_of(violator)
        );
    }
    assert!(cert.is_sound(&diamond, &middle, &ends));

    let oracle = strassen_check(&diamond, &middle, &ends, 20)?;
    println!("subset oracle agrees: {}", oracle.holds == cert.is_feasible());
    println!("{}", json::to_pretty(&json::certificate_json(&cert, &events)));
    Ok(())
}
