//! Components of the semistable locus of the monomial relations and how they meet.
//!
//! ```bash
//! cargo run --example connectedness
//! ```

use qgm::pipeline::{component_summaries, run_connectedness_detailed, toric_ideal, truncated_subgraph_connected};
use qgm::quiver::canonical_q;
use qgm::toricgit::StabilityCharacter;

fn main() -> qgm::Result<()> {
    let q = canonical_q();
    let theta = StabilityCharacter::special();
    let run = run_connectedness_detailed(&q, &theta, &toric_ideal(), false)?;
    let r = &run.report;

    println!("spanning octuples: {} of {}", r.relevant_octuple_count, r.octuple_count);
    println!("minimal primes:    {}", r.minimal_prime_count);
    println!("components:        {}", r.component_count);
    println!("edges:             {}", r.edges.len());
    println!("connected:         {}", r.connected);
    println!("h0 verdict:        {:?}", r.h0_verdict);
    println!("two-neighbour subgraph connected: {}", truncated_subgraph_connected(r));

    for c in component_summaries(r, &run.components) {
        let labels: Vec<&str> = c.free_coordinates.iter().map(|&a| q.arrows()[a].label.as_str()).collect();
        println!("  #{:<2} degree {}  free {}", c.index, c.degree, labels.join(" "));
    }
    Ok(())
}
