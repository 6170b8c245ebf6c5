//! Euler form of the three-block collection, the E6 root system inside the
//! orthogonal complement of the anticanonical class, and the mutation chain.

use qgm::picard::{gram_report, root_system_check, verify_mutation_chain};

fn main() -> qgm::Result<()> {
    let g = gram_report();
    println!("Gram matrix (matches prediction: {})", g.matches);
    for row in &g.matrix {
        println!("  {}", row.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" "));
    }

    let r = root_system_check();
    println!(
        "(-2)-vectors orthogonal to delta: {} ({} in the enlarged box); basis Gram = -Cartan: {}",
        r.root_count, r.root_count_enlarged_box, r.gram_is_negative_cartan
    );

    for s in verify_mutation_chain()? {
        println!("{:<5} {:<20} odd shifts at {:?}", s.stage, s.composite, s.odd_shift_positions);
        println!("      {}", s.classes.join("  "));
    }
    Ok(())
}
