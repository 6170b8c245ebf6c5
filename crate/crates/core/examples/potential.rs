//! Rolling relations up into a cubic potential and differentiating back.

use qgm::cubicrel::{relation_coefficients, PointConfiguration};
use qgm::quiver::{
    canonical_qtilde, closing_arrows, cubic_pairing, potential_from_relations, relations_from_potential,
};
use qgm::rational::format_rat;

fn main() -> qgm::Result<()> {
    let qt = canonical_qtilde();
    let cfg = PointConfiguration::from_i64(2, 3, 5, 7)?;
    let rel = relation_coefficients(&cfg)?.to_relation_set(&qt)?;

    let phi = potential_from_relations(&qt, &rel, &cubic_pairing())?;
    println!("potential has {} cyclic terms", phi.len());
    for (word, c) in phi.terms().take(5) {
        let labels: Vec<&str> = word.iter().map(|&a| qt.arrows()[a].label.as_str()).collect();
        println!("  {} * {}", format_rat(c), labels.join(" "));
    }

    let back = relations_from_potential(&qt, &phi, &closing_arrows())?;
    println!("recovered {} relations, projectively equal: {}", back.len(), back.projectively_equal(&rel));
    Ok(())
}
