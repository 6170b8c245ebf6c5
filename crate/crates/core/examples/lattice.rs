//! Character and cocharacter lattices of both quivers.

use qgm::quiver::{canonical_q, canonical_qtilde, rho_weight_matrix};
use qgm::toricgit::{canonical_triviality_vector, lattice_report, strong_convexity_pairings};

fn main() -> qgm::Result<()> {
    let q = lattice_report(&canonical_q());
    println!(
        "Q: {} arrows, {} vertices; gauge image rank {}, quotient torus rank {}, invariant characters {}",
        q.arrow_count, q.vertex_count, q.rank_sfk, q.rank_sft, q.rank_sfm
    );

    let qt = lattice_report(&canonical_qtilde());
    let p = qt.potentials.expect("27 arrows");
    println!(
        "Qtilde: K rank {}, T rank {}, M rank {}; {} = {} + {}; exact {}",
        p.rank_k, p.rank_t, p.rank_m, p.cycle_count, p.rank_k, p.rank_t, p.sequence_exact
    );
    for m in &p.m_basis {
        println!("  m = [{}]", m.join(" "));
    }

    let pairings = strong_convexity_pairings(&rho_weight_matrix());
    let all: Vec<String> = pairings.iter().map(ToString::to_string).collect();
    println!("pairings with the arrow-sum: {}", all.join(" "));

    let v = canonical_triviality_vector(&canonical_q())?;
    println!("canonical class vector: {:?}", v.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
