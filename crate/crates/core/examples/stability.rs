//! Cone criterion against submodule criterion on random representations.

use qgm::quiver::canonical_q;
use qgm::toricgit::{
    hm_semistable, hm_stable, king_semistable, king_stable, CoordinatePoint, StabilityCharacter, WeightAction,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qgm::Result<()> {
    let q = canonical_q();
    let w = WeightAction::for_quiver(&q);
    let theta = StabilityCharacter::special();
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    let full = CoordinatePoint::full(q.arrow_count());
    println!("all arrows nonzero: stable {}", king_stable(&q, &theta, &full)?);

    let (mut agree, mut stable) = (0, 0);
    let n = 300;
    for _ in 0..n {
        let p = CoordinatePoint::random(&mut rng, q.arrow_count());
        let cone = (hm_stable(&w, &theta, &p)?, hm_semistable(&w, &theta, &p)?);
        let king = (king_stable(&q, &theta, &p)?, king_semistable(&q, &theta, &p)?);
        agree += usize::from(cone == king);
        stable += usize::from(king.0);
    }
    println!("{agree}/{n} points agree, {stable} stable");
    Ok(())
}
