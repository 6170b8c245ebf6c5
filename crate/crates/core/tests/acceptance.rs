//! End-to-end acceptance run. One line per criterion; nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_integer::binomial;
use num_traits::Zero;
use qgm::cubicrel::{
    closed_form_triple, combine, convention_transcript, default_m_basis, gauge_rescale, kernel_triple,
    relation_coefficients, relation_forms, to_moduli_point, PointConfiguration,
};
use qgm::monomial::minimal_primes;
use qgm::picard::{gram_report, root_system_check, verify_mutation_chain};
use qgm::pipeline::{run_connectedness_detailed, toric_ideal};
use qgm::quiver::{
    canonical_q, canonical_qtilde, closing_arrows, cubic_pairing, cubic_relations, potential_from_relations,
    relations_from_potential, rho_weight_matrix,
};
use qgm::rational::Rat;
use qgm::toricgit::{
    caratheodory_genericity, canonical_triviality_vector, hm_semistable, hm_stable, king_semistable, king_stable,
    lattice_report, strong_convexity_pairings, theta_generic_quiver, CoordinatePoint, StabilityCharacter,
    WeightAction,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("{what} took {:.2?}, limit {:.0?}", t, limit))?;
    Ok(t)
}

fn ac1_connectedness() -> Result<String, String> {
    let start = Instant::now();
    let q = canonical_q();
    let theta = StabilityCharacter::new(&[-11, -11, -11, 3, 3, 6, 7, 7, 7]);
    let run = run_connectedness_detailed(&q, &theta, &toric_ideal(), false).map_err(|e| e.to_string())?;
    let t = within(start, Duration::from_secs(10), "pipeline")?;
    let r = &run.report;
    ensure(minimal_primes(&toric_ideal()).len() == 512, "minimal prime count")?;
    ensure(r.minimal_prime_count == 512, format!("{} minimal primes", r.minimal_prime_count))?;
    ensure(r.component_count == 18, format!("{} components", r.component_count))?;
    ensure(r.connected, "incidence graph disconnected")?;
    Ok(format!(
        "512 primes, 18 components, {} edges, connected, {:.2?}",
        r.edges.len(),
        t
    ))
}

fn ac2_strong_convexity() -> Result<String, String> {
    let pairings = strong_convexity_pairings(&rho_weight_matrix());
    ensure(pairings.len() == 27, format!("{} pairings", pairings.len()))?;
    ensure(pairings.iter().all(|p| *p == 3.into()), format!("pairings {pairings:?}"))?;
    Ok("27 pairings, all exactly 3".into())
}

fn ac3_lattice_ranks() -> Result<String, String> {
    let q = lattice_report(&canonical_q());
    let p = lattice_report(&canonical_qtilde()).potentials.ok_or("no potential lattices")?;
    ensure(p.rank_k == 19, format!("rank K {}", p.rank_k))?;
    ensure(p.rank_m == 8 && p.rank_n == 8, format!("rank M {} rank N {}", p.rank_m, p.rank_n))?;
    ensure(q.rank_sft == 10, format!("rank sfT {}", q.rank_sft))?;
    ensure(p.cycle_count == p.rank_k + p.rank_t, "27 != K + T")?;
    ensure(p.sequence_exact, "sequence not exact")?;
    Ok("K 19, M = N 8, sfT 10, 27 = 19 + 8".into())
}

fn ac4_genericity() -> Result<String, String> {
    let start = Instant::now();
    let q = canonical_q();
    let theta = StabilityCharacter::special();
    let th = [-11i64, -11, -11, 3, 3, 6, 7, 7, 7];
    let mut subsets = 0;
    for mask in 1u32..(1 << 9) - 1 {
        let s: i64 = (0..9).filter(|v| mask >> v & 1 == 1).map(|v| th[v]).sum();
        ensure(s != 0, format!("subset {mask:09b} sums to zero"))?;
        subsets += 1;
    }
    ensure(subsets == 510, "subset count")?;
    ensure(theta_generic_quiver(&q, &theta), "quiver genericity")?;
    let w = WeightAction::for_quiver(&q);
    let tests = binomial(w.coordinate_count(), w.ambient_rank() - 1);
    ensure(tests == 31824, format!("{tests} rank tests"))?;
    ensure(caratheodory_genericity(&w, &theta), "theta lies in a span of 7 weights")?;
    let t = within(start, Duration::from_secs(60), "genericity")?;
    Ok(format!("510 subsets nonzero, {tests} spans avoided, {t:.2?}"))
}

fn ac5_stability_equivalence() -> Result<String, String> {
    let q = canonical_q();
    let w = WeightAction::for_quiver(&q);
    let theta = StabilityCharacter::special();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut stable = 0;
    for k in 0..1000 {
        let p = CoordinatePoint::random(&mut rng, q.arrow_count());
        let e = |r: qgm::Result<bool>| r.map_err(|e| e.to_string());
        let cone = (e(hm_stable(&w, &theta, &p))?, e(hm_semistable(&w, &theta, &p))?);
        let king = (e(king_stable(&q, &theta, &p))?, e(king_semistable(&q, &theta, &p))?);
        ensure(cone == king, format!("point {k} support {:?}: cone {cone:?} king {king:?}", p.support()))?;
        stable += usize::from(king.0);
    }
    Ok(format!("1000/1000 agree ({stable} stable)"))
}

fn ac6_relation_identities() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut literal_failures = std::collections::BTreeSet::new();
    for n in 0..100 {
        let cfg = PointConfiguration::random(&mut rng);
        let err = |e: qgm::Error| format!("configuration {n}: {e}");
        let rc = relation_coefficients(&cfg).map_err(err)?;
        ensure(rc.vector27().iter().all(|c| !c.is_zero()), format!("configuration {n}: zero coefficient"))?;
        for i in 0..3 {
            for j in 0..3 {
                let forms = relation_forms(&cfg, i, j).map_err(err)?;
                let triple = closed_form_triple(&cfg, i, j).map_err(err)?;
                ensure(combine(&forms, &triple).is_zero(), format!("configuration {n}: ({i},{j}) does not cancel"))?;
                ensure(
                    kernel_triple(&cfg, i, j).map_err(err)?.is_some(),
                    format!("configuration {n}: ({i},{j}) forms independent"),
                )?;
            }
        }
        for e in convention_transcript(&cfg).map_err(err)? {
            ensure(e.kernel_agrees, format!("configuration {n}: kernel disagrees at ({},{})", e.source, e.target))?;
            if !e.literal_vanishes {
                literal_failures.insert((e.source, e.target));
            }
        }
    }
    Ok(format!(
        "100 configurations, 900 identities exact, all 27 nonzero; by-position reading fails at {literal_failures:?}, kernel reading used"
    ))
}

fn random_unit(rng: &mut ChaCha8Rng) -> Rat {
    let mut n: i64 = rng.gen_range(1..30);
    if rng.gen_bool(0.5) {
        n = -n;
    }
    Rat::new(n.into(), rng.gen_range(1i64..30).into())
}

fn ac7_gauge_and_injectivity() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let basis = default_m_basis();
    let err = |e: qgm::Error| e.to_string();
    let cfg = PointConfiguration::random(&mut rng);
    let rc = relation_coefficients(&cfg).map_err(err)?;
    let base = to_moduli_point(&rc, &basis).map_err(err)?;
    for k in 0..100 {
        let alpha: Vec<Rat> = (0..27).map(|_| random_unit(&mut rng)).collect();
        let moved = gauge_rescale(&rc, &alpha).map_err(err)?;
        ensure(to_moduli_point(&moved, &basis).map_err(err)? == base, format!("rescaling {k} moves the point"))?;
    }
    for k in 0..50 {
        let (c1, c2) = (PointConfiguration::random(&mut rng), PointConfiguration::random(&mut rng));
        if c1 == c2 {
            continue;
        }
        let p1 = to_moduli_point(&relation_coefficients(&c1).map_err(err)?, &basis).map_err(err)?;
        let p2 = to_moduli_point(&relation_coefficients(&c2).map_err(err)?, &basis).map_err(err)?;
        ensure(p1 != p2, format!("pair {k} collides"))?;
    }
    Ok("100 rescalings fix the point; 50 pairs distinct".into())
}

fn ac8_potential_roundtrip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let qt = canonical_qtilde();
    let err = |e: qgm::Error| e.to_string();
    for k in 0..100 {
        let mut coeffs: [[[Rat; 3]; 3]; 3] = Default::default();
        for row in coeffs.iter_mut() {
            for t in row.iter_mut() {
                loop {
                    for c in t.iter_mut() {
                        *c = if rng.gen_ratio(1, 4) { Rat::zero() } else { random_unit(&mut rng) };
                    }
                    if t.iter().any(|c| !c.is_zero()) {
                        break;
                    }
                }
            }
        }
        let rel = cubic_relations(&qt, &coeffs).map_err(err)?;
        let phi = potential_from_relations(&qt, &rel, &cubic_pairing()).map_err(err)?;
        let back = relations_from_potential(&qt, &phi, &closing_arrows()).map_err(err)?;
        ensure(back.projectively_equal(&rel), format!("relation set {k} not recovered"))?;
    }
    Ok("100 relation sets recovered up to scalars".into())
}

fn ac9_picard() -> Result<String, String> {
    let g = gram_report();
    ensure(g.matches, format!("gram {:?}", g.matrix))?;
    let r = root_system_check();
    ensure(r.root_count == 72, format!("{} roots", r.root_count))?;
    ensure(r.all_orthogonal_to_delta, "root not orthogonal to delta")?;
    ensure(r.gram_is_negative_cartan, "basis gram is not -Cartan")?;
    let stages = verify_mutation_chain().map_err(|e| e.to_string())?;
    ensure(stages.len() == 6, format!("{} stages", stages.len()))?;
    let shifted: Vec<String> = stages
        .iter()
        .filter(|s| !s.odd_shift_positions.is_empty())
        .map(|s| format!("{}{:?}", s.stage, s.odd_shift_positions))
        .collect();
    Ok(format!(
        "gram matches, 72 roots, -Cartan; 6 stages match up to shift (odd at {})",
        shifted.join(" ")
    ))
}

fn ac10_canonical_triviality() -> Result<String, String> {
    let v = canonical_triviality_vector(&canonical_q()).map_err(|e| e.to_string())?;
    ensure(v.len() == 9, format!("length {}", v.len()))?;
    ensure(v.iter().all(Zero::is_zero), format!("vector {v:?}"))?;
    Ok("zero vector in Z^9".into())
}

fn main() {
    let checks: [(&str, Check); 10] = [
        ("AC1 connectedness of the toric semistable locus", ac1_connectedness),
        ("AC2 strong convexity pairings", ac2_strong_convexity),
        ("AC3 lattice ranks", ac3_lattice_ranks),
        ("AC4 theta genericity", ac4_genericity),
        ("AC5 cone and submodule stability agree", ac5_stability_equivalence),
        ("AC6 relation identities", ac6_relation_identities),
        ("AC7 gauge invariance and injectivity", ac7_gauge_and_injectivity),
        ("AC8 potential roundtrip", ac8_potential_roundtrip),
        ("AC9 picard lattice and mutation chain", ac9_picard),
        ("AC10 canonical class triviality", ac10_canonical_triviality),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let res = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match res {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
