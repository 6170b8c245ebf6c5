//! Relation coefficients of the quiver attached to six points in the plane,
//! and the point of the quotient torus they define.
//!
//! ```bash
//! cargo run --example relations -- 2 3 5 7
//! ```

use qgm::cubicrel::{
    convention_transcript, default_m_basis, general_position_report, relation_coefficients, to_moduli_point,
    PointConfiguration,
};
use qgm::rational::{format_rat, parse_rat};

fn main() -> qgm::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let vals = if args.len() == 4 {
        args.iter().map(|s| parse_rat(s)).collect::<qgm::Result<Vec<_>>>()?
    } else {
        ["2", "3", "5", "7"].iter().map(|s| parse_rat(s)).collect::<qgm::Result<Vec<_>>>()?
    };
    let [a, b, c, d]: [_; 4] = vals.try_into().expect("four values");
    let cfg = PointConfiguration::new(a, b, c, d)?;

    let gp = general_position_report(&cfg);
    println!("general position: {}", gp.is_general());

    let rc = relation_coefficients(&cfg)?;
    for i in 0..3 {
        for j in 0..3 {
            let t: Vec<String> = rc.triples[i][j].iter().map(format_rat).collect();
            println!("  ({i},0) -> ({j},2): [{}]", t.join(", "));
        }
    }

    let point = to_moduli_point(&rc, &default_m_basis())?;
    let coords: Vec<String> = point.0.iter().map(format_rat).collect();
    println!("torus point: ({})", coords.join(", "));

    println!("by-position reading of the printed forms:");
    for e in convention_transcript(&cfg)? {
        println!(
            "  ({},{}) kernel agrees {}  literal vanishes {}",
            e.source, e.target, e.kernel_agrees, e.literal_vanishes
        );
    }
    Ok(())
}
