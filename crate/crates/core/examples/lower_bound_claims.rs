//! Check the two border inequalities behind the lower bound on the
//! constructed sets and on random power-dominating sets.
//!
//! `cargo run --release --example lower_bound_claims -- 15`

use powerdom::construction::construct_pds;
use powerdom::experiments::{random_pds, rng_for};
use powerdom::shift::{claim1_check, claim2_check, Claim2Outcome};
use powerdom::TriGrid;

fn main() -> powerdom::Result<()> {
    let max_k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    for k in 4..=max_k {
        let grid = TriGrid::new(k)?;
        let s = construct_pds(&grid);
        let c1 = claim1_check(&grid, &s)?;
        print!(
            "k={k:>2} |S|={} max|B|={:>3} <= {:>3}",
            s.len(),
            c1.max_border,
            c1.bound
        );
        match claim2_check(&grid, &s)? {
            Claim2Outcome::Checked(r) => println!(
                "  half={} {} <= {} <= {} split={} ok={}",
                r.half, r.lower_bound, r.border_shifted, r.border_prefix, r.lines_split, r.holds
            ),
            Claim2Outcome::PreconditionUnmet { reason } => println!("  skipped: {reason}"),
        }
    }

    let grid = TriGrid::new(6)?;
    let mut rng = rng_for(0, 6, 1);
    let held = (0..50)
        .filter(|_| claim1_check(&grid, &random_pds(&grid, &mut rng)).unwrap().holds)
        .count();
    println!("random power-dominating sets on T_6: border bound held for {held}/50");
    Ok(())
}
