//! Exhaustive search for a minimum power-dominating set.
//!
//! `cargo run --release --example exact_solver -- 9`

use powerdom::construction::{construct_pds, target_size};
use powerdom::solver::{solve, SolveOptions};
use powerdom::TriGrid;

fn main() -> powerdom::Result<()> {
    let max_k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for k in 1..=max_k {
        let grid = TriGrid::new(k)?;
        let opts = SolveOptions {
            symmetry: k >= 8,
            upper_bound: (k >= 8).then(|| construct_pds(&grid)),
            ..SolveOptions::default()
        };
        let r = solve(&grid, &opts)?;
        let witness = r.witness.as_ref().map(|w| grid.coords_of(w));
        println!(
            "k={k:>2} gamma_P={:?} (ceil(k/3)={}) tested={} in {:.3}s witness={:?}",
            r.gamma_p,
            target_size(k),
            r.sets_tested,
            r.elapsed.as_secs_f64(),
            witness
        );
    }
    Ok(())
}
