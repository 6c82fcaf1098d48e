//! Apply j-shifts to a random set until it settles, printing weight and
//! border size at each step.
//!
//! `cargo run --example shift_process -- 5 7`

use powerdom::experiments::{rng_for, sample_subset};
use powerdom::shift::{border_size, is_staircase, shift_to_fixpoint, weight};
use powerdom::TriGrid;

fn main() -> powerdom::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().ok());
    let k = args.next().flatten().unwrap_or(5) as usize;
    let seed = args.next().flatten().unwrap_or(0);
    let grid = TriGrid::new(k)?;
    let a = sample_subset(&grid, 0.4, &mut rng_for(seed, k, 0));
    println!(
        "|A| = {}, weight {}, border {}",
        a.len(),
        weight(&grid, &a),
        border_size(&grid, &a)
    );

    let (fix, trace) = shift_to_fixpoint(&grid, &a);
    for (i, step) in trace.steps.iter().enumerate() {
        let axis = step.axis.map_or("-".to_string(), |j| j.to_string());
        println!(
            "step {i:>2} axis {axis} weight {:>4} border {:>3}",
            step.weight, step.border_size
        );
    }
    println!("passes {}, staircase {}", trace.passes, is_staircase(&grid, &fix));
    Ok(())
}
