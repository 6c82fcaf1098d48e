//! Run the monitoring rules from the constructed set and print the trace
//! round by round.
//!
//! `cargo run --example propagation_trace -- 5`

use powerdom::construction::construct_pds;
use powerdom::propagation::{propagate, EventKind};
use powerdom::render;
use powerdom::TriGrid;

fn main() -> powerdom::Result<()> {
    let k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let grid = TriGrid::new(k)?;
    let s = construct_pds(&grid);
    let state = propagate(&grid, &s)?;

    println!("S = {}", render::set_json(&grid, &s));
    println!("|N[S]| = {}, rounds = {}", state.initial.len(), state.rounds);
    for round in 1..=state.rounds {
        let forced: Vec<String> = state
            .trace
            .iter()
            .filter(|e| e.kind == EventKind::Forced && e.round == round)
            .map(|e| {
                let t = grid.coord(e.target);
                let f = grid.coord(e.source.unwrap());
                format!("({},{},{})<-({},{},{})", t.x, t.y, t.z, f.x, f.y, f.z)
            })
            .collect();
        println!("round {round:>2}: {}", forced.join(" "));
    }
    println!("monitored {} of {}", state.monitored.len(), grid.len());
    Ok(())
}
