//! Start from the corner triangle as already monitored and watch it spread
//! over the whole grid.
//!
//! `cargo run --example triangle_propagation -- 3`

use powerdom::construction::triangle_set;
use powerdom::propagation::{propagate_from_monitored, radius_of};
use powerdom::render::{self, Decoration};
use powerdom::TriGrid;

fn main() -> powerdom::Result<()> {
    let k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let grid = TriGrid::new(k)?;
    let tri = triangle_set(&grid);
    let state = propagate_from_monitored(&grid, &tri)?;
    println!("triangle has {} vertices", tri.len());
    println!("complete: {}, radius: {:?}", state.is_complete(), radius_of(&state));

    let rounds = state.round_of();
    for r in 1..=state.rounds {
        let newly: Vec<String> = (0..grid.len())
            .filter(|&v| rounds[v] == Some(r))
            .map(|v| {
                let c = grid.coord(v);
                format!("({},{},{})", c.x, c.y, c.z)
            })
            .collect();
        println!("round {r}: {}", newly.join(" "));
    }
    println!("{}", render::tikz(&grid, &Decoration::from_propagation(None, &state)));
    Ok(())
}
