//! The explicit power-dominating set of size ceil(k/3) for a range of k.
//!
//! `cargo run --example upper_bound -- 20`

use powerdom::construction::{construct_pds, target_size};
use powerdom::propagation::{propagate, radius_of, Radius};
use powerdom::TriGrid;

fn main() -> powerdom::Result<()> {
    let max_k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    println!("{:>3} {:>5} {:>9} {:>7}  set", "k", "size", "dominates", "radius");
    for k in 1..=max_k {
        let grid = TriGrid::new(k)?;
        let s = construct_pds(&grid);
        assert_eq!(s.len(), target_size(k));
        let state = propagate(&grid, &s)?;
        let coords: Vec<String> = grid
            .coords_of(&s)
            .iter()
            .map(|c| format!("({},{},{})", c.x, c.y, c.z))
            .collect();
        println!(
            "{k:>3} {:>5} {:>9} {:>7}  {}",
            s.len(),
            state.is_complete(),
            match radius_of(&state) {
                Radius::Rounds(r) => r.to_string(),
                Radius::NotDominating => "-".into(),
            },
            coords.join(" ")
        );
    }
    Ok(())
}
