//! Build T_k and export it as JSON, Graphviz and TikZ.
//!
//! `cargo run --example grid_export -- 4`

use powerdom::render::{self, Decoration};
use powerdom::{Axis, TriGrid};

fn main() -> powerdom::Result<()> {
    let k = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let grid = TriGrid::new(k)?;
    println!("T_{k}: {} vertices, {} edges", grid.len(), grid.edge_count());

    let degrees = (0..grid.len()).map(|v| grid.degree(v));
    let mut hist = [0usize; 7];
    degrees.for_each(|d| hist[d] += 1);
    println!("degree 3: {}, degree 4: {}, degree 6: {}", hist[3], hist[4], hist[6]);

    for axis in Axis::ALL {
        let sizes = (0..=grid.max_coord())
            .map(|i| grid.line_members(axis, i).map(|l| l.len()))
            .collect::<powerdom::Result<Vec<_>>>()?;
        println!("axis {axis} line sizes {sizes:?}");
    }

    let json = render::grid_json(&grid);
    println!("json: {} bytes", json.len());
    let deco = Decoration::default();
    println!("{}", render::dot(&grid, &deco, &format!("T{k}")));
    println!("{}", render::tikz(&grid, &deco));
    Ok(())
}
