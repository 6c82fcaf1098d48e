//! Explicit power-dominating sets of size `ceil(k/3)` and the corner triangle.

use crate::grid::{CubicCoord, TriGrid};
use crate::set::VertexSet;

/// Parameters of the diagonal construction for a given side length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    pub k: usize,
    /// `floor(k / 3)`, the number of diagonal vertices.
    pub i: usize,
    /// Second coordinate of the first diagonal vertex.
    pub d: i32,
}

impl ConstructionParams {
    pub fn new(k: usize) -> Self {
        let i = k / 3;
        let d = match k % 3 {
            2 => k as i32 - i as i32 - 2,
            _ => k as i32 - i as i32 - 1,
        };
        Self { k, i, d }
    }

    /// Whether the centre vertex `(k-1, k-1, k-1)` is added to the diagonal.
    pub fn needs_center(&self) -> bool {
        !self.k.is_multiple_of(3)
    }
}

/// `ceil(k / 3)`.
pub fn target_size(k: usize) -> usize {
    k.div_ceil(3)
}

/// Coordinates of the construction, without needing a materialised grid.
///
/// For `k >= 4` this is the diagonal `(1 + 3l, d + l, k + d - 2 - 2l)` for
/// `0 <= l < floor(k/3)`, plus the centre when `k` is not a multiple of 3.
/// Smaller grids use the single vertex `(k-2, k-2, k-1)` (or the only vertex
/// of `T_1`).
pub fn construct_pds_coords(k: usize) -> Vec<CubicCoord> {
    assert!(k >= 1, "side length must be positive");
    let ki = k as i32;
    let coords = match k {
        1 => vec![CubicCoord::new(0, 0, 0)],
        2 | 3 => vec![CubicCoord::new(ki - 2, ki - 2, ki - 1)],
        _ => {
            let p = ConstructionParams::new(k);
            let mut out: Vec<CubicCoord> = (0..p.i as i32)
                .map(|l| CubicCoord::new(1 + 3 * l, p.d + l, ki + p.d - 2 - 2 * l))
                .collect();
            if p.needs_center() {
                out.push(CubicCoord::new(ki - 1, ki - 1, ki - 1));
            }
            out
        }
    };
    for c in &coords {
        assert!(c.is_valid_for(k), "construction produced {c} outside T_{k}");
    }
    coords
}

pub fn construct_pds(grid: &TriGrid) -> VertexSet {
    let coords = construct_pds_coords(grid.k());
    grid.set_from_coords(&coords)
        .expect("construction coordinates are validated")
}

pub fn triangle_set_contains(k: usize, c: &CubicCoord) -> bool {
    let top = k as i32 - 1;
    (0..=top).contains(&c.x) && (0..=top).contains(&c.y) && (top..=2 * top).contains(&c.z)
}

/// The corner triangle `0 <= v1, v2 <= k-1`, `k-1 <= v3 <= 2k-2`.
pub fn triangle_set(grid: &TriGrid) -> VertexSet {
    let k = grid.k();
    VertexSet::from_indices(
        grid.len(),
        (0..grid.len()).filter(|&v| triangle_set_contains(k, &grid.coord(v))),
    )
}
