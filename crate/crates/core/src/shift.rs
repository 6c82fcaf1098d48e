//! Borders, line shifts and the shifting process behind the lower bound.
//!
//! A `j`-shift packs the members of every line `l_{v_j = i}` onto the
//! positions of that line with the smallest successor-axis coordinate. Every
//! shift that moves something strictly lowers the global weight
//! `sum(x + 2y + 2z)`, so alternating the three shifts reaches a fixpoint, and
//! that fixpoint is a staircase: closed under lowering `y` and `z`.

use serde::Serialize;

use crate::error::Result;
use crate::grid::{Axis, TriGrid};
use crate::propagation::{prefix_of, propagate, MonitorState};
use crate::set::VertexSet;

/// Members of `A` with at least one neighbour outside `A`.
pub fn border(grid: &TriGrid, a: &VertexSet) -> VertexSet {
    VertexSet::from_indices(
        grid.len(),
        a.iter().filter(|&v| grid.adj(v).iter().any(|&u| !a.contains(u))),
    )
}

pub fn border_size(grid: &TriGrid, a: &VertexSet) -> usize {
    a.iter()
        .filter(|&v| grid.adj(v).iter().any(|&u| !a.contains(u)))
        .count()
}

pub fn shift(grid: &TriGrid, a: &VertexSet, axis: Axis) -> VertexSet {
    let mut out = grid.empty_set();
    for line in grid.lines(axis) {
        let taken = line.iter().filter(|&&v| a.contains(v)).count();
        for &v in &line[..taken] {
            out.insert(v);
        }
    }
    out
}

/// Global weight `sum(v1 + 2 v2 + 2 v3)` over the members of `A`.
pub fn weight(grid: &TriGrid, a: &VertexSet) -> u64 {
    a.iter().map(|v| grid.coord(v).weight()).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftStep {
    /// Axis of the shift that produced this set; `None` for the starting set.
    pub axis: Option<Axis>,
    pub set: VertexSet,
    pub weight: u64,
    pub border_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTrace {
    /// The starting set, then one entry per shift that changed the set.
    pub steps: Vec<ShiftStep>,
    /// Number of full 1-2-3 passes performed, the last one being idle.
    pub passes: usize,
    pub fixpoint_reached: bool,
}

impl ShiftTrace {
    pub fn final_set(&self) -> &VertexSet {
        &self.steps.last().expect("trace has a starting step").set
    }
}

/// Alternates 1-, 2- and 3-shifts until a full pass changes nothing.
///
/// Panics if a shift changes the set without lowering its weight, which would
/// mean the shift is wrong.
pub fn shift_to_fixpoint(grid: &TriGrid, a: &VertexSet) -> (VertexSet, ShiftTrace) {
    let start_weight = weight(grid, a);
    let pass_cap = start_weight as usize + 1;
    let mut steps = vec![ShiftStep {
        axis: None,
        set: a.clone(),
        weight: start_weight,
        border_size: border_size(grid, a),
    }];
    let mut current = a.clone();
    let mut current_weight = start_weight;
    let mut passes = 0;
    let mut fixpoint_reached = false;
    while passes < pass_cap {
        passes += 1;
        let mut changed = false;
        for axis in Axis::ALL {
            let next = shift(grid, &current, axis);
            if next == current {
                continue;
            }
            let w = weight(grid, &next);
            assert!(
                w < current_weight,
                "{axis}-shift changed the set without lowering the weight ({current_weight} -> {w})"
            );
            changed = true;
            steps.push(ShiftStep {
                axis: Some(axis),
                border_size: border_size(grid, &next),
                set: next.clone(),
                weight: w,
            });
            current = next;
            current_weight = w;
        }
        if !changed {
            fixpoint_reached = true;
            break;
        }
    }
    (
        current,
        ShiftTrace {
            steps,
            passes,
            fixpoint_reached,
        },
    )
}

/// Whether `A` contains every vertex `(x', y', z')` with `y' <= y`, `z' <= z`
/// for each of its members `(x, y, z)`.
///
/// Equivalent to: for every member, its three lower neighbours
/// `(x+1, y, z-1)`, `(x, y-1, z-1)`, `(x-1, y-1, z)` that exist are members.
pub fn is_staircase(grid: &TriGrid, a: &VertexSet) -> bool {
    const LOWER: [(i32, i32, i32); 3] = [(1, 0, -1), (0, -1, -1), (-1, -1, 0)];
    a.iter().all(|v| {
        let c = grid.coord(v);
        LOWER
            .iter()
            .filter_map(|&o| grid.index_of(&c.offset(o)))
            .all(|u| a.contains(u))
    })
}

/// Tracks `|B_M|` while vertices are added to `M` one at a time.
struct IncrementalBorder<'g> {
    grid: &'g TriGrid,
    member: Vec<bool>,
    outside_nbrs: Vec<u8>,
    size: usize,
}

impl<'g> IncrementalBorder<'g> {
    fn new(grid: &'g TriGrid) -> Self {
        Self {
            grid,
            member: vec![false; grid.len()],
            outside_nbrs: (0..grid.len()).map(|v| grid.degree(v) as u8).collect(),
            size: 0,
        }
    }

    fn add(&mut self, v: usize) {
        if self.member[v] {
            return;
        }
        self.member[v] = true;
        if self.outside_nbrs[v] > 0 {
            self.size += 1;
        }
        for &w in self.grid.adj(v) {
            self.outside_nbrs[w] -= 1;
            if self.member[w] && self.outside_nbrs[w] == 0 {
                self.size -= 1;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim1Report {
    pub holds: bool,
    pub set_size: usize,
    pub bound: usize,
    pub max_border: usize,
    pub prefixes_checked: usize,
}

/// Replays the sequential order of `S`'s propagation and checks
/// `|B_{M[t]}| <= 6|S|` for every prefix.
pub fn claim1_check(grid: &TriGrid, s: &VertexSet) -> Result<Claim1Report> {
    let state = propagate(grid, s)?;
    Ok(claim1_on_state(grid, s.len(), &state))
}

fn claim1_on_state(grid: &TriGrid, set_size: usize, state: &MonitorState) -> Claim1Report {
    let bound = 6 * set_size;
    let mut tracker = IncrementalBorder::new(grid);
    for v in state.initial.iter() {
        tracker.add(v);
    }
    let mut max_border = tracker.size;
    let mut prefixes_checked = 1;
    for v in state.forced_sequence() {
        tracker.add(v);
        max_border = max_border.max(tracker.size);
        prefixes_checked += 1;
    }
    Claim1Report {
        holds: max_border <= bound,
        set_size,
        bound,
        max_border,
        prefixes_checked,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim2Report {
    pub holds: bool,
    pub half: usize,
    /// `2k - 1`.
    pub lower_bound: usize,
    pub border_prefix: usize,
    pub border_shifted: usize,
    /// Every line `l_{v1 = i}` meets both the shifted set and its complement.
    pub lines_split: bool,
    pub shift_passes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim2Outcome {
    Checked(Claim2Report),
    /// The half-size prefix does not exist for this set.
    PreconditionUnmet {
        reason: String,
    },
}

/// Half of `|V|`, rounded up (`|V|` is always odd).
pub fn half_size(grid: &TriGrid) -> usize {
    grid.len().div_ceil(2)
}

/// Takes the prefix `M` of `S`'s propagation with `ceil(|V|/2)` vertices,
/// shifts it to its fixpoint `M*`, and checks `2k - 1 <= |B_{M*}| <= |B_M|`
/// together with the line-splitting property of `M*`.
pub fn claim2_check(grid: &TriGrid, s: &VertexSet) -> Result<Claim2Outcome> {
    let state = propagate(grid, s)?;
    let half = half_size(grid);
    if !state.is_complete() {
        return Ok(Claim2Outcome::PreconditionUnmet {
            reason: "set is not power dominating".into(),
        });
    }
    if state.initial.len() > half {
        return Ok(Claim2Outcome::PreconditionUnmet {
            reason: format!("|N[S]| = {} exceeds half = {half}", state.initial.len()),
        });
    }
    let prefix = prefix_of(&state, half)?;
    let (shifted, trace) = shift_to_fixpoint(grid, &prefix);
    let border_prefix = border_size(grid, &prefix);
    let border_shifted = border_size(grid, &shifted);
    let lower_bound = 2 * grid.k() - 1;
    let lines_split = grid.lines(Axis::One).iter().all(|line| {
        let inside = line.iter().filter(|&&v| shifted.contains(v)).count();
        inside > 0 && inside < line.len()
    });
    Ok(Claim2Outcome::Checked(Claim2Report {
        holds: lower_bound <= border_shifted && border_shifted <= border_prefix && lines_split,
        half,
        lower_bound,
        border_prefix,
        border_shifted,
        lines_split,
        shift_passes: trace.passes,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{construct_pds, triangle_set};
    use crate::grid::CubicCoord;

    fn brute_border(grid: &TriGrid, a: &VertexSet) -> VertexSet {
        let mut out = grid.empty_set();
        for v in a.iter() {
            for u in 0..grid.len() {
                if grid.coord(v).l1_distance(&grid.coord(u)) == 2 && !a.contains(u) {
                    out.insert(v);
                }
            }
        }
        out
    }

    fn brute_staircase(grid: &TriGrid, a: &VertexSet) -> bool {
        a.iter().all(|v| {
            let c = grid.coord(v);
            (0..grid.len()).all(|u| {
                let d = grid.coord(u);
                !(d.y <= c.y && d.z <= c.z) || a.contains(u)
            })
        })
    }

    #[test]
    fn border_edge_cases() {
        let g = TriGrid::new(3).unwrap();
        assert!(border(&g, &g.full_set()).is_empty());
        let single = g.set_from_coords(&[CubicCoord::new(1, 1, 2)]).unwrap();
        assert_eq!(border(&g, &single), single);
        let t = triangle_set(&g);
        assert_eq!(border(&g, &t), brute_border(&g, &t));
    }

    #[test]
    fn weight_examples() {
        let g = TriGrid::new(3).unwrap();
        assert_eq!(weight(&g, &g.empty_set()), 0);
        let a = g
            .set_from_coords(&[CubicCoord::new(1, 1, 2), CubicCoord::new(2, 3, 3)])
            .unwrap();
        assert_eq!(weight(&g, &a), 21);
        for k in 1..=6 {
            let g = TriGrid::new(k).unwrap();
            let corner = g.set_from_coords(&[CubicCoord::new(0, 0, k as i32 - 1)]).unwrap();
            assert_eq!(weight(&g, &corner), 2 * (k as u64 - 1));
        }
    }

    #[test]
    fn shift_of_packed_line_is_identity() {
        let g = TriGrid::new(4).unwrap();
        for axis in Axis::ALL {
            let mut a = g.empty_set();
            for line in g.lines(axis) {
                for &v in &line[..line.len() / 2] {
                    a.insert(v);
                }
            }
            assert_eq!(shift(&g, &a, axis), a);
        }
    }

    #[test]
    fn one_shift_moves_left() {
        // line x = 2 of T_3 runs (2,0,0) .. (2,4,4); take the two right-most
        let g = TriGrid::new(3).unwrap();
        let a = g
            .set_from_coords(&[CubicCoord::new(2, 4, 4), CubicCoord::new(2, 3, 3)])
            .unwrap();
        let shifted = shift(&g, &a, Axis::One);
        let expected = g
            .set_from_coords(&[CubicCoord::new(2, 0, 0), CubicCoord::new(2, 1, 1)])
            .unwrap();
        assert_eq!(shifted, expected);
    }

    #[test]
    fn trivial_fixpoints() {
        let g = TriGrid::new(4).unwrap();
        for a in [g.empty_set(), g.full_set()] {
            let (fix, trace) = shift_to_fixpoint(&g, &a);
            assert_eq!(fix, a);
            assert_eq!(trace.passes, 1);
            assert_eq!(trace.steps.len(), 1);
            assert!(trace.fixpoint_reached);
            assert!(is_staircase(&g, &a));
        }
    }

    #[test]
    fn staircase_matches_brute_force() {
        for k in 2..=5 {
            let g = TriGrid::new(k).unwrap();
            let corner = g.set_from_coords(&[CubicCoord::new(0, 0, k as i32 - 1)]).unwrap();
            assert_eq!(is_staircase(&g, &corner), brute_staircase(&g, &corner));
            for v in 0..g.len() {
                let a = VertexSet::from_indices(g.len(), [v]);
                assert_eq!(is_staircase(&g, &a), brute_staircase(&g, &a), "k={k} v={v}");
            }
        }
    }

    #[test]
    fn incremental_border_tracks_brute() {
        let g = TriGrid::new(5).unwrap();
        let s = construct_pds(&g);
        let state = propagate(&g, &s).unwrap();
        let mut tracker = IncrementalBorder::new(&g);
        let mut m = g.empty_set();
        for v in state.initial.iter().chain(state.forced_sequence()) {
            tracker.add(v);
            m.insert(v);
            assert_eq!(tracker.size, brute_border(&g, &m).len());
        }
    }

    #[test]
    fn claims_on_construction() {
        let g = TriGrid::new(6).unwrap();
        let r = claim1_check(&g, &construct_pds(&g)).unwrap();
        assert!(r.holds);
        assert!(r.max_border <= 12);

        for (k, lb) in [(5, 9), (9, 17)] {
            let g = TriGrid::new(k).unwrap();
            match claim2_check(&g, &construct_pds(&g)).unwrap() {
                Claim2Outcome::Checked(r) => {
                    assert!(r.holds, "{r:?}");
                    assert!(r.border_shifted >= lb);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn claim1_full_set_trivial() {
        let g = TriGrid::new(4).unwrap();
        let r = claim1_check(&g, &g.full_set()).unwrap();
        assert!(r.holds);
        assert_eq!(r.max_border, 0);
    }

    #[test]
    fn claim2_guard() {
        let g = TriGrid::new(4).unwrap();
        assert!(matches!(
            claim2_check(&g, &g.full_set()).unwrap(),
            Claim2Outcome::PreconditionUnmet { .. }
        ));
        assert!(matches!(
            claim2_check(&g, &g.empty_set()).unwrap(),
            Claim2Outcome::PreconditionUnmet { .. }
        ));
    }
}
