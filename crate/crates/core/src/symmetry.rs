//! Automorphisms of `T_k`, found by search rather than coordinate formulas.
//!
//! Every automorphism sends corners (the degree-3 vertices) to corners, so the
//! search fixes the image of one corner among the six corners and extends the
//! map vertex by vertex in breadth-first order, backtracking on any adjacency
//! or degree mismatch.

use std::collections::VecDeque;

use crate::grid::TriGrid;

/// A vertex permutation: `perm[v]` is the image of `v`.
pub type Permutation = Vec<usize>;

/// All automorphisms of the grid, identity first, in a deterministic order.
/// For `k >= 2` this is the dihedral group of the hexagon (order 12).
pub fn hexagon_automorphisms(grid: &TriGrid) -> Vec<Permutation> {
    let n = grid.len();
    if n == 1 {
        return vec![vec![0]];
    }
    let corners: Vec<usize> = (0..n).filter(|&v| grid.degree(v) == 3).collect();
    let root = corners[0];

    let order = bfs_order(grid, root);
    let mut found = Vec::new();
    for &image in &corners {
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[root] = image;
        used[image] = true;
        extend(grid, &order, 1, &mut map, &mut used, &mut found);
    }
    found.sort();
    let identity: Permutation = (0..n).collect();
    let pos = found
        .iter()
        .position(|p| *p == identity)
        .expect("identity is an automorphism");
    let id = found.remove(pos);
    found.insert(0, id);
    found
}

fn bfs_order(grid: &TriGrid, root: usize) -> Vec<(usize, usize)> {
    // (vertex, bfs parent)
    let mut seen = vec![false; grid.len()];
    let mut order = vec![(root, root)];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        for &u in grid.adj(v) {
            if !seen[u] {
                seen[u] = true;
                order.push((u, v));
                queue.push_back(u);
            }
        }
    }
    order
}

fn extend(
    grid: &TriGrid,
    order: &[(usize, usize)],
    pos: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
) {
    if pos == order.len() {
        found.push(map.clone());
        return;
    }
    let (v, parent) = order[pos];
    let mapped_nbrs: Vec<usize> = grid.adj(v).iter().copied().filter(|&u| map[u] != usize::MAX).collect();
    for &cand in grid.adj(map[parent]) {
        if used[cand] || grid.degree(cand) != grid.degree(v) {
            continue;
        }
        if !mapped_nbrs.iter().all(|&u| grid.are_adjacent(map[u], cand)) {
            continue;
        }
        let cand_mapped = grid.adj(cand).iter().filter(|&&w| used[w]).count();
        if cand_mapped != mapped_nbrs.len() {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        extend(grid, order, pos + 1, map, used, found);
        map[v] = usize::MAX;
        used[cand] = false;
    }
}

/// Whether the sorted index tuple is the lexicographically smallest in its orbit.
pub fn is_orbit_minimal(sorted: &[usize], group: &[Permutation], scratch: &mut Vec<usize>) -> bool {
    for g in group.iter().skip(1) {
        scratch.clear();
        scratch.extend(sorted.iter().map(|&v| g[v]));
        scratch.sort_unstable();
        if scratch.as_slice() < sorted {
            return false;
        }
    }
    true
}
