//! Exact power domination numbers by size-staged exhaustive search.
//!
//! Sizes are tried in increasing order; within a size, subsets are visited in
//! lexicographic order of vertex indices and the first power-dominating one
//! is returned. Exhausting a size certifies that no smaller set works.
//!
//! The search for one size is split by the smallest member of the subset.
//! Workers share only the smallest first member that has produced a witness,
//! so parallel and serial runs return the same witness and the same
//! `sets_tested` count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::TriGrid;
use crate::propagation::Closure;
use crate::set::VertexSet;
use crate::symmetry::{hexagon_automorphisms, is_orbit_minimal, Permutation};

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Largest set size to try; beyond it the result is unresolved.
    pub size_cap: Option<usize>,
    /// Only test one representative per orbit of the hexagon's symmetry group.
    pub symmetry: bool,
    /// Restrict candidates to vertices whose closed neighbourhood is not
    /// strictly contained in another's.
    pub prune: bool,
    pub parallel: bool,
    /// A known power-dominating set; only smaller sizes are searched.
    pub upper_bound: Option<VertexSet>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            size_cap: None,
            symmetry: false,
            prune: false,
            parallel: true,
            upper_bound: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub k: usize,
    /// `None` when the size cap was reached first.
    pub gamma_p: Option<usize>,
    pub witness: Option<VertexSet>,
    /// Number of candidate sets run through the propagation engine.
    pub sets_tested: u64,
    pub elapsed: Duration,
    /// `gamma_P >= certified_lower_bound` has been established by exhaustion.
    pub certified_lower_bound: usize,
}

impl SolveResult {
    pub fn is_resolved(&self) -> bool {
        self.gamma_p.is_some()
    }
}

pub fn min_pds(grid: &TriGrid, size_cap: Option<usize>) -> Result<SolveResult> {
    solve(
        grid,
        &SolveOptions {
            size_cap,
            ..SolveOptions::default()
        },
    )
}

pub fn min_pds_with_symmetry(grid: &TriGrid) -> Result<SolveResult> {
    solve(
        grid,
        &SolveOptions {
            symmetry: true,
            ..SolveOptions::default()
        },
    )
}

pub fn solve(grid: &TriGrid, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let upper = match &opts.upper_bound {
        Some(w) => {
            grid.check_set(w)?;
            let members = w.to_vec();
            if !Closure::new(grid).dominates(&members) {
                return Err(Error::NotPowerDominating);
            }
            Some(w.clone())
        }
        None => None,
    };

    let candidates = if opts.prune {
        neighborhood_maximal(grid)
    } else {
        (0..grid.len()).collect()
    };
    let group = opts.symmetry.then(|| hexagon_automorphisms(grid));

    let search_limit = upper.as_ref().map(|w| w.len() - 1);
    let limit = match (search_limit, opts.size_cap) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => candidates.len(),
    };

    let mut sets_tested = 0;
    for size in 1..=limit {
        let (found, tested) = search_size(grid, &candidates, size, group.as_deref(), opts.parallel);
        sets_tested += tested;
        if let Some(members) = found {
            return Ok(SolveResult {
                k: grid.k(),
                gamma_p: Some(size),
                witness: Some(VertexSet::from_indices(grid.len(), members)),
                sets_tested,
                elapsed: start.elapsed(),
                certified_lower_bound: size,
            });
        }
    }

    match upper {
        Some(w) if search_limit.is_some_and(|s| s <= limit) => Ok(SolveResult {
            k: grid.k(),
            gamma_p: Some(w.len()),
            certified_lower_bound: w.len(),
            witness: Some(w),
            sets_tested,
            elapsed: start.elapsed(),
        }),
        _ => Ok(SolveResult {
            k: grid.k(),
            gamma_p: None,
            witness: None,
            sets_tested,
            elapsed: start.elapsed(),
            certified_lower_bound: limit + 1,
        }),
    }
}

/// Vertices `v` such that no other vertex `w` has `N[v]` strictly inside
/// `N[w]` (ties between equal neighbourhoods keep the smallest index).
///
/// Swapping such a `v` for `w` in any set only enlarges the initial monitored
/// set, and the final monitored set is monotone in it, so some minimum
/// power-dominating set uses only these vertices.
pub fn neighborhood_maximal(grid: &TriGrid) -> Vec<usize> {
    let closed = |v: usize| {
        let mut n: Vec<usize> = grid.adj(v).to_vec();
        n.push(v);
        n.sort_unstable();
        n
    };
    (0..grid.len())
        .filter(|&v| {
            let nv = closed(v);
            !grid.adj(v).iter().any(|&w| {
                let nw = closed(w);
                let contained = nv.iter().all(|x| nw.binary_search(x).is_ok());
                contained && (nw.len() > nv.len() || w < v)
            })
        })
        .collect()
}

struct GroupOutcome {
    first: usize,
    witness: Option<Vec<usize>>,
    tested: u64,
}

fn search_size(
    grid: &TriGrid,
    candidates: &[usize],
    size: usize,
    group: Option<&[Permutation]>,
    parallel: bool,
) -> (Option<Vec<usize>>, u64) {
    let m = candidates.len();
    if size == 0 || size > m {
        return (None, 0);
    }
    let best = AtomicUsize::new(usize::MAX);
    let firsts = 0..=(m - size);
    let outcomes: Vec<GroupOutcome> = if parallel {
        firsts
            .into_par_iter()
            .map_init(
                || Closure::new(grid),
                |closure, p| search_group(closure, candidates, size, p, group, &best),
            )
            .collect()
    } else {
        let mut closure = Closure::new(grid);
        firsts
            .map(|p| search_group(&mut closure, candidates, size, p, group, &best))
            .collect()
    };

    let winner = outcomes.iter().filter(|o| o.witness.is_some()).map(|o| o.first).min();
    let tested = outcomes
        .iter()
        .filter(|o| winner.is_none_or(|w| o.first <= w))
        .map(|o| o.tested)
        .sum();
    let witness = winner.and_then(|w| outcomes.into_iter().find(|o| o.first == w)?.witness);
    (witness, tested)
}

fn search_group(
    closure: &mut Closure<'_>,
    candidates: &[usize],
    size: usize,
    first: usize,
    group: Option<&[Permutation]>,
    best: &AtomicUsize,
) -> GroupOutcome {
    let m = candidates.len();
    let mut outcome = GroupOutcome {
        first,
        witness: None,
        tested: 0,
    };
    if best.load(Ordering::Relaxed) < first {
        return outcome;
    }
    // positions into `candidates`, strictly increasing, pos[0] == first
    let mut pos: Vec<usize> = (first..first + size).collect();
    let mut members = vec![0; size];
    let mut scratch = Vec::with_capacity(size);
    let mut visited: u64 = 0;
    loop {
        for (slot, &p) in members.iter_mut().zip(&pos) {
            *slot = candidates[p];
        }
        let canonical = group.is_none_or(|g| is_orbit_minimal(&members, g, &mut scratch));
        if canonical {
            outcome.tested += 1;
            if closure.dominates(&members) {
                best.fetch_min(first, Ordering::Relaxed);
                outcome.witness = Some(members);
                return outcome;
            }
        }
        visited += 1;
        if visited.is_multiple_of(4096) && best.load(Ordering::Relaxed) < first {
            return outcome;
        }
        // advance to the next combination with the same first element
        let mut i = size;
        loop {
            if i <= 1 {
                return outcome;
            }
            i -= 1;
            if pos[i] < m - size + i {
                break;
            }
        }
        pos[i] += 1;
        for j in i + 1..size {
            pos[j] = pos[j - 1] + 1;
        }
    }
}
