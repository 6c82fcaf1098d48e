//! Seeded random sets and the property suites run by `powerdom experiments`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construction::{construct_pds, target_size, triangle_set};
use crate::grid::{Axis, TriGrid};
use crate::propagation::{propagate_from_monitored, Closure};
use crate::set::VertexSet;
use crate::shift::{
    border_size, claim1_check, claim2_check, is_staircase, shift, shift_to_fixpoint, weight, Claim2Outcome,
};

/// Inclusion probabilities cycled through by [`sample_subset`] callers.
pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

pub fn rng_for(seed: u64, k: usize, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((k as u64) << 16) | stream);
    rng
}

/// Includes each vertex independently with probability `p`.
pub fn sample_subset<R: Rng>(grid: &TriGrid, p: f64, rng: &mut R) -> VertexSet {
    VertexSet::from_indices(grid.len(), (0..grid.len()).filter(|_| rng.gen_bool(p)))
}

/// The `i`-th sample of a suite: densities cycle 0.2, 0.5, 0.8.
pub fn sample_cycled<R: Rng>(grid: &TriGrid, i: usize, rng: &mut R) -> VertexSet {
    sample_subset(grid, DENSITIES[i % DENSITIES.len()], rng)
}

/// A random power-dominating set of size between `ceil(k/3)` and `ceil(k/3) + 3`.
pub fn random_pds<R: Rng>(grid: &TriGrid, rng: &mut R) -> VertexSet {
    let base = target_size(grid.k());
    let mut closure = Closure::new(grid);
    let all: Vec<usize> = (0..grid.len()).collect();
    loop {
        let size = (base + rng.gen_range(0..=3)).min(grid.len());
        let pick: Vec<usize> = all.choose_multiple(rng, size).copied().collect();
        if closure.dominates(&pick) {
            return VertexSet::from_indices(grid.len(), pick);
        }
    }
}

/// Smallest staircase containing `seeds`: all `(x', y', z')` below some seed
/// in both `y` and `z`.
pub fn staircase_closure(grid: &TriGrid, seeds: &VertexSet) -> VertexSet {
    let tops: Vec<_> = seeds.iter().map(|v| grid.coord(v)).collect();
    VertexSet::from_indices(
        grid.len(),
        (0..grid.len()).filter(|&u| {
            let c = grid.coord(u);
            tops.iter().any(|t| c.y <= t.y && c.z <= t.z)
        }),
    )
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub k: usize,
    pub cases: usize,
    pub violations: usize,
    pub skipped: usize,
    pub detail: String,
}

impl SuiteReport {
    fn new(suite: &'static str, k: usize) -> Self {
        Self {
            suite,
            k,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ExperimentConfig {
    pub seed: u64,
    /// Random sets per axis for the shift suites.
    pub samples: usize,
    /// Random power-dominating sets for the claim suites.
    pub random_sets: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 1000,
            random_sets: 20,
        }
    }
}

pub fn upper_bound_suite(grid: &TriGrid) -> SuiteReport {
    let mut r = SuiteReport::new("construction", grid.k());
    let s = construct_pds(grid);
    r.cases = 1;
    let ok = s.len() == target_size(grid.k()) && Closure::new(grid).dominates(&s.to_vec());
    r.violations = usize::from(!ok);
    r.detail = format!("|S| = {}, ceil(k/3) = {}", s.len(), target_size(grid.k()));
    r
}

pub fn triangle_suite(grid: &TriGrid) -> SuiteReport {
    let mut r = SuiteReport::new("triangle", grid.k());
    let st = propagate_from_monitored(grid, &triangle_set(grid)).expect("same grid");
    r.cases = 1;
    r.violations = usize::from(!st.is_complete());
    r.detail = format!("rounds = {}", st.rounds);
    r
}

pub fn claim1_suite(grid: &TriGrid, cfg: &ExperimentConfig) -> SuiteReport {
    let mut r = SuiteReport::new("claim1", grid.k());
    let mut rng = rng_for(cfg.seed, grid.k(), 1);
    let mut sets = vec![construct_pds(grid)];
    sets.extend((0..cfg.random_sets).map(|_| random_pds(grid, &mut rng)));
    let mut worst = 0;
    for (i, s) in sets.iter().enumerate() {
        let rep = claim1_check(grid, s).expect("same grid");
        r.cases += 1;
        r.violations += usize::from(!rep.holds);
        if i == 0 {
            r.detail = format!("construction: max |B| = {} <= {}", rep.max_border, rep.bound);
        }
        worst = worst.max(rep.max_border);
    }
    r.detail.push_str(&format!("; max |B| over all = {worst}"));
    r
}

pub fn claim2_suite(grid: &TriGrid, cfg: &ExperimentConfig) -> SuiteReport {
    let mut r = SuiteReport::new("claim2", grid.k());
    let mut rng = rng_for(cfg.seed, grid.k(), 2);
    let mut sets = vec![construct_pds(grid)];
    sets.extend((0..cfg.random_sets).map(|_| random_pds(grid, &mut rng)));
    for (i, s) in sets.iter().enumerate() {
        match claim2_check(grid, s).expect("same grid") {
            Claim2Outcome::Checked(rep) => {
                r.cases += 1;
                r.violations += usize::from(!rep.holds);
                if i == 0 {
                    r.detail = format!(
                        "construction: 2k-1 = {} <= |B_M*| = {} <= |B_M| = {}",
                        rep.lower_bound, rep.border_shifted, rep.border_prefix
                    );
                }
            }
            Claim2Outcome::PreconditionUnmet { reason } => {
                r.skipped += 1;
                if i == 0 {
                    r.detail = format!("construction skipped: {reason}");
                }
            }
        }
    }
    r
}

/// `|B_{shift(A, j)}| <= |B_A|`, per-line cardinalities kept, weight never grows.
pub fn border_shift_suite(grid: &TriGrid, cfg: &ExperimentConfig) -> SuiteReport {
    let mut r = SuiteReport::new("border-shift", grid.k());
    let mut rng = rng_for(cfg.seed, grid.k(), 3);
    for axis in Axis::ALL {
        for i in 0..cfg.samples {
            let a = sample_cycled(grid, i, &mut rng);
            let b = shift(grid, &a, axis);
            r.cases += 1;
            let lines_kept = grid
                .lines(axis)
                .iter()
                .all(|l| l.iter().filter(|&&v| a.contains(v)).count() == l.iter().filter(|&&v| b.contains(v)).count());
            let (wa, wb) = (weight(grid, &a), weight(grid, &b));
            let weight_ok = if a == b { wa == wb } else { wb < wa };
            if border_size(grid, &b) > border_size(grid, &a) || !lines_kept || !weight_ok {
                r.violations += 1;
            }
        }
    }
    r.detail = format!("{} samples x 3 axes", cfg.samples);
    r
}

/// The shifting process terminates with strictly decreasing weight at a staircase.
pub fn shifting_process_suite(grid: &TriGrid, cfg: &ExperimentConfig) -> SuiteReport {
    let mut r = SuiteReport::new("shift-fixpoint", grid.k());
    let mut rng = rng_for(cfg.seed, grid.k(), 4);
    let mut max_passes = 0;
    for i in 0..cfg.samples {
        let a = sample_cycled(grid, i, &mut rng);
        let (fix, trace) = shift_to_fixpoint(grid, &a);
        r.cases += 1;
        max_passes = max_passes.max(trace.passes);
        let decreasing = trace.steps.windows(2).all(|w| w[1].weight < w[0].weight);
        let ok = trace.fixpoint_reached
            && trace.passes as u64 <= weight(grid, &a) + 1
            && decreasing
            && is_staircase(grid, &fix)
            && fix.len() == a.len();
        r.violations += usize::from(!ok);
    }
    r.detail = format!("max passes = {max_passes}");
    r
}

/// Staircase sets are left unchanged by all three shifts.
pub fn staircase_fixpoint_suite(grid: &TriGrid, cfg: &ExperimentConfig) -> SuiteReport {
    let mut r = SuiteReport::new("staircase-fixed", grid.k());
    let mut rng = rng_for(cfg.seed, grid.k(), 5);
    for _ in 0..cfg.samples {
        let seeds = sample_subset(grid, 0.05, &mut rng);
        let stair = staircase_closure(grid, &seeds);
        r.cases += 1;
        let ok = is_staircase(grid, &stair) && Axis::ALL.iter().all(|&j| shift(grid, &stair, j) == stair);
        r.violations += usize::from(!ok);
    }
    r
}

pub fn run_all(grid: &TriGrid, cfg: &ExperimentConfig) -> Vec<SuiteReport> {
    vec![
        upper_bound_suite(grid),
        triangle_suite(grid),
        claim1_suite(grid, cfg),
        claim2_suite(grid, cfg),
        border_shift_suite(grid, cfg),
        shifting_process_suite(grid, cfg),
        staircase_fixpoint_suite(grid, cfg),
    ]
}
