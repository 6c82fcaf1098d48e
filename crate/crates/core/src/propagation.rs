//! The power-domination process: a domination step followed by forcing rounds.
//!
//! Rounds are simultaneous: every forcing of a round is decided against the
//! monitored set as it stood when the round began. Inside a round, events are
//! listed by ascending target index, which also fixes the sequential order
//! `m_1, m_2, ...` used for prefix sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{CubicCoord, TriGrid};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Dominated,
    Forced,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropagationEvent {
    pub kind: EventKind,
    pub target: usize,
    /// Dominating vertex, forcing vertex, or `None` for a seeded monitored vertex.
    pub source: Option<usize>,
    pub round: usize,
}

#[derive(Clone, Debug)]
pub struct MonitorState {
    /// The final monitored set `M`.
    pub monitored: VertexSet,
    /// Monitored set before any forcing (`N[S]`, or the seed set).
    pub initial: VertexSet,
    /// Number of rounds in which at least one vertex was forced.
    pub rounds: usize,
    pub trace: Vec<PropagationEvent>,
}

impl MonitorState {
    pub fn is_complete(&self) -> bool {
        self.monitored.len() == self.monitored.universe()
    }

    /// Forced vertices in sequential order.
    pub fn forced_sequence(&self) -> impl Iterator<Item = usize> + '_ {
        self.trace
            .iter()
            .filter(|e| e.kind == EventKind::Forced)
            .map(|e| e.target)
    }

    /// Round in which each vertex became monitored, `None` if it never did.
    pub fn round_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.monitored.universe()];
        for v in self.initial.iter() {
            out[v] = Some(0);
        }
        for e in &self.trace {
            out[e.target] = Some(e.round);
        }
        out
    }
}

/// Outcome of a radius query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radius {
    Rounds(usize),
    NotDominating,
}

/// `N[S]`.
pub fn close_neighborhood(grid: &TriGrid, s: &VertexSet) -> Result<VertexSet> {
    grid.check_set(s)?;
    let mut out = s.clone();
    for v in s.iter() {
        for &u in grid.adj(v) {
            out.insert(u);
        }
    }
    Ok(out)
}

pub fn propagate(grid: &TriGrid, s: &VertexSet) -> Result<MonitorState> {
    grid.check_set(s)?;
    let mut trace = Vec::new();
    let mut dominated: Vec<Option<usize>> = vec![None; grid.len()];
    for v in s.iter() {
        dominated[v] = Some(v);
    }
    for v in s.iter() {
        for &u in grid.adj(v) {
            if dominated[u].is_none() {
                // ascending iteration over S makes this the smallest dominator
                dominated[u] = Some(v);
            }
        }
    }
    let mut initial = grid.empty_set();
    for (v, src) in dominated.iter().enumerate() {
        if let Some(src) = src {
            initial.insert(v);
            trace.push(PropagationEvent {
                kind: EventKind::Dominated,
                target: v,
                source: Some(*src),
                round: 0,
            });
        }
    }
    Ok(run_rounds(grid, initial, trace))
}

/// Forcing rounds only, starting from an already monitored set.
pub fn propagate_from_monitored(grid: &TriGrid, seed: &VertexSet) -> Result<MonitorState> {
    grid.check_set(seed)?;
    let trace = seed
        .iter()
        .map(|v| PropagationEvent {
            kind: EventKind::Dominated,
            target: v,
            source: None,
            round: 0,
        })
        .collect();
    Ok(run_rounds(grid, seed.clone(), trace))
}

fn run_rounds(grid: &TriGrid, initial: VertexSet, mut trace: Vec<PropagationEvent>) -> MonitorState {
    let mut monitored = initial.clone();
    let mut unmonitored_nbrs: Vec<u8> = (0..grid.len())
        .map(|v| grid.adj(v).iter().filter(|&&u| !monitored.contains(u)).count() as u8)
        .collect();
    let mut round = 0;
    let mut forced_by: Vec<Option<usize>> = vec![None; grid.len()];
    loop {
        let mut targets = Vec::new();
        for v in monitored.iter() {
            if unmonitored_nbrs[v] != 1 {
                continue;
            }
            let u = grid
                .adj(v)
                .iter()
                .copied()
                .find(|&u| !monitored.contains(u))
                .expect("count says one unmonitored neighbour");
            if forced_by[u].is_none() {
                forced_by[u] = Some(v);
                targets.push(u);
            }
        }
        if targets.is_empty() {
            break;
        }
        round += 1;
        targets.sort_unstable();
        for &u in &targets {
            monitored.insert(u);
            for &w in grid.adj(u) {
                unmonitored_nbrs[w] -= 1;
            }
            trace.push(PropagationEvent {
                kind: EventKind::Forced,
                target: u,
                source: forced_by[u],
                round,
            });
        }
    }
    MonitorState {
        monitored,
        initial,
        rounds: round,
        trace,
    }
}

/// Whether `S` monitors the whole grid.
pub fn is_power_dominating(grid: &TriGrid, s: &VertexSet) -> Result<bool> {
    grid.check_set(s)?;
    let members: Vec<usize> = s.iter().collect();
    Ok(Closure::new(grid).dominates(&members))
}

pub fn propagation_radius(grid: &TriGrid, s: &VertexSet) -> Result<Radius> {
    let state = propagate(grid, s)?;
    Ok(radius_of(&state))
}

pub fn radius_of(state: &MonitorState) -> Radius {
    if state.is_complete() {
        Radius::Rounds(state.rounds)
    } else {
        Radius::NotDominating
    }
}

/// `M[t]` with `|M[t]| = target`: `N[S]` followed by the first forced vertices.
pub fn monitored_prefix(grid: &TriGrid, s: &VertexSet, target: usize) -> Result<VertexSet> {
    let state = propagate(grid, s)?;
    prefix_of(&state, target)
}

pub fn prefix_of(state: &MonitorState, target: usize) -> Result<VertexSet> {
    let (min, max) = (state.initial.len(), state.monitored.len());
    if target < min || target > max {
        return Err(Error::PrefixOutOfRange { target, min, max });
    }
    let mut out = state.initial.clone();
    for v in state.forced_sequence().take(target - min) {
        out.insert(v);
    }
    Ok(out)
}

/// Reusable scratch space for fast "does this set power-dominate?" queries.
///
/// Uses a one-forcing-at-a-time worklist; the final monitored set does not
/// depend on the forcing order, so the answer matches [`propagate`].
pub struct Closure<'g> {
    grid: &'g TriGrid,
    monitored: Vec<bool>,
    unmonitored_nbrs: Vec<u8>,
    stack: Vec<usize>,
    count: usize,
}

impl<'g> Closure<'g> {
    pub fn new(grid: &'g TriGrid) -> Self {
        Self {
            grid,
            monitored: vec![false; grid.len()],
            unmonitored_nbrs: vec![0; grid.len()],
            stack: Vec::with_capacity(grid.len()),
            count: 0,
        }
    }

    fn reset(&mut self) {
        self.monitored.fill(false);
        for (v, c) in self.unmonitored_nbrs.iter_mut().enumerate() {
            *c = self.grid.degree(v) as u8;
        }
        self.stack.clear();
        self.count = 0;
    }

    #[inline]
    fn mark(&mut self, v: usize) {
        if self.monitored[v] {
            return;
        }
        self.monitored[v] = true;
        self.count += 1;
        if self.unmonitored_nbrs[v] == 1 {
            self.stack.push(v);
        }
        for &w in self.grid.adj(v) {
            self.unmonitored_nbrs[w] -= 1;
            if self.monitored[w] && self.unmonitored_nbrs[w] == 1 {
                self.stack.push(w);
            }
        }
    }

    /// Runs the process from `s` and reports whether every vertex got monitored.
    pub fn dominates(&mut self, s: &[usize]) -> bool {
        self.run(s);
        self.count == self.grid.len()
    }

    /// Runs the process from `s` and returns the number of monitored vertices.
    pub fn run(&mut self, s: &[usize]) -> usize {
        self.reset();
        let grid = self.grid;
        for &v in s {
            self.mark(v);
            for &u in grid.adj(v) {
                self.mark(u);
            }
        }
        while let Some(v) = self.stack.pop() {
            if self.unmonitored_nbrs[v] != 1 {
                continue;
            }
            if let Some(&u) = grid.adj(v).iter().find(|&&u| !self.monitored[u]) {
                self.mark(u);
            }
        }
        self.count
    }

    pub fn is_monitored(&self, v: usize) -> bool {
        self.monitored[v]
    }
}

/// Coordinates-level view of an event, as exported in traces.
pub fn event_coords(grid: &TriGrid, e: &PropagationEvent) -> (CubicCoord, Option<CubicCoord>) {
    (grid.coord(e.target), e.source.map(|s| grid.coord(s)))
}
