//! JSON, DOT and TikZ output.
//!
//! Vertices are drawn at `(y - x/2, x * sqrt(3)/2)`: lines of constant `x`
//! are horizontal rows with `y` growing to the right, and `x` grows upwards.

use std::fmt::Write as _;

use serde::Serialize;

use crate::grid::{CubicCoord, TriGrid};
use crate::propagation::{EventKind, MonitorState};
use crate::set::VertexSet;
use crate::shift::ShiftTrace;
use crate::solver::SolveResult;

const SHADES: usize = 8;

pub fn screen_position(c: &CubicCoord) -> (f64, f64) {
    let (x, y) = (c.x as f64, c.y as f64);
    (y - x / 2.0, x * 3f64.sqrt() / 2.0)
}

#[derive(Serialize)]
struct GridJson {
    k: usize,
    vertices: Vec<CubicCoord>,
    edges: Vec<[usize; 2]>,
}

pub fn grid_json(grid: &TriGrid) -> String {
    let doc = GridJson {
        k: grid.k(),
        vertices: grid.vertices().to_vec(),
        edges: grid.edges().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("grid serialises")
}

pub fn set_json(grid: &TriGrid, set: &VertexSet) -> String {
    serde_json::to_string(&grid.coords_of(set)).expect("set serialises")
}

pub fn parse_set_json(grid: &TriGrid, text: &str) -> Result<VertexSet, String> {
    let coords: Vec<CubicCoord> = serde_json::from_str(text).map_err(|e| format!("invalid set file: {e}"))?;
    grid.set_from_coords(&coords).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct EventJson {
    round: usize,
    kind: EventKind,
    target: CubicCoord,
    source: Option<CubicCoord>,
}

/// One JSON object per event, one event per line.
pub fn trace_jsonl(grid: &TriGrid, state: &MonitorState) -> String {
    let mut out = String::new();
    for e in &state.trace {
        let line = EventJson {
            round: e.round,
            kind: e.kind,
            target: grid.coord(e.target),
            source: e.source.map(|s| grid.coord(s)),
        };
        out.push_str(&serde_json::to_string(&line).expect("event serialises"));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct StepJson {
    axis: Option<u8>,
    set: Vec<CubicCoord>,
    weight: u64,
    border_size: usize,
}

#[derive(Serialize)]
struct ShiftTraceJson {
    k: usize,
    passes: usize,
    fixpoint_reached: bool,
    steps: Vec<StepJson>,
}

pub fn shift_trace_json(grid: &TriGrid, trace: &ShiftTrace, steps: &[usize]) -> String {
    let doc = ShiftTraceJson {
        k: grid.k(),
        passes: trace.passes,
        fixpoint_reached: trace.fixpoint_reached,
        steps: steps
            .iter()
            .map(|&i| {
                let s = &trace.steps[i];
                StepJson {
                    axis: s.axis.map(|a| a.number()),
                    set: grid.coords_of(&s.set),
                    weight: s.weight,
                    border_size: s.border_size,
                }
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("trace serialises")
}

#[derive(Serialize)]
struct SolveJson {
    k: usize,
    gamma_p: Option<usize>,
    witness: Option<Vec<CubicCoord>>,
    sets_tested: u64,
    elapsed_ms: u128,
    certified_lower_bound: usize,
}

pub fn solve_json(grid: &TriGrid, r: &SolveResult) -> String {
    let doc = SolveJson {
        k: r.k,
        gamma_p: r.gamma_p,
        witness: r.witness.as_ref().map(|w| grid.coords_of(w)),
        sets_tested: r.sets_tested,
        elapsed_ms: r.elapsed.as_millis(),
        certified_lower_bound: r.certified_lower_bound,
    };
    serde_json::to_string(&doc).expect("result serialises")
}

/// What to emphasise in a drawing.
#[derive(Clone, Debug, Default)]
pub struct Decoration {
    /// Drawn as red squares.
    pub dominators: Option<VertexSet>,
    /// Drawn with a blue outline.
    pub marked: Option<VertexSet>,
    /// Fill shade per vertex: round `r >= 1` gets shade `(r - 1) % 8`, darker first.
    pub rounds: Option<Vec<Option<usize>>>,
    /// Filled uniformly (used for plain sets such as shift snapshots).
    pub filled: Option<VertexSet>,
}

impl Decoration {
    pub fn from_propagation(s: Option<&VertexSet>, state: &MonitorState) -> Self {
        Decoration {
            dominators: s.cloned(),
            marked: Some(state.initial.clone()),
            rounds: Some(state.round_of()),
            filled: None,
        }
    }

    fn shade(&self, v: usize) -> Option<usize> {
        match self.rounds.as_ref()?[v]? {
            0 => None,
            r => Some((r - 1) % SHADES),
        }
    }

    fn is_dominator(&self, v: usize) -> bool {
        self.dominators.as_ref().is_some_and(|s| s.contains(v))
    }

    fn is_marked(&self, v: usize) -> bool {
        self.marked.as_ref().is_some_and(|s| s.contains(v))
    }

    fn is_filled(&self, v: usize) -> bool {
        self.filled.as_ref().is_some_and(|s| s.contains(v))
    }
}

pub fn dot(grid: &TriGrid, deco: &Decoration, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  layout=neato;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=8, width=0.45, fixedsize=true];").unwrap();
    for (v, c) in grid.vertices().iter().enumerate() {
        let (sx, sy) = screen_position(c);
        let mut attrs = vec![
            format!("label=\"{},{},{}\"", c.x, c.y, c.z),
            format!("pos=\"{:.3},{:.3}!\"", sx, sy),
        ];
        if deco.is_dominator(v) {
            attrs.push("shape=square".into());
            attrs.push("color=red".into());
        } else if deco.is_marked(v) {
            attrs.push("color=blue".into());
        }
        if let Some(s) = deco.shade(v) {
            attrs.push("style=filled".into());
            attrs.push(format!("fillcolor=gray{}", 45 + 7 * s));
        } else if deco.is_filled(v) {
            attrs.push("style=filled".into());
            attrs.push("fillcolor=lightblue".into());
        }
        writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
    }
    for (a, b) in grid.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub const TIKZ_PREAMBLE: &str = "\\documentclass[tikz]{standalone}\n\\begin{document}\n";
pub const TIKZ_POSTAMBLE: &str = "\\end{document}\n";

/// A single `tikzpicture` environment.
pub fn tikz_picture(grid: &TriGrid, deco: &Decoration) -> String {
    let mut out = String::new();
    out.push_str(
        "\\begin{tikzpicture}[scale=1.2, vertex/.style={circle, draw, inner sep=0pt, minimum size=15pt, font=\\tiny}]\n",
    );
    for (v, c) in grid.vertices().iter().enumerate() {
        let (sx, sy) = screen_position(c);
        let mut style = vec!["vertex".to_string()];
        if deco.is_dominator(v) {
            style.push("rectangle, draw=red, thick".into());
        } else if deco.is_marked(v) {
            style.push("draw=blue, thick".into());
        }
        if let Some(s) = deco.shade(v) {
            style.push(format!("fill=black!{}", 55 - 6 * s));
        } else if deco.is_filled(v) {
            style.push("fill=blue!25".into());
        }
        writeln!(
            out,
            "  \\node[{}] (v{v}) at ({:.3},{:.3}) {{{},{},{}}};",
            style.join(", "),
            sx,
            sy,
            c.x,
            c.y,
            c.z
        )
        .unwrap();
    }
    for (a, b) in grid.edges() {
        writeln!(out, "  \\draw (v{a}) -- (v{b});").unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// A compilable standalone document with one picture.
pub fn tikz(grid: &TriGrid, deco: &Decoration) -> String {
    format!("{TIKZ_PREAMBLE}{}{TIKZ_POSTAMBLE}", tikz_picture(grid, deco))
}
