//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p powerdom --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use powerdom::cli;
use powerdom::construction::{construct_pds, construct_pds_coords, target_size, triangle_set};
use powerdom::experiments::{random_pds, rng_for, sample_cycled, sample_subset, staircase_closure};
use powerdom::propagation::{
    close_neighborhood, is_power_dominating, propagate, propagate_from_monitored, radius_of, Radius,
};
use powerdom::render;
use powerdom::shift::{
    border_size, claim1_check, claim2_check, is_staircase, shift, shift_to_fixpoint, weight, Claim2Outcome,
};
use powerdom::{Axis, TriGrid, VertexSet};

const SEED: u64 = 0;
const SHIFT_SAMPLES: usize = 10_000;
const SCHEDULES: usize = 100;
const INSTANCES_PER_K: usize = 10;

type Check = fn() -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn solve_json(args: &[&str]) -> (Vec<serde_json::Value>, Duration, i32) {
    let start = Instant::now();
    let out = cli::run(
        ["powerdom", "solve", "--format", "json"]
            .into_iter()
            .chain(args.iter().copied()),
    );
    let elapsed = start.elapsed();
    let rows = out.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    (rows, elapsed, out.code)
}

fn criterion_1() -> Verdict {
    let mut problems = Vec::new();
    let (rows, plain_time, code) = solve_json(&["--k", "1..7"]);
    if code != 0 || rows.len() != 7 {
        problems.push(format!("plain solve exit {code}, {} rows", rows.len()));
    }
    for row in &rows {
        let k = row["k"].as_u64().unwrap() as usize;
        if row["gamma_p"] != target_size(k) || row["certified_lower_bound"] != target_size(k) {
            problems.push(format!("k={k}: {row}"));
        }
    }
    if plain_time > Duration::from_secs(120) {
        problems.push(format!("k=1..7 took {plain_time:?}"));
    }

    let (rows, sym_time, code) = solve_json(&["--k", "8..12", "--symmetry"]);
    if code != 0 || rows.len() != 5 {
        problems.push(format!("symmetric solve exit {code}, {} rows", rows.len()));
    }
    for row in &rows {
        let k = row["k"].as_u64().unwrap() as usize;
        let grid = TriGrid::new(k).unwrap();
        let witness: serde_json::Value = serde_json::from_str(&render::set_json(&grid, &construct_pds(&grid))).unwrap();
        if row["gamma_p"] != target_size(k)
            || row["certified_lower_bound"] != target_size(k)
            || row["witness"] != witness
        {
            problems.push(format!("k={k}: {row}"));
        }
    }
    if sym_time > Duration::from_secs(30 * 60) {
        problems.push(format!("k=8..12 took {sym_time:?}"));
    }
    verdict(
        problems.is_empty(),
        format!(
            "gamma_P = ceil(k/3) for k=1..7 ({:.2}s, unreduced) and k=8..12 ({:.2}s, symmetric); {}",
            plain_time.as_secs_f64(),
            sym_time.as_secs_f64(),
            if problems.is_empty() {
                "ok".into()
            } else {
                problems.join("; ")
            }
        ),
    )
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 1..=60 {
        let grid = TriGrid::new(k).unwrap();
        let coords = construct_pds_coords(k);
        let s = construct_pds(&grid);
        let ok = coords.len() == target_size(k)
            && s.len() == target_size(k)
            && coords.iter().all(|c| c.is_valid_for(k))
            && is_power_dominating(&grid, &s).unwrap();
        if !ok {
            bad.push(k);
        }
    }
    let t = start.elapsed();
    verdict(
        bad.is_empty() && t < Duration::from_secs(60),
        format!(
            "construction size ceil(k/3) and dominating for k=1..60 in {:.2}s; failures {bad:?}",
            t.as_secs_f64()
        ),
    )
}

fn criterion_3() -> Verdict {
    let mut bad = Vec::new();
    for k in 1..=60 {
        let grid = TriGrid::new(k).unwrap();
        if !propagate_from_monitored(&grid, &triangle_set(&grid))
            .unwrap()
            .is_complete()
        {
            bad.push(k);
        }
    }
    let g3 = TriGrid::new(3).unwrap();
    let radius = radius_of(&propagate_from_monitored(&g3, &triangle_set(&g3)).unwrap());
    verdict(
        bad.is_empty() && radius == Radius::Rounds(3),
        format!(
            "triangle monitors T_k for k=1..60 (failures {bad:?}); k=3 radius expected 3 rounds, observed {radius:?}"
        ),
    )
}

fn criterion_4() -> Verdict {
    let mut violations = 0;
    let mut cases = 0;
    for k in 2..=6 {
        let grid = TriGrid::new(k).unwrap();
        for axis in Axis::ALL {
            let mut rng = rng_for(SEED, k, 100 + axis.number() as u64);
            for i in 0..SHIFT_SAMPLES {
                let a = sample_cycled(&grid, i, &mut rng);
                cases += 1;
                if border_size(&grid, &shift(&grid, &a, axis)) > border_size(&grid, &a) {
                    violations += 1;
                }
            }
        }
    }
    verdict(
        violations == 0,
        format!("|B_shift(A)| <= |B_A|: {cases} cases, {violations} violations"),
    )
}

fn criterion_5() -> Verdict {
    let mut violations = 0;
    let mut cases = 0;
    let mut max_passes = 0;
    for k in 2..=6 {
        let grid = TriGrid::new(k).unwrap();
        let mut rng = rng_for(SEED, k, 200);
        for i in 0..SHIFT_SAMPLES {
            let a = sample_cycled(&grid, i, &mut rng);
            let (fix, trace) = shift_to_fixpoint(&grid, &a);
            cases += 1;
            max_passes = max_passes.max(trace.passes);
            let decreasing = trace.steps.windows(2).all(|w| w[1].weight < w[0].weight);
            let ok = trace.fixpoint_reached
                && trace.passes as u64 <= weight(&grid, &a) + 1
                && decreasing
                && is_staircase(&grid, &fix)
                && Axis::ALL.iter().all(|&j| shift(&grid, &fix, j) == fix);
            violations += usize::from(!ok);
        }
        let mut rng = rng_for(SEED, k, 201);
        for _ in 0..SHIFT_SAMPLES {
            let stair = staircase_closure(&grid, &sample_subset(&grid, 0.05, &mut rng));
            cases += 1;
            let ok = is_staircase(&grid, &stair) && Axis::ALL.iter().all(|&j| shift(&grid, &stair, j) == stair);
            violations += usize::from(!ok);
        }
    }
    verdict(
        violations == 0,
        format!("termination, strict weight decrease, staircase fixpoints: {cases} cases, {violations} violations, max passes {max_passes}"),
    )
}

fn criterion_6() -> Verdict {
    let mut violations = Vec::new();
    let mut cases = 0;
    for k in 4..=30 {
        let grid = TriGrid::new(k).unwrap();
        let r = claim1_check(&grid, &construct_pds(&grid)).unwrap();
        cases += 1;
        if !r.holds {
            violations.push(format!("construction k={k}: {r:?}"));
        }
    }
    for k in 4..=6 {
        let grid = TriGrid::new(k).unwrap();
        let mut rng = rng_for(SEED, k, 300);
        for _ in 0..100 {
            let s = random_pds(&grid, &mut rng);
            let r = claim1_check(&grid, &s).unwrap();
            cases += 1;
            if !r.holds {
                violations.push(format!("random k={k}: {r:?}"));
            }
        }
    }
    verdict(
        violations.is_empty(),
        format!("|B_M[t]| <= 6|S| on every prefix: {cases} sets, violations {violations:?}"),
    )
}

fn criterion_7() -> Verdict {
    let mut violations = Vec::new();
    for k in 4..=30 {
        let grid = TriGrid::new(k).unwrap();
        match claim2_check(&grid, &construct_pds(&grid)).unwrap() {
            Claim2Outcome::Checked(r) if r.holds => {}
            other => violations.push(format!("k={k}: {other:?}")),
        }
    }
    verdict(
        violations.is_empty(),
        format!("2k-1 <= |B_M*| <= |B_M| and every v1-line split, k=4..30: violations {violations:?}"),
    )
}

/// One forcing at a time, in random order, straight from the definition.
fn random_schedule(grid: &TriGrid, start: &VertexSet, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut m = start.clone();
    loop {
        let mut options = Vec::new();
        for v in m.iter() {
            let mut out = grid.adj(v).iter().copied().filter(|&u| !m.contains(u));
            if let (Some(u), None) = (out.next(), out.next()) {
                options.push(u);
            }
        }
        match options.choose(rng) {
            Some(&u) => {
                m.insert(u);
            }
            None => return m,
        }
    }
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut runs = 0;
    let mut mismatches = 0;
    for k in 2..=5 {
        let grid = TriGrid::new(k).unwrap();
        for _ in 0..INSTANCES_PER_K {
            let size = rng.gen_range(1..=4);
            let s = VertexSet::from_indices(grid.len(), (0..size).map(|_| rng.gen_range(0..grid.len())));
            let expected = propagate(&grid, &s).unwrap().monitored;
            let start = close_neighborhood(&grid, &s).unwrap();
            for _ in 0..SCHEDULES {
                runs += 1;
                if random_schedule(&grid, &start, &mut rng) != expected {
                    mismatches += 1;
                }
            }
        }
    }
    verdict(
        mismatches == 0,
        format!("{runs} random schedules, {mismatches} differ from the round engine"),
    )
}

fn strip_elapsed(text: &str) -> String {
    text.lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn criterion_9() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_powerdom");
    let invocations: &[&[&str]] = &[
        &["gen", "--k", "5", "--format", "json"],
        &["gen", "--k", "5", "--format", "dot"],
        &["gen", "--k", "5", "--format", "tikz"],
        &["construct", "--k", "9", "--verify"],
        &["construct", "--k", "7", "--format", "tikz"],
        &["propagate", "--k", "6"],
        &["propagate", "--k", "4", "--triangle", "--format", "dot"],
        &["radius", "--k", "8"],
        &["shift-demo", "--k", "5", "--seed", "3"],
        &["shift-demo", "--k", "4", "--seed", "1", "--format", "tikz"],
        &["experiments", "--k", "2..4", "--seed", "5", "--samples", "200"],
        &["solve", "--k", "1..6", "--format", "json"],
    ];
    let mut differing = Vec::new();
    for args in invocations {
        let run = || {
            let out = Command::new(bin).args(*args).output().expect("binary runs");
            let text = String::from_utf8(out.stdout).unwrap();
            let text = if args[0] == "solve" { strip_elapsed(&text) } else { text };
            (out.status.code(), text)
        };
        let (a, b) = (run(), run());
        if a != b || a.0 != Some(0) || a.1.is_empty() {
            differing.push(args.join(" "));
        }
    }
    verdict(
        differing.is_empty(),
        format!(
            "{} invocations run twice, byte-identical output (solve: elapsed_ms excluded); differing {differing:?}",
            invocations.len()
        ),
    )
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("1 exact gamma_P = ceil(k/3)", criterion_1),
        ("2 construction upper bound", criterion_2),
        ("3 triangle propagation", criterion_3),
        ("4 shifts never grow borders", criterion_4),
        ("5 shifting process", criterion_5),
        ("6 border bound 6|S|", criterion_6),
        ("7 half-prefix border bound", criterion_7),
        ("8 order invariance", criterion_8),
        ("9 deterministic output", criterion_9),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let v = check();
        failed += usize::from(!v.pass);
        println!(
            "[{}] criterion {name}: {} ({:.1}s)",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
