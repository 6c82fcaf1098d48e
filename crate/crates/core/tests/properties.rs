use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use powerdom::construction::{construct_pds, triangle_set};
use powerdom::experiments::staircase_closure;
use powerdom::propagation::{
    close_neighborhood, is_power_dominating, propagate, propagate_from_monitored, radius_of, Closure, EventKind, Radius,
};
use powerdom::shift::{border_size, is_staircase, shift, shift_to_fixpoint, weight};
use powerdom::symmetry::hexagon_automorphisms;
use powerdom::{Axis, CubicCoord, TriGrid, VertexSet};

fn subset_strategy(k_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (usize, Vec<bool>)> {
    k_range.prop_flat_map(|k| {
        let n = 3 * k * k - 3 * k + 1;
        (Just(k), proptest::collection::vec(any::<bool>(), n))
    })
}

fn to_set(mask: &[bool]) -> VertexSet {
    VertexSet::from_indices(mask.len(), mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
}

/// The twelve symmetries of the hexagon written in centred cube coordinates
/// `q = x - (k-1)`, `r = (k-1) - y`, `s = z - (k-1)` with `q + r + s = 0`.
fn coordinate_symmetries(grid: &TriGrid) -> BTreeSet<Vec<usize>> {
    let m = grid.k() as i32 - 1;
    let mut out = BTreeSet::new();
    for rot in 0..6 {
        for refl in [false, true] {
            let perm = (0..grid.len())
                .map(|v| {
                    let c = grid.coord(v);
                    let (mut q, mut r, mut s) = (c.x - m, m - c.y, c.z - m);
                    if refl {
                        std::mem::swap(&mut r, &mut s);
                    }
                    for _ in 0..rot {
                        (q, r, s) = (-r, -s, -q);
                    }
                    grid.index_of(&CubicCoord::new(q + m, m - r, s + m)).unwrap()
                })
                .collect();
            out.insert(perm);
        }
    }
    out
}

#[test]
fn grid_invariants_up_to_12() {
    for k in 1..=12 {
        let g = TriGrid::new(k).unwrap();
        assert_eq!(g.len(), 3 * k * k - 3 * k + 1);
        let mut degs = [0usize; 7];
        for v in 0..g.len() {
            let nbrs = g.neighbors(v).unwrap();
            assert!(!nbrs.contains(&v));
            for &u in nbrs {
                assert!(g.adj(u).contains(&v));
            }
            degs[nbrs.len()] += 1;
        }
        if k >= 2 {
            assert_eq!(degs[3], 6);
            assert_eq!(degs[4], 6 * (k - 2));
            assert_eq!(degs[6], g.len() - 6 - 6 * (k - 2));
            assert_eq!(degs[3] + degs[4] + degs[6], g.len());
        }
        for axis in Axis::ALL {
            let mut seen = vec![0; g.len()];
            for i in 0..=g.max_coord() {
                for v in g.line(axis, i).unwrap().iter() {
                    seen[v] += 1;
                }
            }
            assert!(seen.iter().all(|&c| c == 1), "lines of axis {axis} partition V");
        }
    }
}

#[test]
fn searched_automorphisms_match_coordinate_symmetries() {
    for k in 2..=7 {
        let g = TriGrid::new(k).unwrap();
        let searched: BTreeSet<Vec<usize>> = hexagon_automorphisms(&g).into_iter().collect();
        assert_eq!(searched, coordinate_symmetries(&g), "k={k}");
    }
}

/// One forcing at a time, choosing uniformly among all currently valid forcings.
fn random_schedule(grid: &TriGrid, start: &VertexSet, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut m = start.clone();
    loop {
        let mut options = Vec::new();
        for v in m.iter() {
            let out: Vec<usize> = grid.adj(v).iter().copied().filter(|&u| !m.contains(u)).collect();
            if out.len() == 1 {
                options.push(out[0]);
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

#[test]
fn order_invariance_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 2..=6 {
        let g = TriGrid::new(k).unwrap();
        for _ in 0..5 {
            let size = rng.gen_range(1..=3);
            let s = VertexSet::from_indices(g.len(), (0..size).map(|_| rng.gen_range(0..g.len())));
            let expected = propagate(&g, &s).unwrap().monitored;
            let start = close_neighborhood(&g, &s).unwrap();
            for _ in 0..20 {
                assert_eq!(random_schedule(&g, &start, &mut rng), expected);
            }
        }
    }
}

#[test]
fn triangle_set_monitors_everything() {
    for k in 1..=20 {
        let g = TriGrid::new(k).unwrap();
        assert!(propagate_from_monitored(&g, &triangle_set(&g)).unwrap().is_complete());
    }
}

#[test]
fn triangle_radius_on_t3_is_seven() {
    let g = TriGrid::new(3).unwrap();
    let st = propagate_from_monitored(&g, &triangle_set(&g)).unwrap();
    assert_eq!(radius_of(&st), Radius::Rounds(7));
}

/// Per-line oracle: sort each line's vertices by the successor coordinate
/// and keep as many as `A` has on that line.
fn shift_oracle(grid: &TriGrid, a: &VertexSet, axis: Axis) -> VertexSet {
    let mut out = grid.empty_set();
    for i in 0..=grid.max_coord() {
        let mut line: Vec<usize> = (0..grid.len()).filter(|&v| grid.coord(v).get(axis) == i).collect();
        let count = line.iter().filter(|&&v| a.contains(v)).count();
        line.sort_by_key(|&v| grid.coord(v).get(axis.next()));
        for &v in &line[..count] {
            out.insert(v);
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_matches_oracle((k, mask) in subset_strategy(1..=6), j in 1u8..=3) {
        let g = TriGrid::new(k).unwrap();
        let a = to_set(&mask);
        let axis = Axis::from_number(j).unwrap();
        let b = shift(&g, &a, axis);
        prop_assert_eq!(&b, &shift_oracle(&g, &a, axis));
        prop_assert_eq!(b.len(), a.len());
        prop_assert!(border_size(&g, &b) <= border_size(&g, &a));
        if b == a {
            prop_assert_eq!(weight(&g, &b), weight(&g, &a));
        } else {
            prop_assert!(weight(&g, &b) < weight(&g, &a));
        }
    }

    #[test]
    fn staircase_predicates_agree((k, mask) in subset_strategy(1..=5)) {
        let g = TriGrid::new(k).unwrap();
        let a = to_set(&mask);
        prop_assert_eq!(is_staircase(&g, &a), brute_staircase(&g, &a));
        let (fix, trace) = shift_to_fixpoint(&g, &a);
        prop_assert!(trace.fixpoint_reached);
        prop_assert!(brute_staircase(&g, &fix));
        prop_assert_eq!(trace.final_set(), &fix);
    }

    #[test]
    fn staircases_are_shift_fixpoints((k, mask) in subset_strategy(1..=6)) {
        let g = TriGrid::new(k).unwrap();
        let sparse: Vec<bool> = mask.iter().enumerate().map(|(i, &b)| b && i % 7 == 0).collect();
        let stair = staircase_closure(&g, &to_set(&sparse));
        prop_assert!(brute_staircase(&g, &stair));
        for axis in Axis::ALL {
            prop_assert_eq!(shift(&g, &stair, axis), stair.clone());
        }
    }

    #[test]
    fn propagation_trace_is_consistent((k, mask) in subset_strategy(2..=6)) {
        let g = TriGrid::new(k).unwrap();
        let sparse: Vec<bool> = mask.iter().enumerate().map(|(i, &b)| b && i % 5 == 0).collect();
        let s = to_set(&sparse);
        let st = propagate(&g, &s).unwrap();

        // monotone prefixes and valid forcings
        let mut m = st.initial.clone();
        let mut last_round = 0;
        for e in st.trace.iter().filter(|e| e.kind == EventKind::Forced) {
            prop_assert!(e.round >= last_round);
            last_round = e.round;
            let src = e.source.unwrap();
            let out: Vec<usize> = g.adj(src).iter().copied().filter(|&u| !m.contains(u)).collect();
            prop_assert_eq!(out, vec![e.target]);
            let before = m.clone();
            m.insert(e.target);
            prop_assert!(before.is_subset(&m));
        }
        prop_assert_eq!(&m, &st.monitored);

        // fast closure agrees
        prop_assert_eq!(
            is_power_dominating(&g, &s).unwrap(),
            st.is_complete()
        );
        prop_assert_eq!(Closure::new(&g).run(&s.to_vec()), st.monitored.len());

        // idempotence at the fixpoint
        let again = propagate_from_monitored(&g, &st.monitored).unwrap();
        prop_assert_eq!(again.rounds, 0);
        prop_assert_eq!(again.monitored, st.monitored);
    }
}

#[test]
fn construction_dominates_up_to_40() {
    for k in 1..=40 {
        let g = TriGrid::new(k).unwrap();
        assert!(is_power_dominating(&g, &construct_pds(&g)).unwrap(), "k={k}");
    }
}
