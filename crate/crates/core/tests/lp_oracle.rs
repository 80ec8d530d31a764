mod common;

use common::{brute_force_geodesic_sets, small_multigraphs};
use geocover::graph::{enumerate_simple_paths, two_subdivision, PathSeq, DEFAULT_POOL_CAP};
use geocover::lp::{paths_feasibility, solve_feasibility, LpProgram};
use geocover::rational::ratio;
use geocover::Weighting;
use proptest::prelude::*;

#[test]
fn every_small_integer_geodesic_set_is_lp_feasible() {
    // If the linear program rejected any of these sets, the brute force would
    // have exhibited a weighting it missed; the converse direction is the
    // contrapositive of the same statement.
    let graphs = small_multigraphs(4, 5);
    assert_eq!(graphs.len(), 207);
    let mut checked = 0;
    for g in &graphs {
        let sub = two_subdivision(g);
        let pool = enumerate_simple_paths(&sub, DEFAULT_POOL_CAP).unwrap();
        for set in brute_force_geodesic_sets(&sub, &pool, 4) {
            let refs: Vec<&PathSeq> = set.iter().map(|&i| pool.get(i)).collect();
            let r = paths_feasibility(&sub, &refs, DEFAULT_POOL_CAP).unwrap();
            assert!(r.is_feasible(), "{:?}: {set:?}", g.edges());
            checked += 1;
        }
    }
    assert!(checked > graphs.len());
}

#[test]
fn all_paths_of_a_single_edge_are_geodesic_together() {
    let g = geocover::graph::build_standard("path", &[1]).unwrap();
    let sub = two_subdivision(&g);
    let pool = enumerate_simple_paths(&sub, DEFAULT_POOL_CAP).unwrap();
    let sets = brute_force_geodesic_sets(&sub, &pool, 4);
    assert_eq!(sets, vec![(0..pool.len()).collect()]);
}

fn program() -> impl Strategy<Value = LpProgram> {
    (2usize..6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec((0..n, -2i64..=2), 1..5), 0..7).prop_map(
            move |rows| {
                let mut lp = LpProgram::new(n);
                for r in rows {
                    lp.add_row(r);
                }
                lp
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witnesses_satisfy_their_program(lp in program()) {
        if let Some(w) = solve_feasibility(&lp).unwrap().witness() {
            prop_assert!(lp.is_satisfied_by(w));
            prop_assert!(lp.is_satisfied_by(&w.scaled(&ratio(7, 3))));
            prop_assert!(lp.is_satisfied_by(&w.normalized()));
        }
    }

    #[test]
    fn verdict_ignores_row_order(lp in program(), seed in any::<u64>()) {
        let mut rows = lp.rows().to_vec();
        let k = rows.len().max(1);
        rows.rotate_left((seed as usize) % k);
        rows.reverse();
        let mut shuffled = LpProgram::new(lp.num_vars());
        for r in rows {
            shuffled.add_row(r);
        }
        prop_assert_eq!(
            solve_feasibility(&lp).unwrap().is_feasible(),
            solve_feasibility(&shuffled).unwrap().is_feasible()
        );
    }

    #[test]
    fn verdict_ignores_variable_names(lp in program(), shift in 0usize..6) {
        let n = lp.num_vars();
        let rename = |v: usize| (v + shift) % n;
        let mut renamed = LpProgram::new(n);
        for r in lp.rows() {
            renamed.add_row(r.iter().map(|&(v, c)| (rename(v), c)));
        }
        let a = solve_feasibility(&lp).unwrap();
        let b = solve_feasibility(&renamed).unwrap();
        prop_assert_eq!(a.is_feasible(), b.is_feasible());
        if let Some(w) = a.witness() {
            let moved: Vec<_> = (0..n).map(|v| w.get((v + n - shift % n) % n).clone()).collect();
            prop_assert!(renamed.is_satisfied_by(&Weighting::new(moved).unwrap()));
        }
    }

    #[test]
    fn scaling_a_row_keeps_the_verdict(lp in program(), factor in 1i64..4) {
        let mut scaled = LpProgram::new(lp.num_vars());
        for r in lp.rows() {
            scaled.add_row(r.iter().map(|&(v, c)| (v, c * factor)));
        }
        prop_assert_eq!(
            solve_feasibility(&lp).unwrap().is_feasible(),
            solve_feasibility(&scaled).unwrap().is_feasible()
        );
    }
}
