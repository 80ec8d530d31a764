use std::collections::BTreeMap;

use super::simplex::{solve_feasibility, FeasibilityResult};
use crate::cover::Cover;
use crate::error::Result;
use crate::graph::{
    enumerate_paths_between, path_length, shortest_path_length, PathPool, PathSeq, SegmentId,
    SubdividedGraph, Weighting,
};

/// Homogeneous constraints `Σ coef·w ≤ 0` over one variable per segment,
/// each variable bounded below by 1. The objective (not needed for the
/// verdict) is to minimize the total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProgram {
    num_vars: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl LpProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            rows: Vec::new(),
        }
    }

    /// Adds `Σ coef·w ≤ 0`. Zero coefficients are dropped and repeated
    /// variables merged; indices must be below `num_vars`.
    pub fn add_row(&mut self, coeffs: impl IntoIterator<Item = (usize, i64)>) {
        let mut merged = BTreeMap::new();
        for (v, c) in coeffs {
            assert!(v < self.num_vars, "variable {v} out of range");
            *merged.entry(v).or_insert(0) += c;
        }
        self.rows
            .push(merged.into_iter().filter(|&(_, c)| c != 0).collect());
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.rows
    }

    pub fn constraint_count(&self) -> usize {
        self.rows.len()
    }

    /// Does `w` meet every bound and constraint exactly?
    pub fn is_satisfied_by(&self, w: &Weighting) -> bool {
        use num_traits::{One, Signed};
        w.len() == self.num_vars
            && w.as_slice()
                .iter()
                .all(|x| *x >= crate::rational::Rational::one())
            && self.rows.iter().all(|row| {
                let lhs = row.iter().fold(crate::rational::zero(), |acc, &(v, c)| {
                    acc + w.get(v) * crate::rational::int(c)
                });
                !lhs.is_positive()
            })
    }
}

/// One row per (path g, competitor p with the same endpoints, p ≠ g):
/// `len(g) - len(p) ≤ 0`.
pub fn build_feasibility_program(c: &Cover, pool: &PathPool, g: &SubdividedGraph) -> LpProgram {
    let paths: Vec<&PathSeq> = c.resolve(pool);
    program_for_paths(g.segment_count(), &paths, |p| {
        let (u, v) = p.endpoints();
        pool.with_endpoints(u, v)
            .iter()
            .map(|&id| pool.get(id))
            .cloned()
            .collect()
    })
}

/// Generic form: `competitors(g)` must list every simple path sharing the
/// endpoints of `g` (it may include `g` itself, which is skipped).
pub fn program_for_paths(
    num_vars: usize,
    paths: &[&PathSeq],
    mut competitors: impl FnMut(&PathSeq) -> Vec<PathSeq>,
) -> LpProgram {
    let mut lp = LpProgram::new(num_vars);
    for &g in paths {
        for p in competitors(g) {
            if p == *g {
                continue;
            }
            let row = segment_counts(g.segments(), 1).chain(segment_counts(p.segments(), -1));
            lp.add_row(row);
        }
    }
    lp
}

fn segment_counts(segments: &[SegmentId], sign: i64) -> impl Iterator<Item = (usize, i64)> + '_ {
    segments.iter().map(move |&s| (s, sign))
}

/// Builds and solves the program for a cover.
pub fn cover_feasibility(
    c: &Cover,
    pool: &PathPool,
    g: &SubdividedGraph,
) -> Result<FeasibilityResult> {
    solve_feasibility(&build_feasibility_program(c, pool, g))
}

/// Builds and solves the program for arbitrary paths, with every simple
/// path between the same endpoints as a competitor. A witness is checked
/// against exact shortest paths before it is returned.
pub fn paths_feasibility(
    g: &SubdividedGraph,
    paths: &[&PathSeq],
    pool_cap: usize,
) -> Result<FeasibilityResult> {
    let mut err = None;
    let lp = program_for_paths(g.segment_count(), paths, |p| {
        let (u, v) = p.endpoints();
        enumerate_paths_between(g, u, v, pool_cap).unwrap_or_else(|e| {
            err = Some(e);
            Vec::new()
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    let r = solve_feasibility(&lp)?;
    if let Some(w) = r.witness() {
        assert!(
            check_fixed_weights(paths, w, g),
            "simplex witness fails the shortest-path check"
        );
    }
    Ok(r)
}

/// True iff every path is a shortest path between its endpoints under `w`.
pub fn check_fixed_weights(paths: &[&PathSeq], w: &Weighting, g: &SubdividedGraph) -> bool {
    paths.iter().all(|p| {
        let (u, v) = p.endpoints();
        shortest_path_length(g, w, u, v).is_some_and(|d| d == path_length(p, w))
    })
}
