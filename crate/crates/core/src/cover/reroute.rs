use std::collections::{BTreeSet, VecDeque};

use super::types::{covers_all_segments, is_retracted, Cover};
use crate::error::{Error, Result};
use crate::graph::{PathPool, SubdividedGraph};

/// Default cap on the number of covers visited by a rerouting search.
pub const DEFAULT_REROUTE_BUDGET: usize = 1_000_000;

/// Covers reached from `c` by swapping one path for another pool path with
/// the same endpoints, keeping coverage and retractedness. Sorted.
pub fn reroutings(c: &Cover, pool: &PathPool, g: &SubdividedGraph) -> Vec<Cover> {
    let mut out = BTreeSet::new();
    for &p in c.ids() {
        let (u, v) = pool.get(p).endpoints();
        for &q in pool.with_endpoints(u, v) {
            if q == p || c.contains(q) {
                continue;
            }
            let next = c.replaced(p, q);
            if covers_all_segments(&next, pool, g) && is_retracted(&next, pool, g) {
                out.insert(next);
            }
        }
    }
    out.into_iter().collect()
}

/// Breadth-first search over repeated reroutings; false as soon as a
/// strictly smaller cover turns up.
pub fn is_minimal_in_reroutings(
    c: &Cover,
    pool: &PathPool,
    g: &SubdividedGraph,
    budget: usize,
) -> Result<bool> {
    let mut visited = BTreeSet::from([c.clone()]);
    let mut queue = VecDeque::from([c.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in reroutings(&x, pool, g) {
            if visited.contains(&y) {
                continue;
            }
            if y < *c {
                return Ok(false);
            }
            if visited.len() >= budget {
                return Err(Error::RerouteBudget { budget });
            }
            visited.insert(y.clone());
            queue.push_back(y);
        }
    }
    Ok(true)
}
