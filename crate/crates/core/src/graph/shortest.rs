use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::rational::{self, Rational};

use super::{PathSeq, SubdividedGraph, VertexId, Weighting};

/// Exact single-source distances; `None` marks unreachable vertices.
pub fn distances_from(
    g: &SubdividedGraph,
    w: &Weighting,
    source: VertexId,
) -> Vec<Option<Rational>> {
    let adj = g.adjacency();
    let mut dist: Vec<Option<Rational>> = vec![None; g.vertex_count()];
    let mut done = vec![false; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(rational::zero());
    heap.push(Reverse((rational::zero(), source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, s) in &adj[u] {
            let nd = &d + w.get(s);
            if dist[v].as_ref().is_none_or(|cur| nd < *cur) {
                dist[v] = Some(nd.clone());
                heap.push(Reverse((nd, v)));
            }
        }
    }
    dist
}

/// Exact distance between `u` and `v`; `None` when they are disconnected.
pub fn shortest_path_length(
    g: &SubdividedGraph,
    w: &Weighting,
    u: VertexId,
    v: VertexId,
) -> Option<Rational> {
    if u == v {
        return Some(rational::zero());
    }
    distances_from(g, w, u).swap_remove(v)
}

pub fn path_length(p: &PathSeq, w: &Weighting) -> Rational {
    p.segments().iter().map(|&s| w.get(s)).sum()
}
