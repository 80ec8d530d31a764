//! Independent oracles shared by the integration tests. None of them call
//! into the search, symmetry or simplex code they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use geocover::graph::{PathPool, SubdividedGraph};
use geocover::rational::Rational;
use geocover::{Multigraph, PathSeq, Weighting};
use itertools::Itertools;

/// Every multigraph (loops and parallel edges allowed) with at most
/// `max_vertices` vertices, none isolated, and 1..=`max_edges` edges, one per
/// isomorphism class.
pub fn small_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let mut seen = HashSet::new();
        for m in 1..=max_edges {
            for edges in slots.iter().copied().combinations_with_replacement(m) {
                let mut touched = vec![false; n];
                for &(a, b) in &edges {
                    touched[a] = true;
                    touched[b] = true;
                }
                if touched.contains(&false) {
                    continue;
                }
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut e: Vec<(usize, usize)> = edges
                            .iter()
                            .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                            .collect();
                        e.sort_unstable();
                        e
                    })
                    .min()
                    .unwrap();
                if seen.insert(canon.clone()) {
                    let names = (0..n).map(|i| format!("v{i}")).collect();
                    out.push(Multigraph::from_parts(names, canon).unwrap());
                }
            }
        }
    }
    out
}

/// Number of simple paths with at least one edge, counted as directed
/// segment sequences by plain recursion and halved.
pub fn dfs_path_count(g: &SubdividedGraph) -> usize {
    fn walk(adj: &[Vec<(usize, usize)>], v: usize, on: &mut [bool]) -> usize {
        let mut total = 0;
        for &(w, _) in &adj[v] {
            if !on[w] {
                on[w] = true;
                total += 1 + walk(adj, w, on);
                on[w] = false;
            }
        }
        total
    }
    let adj: Vec<Vec<(usize, usize)>> = g.adjacency().to_vec();
    let mut on = vec![false; adj.len()];
    let mut directed = 0;
    for v in 0..adj.len() {
        on[v] = true;
        directed += walk(&adj, v, &mut on);
        on[v] = false;
    }
    assert_eq!(directed % 2, 0);
    directed / 2
}

/// Order of the automorphism group by trying every vertex permutation; each
/// permutation preserving edge multiplicities extends to `Π mult!` edge
/// bijections.
pub fn brute_force_group_order(g: &Multigraph) -> usize {
    let n = g.vertex_count();
    let mut mult = vec![vec![0usize; n]; n];
    for &(a, b) in g.edges() {
        mult[a][b] += 1;
        if a != b {
            mult[b][a] += 1;
        }
    }
    let edge_choices: usize = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| (1..=mult[i][j]).product::<usize>())
        .product();
    let fixing = (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|i| (0..n).all(|j| mult[i][j] == mult[p[i]][p[j]])))
        .count();
    fixing * edge_choices
}

/// Maximal sets of pool paths that are simultaneously shortest paths under
/// some weighting with every segment weight in `1..=max_weight`, found by
/// trying all of them.
pub fn brute_force_geodesic_sets(
    g: &SubdividedGraph,
    pool: &PathPool,
    max_weight: u32,
) -> Vec<BTreeSet<usize>> {
    let s = g.segment_count();
    let paths = pool.paths();
    let mut groups: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, p) in paths.iter().enumerate() {
        groups.entry(p.endpoints()).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let mut through = vec![Vec::new(); s];
    for (i, p) in paths.iter().enumerate() {
        for &seg in p.segments() {
            through[seg].push(i);
        }
    }
    let mut w = vec![1u32; s];
    let mut len: Vec<u32> = paths.iter().map(|p| p.len() as u32).collect();
    let words = paths.len().div_ceil(64);
    let mut found: HashSet<Vec<u64>> = HashSet::new();
    loop {
        let mut bits = vec![0u64; words];
        for grp in &groups {
            let best = grp.iter().map(|&i| len[i]).min().unwrap();
            for &i in grp {
                if len[i] == best {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
        }
        found.insert(bits);
        // odometer step
        let mut d = 0;
        loop {
            if d == s {
                return maximal(found, paths.len());
            }
            if w[d] < max_weight {
                w[d] += 1;
                for &i in &through[d] {
                    len[i] += 1;
                }
                break;
            }
            for &i in &through[d] {
                len[i] -= w[d] - 1;
            }
            w[d] = 1;
            d += 1;
        }
    }
}

fn maximal(found: HashSet<Vec<u64>>, n: usize) -> Vec<BTreeSet<usize>> {
    let mut sets: Vec<Vec<u64>> = found.into_iter().collect();
    sets.sort_by_key(|b| std::cmp::Reverse(b.iter().map(|x| x.count_ones()).sum::<u32>()));
    let mut kept: Vec<Vec<u64>> = Vec::new();
    for b in sets {
        let inside = kept
            .iter()
            .any(|k| k.iter().zip(&b).all(|(x, y)| y & !x == 0));
        if !inside {
            kept.push(b);
        }
    }
    let mut out: Vec<BTreeSet<usize>> = kept
        .iter()
        .map(|b| (0..n).filter(|&i| b[i / 64] >> (i % 64) & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Floyd–Warshall over rationals, written independently of the library's
/// Dijkstra.
pub fn all_pairs(sub: &SubdividedGraph, w: &Weighting) -> Vec<Vec<Option<Rational>>> {
    let n = sub.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(geocover::rational::zero());
    }
    for s in 0..sub.segment_count() {
        let (a, b) = sub.segment_endpoints(s);
        let x = w.get(s).clone();
        for (p, q) in [(a, b), (b, a)] {
            if d[p][q].as_ref().is_none_or(|c: &Rational| x < *c) {
                d[p][q] = Some(x.clone());
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (&d[i][k], &d[k][j]) {
                    let via = a + b;
                    if d[i][j].as_ref().is_none_or(|c| via < *c) {
                        d[i][j] = Some(via);
                    }
                }
            }
        }
    }
    d
}

/// Every path is a shortest path under `w`, judged by [`all_pairs`].
pub fn geodesic_by_floyd(sub: &SubdividedGraph, paths: &[PathSeq], w: &Weighting) -> bool {
    let d = all_pairs(sub, w);
    paths.iter().all(|p| {
        let len: Rational = p.segments().iter().map(|&s| w.get(s)).sum();
        let (u, v) = p.endpoints();
        d[u][v].as_ref() == Some(&len)
    })
}

/// Insert one private point into each chosen gap of `shared`.
pub fn with_private(shared: &[&str], gaps: u32, tag: &str) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..=shared.len() {
        if gaps >> i & 1 == 1 {
            out.push(format!("{tag}{i}"));
        }
        if let Some(s) = shared.get(i) {
            out.push(s.to_string());
        }
    }
    out
}

/// Shared points appear in the same order on both paths, read one way or the other.
pub fn orders_match(a: &[String], b: &[String]) -> bool {
    let common: Vec<&String> = a.iter().filter(|x| b.contains(x)).collect();
    let in_b: Vec<&String> = b.iter().filter(|x| a.contains(x)).collect();
    let reversed: Vec<&String> = in_b.iter().rev().copied().collect();
    common == in_b || common == reversed
}

/// Every pair of paths over at most four shared points `p, q, r, s`, with at
/// most one private point on each path.
pub fn two_path_battery() -> Vec<(Vec<String>, Vec<String>)> {
    let labels = ["p", "q", "r", "s"];
    let mut out = Vec::new();
    for k in 0..=4 {
        let shared = &labels[..k];
        let gaps: Vec<u32> = std::iter::once(0).chain((0..=k).map(|i| 1 << i)).collect();
        for perm in shared.iter().copied().permutations(k) {
            for (&g1, &g2) in gaps.iter().cartesian_product(&gaps) {
                let x1 = with_private(shared, g1, "a");
                let x2 = with_private(&perm, g2, "b");
                if !x1.is_empty() && !x2.is_empty() {
                    out.push((x1, x2));
                }
            }
        }
    }
    out
}
