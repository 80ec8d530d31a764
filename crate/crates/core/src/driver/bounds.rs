use crate::graph::Multigraph;

/// `max(⌈Δ/2⌉, ⌈leaves/2⌉, 1)`: each geodesic uses at most two germs at a
/// vertex and must end at every leaf. Zero for a graph without edges.
pub fn lower_bound(g: &Multigraph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    g.max_degree()
        .div_ceil(2)
        .max(g.leaf_count().div_ceil(2))
        .max(1)
}

/// `m + k` for `m` edges and `k` isolated self-loops: every edge is a
/// geodesic on its own, except a loop, which needs two.
pub fn upper_bound(g: &Multigraph) -> usize {
    g.edge_count() + g.isolated_loop_count()
}
