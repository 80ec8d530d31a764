use std::collections::HashMap;

use super::multigraph::RESERVED;
use super::{EdgeId, Multigraph, VertexId};

/// Edge id of the 2-subdivision. Segment `2e` joins the first endpoint of
/// origin edge `e` to its midpoint, segment `2e + 1` joins the midpoint to
/// the second endpoint.
pub type SegmentId = EdgeId;

/// The 2-subdivision `G'` of a multigraph together with the bookkeeping that
/// ties it back to the origin.
#[derive(Clone, Debug)]
pub struct SubdividedGraph {
    graph: Multigraph,
    origin: Multigraph,
    midpoint_of: Vec<VertexId>,
    adjacency: Vec<Vec<(VertexId, SegmentId)>>,
}

/// Inserts a midpoint into every edge. Original vertices keep their ids;
/// the midpoint of edge `e` gets id `|V| + e`.
///
/// Midpoints are named `u~v` after the endpoint names, with a `#k` suffix
/// for the `k`-th parallel copy (`k >= 2`).
pub fn two_subdivision(origin: &Multigraph) -> SubdividedGraph {
    let mut graph = Multigraph::new();
    for name in origin.names() {
        graph
            .push_vertex(name.clone())
            .expect("origin names are unique");
    }
    let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    let mut midpoint_of = Vec::with_capacity(origin.edge_count());
    for &(u, v) in origin.edges() {
        let key = (u.min(v), u.max(v));
        let count = seen.entry(key).or_insert(0);
        *count += 1;
        let mut name = format!("{}{RESERVED}{}", origin.name(u), origin.name(v));
        if *count > 1 {
            name.push_str(&format!("#{count}"));
        }
        midpoint_of.push(graph.push_vertex(name).expect("midpoint names are unique"));
    }
    for (e, &(u, v)) in origin.edges().iter().enumerate() {
        let m = midpoint_of[e];
        graph.add_edge(u, m).expect("valid vertex");
        graph.add_edge(m, v).expect("valid vertex");
    }
    let adjacency = graph.adjacency();
    SubdividedGraph {
        graph,
        origin: origin.clone(),
        midpoint_of,
        adjacency,
    }
}

impl SubdividedGraph {
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn origin(&self) -> &Multigraph {
        &self.origin
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn segment_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn midpoint_of(&self, e: EdgeId) -> VertexId {
        self.midpoint_of[e]
    }

    pub fn segment_pair_of(&self, e: EdgeId) -> (SegmentId, SegmentId) {
        (2 * e, 2 * e + 1)
    }

    /// Origin edge and side (0 = first endpoint) of a segment.
    pub fn segment_origin(&self, s: SegmentId) -> (EdgeId, usize) {
        (s / 2, s % 2)
    }

    pub fn is_original(&self, v: VertexId) -> bool {
        v < self.origin.vertex_count()
    }

    /// The origin edge whose midpoint is `v`, if `v` is a midpoint.
    pub fn edge_of_midpoint(&self, v: VertexId) -> Option<EdgeId> {
        v.checked_sub(self.origin.vertex_count())
            .filter(|&e| e < self.origin.edge_count())
    }

    pub fn segment_endpoints(&self, s: SegmentId) -> (VertexId, VertexId) {
        self.graph.endpoints(s)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        self.graph.name(v)
    }

    /// `"<midpoint>:<side>"`, e.g. `v0~v1:0` for the half of `v0 v1` at `v0`.
    pub fn segment_name(&self, s: SegmentId) -> String {
        let (e, side) = self.segment_origin(s);
        format!("{}:{side}", self.graph.name(self.midpoint_of[e]))
    }

    pub fn segment_by_name(&self, name: &str) -> Option<SegmentId> {
        let (mid, side) = name.rsplit_once(':')?;
        let side: usize = side.parse().ok().filter(|&s| s < 2)?;
        let e = self.edge_of_midpoint(self.graph.vertex_by_name(mid)?)?;
        Some(2 * e + side)
    }

    /// `(neighbor, segment)` incidences of every vertex of `G'`.
    pub fn adjacency(&self) -> &[Vec<(VertexId, SegmentId)>] {
        &self.adjacency
    }

    /// Segments incident to `v`, with multiplicity (a loop midpoint's two
    /// parallel segments both appear at the loop vertex).
    pub fn incident_segments(&self, v: VertexId) -> impl Iterator<Item = SegmentId> + '_ {
        self.adjacency[v].iter().map(|&(_, s)| s)
    }
}
