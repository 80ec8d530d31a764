use std::collections::HashMap;

use crate::error::{Error, Result};

use super::{Multigraph, SegmentId, SubdividedGraph, VertexId};

/// Default cap on the number of pool paths.
pub const DEFAULT_POOL_CAP: usize = 2_000_000;

/// Index of a path inside a [`PathPool`].
pub type PathId = usize;

/// A simple path with at least one segment, stored in canonical direction
/// (first vertex smaller than last vertex).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSeq {
    vertices: Vec<VertexId>,
    segments: Vec<SegmentId>,
}

impl PathSeq {
    /// Validates a vertex/segment sequence against `g` and canonicalizes it.
    pub fn new(g: &Multigraph, vertices: Vec<VertexId>, segments: Vec<SegmentId>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath(
                "a path needs at least one segment".into(),
            ));
        }
        if segments.len() + 1 != vertices.len() {
            return Err(Error::InvalidPath(
                "segment count must be one less than vertex count".into(),
            ));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(Error::InvalidPath(format!("unknown vertex {v}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPath(format!(
                    "vertex `{}` repeats",
                    g.name(v)
                )));
            }
        }
        for (i, &s) in segments.iter().enumerate() {
            if s >= g.edge_count() {
                return Err(Error::InvalidPath(format!("unknown segment {s}")));
            }
            let (a, b) = g.endpoints(s);
            let (x, y) = (vertices[i], vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(Error::InvalidPath(format!(
                    "segment {s} does not join `{}` and `{}`",
                    g.name(x),
                    g.name(y)
                )));
            }
        }
        Ok(Self::canonical(vertices, segments))
    }

    /// Resolves segments between consecutive vertices, taking the lowest
    /// segment id where parallel segments exist.
    pub fn from_vertices(g: &Multigraph, vertices: &[VertexId]) -> Result<Self> {
        let adj = g.adjacency();
        let mut segments = Vec::with_capacity(vertices.len().saturating_sub(1));
        for w in vertices.windows(2) {
            let (x, y) = (w[0], w[1]);
            if x >= g.vertex_count() {
                return Err(Error::InvalidPath(format!("unknown vertex {x}")));
            }
            let s = adj[x]
                .iter()
                .filter(|&&(n, _)| n == y)
                .map(|&(_, s)| s)
                .min()
                .ok_or_else(|| {
                    Error::InvalidPath(format!(
                        "`{}` and `{}` are not adjacent",
                        g.name(x),
                        g.name(y.min(g.vertex_count() - 1))
                    ))
                })?;
            segments.push(s);
        }
        Self::new(g, vertices.to_vec(), segments)
    }

    /// Trusted constructor for sequences produced by the enumerators.
    pub(crate) fn canonical(mut vertices: Vec<VertexId>, mut segments: Vec<SegmentId>) -> Self {
        if vertices.first() > vertices.last() {
            vertices.reverse();
            segments.reverse();
        }
        Self { vertices, segments }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn segments(&self) -> &[SegmentId] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("non-empty path")
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.start(), self.end())
    }

    /// Segment at the start and at the end of the path.
    pub fn end_segments(&self) -> (SegmentId, SegmentId) {
        (
            self.segments[0],
            *self.segments.last().expect("non-empty path"),
        )
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_segment(&self, s: SegmentId) -> bool {
        self.segments.contains(&s)
    }

    pub fn interior(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn is_interior(&self, v: VertexId) -> bool {
        self.interior().contains(&v)
    }

    /// Applies a vertex and segment relabeling and re-canonicalizes.
    pub fn mapped(&self, vertex_map: &[VertexId], segment_map: &[SegmentId]) -> Self {
        Self::canonical(
            self.vertices.iter().map(|&v| vertex_map[v]).collect(),
            self.segments.iter().map(|&s| segment_map[s]).collect(),
        )
    }

    pub fn display(&self, g: &SubdividedGraph) -> String {
        self.vertices
            .iter()
            .map(|&v| g.vertex_name(v))
            .collect::<Vec<_>>()
            .join(" - ")
    }
}

/// The candidate paths: every canonical simple path of a 2-subdivision,
/// sorted by vertex sequence.
#[derive(Clone, Debug, Default)]
pub struct PathPool {
    paths: Vec<PathSeq>,
    by_endpoints: HashMap<(VertexId, VertexId), Vec<PathId>>,
    index: HashMap<PathSeq, PathId>,
}

impl PathPool {
    /// Sorts and deduplicates `paths`.
    pub fn from_paths(mut paths: Vec<PathSeq>) -> Self {
        paths.sort();
        paths.dedup();
        let mut by_endpoints: HashMap<_, Vec<PathId>> = HashMap::new();
        let mut index = HashMap::with_capacity(paths.len());
        for (id, p) in paths.iter().enumerate() {
            by_endpoints.entry(p.endpoints()).or_default().push(id);
            index.insert(p.clone(), id);
        }
        Self {
            paths,
            by_endpoints,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn get(&self, id: PathId) -> &PathSeq {
        &self.paths[id]
    }

    pub fn paths(&self) -> &[PathSeq] {
        &self.paths
    }

    pub fn id_of(&self, p: &PathSeq) -> Option<PathId> {
        self.index.get(p).copied()
    }

    /// Pool paths sharing the canonical endpoint pair `(u, v)`, `u < v`.
    pub fn with_endpoints(&self, u: VertexId, v: VertexId) -> &[PathId] {
        let key = (u.min(v), u.max(v));
        self.by_endpoints.get(&key).map_or(&[], Vec::as_slice)
    }

    pub fn retain(&self, mut keep: impl FnMut(&PathSeq) -> bool) -> Self {
        Self::from_paths(self.paths.iter().filter(|p| keep(p)).cloned().collect())
    }
}

/// Enumerates every simple path with at least one segment, once per
/// undirected path, sorted by canonical vertex sequence.
pub fn enumerate_simple_paths(g: &SubdividedGraph, cap: usize) -> Result<PathPool> {
    let mut out = Vec::new();
    let mut dfs = Dfs::new(g, cap);
    for s in 0..g.vertex_count() {
        dfs.run(s, None, &mut out)?;
    }
    Ok(PathPool::from_paths(out))
}

/// Every simple path between `u` and `v`, canonical and sorted.
pub fn enumerate_paths_between(
    g: &SubdividedGraph,
    u: VertexId,
    v: VertexId,
    cap: usize,
) -> Result<Vec<PathSeq>> {
    if u == v {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    Dfs::new(g, cap).run(u.min(v), Some(u.max(v)), &mut out)?;
    out.sort();
    Ok(out)
}

struct Dfs<'a> {
    adj: &'a [Vec<(VertexId, SegmentId)>],
    cap: usize,
    visited: Vec<bool>,
    vertices: Vec<VertexId>,
    segments: Vec<SegmentId>,
}

impl<'a> Dfs<'a> {
    fn new(g: &'a SubdividedGraph, cap: usize) -> Self {
        Self {
            adj: g.adjacency(),
            cap,
            visited: vec![false; g.vertex_count()],
            vertices: Vec::new(),
            segments: Vec::new(),
        }
    }

    /// Paths from `start` to larger vertices (only to `target` if given).
    fn run(
        &mut self,
        start: VertexId,
        target: Option<VertexId>,
        out: &mut Vec<PathSeq>,
    ) -> Result<()> {
        self.visited[start] = true;
        self.vertices.push(start);
        let r = self.extend(start, target, out);
        self.vertices.pop();
        self.visited[start] = false;
        r
    }

    fn extend(
        &mut self,
        start: VertexId,
        target: Option<VertexId>,
        out: &mut Vec<PathSeq>,
    ) -> Result<()> {
        let here = *self.vertices.last().expect("non-empty");
        for i in 0..self.adj[here].len() {
            let (next, seg) = self.adj[here][i];
            if self.visited[next] {
                continue;
            }
            self.visited[next] = true;
            self.vertices.push(next);
            self.segments.push(seg);
            let hit = match target {
                Some(t) => next == t,
                None => next > start,
            };
            if hit {
                if out.len() >= self.cap {
                    return Err(Error::PoolLimit { cap: self.cap });
                }
                out.push(PathSeq {
                    vertices: self.vertices.clone(),
                    segments: self.segments.clone(),
                });
            }
            if target != Some(next) {
                self.extend(start, target, out)?;
            }
            self.segments.pop();
            self.vertices.pop();
            self.visited[next] = false;
        }
        Ok(())
    }
}
