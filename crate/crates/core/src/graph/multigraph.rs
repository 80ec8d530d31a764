use std::collections::HashMap;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Character that may not appear in vertex names; it separates the endpoint
/// names inside generated midpoint names.
pub(crate) const RESERVED: char = '~';

/// A finite multigraph: loops and parallel edges are allowed.
///
/// Vertex and edge ids are dense (`0..n`, `0..m`). Every vertex carries a
/// unique name used by the file formats.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    names: Vec<String>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self {
            names: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Builds a graph from vertex names and endpoint pairs given as indices.
    pub fn from_parts(names: Vec<String>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut g = Self::new();
        for name in names {
            g.add_vertex(name)?;
        }
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<VertexId> {
        let name = name.into();
        if name.is_empty() || name.contains(RESERVED) {
            return Err(Error::ReservedName(name));
        }
        self.push_vertex(name)
    }

    /// Like [`add_vertex`](Self::add_vertex) but accepts the reserved
    /// separator; used for generated midpoint names.
    pub(crate) fn push_vertex(&mut self, name: String) -> Result<VertexId> {
        if self.names.contains(&name) {
            return Err(Error::DuplicateVertex(name));
        }
        self.names.push(name);
        Ok(self.names.len() - 1)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let n = self.names.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::UndeclaredVertex {
                    edge: self.edges.len(),
                    vertex: x.to_string(),
                });
            }
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.names.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name_index(&self) -> HashMap<&str, VertexId> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect()
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.names.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn leaf_count(&self) -> usize {
        self.degrees().into_iter().filter(|&d| d == 1).count()
    }

    /// Loops whose vertex carries no other edge.
    pub fn isolated_loop_count(&self) -> usize {
        let deg = self.degrees();
        self.edges
            .iter()
            .filter(|&&(a, b)| a == b && deg[a] == 2)
            .count()
    }

    /// `(neighbor, edge)` pairs around `v`; a loop contributes two entries.
    pub fn incidences(&self, v: VertexId) -> Vec<(VertexId, EdgeId)> {
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push((b, e));
            }
            if b == v {
                out.push((a, e));
            }
        }
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.names.len()];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        adj
    }

    /// Number of edges joining `u` and `v` (loops when `u == v`).
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.names.len();
        let mut m = vec![vec![0; n]; n];
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            if a != b {
                m[b][a] += 1;
            }
        }
        m
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.names.len()];
        let mut comps = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![s];
            while let Some(x) = stack.pop() {
                for &(y, _) in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `vertices` (kept in the given order), with every
    /// edge between them.
    pub fn induced(&self, vertices: &[VertexId]) -> Multigraph {
        let mut index = vec![usize::MAX; self.names.len()];
        let mut g = Multigraph::new();
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
            g.names.push(self.names[v].clone());
        }
        for &(a, b) in &self.edges {
            if index[a] != usize::MAX && index[b] != usize::MAX {
                g.edges.push((index[a], index[b]));
            }
        }
        g
    }
}

impl Default for Multigraph {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn loops_count_twice() {
        let g = Multigraph::from_parts(named(2), vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.isolated_loop_count(), 0);
        assert_eq!(g.incidences(0).len(), 4);
    }

    #[test]
    fn isolated_loops() {
        let g = Multigraph::from_parts(named(3), vec![(0, 0), (1, 1), (1, 2)]).unwrap();
        assert_eq!(g.isolated_loop_count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Multigraph::from_parts(named(1), vec![(0, 1)]),
            Err(Error::UndeclaredVertex { .. })
        ));
        let mut g = Multigraph::new();
        g.add_vertex("a").unwrap();
        assert!(matches!(g.add_vertex("a"), Err(Error::DuplicateVertex(_))));
        assert!(matches!(g.add_vertex("a~b"), Err(Error::ReservedName(_))));
        assert!(matches!(g.add_vertex(""), Err(Error::ReservedName(_))));
    }

    #[test]
    fn components_and_induced() {
        let g = Multigraph::from_parts(named(5), vec![(0, 1), (3, 4), (4, 4)]).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3, 4]]);
        let h = g.induced(&comps[2]);
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edges(), &[(0, 1), (1, 1)]);
        assert_eq!(h.name(0), "v3");
    }
}
