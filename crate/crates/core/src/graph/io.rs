//! Graph file format (JSON with `vertices` and `edges`) and DOT export.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Multigraph, PathSeq, SubdividedGraph};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<[VertexRef; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum VertexRef {
    Index(usize),
    Name(String),
}

/// Parses a graph document. Edge endpoints may be vertex indices or names.
pub fn read_graph(text: &str) -> Result<Multigraph> {
    let file: GraphFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let mut g = Multigraph::new();
    for name in file.vertices {
        g.add_vertex(name)?;
    }
    let index = g.name_index();
    let mut edges = Vec::with_capacity(file.edges.len());
    for (i, pair) in file.edges.iter().enumerate() {
        let mut ends = [0; 2];
        for (k, r) in pair.iter().enumerate() {
            ends[k] = match r {
                VertexRef::Index(x) if *x < g.vertex_count() => *x,
                VertexRef::Index(x) => {
                    return Err(Error::UndeclaredVertex {
                        edge: i,
                        vertex: x.to_string(),
                    })
                }
                VertexRef::Name(n) => {
                    *index
                        .get(n.as_str())
                        .ok_or_else(|| Error::UndeclaredVertex {
                            edge: i,
                            vertex: n.clone(),
                        })?
                }
            };
        }
        edges.push((ends[0], ends[1]));
    }
    for (u, v) in edges {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Writes a graph document with edges given by vertex names.
pub fn write_graph(g: &Multigraph) -> String {
    let file = GraphFile {
        vertices: g.names().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|&(u, v)| {
                [
                    VertexRef::Name(g.name(u).to_string()),
                    VertexRef::Name(g.name(v).to_string()),
                ]
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

const PALETTE: &[&str] = &[
    "red3",
    "blue3",
    "green4",
    "goldenrod3",
    "purple3",
    "darkorange2",
    "cyan4",
    "deeppink3",
];

/// DOT rendering of a 2-subdivision with each path of `paths` drawn in its
/// own color. Midpoints are drawn as small points.
pub fn to_dot(g: &SubdividedGraph, paths: &[PathSeq], title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", escape(title)).unwrap();
    writeln!(
        out,
        "  node [shape=circle, style=filled, fillcolor=gray80];"
    )
    .unwrap();
    for v in 0..g.vertex_count() {
        let name = escape(g.vertex_name(v));
        if g.is_original(v) {
            writeln!(out, "  \"{name}\";").unwrap();
        } else {
            writeln!(out, "  \"{name}\" [shape=point, width=0.08, label=\"\"];").unwrap();
        }
    }
    let mut colors: Vec<Vec<&str>> = vec![Vec::new(); g.segment_count()];
    for (i, p) in paths.iter().enumerate() {
        for &s in p.segments() {
            colors[s].push(PALETTE[i % PALETTE.len()]);
        }
    }
    for (s, cs) in colors.iter().enumerate() {
        let (a, b) = g.segment_endpoints(s);
        let attr = if cs.is_empty() {
            "color=gray60".to_string()
        } else {
            format!("color=\"{}\", penwidth=2.5", cs.join(":"))
        };
        writeln!(
            out,
            "  \"{}\" -- \"{}\" [{attr}];",
            escape(g.vertex_name(a)),
            escape(g.vertex_name(b))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
