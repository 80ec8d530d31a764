//! Cover files: JSON `{"paths": [...]}` where each path is a list of vertex
//! names of the 2-subdivision. When parallel segments make the vertex list
//! ambiguous, a path is written as `{"vertices": [...], "segments": [...]}`
//! with segment names such as `a~a:1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PathSeq, SubdividedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFile {
    pub paths: Vec<PathEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathEntry {
    Names(Vec<String>),
    Explicit {
        vertices: Vec<String>,
        segments: Vec<String>,
    },
}

pub fn read_cover(text: &str, g: &SubdividedGraph) -> Result<Vec<PathSeq>> {
    let file: CoverFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    file.to_paths(g)
}

pub fn write_cover(g: &SubdividedGraph, paths: &[PathSeq]) -> String {
    let mut text = serde_json::to_string_pretty(&CoverFile::from_paths(g, paths))
        .expect("cover files always serialize");
    text.push('\n');
    text
}

impl CoverFile {
    pub fn to_paths(&self, g: &SubdividedGraph) -> Result<Vec<PathSeq>> {
        let lookup = |n: &str| {
            g.graph()
                .vertex_by_name(n)
                .ok_or_else(|| Error::InvalidPath(format!("unknown vertex `{n}`")))
        };
        self.paths
            .iter()
            .map(|entry| match entry {
                PathEntry::Names(names) => {
                    let vs = names
                        .iter()
                        .map(|n| lookup(n))
                        .collect::<Result<Vec<_>>>()?;
                    PathSeq::from_vertices(g.graph(), &vs)
                }
                PathEntry::Explicit { vertices, segments } => {
                    let vs = vertices
                        .iter()
                        .map(|n| lookup(n))
                        .collect::<Result<Vec<_>>>()?;
                    let ss = segments
                        .iter()
                        .map(|n| {
                            g.segment_by_name(n)
                                .ok_or_else(|| Error::InvalidPath(format!("unknown segment `{n}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    PathSeq::new(g.graph(), vs, ss)
                }
            })
            .collect()
    }

    pub fn from_paths(g: &SubdividedGraph, paths: &[PathSeq]) -> Self {
        let entries = paths
            .iter()
            .map(|p| {
                let vertices: Vec<String> = p
                    .vertices()
                    .iter()
                    .map(|&v| g.vertex_name(v).to_owned())
                    .collect();
                let plain = PathSeq::from_vertices(g.graph(), p.vertices()).ok();
                if plain.as_ref() == Some(p) {
                    PathEntry::Names(vertices)
                } else {
                    PathEntry::Explicit {
                        vertices,
                        segments: p.segments().iter().map(|&s| g.segment_name(s)).collect(),
                    }
                }
            })
            .collect();
        CoverFile { paths: entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_standard, enumerate_simple_paths, two_subdivision, DEFAULT_POOL_CAP};

    #[test]
    fn round_trip_with_loops() {
        let g = two_subdivision(&build_standard("loops", &[1]).unwrap());
        let pool = enumerate_simple_paths(&g, DEFAULT_POOL_CAP).unwrap();
        let paths = pool.paths().to_vec();
        let text = write_cover(&g, &paths);
        assert!(text.contains("segments"));
        let back = read_cover(&text, &g).unwrap();
        assert_eq!(back, paths);
        assert_eq!(write_cover(&g, &back), text);
    }

    #[test]
    fn plain_names() {
        let g = two_subdivision(&build_standard("path", &[1]).unwrap());
        let text = r#"{"paths": [["v1", "v0~v1", "v0"]]}"#;
        let paths = read_cover(text, &g).unwrap();
        assert_eq!(paths[0].start(), g.graph().vertex_by_name("v0").unwrap());
        assert!(write_cover(&g, &paths).contains("\"v0~v1\""));
    }

    #[test]
    fn errors() {
        let g = two_subdivision(&build_standard("path", &[1]).unwrap());
        assert!(matches!(read_cover("{", &g), Err(Error::Parse(_))));
        assert!(matches!(
            read_cover(r#"{"paths": [["v0", "zz"]]}"#, &g),
            Err(Error::InvalidPath(_))
        ));
        assert!(read_cover(r#"{"paths": [["v0", "v1"]]}"#, &g).is_err());
    }
}
