use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::solve::{Mode, Witness};
use crate::cover::CoverFile;
use crate::error::Result;
use crate::graph::{Multigraph, SubdividedGraph, Weighting};

/// The result of [`cover_number`](super::cover_number), serialized as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverNumberReport {
    pub graph: GraphSummary,
    pub mode: Mode,
    pub cover_number: usize,
    pub bounds: Bounds,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinct_count: Option<usize>,
    pub witnesses: Vec<WitnessReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphSummary {
    pub fn of(g: &Multigraph) -> Self {
        Self {
            vertices: g.names().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|&(a, b)| [g.name(a).to_owned(), g.name(b).to_owned()])
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

/// A cover with its certifying weighting, by segment name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub cover: CoverFile,
    pub weights: BTreeMap<String, String>,
}

impl WitnessReport {
    pub fn new(g: &SubdividedGraph, w: &Witness, normalize: bool) -> Self {
        let weights = if normalize {
            w.weights.normalized()
        } else {
            w.weights.clone()
        };
        Self {
            cover: CoverFile::from_paths(g, &w.paths),
            weights: weights.to_named_map(g),
        }
    }

    pub fn to_witness(&self, g: &SubdividedGraph) -> Result<Witness> {
        Ok(Witness {
            paths: self.cover.to_paths(g)?,
            weights: Weighting::from_named_map(g, &self.weights)?,
        })
    }
}

impl CoverNumberReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}
