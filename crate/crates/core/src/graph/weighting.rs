use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

use super::{SegmentId, SubdividedGraph};

/// Positive rational length for every segment of a 2-subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighting {
    weights: Vec<Rational>,
}

impl Weighting {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if let Some(i) = weights.iter().position(|w| !rational::is_positive(w)) {
            return Err(Error::Parse(format!(
                "segment {i} has non-positive weight {}",
                rational::format(&weights[i])
            )));
        }
        Ok(Self { weights })
    }

    /// Every segment has length 1, i.e. every edge has length 2.
    pub fn uniform(segments: usize) -> Self {
        Self {
            weights: vec![rational::one(); segments],
        }
    }

    /// Assigns each origin edge a length, split evenly over its two segments.
    pub fn from_edge_lengths(lengths: &[Rational]) -> Result<Self> {
        let half = rational::ratio(1, 2);
        let weights = lengths
            .iter()
            .flat_map(|l| {
                let h = l * &half;
                [h.clone(), h]
            })
            .collect();
        Self::new(weights)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, s: SegmentId) -> &Rational {
        &self.weights[s]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            weights: self.weights.iter().map(|w| w * factor).collect(),
        }
    }

    /// Rescales so that the smallest weight is 1.
    pub fn normalized(&self) -> Self {
        match self.weights.iter().min() {
            Some(min) => self.scaled(&(rational::one() / min)),
            None => self.clone(),
        }
    }

    /// Segment name to `p/q` string, in segment-name order.
    pub fn to_named_map(&self, g: &SubdividedGraph) -> BTreeMap<String, String> {
        self.weights
            .iter()
            .enumerate()
            .map(|(s, w)| (g.segment_name(s), rational::format(w)))
            .collect()
    }

    pub fn from_named_map(g: &SubdividedGraph, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut weights = vec![None; g.segment_count()];
        for (name, value) in map {
            let s = g
                .segment_by_name(name)
                .ok_or_else(|| Error::Parse(format!("unknown segment `{name}`")))?;
            let w = rational::parse(value)
                .ok_or_else(|| Error::Parse(format!("bad fraction `{value}` for `{name}`")))?;
            weights[s] = Some(w);
        }
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(s, w)| {
                w.ok_or_else(|| Error::Parse(format!("missing weight for `{}`", g.segment_name(s))))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_standard, two_subdivision};

    #[test]
    fn rejects_non_positive() {
        assert!(Weighting::new(vec![rational::one(), rational::zero()]).is_err());
        assert!(Weighting::new(vec![rational::int(-1)]).is_err());
    }

    #[test]
    fn named_map_round_trip() {
        let g = two_subdivision(&build_standard("cycle", &[3]).unwrap());
        let w = Weighting::new((1..=6).map(|i| rational::ratio(i, 3)).collect()).unwrap();
        let map = w.to_named_map(&g);
        assert_eq!(map["v0~v1:0"], "1/3");
        assert_eq!(Weighting::from_named_map(&g, &map).unwrap(), w);
        assert_eq!(w.normalized().get(0), &rational::one());
    }
}
