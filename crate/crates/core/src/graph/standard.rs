use crate::error::{Error, Result};

use super::Multigraph;

/// Tags understood by [`build_standard`] together with their parameter names.
pub const STANDARD_GRAPHS: &[(&str, &str)] = &[
    ("complete", "n"),
    ("complete_bipartite", "m n"),
    ("star", "n"),
    ("path", "n (edges)"),
    ("cycle", "n"),
    ("caterpillar", "n (spine edges)"),
    ("sawtooth", "n (triangles)"),
    ("loops", "n"),
];

/// Builds a named standard graph with deterministic vertex numbering.
///
/// * `complete n`: `v0..v{n-1}`, edges in lexicographic order.
/// * `complete_bipartite m n`: sides `a0..`, `b0..`.
/// * `star n`: center `c`, leaves `l1..ln`.
/// * `path n`: `n` edges on `v0..vn`.
/// * `cycle n`: `n` edges on `v0..v{n-1}` (one loop for `n = 1`).
/// * `caterpillar n`: spine `s0..sn` with one pendant `l{i}` per spine
///   vertex, so `n + 1` leaves.
/// * `sawtooth n`: base `b0..bn`, apexes `p1..pn`; triangle `i` is
///   `b{i-1} p{i} b{i}`.
/// * `loops n`: `n` loops on the single vertex `v`.
pub fn build_standard(tag: &str, params: &[i64]) -> Result<Multigraph> {
    let arity = STANDARD_GRAPHS
        .iter()
        .find(|(name, _)| *name == tag)
        .map(|(_, p)| p.split('(').next().unwrap_or("").split_whitespace().count())
        .ok_or_else(|| Error::UnknownGraph(tag.to_string()))?;
    if params.len() != arity {
        return Err(Error::InvalidParameter {
            graph: tag.to_string(),
            value: format!("{params:?}"),
            reason: format!("expected {arity} parameter(s)"),
        });
    }
    let at_least = |idx: usize, min: i64| -> Result<usize> {
        let v = params[idx];
        if v < min {
            Err(Error::InvalidParameter {
                graph: tag.to_string(),
                value: v.to_string(),
                reason: format!("must be at least {min}"),
            })
        } else {
            Ok(v as usize)
        }
    };

    let mut g = Multigraph::new();
    match tag {
        "complete" => {
            let n = at_least(0, 1)?;
            let v = add_named(&mut g, (0..n).map(|i| format!("v{i}")));
            for i in 0..n {
                for j in i + 1..n {
                    g.add_edge(v[i], v[j])?;
                }
            }
        }
        "complete_bipartite" => {
            let m = at_least(0, 1)?;
            let n = at_least(1, 1)?;
            let a = add_named(&mut g, (0..m).map(|i| format!("a{i}")));
            let b = add_named(&mut g, (0..n).map(|i| format!("b{i}")));
            for &x in &a {
                for &y in &b {
                    g.add_edge(x, y)?;
                }
            }
        }
        "star" => {
            let n = at_least(0, 1)?;
            let c = g.add_vertex("c")?;
            for i in 1..=n {
                let l = g.add_vertex(format!("l{i}"))?;
                g.add_edge(c, l)?;
            }
        }
        "path" => {
            let n = at_least(0, 0)?;
            let v = add_named(&mut g, (0..=n).map(|i| format!("v{i}")));
            for w in v.windows(2) {
                g.add_edge(w[0], w[1])?;
            }
        }
        "cycle" => {
            let n = at_least(0, 1)?;
            let v = add_named(&mut g, (0..n).map(|i| format!("v{i}")));
            for i in 0..n {
                g.add_edge(v[i], v[(i + 1) % n])?;
            }
        }
        "caterpillar" => {
            let n = at_least(0, 0)?;
            let spine = add_named(&mut g, (0..=n).map(|i| format!("s{i}")));
            let leaves = add_named(&mut g, (0..=n).map(|i| format!("l{i}")));
            for w in spine.windows(2) {
                g.add_edge(w[0], w[1])?;
            }
            for (&s, &l) in spine.iter().zip(&leaves) {
                g.add_edge(s, l)?;
            }
        }
        "sawtooth" => {
            let n = at_least(0, 1)?;
            let base = add_named(&mut g, (0..=n).map(|i| format!("b{i}")));
            let apex = add_named(&mut g, (1..=n).map(|i| format!("p{i}")));
            for i in 0..n {
                g.add_edge(base[i], base[i + 1])?;
                g.add_edge(base[i], apex[i])?;
                g.add_edge(apex[i], base[i + 1])?;
            }
        }
        "loops" => {
            let n = at_least(0, 1)?;
            let v = g.add_vertex("v")?;
            for _ in 0..n {
                g.add_edge(v, v)?;
            }
        }
        _ => unreachable!("tag validated above"),
    }
    Ok(g)
}

fn add_named(g: &mut Multigraph, names: impl Iterator<Item = String>) -> Vec<usize> {
    names
        .map(|n| g.add_vertex(n).expect("generated names are unique"))
        .collect()
}
