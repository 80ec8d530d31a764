use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    two_subdivision, EdgeId, Multigraph, PathSeq, SubdividedGraph, VertexId, Weighting,
    DEFAULT_POOL_CAP,
};
use crate::lp::{paths_feasibility, FeasibilityResult};
use crate::rational;

/// Two or three abstract paths given as sequences of labelled points. Equal
/// labels on different paths are the same point; everything between two
/// consecutive points is private to its path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedPathSystem {
    paths: Vec<Vec<String>>,
    reversed: Vec<bool>,
}

/// A path system glued into a multigraph. Each path runs from its own fresh
/// start vertex through its points to its own fresh end vertex, with one
/// fresh edge between consecutive points.
#[derive(Clone, Debug)]
pub struct Realization {
    pub origin: Multigraph,
    pub subdivided: SubdividedGraph,
    /// Designated paths in the 2-subdivision.
    pub paths: Vec<PathSeq>,
    /// Origin vertices of each path in stored (unreversed) order, fresh
    /// endpoints included.
    walks: Vec<Vec<VertexId>>,
    /// Origin edge between `walks[i][k]` and `walks[i][k + 1]`.
    arcs: Vec<Vec<EdgeId>>,
}

/// Geodesibility class of a three-path system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    PartialOrder,
    #[serde(rename = "exceptional-2a")]
    Exceptional2a,
    #[serde(rename = "exceptional-2b")]
    Exceptional2b,
    NotGeodesible,
}

impl Verdict {
    pub fn is_geodesible(self) -> bool {
        self != Verdict::NotGeodesible
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::PartialOrder => "partial-order",
            Verdict::Exceptional2a => "exceptional-2a",
            Verdict::Exceptional2b => "exceptional-2b",
            Verdict::NotGeodesible => "not-geodesible",
        })
    }
}

impl OrientedPathSystem {
    /// All paths forward. Labels must be non-empty and distinct within a path.
    pub fn new(paths: Vec<Vec<String>>) -> Result<Self> {
        for (i, p) in paths.iter().enumerate() {
            let mut seen = HashSet::new();
            for l in p {
                if l.is_empty() {
                    return Err(Error::InconsistentConfig(format!(
                        "path {} has an empty label",
                        i + 1
                    )));
                }
                if !seen.insert(l.as_str()) {
                    return Err(Error::InconsistentConfig(format!(
                        "label `{l}` repeats on path {}",
                        i + 1
                    )));
                }
            }
        }
        let reversed = vec![false; paths.len()];
        Ok(Self { paths, reversed })
    }

    pub fn from_strs(paths: &[&[&str]]) -> Result<Self> {
        Self::new(
            paths
                .iter()
                .map(|p| p.iter().map(|s| s.to_string()).collect())
                .collect(),
        )
    }

    /// Sets the direction flag of every path (`true` = traverse backwards).
    pub fn with_orientations(mut self, reversed: &[bool]) -> Self {
        assert_eq!(reversed.len(), self.paths.len(), "one flag per path");
        self.reversed = reversed.to_vec();
        self
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Vec<String>] {
        &self.paths
    }

    pub fn orientations(&self) -> &[bool] {
        &self.reversed
    }

    /// Labels of path `i` in traversal order.
    pub fn oriented(&self, i: usize) -> Vec<&str> {
        let mut v: Vec<&str> = self.paths[i].iter().map(String::as_str).collect();
        if self.reversed[i] {
            v.reverse();
        }
        v
    }

    pub fn realize(&self) -> Result<Realization> {
        let labels: BTreeSet<&str> = self.paths.iter().flatten().map(String::as_str).collect();
        let mut origin = Multigraph::new();
        for l in &labels {
            origin.add_vertex(*l)?;
        }
        let mut walks = Vec::with_capacity(self.paths.len());
        for (i, p) in self.paths.iter().enumerate() {
            let start = origin.add_vertex(format!("X{}^", i + 1))?;
            let end = origin.add_vertex(format!("X{}$", i + 1))?;
            let mut walk = vec![start];
            walk.extend(
                p.iter()
                    .map(|l| origin.vertex_by_name(l).expect("declared")),
            );
            walk.push(end);
            walks.push(walk);
        }
        let mut arcs = Vec::with_capacity(walks.len());
        for walk in &walks {
            let mut row = Vec::with_capacity(walk.len() - 1);
            for w in walk.windows(2) {
                row.push(origin.add_edge(w[0], w[1])?);
            }
            arcs.push(row);
        }
        let subdivided = two_subdivision(&origin);
        let paths = walks
            .iter()
            .zip(&arcs)
            .map(|(walk, row)| {
                let mut vs = vec![walk[0]];
                for (k, &e) in row.iter().enumerate() {
                    vs.push(subdivided.midpoint_of(e));
                    vs.push(walk[k + 1]);
                }
                PathSeq::from_vertices(subdivided.graph(), &vs)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Realization {
            origin,
            subdivided,
            paths,
            walks,
            arcs,
        })
    }
}

impl Realization {
    /// Decides by linear programming whether some weighting makes every
    /// designated path a shortest path. A witness is checked before return.
    pub fn feasibility(&self) -> Result<FeasibilityResult> {
        let refs: Vec<&PathSeq> = self.paths.iter().collect();
        paths_feasibility(&self.subdivided, &refs, DEFAULT_POOL_CAP)
    }

    /// Weighting from a layering of the oriented union, if it is acyclic:
    /// every segment of an edge from `x` to `y` gets `|φ(y) - φ(x)|`.
    fn layered_weighting(&self, reversed: &[bool]) -> Option<Weighting> {
        let n = self.origin.vertex_count();
        let mut succ: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); n];
        for (walk, &rev) in self.walks.iter().zip(reversed) {
            for w in walk.windows(2) {
                let (x, y) = if rev { (w[1], w[0]) } else { (w[0], w[1]) };
                succ[x].insert(y);
            }
        }
        let phi = longest_path_layers(&succ)?;
        let mut lengths = vec![rational::zero(); self.origin.edge_count()];
        for (walk, row) in self.walks.iter().zip(&self.arcs) {
            for (k, &e) in row.iter().enumerate() {
                lengths[e] = rational::int((phi[walk[k + 1]] - phi[walk[k]]).abs());
            }
        }
        let weights = lengths
            .iter()
            .flat_map(|l| [l.clone(), l.clone()])
            .collect();
        Some(Weighting::new(weights).expect("layers strictly increase along arcs"))
    }
}

/// `φ(v)` = number of edges on a longest chain ending at `v`, or `None` on
/// a cycle.
fn longest_path_layers(succ: &[BTreeSet<VertexId>]) -> Option<Vec<i64>> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &y in s {
            indeg[y] += 1;
        }
    }
    let mut ready: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut phi = vec![0i64; n];
    let mut done = 0;
    while let Some(x) = ready.pop() {
        done += 1;
        for &y in &succ[x] {
            phi[y] = phi[y].max(phi[x] + 1);
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.push(y);
            }
        }
    }
    (done == n).then_some(phi)
}

/// Do the labels shared by `a` and `b` occur in the same order on both?
pub fn orders_agree(a: &[&str], b: &[&str]) -> bool {
    let pos: BTreeMap<&str, usize> = b.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    a.iter()
        .filter_map(|l| pos.get(l))
        .tuple_windows()
        .all(|(x, y)| x < y)
}

/// Orientations making two paths agree on their shared points, with the
/// first path kept forward. `None` if neither direction of the second works.
///
/// Panics unless `sys` has exactly two paths.
pub fn compatible_orientation_two(sys: &OrientedPathSystem) -> Option<[bool; 2]> {
    assert_eq!(sys.len(), 2, "two paths expected");
    let a: Vec<&str> = sys.paths[0].iter().map(String::as_str).collect();
    let mut b: Vec<&str> = sys.paths[1].iter().map(String::as_str).collect();
    if orders_agree(&a, &b) {
        return Some([false, false]);
    }
    b.reverse();
    orders_agree(&a, &b).then_some([false, true])
}

/// Realizes a compatibly oriented pair and weights it so both paths are
/// shortest paths. Arcs get the length forced by a layering of the shared
/// points, so arcs outside the overlap get length 1.
pub fn construct_metric_two(
    sys: &OrientedPathSystem,
    orientations: [bool; 2],
) -> Result<(Realization, Weighting)> {
    assert_eq!(sys.len(), 2, "two paths expected");
    let real = sys.realize()?;
    let w = real
        .layered_weighting(&orientations)
        .ok_or_else(|| Error::InconsistentConfig("orientations are not compatible".into()))?;
    Ok((real, w))
}

/// Weighting for a system whose orientations induce a partial order.
pub fn partial_order_weighting(
    sys: &OrientedPathSystem,
) -> Result<Option<(Realization, Weighting)>> {
    let real = sys.realize()?;
    let w = real.layered_weighting(sys.orientations());
    Ok(w.map(|w| (real, w)))
}

/// Classifies three paths: a compatible partial order under some
/// orientation, one of the two exceptional patterns, or neither.
///
/// Panics unless `sys` has exactly three paths.
pub fn classify_three(sys: &OrientedPathSystem) -> Verdict {
    assert_eq!(sys.len(), 3, "three paths expected");
    let fresh: Vec<Vec<String>> = (0..3)
        .map(|i| {
            let mut v = vec![format!("X{}^", i + 1)];
            v.extend(sys.paths[i].iter().cloned());
            v.push(format!("X{}$", i + 1));
            v
        })
        .collect();
    let flags = |mask: usize| [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
    if (0..4).any(|m| acyclic_union(&fresh, &flags(m << 1))) {
        return Verdict::PartialOrder;
    }
    // Any two geodesics admit compatible orientations.
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let pair = OrientedPathSystem {
            paths: vec![sys.paths[i].clone(), sys.paths[j].clone()],
            reversed: vec![false; 2],
        };
        if compatible_orientation_two(&pair).is_none() {
            return Verdict::NotGeodesible;
        }
    }
    let mut best = Verdict::NotGeodesible;
    for perm in (0..3).permutations(3) {
        for m in 0..8 {
            let f = flags(m);
            let seqs: Vec<Vec<&str>> = perm
                .iter()
                .map(|&i| {
                    let mut v: Vec<&str> = fresh[i].iter().map(String::as_str).collect();
                    if f[i] {
                        v.reverse();
                    }
                    v
                })
                .collect();
            if exceptional_a(&seqs) {
                return Verdict::Exceptional2a;
            }
            if exceptional_b(&seqs) || exceptional_b_twisted(&seqs) {
                best = Verdict::Exceptional2b;
            }
        }
    }
    best
}

fn acyclic_union(paths: &[Vec<String>], reversed: &[bool]) -> bool {
    let index: BTreeMap<&str, usize> = paths
        .iter()
        .flatten()
        .map(String::as_str)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    let mut succ = vec![BTreeSet::new(); index.len()];
    for (p, &rev) in paths.iter().zip(reversed) {
        for w in p.windows(2) {
            let (x, y) = (index[w[0].as_str()], index[w[1].as_str()]);
            let (x, y) = if rev { (y, x) } else { (x, y) };
            succ[x].insert(y);
        }
    }
    longest_path_layers(&succ).is_some()
}

fn shared<'a>(a: &[&'a str], b: &[&str]) -> Vec<&'a str> {
    let set: HashSet<&str> = b.iter().copied().collect();
    a.iter().copied().filter(|l| set.contains(l)).collect()
}

/// Pairwise compatible, `X1 ∩ X3` inside the last end component of
/// `X1 \ X2` and `X2 ∩ X3` inside the first end component of `X2 \ X1`.
fn exceptional_a(x: &[Vec<&str>]) -> bool {
    orders_agree(&x[1], &x[2]) && end_components(x)
}

/// The end-component shape of [`exceptional_a`] with the third path running
/// against the second. The published case table files these under the
/// second exceptional pattern.
fn exceptional_b_twisted(x: &[Vec<&str>]) -> bool {
    !orders_agree(&x[1], &x[2]) && end_components(x)
}

fn end_components(x: &[Vec<&str>]) -> bool {
    let (x1, x2, x3) = (&x[0], &x[1], &x[2]);
    if !(orders_agree(x1, x2) && orders_agree(x1, x3)) {
        return false;
    }
    let s12 = shared(x1, x2);
    let u: &[&str] = match s12.last() {
        Some(last) => &x1[x1.iter().position(|l| l == last).unwrap() + 1..],
        None => x1,
    };
    let v: &[&str] = match s12.first() {
        Some(first) => &x2[..x2.iter().position(|l| l == first).unwrap()],
        None => x2,
    };
    let (s13, s23) = (shared(x1, x3), shared(x2, x3));
    s13.iter().all(|l| u.contains(l))
        && s23.iter().all(|l| v.contains(l))
        && in_blocks(x3, &s13, &s23)
}

/// Along `path`, every point of `first` comes no later than every point of
/// `second`. In the exceptional patterns the third geodesic runs through its
/// contacts with one path before those with the other; the set conditions
/// alone allow interleaving, which the linear program rejects.
fn in_blocks(path: &[&str], first: &[&str], second: &[&str]) -> bool {
    let pos = |l: &&str| {
        path.iter()
            .position(|x| x == l)
            .expect("shared point lies on the path")
    };
    let last_first = first.iter().map(pos).max();
    let first_second = second.iter().map(pos).min();
    match (last_first, first_second) {
        (Some(a), Some(b)) => a <= b,
        _ => true,
    }
}

/// `X1, X2` and `X1, X3` compatible, `X2, X3` not; some noncomparable
/// components `U` of `X1 \ X2` and `V` of `X2 \ X1` end at a common `e` with
/// `X1 ∩ X3 ⊂ U ∪ {e}` and `X2 ∩ X3 ⊂ V ∪ {e}`.
fn exceptional_b(x: &[Vec<&str>]) -> bool {
    let (x1, x2, x3) = (&x[0], &x[1], &x[2]);
    if !orders_agree(x1, x2) || !orders_agree(x1, x3) || orders_agree(x2, x3) {
        return false;
    }
    let s12 = shared(x1, x2);
    let s13 = shared(x1, x3);
    let s23 = shared(x2, x3);
    let leq = reachability(x1, x2);
    s12.iter().any(|&e| {
        let (u_start, u) = component_before(x1, &s12, e);
        let (v_start, v) = component_before(x2, &s12, e);
        let comparable = leq(e, u_start) || leq(e, v_start);
        !comparable
            && s13.iter().all(|l| *l == e || u.contains(l))
            && s23.iter().all(|l| *l == e || v.contains(l))
            && in_blocks(x3, &s13, &s23)
    })
}

/// The component of `path \ other` that ends at `e`: its opening point
/// (previous shared point or the path start) and its interior labels.
fn component_before<'a, 'b>(
    path: &'b [&'a str],
    shared: &[&str],
    e: &str,
) -> (&'a str, &'b [&'a str]) {
    let k = path
        .iter()
        .position(|l| *l == e)
        .expect("e lies on the path");
    match path[..k].iter().rposition(|l| shared.contains(l)) {
        Some(j) => (path[j], &path[j + 1..k]),
        None => (path[0], &path[1..k]),
    }
}

/// Reflexive-transitive order on the union of two oriented chains.
fn reachability<'a>(a: &[&'a str], b: &[&'a str]) -> impl Fn(&str, &str) -> bool + 'a {
    let mut succ: BTreeMap<&'a str, BTreeSet<&'a str>> = BTreeMap::new();
    for chain in [a, b] {
        for w in chain.windows(2) {
            succ.entry(w[0]).or_default().insert(w[1]);
        }
    }
    move |x: &str, y: &str| {
        let mut stack = vec![x.to_string()];
        let mut seen = HashSet::new();
        while let Some(z) = stack.pop() {
            if z == y {
                return true;
            }
            if seen.insert(z.clone()) {
                if let Some(s) = succ.get(z.as_str()) {
                    stack.extend(s.iter().map(|t| t.to_string()));
                }
            }
        }
        false
    }
}
