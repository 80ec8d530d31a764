use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{EdgeId, Multigraph, SubdividedGraph, VertexId, AUTOMORPHISM_VERTEX_LIMIT};

/// A graph symmetry given by a vertex bijection and an edge bijection that
/// respects endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub vertex_perm: Vec<VertexId>,
    pub edge_perm: Vec<EdgeId>,
}

impl Automorphism {
    pub fn identity(g: &Multigraph) -> Self {
        Self {
            vertex_perm: g.vertices().collect(),
            edge_perm: (0..g.edge_count()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_perm.iter().enumerate().all(|(i, &v)| i == v)
            && self.edge_perm.iter().enumerate().all(|(i, &e)| i == e)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            vertex_perm: other
                .vertex_perm
                .iter()
                .map(|&v| self.vertex_perm[v])
                .collect(),
            edge_perm: other.edge_perm.iter().map(|&e| self.edge_perm[e]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut vertex_perm = vec![0; self.vertex_perm.len()];
        for (i, &v) in self.vertex_perm.iter().enumerate() {
            vertex_perm[v] = i;
        }
        let mut edge_perm = vec![0; self.edge_perm.len()];
        for (i, &e) in self.edge_perm.iter().enumerate() {
            edge_perm[e] = i;
        }
        Automorphism {
            vertex_perm,
            edge_perm,
        }
    }

    /// True when both maps are bijections and every edge is sent to an edge
    /// with the image endpoint pair.
    pub fn is_automorphism_of(&self, g: &Multigraph) -> bool {
        if self.vertex_perm.len() != g.vertex_count() || self.edge_perm.len() != g.edge_count() {
            return false;
        }
        if !is_permutation(&self.vertex_perm) || !is_permutation(&self.edge_perm) {
            return false;
        }
        g.edges().iter().enumerate().all(|(e, &(a, b))| {
            let (x, y) = g.endpoints(self.edge_perm[e]);
            let (fa, fb) = (self.vertex_perm[a], self.vertex_perm[b]);
            (x == fa && y == fb) || (x == fb && y == fa)
        })
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter()
        .all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// The full automorphism group with the default vertex guard.
pub fn automorphisms(g: &Multigraph) -> Result<Vec<Automorphism>> {
    automorphisms_with_limit(g, AUTOMORPHISM_VERTEX_LIMIT)
}

/// Enumerates the automorphism group by backtracking over vertex images,
/// pruned by degree and loop count and by adjacency multiplicities with
/// already-placed vertices. Every vertex permutation is expanded with all
/// bijections between parallel-edge classes. The identity comes first.
///
/// Loop reversals are not generated: each loop keeps its orientation, so the
/// result is the group acting on the edge set, not on edge halves.
pub fn automorphisms_with_limit(g: &Multigraph, limit: usize) -> Result<Vec<Automorphism>> {
    let n = g.vertex_count();
    if n > limit {
        return Err(Error::AutomorphismLimit { limit, actual: n });
    }
    let mult = g.multiplicity_matrix();
    let deg = g.degrees();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut vertex_perms = Vec::new();
    place(0, &mult, &deg, &mut image, &mut used, &mut vertex_perms);

    let mut classes: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        classes.entry((a.min(b), a.max(b))).or_default().push(e);
    }

    let mut out = Vec::new();
    for vp in vertex_perms {
        let mut choices: Vec<(Vec<EdgeId>, Vec<Vec<EdgeId>>)> = Vec::new();
        for ((a, b), edges) in &classes {
            let (x, y) = (vp[*a], vp[*b]);
            let target = &classes[&(x.min(y), x.max(y))];
            choices.push((edges.clone(), permutations(target)));
        }
        let mut edge_perm = vec![0; g.edge_count()];
        expand(&choices, 0, &mut edge_perm, &vp, &mut out);
    }
    Ok(out)
}

fn place(
    depth: usize,
    mult: &[Vec<usize>],
    deg: &[usize],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = image.len();
    if depth == n {
        out.push(image.clone());
        return;
    }
    for cand in 0..n {
        if used[cand] || deg[cand] != deg[depth] || mult[cand][cand] != mult[depth][depth] {
            continue;
        }
        if (0..depth).any(|w| mult[depth][w] != mult[cand][image[w]]) {
            continue;
        }
        image[depth] = cand;
        used[cand] = true;
        place(depth + 1, mult, deg, image, used, out);
        used[cand] = false;
    }
    image[depth] = usize::MAX;
}

fn expand(
    choices: &[(Vec<EdgeId>, Vec<Vec<EdgeId>>)],
    idx: usize,
    edge_perm: &mut Vec<EdgeId>,
    vp: &[VertexId],
    out: &mut Vec<Automorphism>,
) {
    if idx == choices.len() {
        out.push(Automorphism {
            vertex_perm: vp.to_vec(),
            edge_perm: edge_perm.clone(),
        });
        return;
    }
    let (src, targets) = &choices[idx];
    for t in targets {
        for (&s, &d) in src.iter().zip(t) {
            edge_perm[s] = d;
        }
        expand(choices, idx + 1, edge_perm, vp, out);
    }
}

/// All orderings of `items` in lexicographic order of positions.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Lifts a symmetry of the origin to the 2-subdivision: original vertices
/// move as before, the midpoint of `e` goes to the midpoint of its image, and
/// each segment follows its endpoint (loops keep their side).
pub fn lift_automorphism(a: &Automorphism, g: &SubdividedGraph) -> Automorphism {
    let origin = g.origin();
    let n = origin.vertex_count();
    let mut vertex_perm = Vec::with_capacity(g.vertex_count());
    vertex_perm.extend(a.vertex_perm.iter().copied());
    for e in 0..origin.edge_count() {
        vertex_perm.push(g.midpoint_of(a.edge_perm[e]));
    }
    debug_assert_eq!(vertex_perm.len(), n + origin.edge_count());

    let mut edge_perm = vec![0; g.segment_count()];
    for e in 0..origin.edge_count() {
        let (u, v) = origin.endpoints(e);
        let target = a.edge_perm[e];
        let (tu, _) = origin.endpoints(target);
        let (s0, s1) = g.segment_pair_of(e);
        let (t0, t1) = g.segment_pair_of(target);
        if u != v && a.vertex_perm[u] != tu {
            edge_perm[s0] = t1;
            edge_perm[s1] = t0;
        } else {
            edge_perm[s0] = t0;
            edge_perm[s1] = t1;
        }
    }
    Automorphism {
        vertex_perm,
        edge_perm,
    }
}
