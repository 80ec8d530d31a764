use std::collections::BTreeSet;

use super::types::Cover;
use crate::graph::{Automorphism, PathId, PathPool};

/// Image of a cover under a lifted automorphism. Panics if the pool is not
/// closed under `a`, which never happens for a full or geodesic-filtered
/// pool.
pub fn apply_symmetry(a: &Automorphism, c: &Cover, pool: &PathPool) -> Cover {
    Cover::new(c.ids().iter().map(|&id| image(a, id, pool)))
}

fn image(a: &Automorphism, id: PathId, pool: &PathPool) -> PathId {
    let q = pool.get(id).mapped(&a.vertex_perm, &a.edge_perm);
    pool.id_of(&q)
        .expect("path pool is closed under graph automorphisms")
}

/// True iff no element of `group` maps `c` to a smaller cover.
pub fn is_minimal_in_symmetries(c: &Cover, group: &[Automorphism], pool: &PathPool) -> bool {
    group.iter().all(|a| apply_symmetry(a, c, pool) >= *c)
}

/// All images of `c` under `group`.
pub fn orbit(c: &Cover, group: &[Automorphism], pool: &PathPool) -> BTreeSet<Cover> {
    group.iter().map(|a| apply_symmetry(a, c, pool)).collect()
}

/// Path images under every group element, precomputed once so that
/// minimality tests over many covers are cheap.
pub struct SymmetryTable {
    images: Vec<Vec<PathId>>,
}

impl SymmetryTable {
    pub fn new(group: &[Automorphism], pool: &PathPool) -> Self {
        let images = group
            .iter()
            .filter(|a| !a.is_identity())
            .map(|a| (0..pool.len()).map(|id| image(a, id, pool)).collect())
            .collect();
        Self { images }
    }

    /// Number of non-identity elements.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_minimal(&self, c: &Cover) -> bool {
        self.images
            .iter()
            .all(|img| Cover::new(c.ids().iter().map(|&p| img[p])) >= *c)
    }

    /// Smallest cover in the orbit of `c`.
    pub fn canonical(&self, c: &Cover) -> Cover {
        self.images
            .iter()
            .map(|img| Cover::new(c.ids().iter().map(|&p| img[p])))
            .fold(c.clone(), |best, x| best.min(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{covers_all_segments, find_covers};
    use crate::graph::{
        automorphisms, build_standard, enumerate_simple_paths, lift_automorphism, two_subdivision,
        PathSeq, SubdividedGraph, DEFAULT_POOL_CAP,
    };

    fn setup(tag: &str, params: &[i64]) -> (SubdividedGraph, PathPool, Vec<Automorphism>) {
        let base = build_standard(tag, params).unwrap();
        let g = two_subdivision(&base);
        let pool = enumerate_simple_paths(&g, DEFAULT_POOL_CAP).unwrap();
        let group = automorphisms(&base)
            .unwrap()
            .iter()
            .map(|a| lift_automorphism(a, &g))
            .collect();
        (g, pool, group)
    }

    #[test]
    fn path_reversal_swaps_halves() {
        let (g, pool, group) = setup("path", &[2]);
        let id = |ns: &[&str]| {
            let vs: Vec<_> = ns
                .iter()
                .map(|n| g.graph().vertex_by_name(n).unwrap())
                .collect();
            pool.id_of(&PathSeq::from_vertices(g.graph(), &vs).unwrap())
                .unwrap()
        };
        let c = Cover::new([id(&["v0", "v0~v1", "v1"]), id(&["v1", "v1~v2", "v2"])]);
        for a in &group {
            assert_eq!(apply_symmetry(a, &c, &pool), c);
        }
        let left = Cover::new([id(&["v0", "v0~v1", "v1", "v1~v2"]), id(&["v1~v2", "v2"])]);
        let right = Cover::new([id(&["v0~v1", "v1", "v1~v2", "v2"]), id(&["v0", "v0~v1"])]);
        let rev = group.iter().find(|a| !a.is_identity()).unwrap();
        assert_eq!(apply_symmetry(rev, &left, &pool), right);
        let minimal = [&left, &right]
            .iter()
            .filter(|c| is_minimal_in_symmetries(c, &group, &pool))
            .count();
        assert_eq!(minimal, 1);
    }

    #[test]
    fn trivial_group_keeps_everything() {
        let (g, pool, group) = setup("cycle", &[3]);
        let id = vec![group.iter().find(|a| a.is_identity()).unwrap().clone()];
        for c in find_covers(&g, &pool, 2).unwrap() {
            assert!(is_minimal_in_symmetries(&c, &id, &pool));
        }
    }

    #[test]
    fn symmetry_preserves_coverage_and_table_agrees() {
        let (g, pool, group) = setup("cycle", &[3]);
        let table = SymmetryTable::new(&group, &pool);
        assert_eq!(table.len(), 5);
        for c in find_covers(&g, &pool, 2).unwrap() {
            for a in &group {
                assert!(covers_all_segments(
                    &apply_symmetry(a, &c, &pool),
                    &pool,
                    &g
                ));
            }
            assert_eq!(
                table.is_minimal(&c),
                is_minimal_in_symmetries(&c, &group, &pool)
            );
            assert_eq!(
                table.canonical(&c),
                *orbit(&c, &group, &pool).first().unwrap()
            );
        }
    }
}
