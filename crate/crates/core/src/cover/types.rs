use crate::graph::{PathId, PathPool, PathSeq, SubdividedGraph};

/// A set of pool paths, kept sorted; covers compare lexicographically by
/// their sorted id tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cover {
    paths: Vec<PathId>,
}

impl Cover {
    pub fn new(ids: impl IntoIterator<Item = PathId>) -> Self {
        let mut paths: Vec<_> = ids.into_iter().collect();
        paths.sort_unstable();
        paths.dedup();
        Self { paths }
    }

    pub fn ids(&self) -> &[PathId] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn contains(&self, id: PathId) -> bool {
        self.paths.binary_search(&id).is_ok()
    }

    /// The cover with `old` swapped for `new`.
    pub fn replaced(&self, old: PathId, new: PathId) -> Self {
        Self::new(self.paths.iter().map(|&p| if p == old { new } else { p }))
    }

    pub fn resolve<'a>(&self, pool: &'a PathPool) -> Vec<&'a PathSeq> {
        self.paths.iter().map(|&id| pool.get(id)).collect()
    }
}

/// True iff every segment of `g` lies on some path of `c`.
pub fn covers_all_segments(c: &Cover, pool: &PathPool, g: &SubdividedGraph) -> bool {
    let mut covered = vec![false; g.segment_count()];
    for p in c.resolve(pool) {
        for &s in p.segments() {
            covered[s] = true;
        }
    }
    covered.into_iter().all(|x| x)
}

/// True iff no path of `c` is retractable (see [`paths_retracted`]).
pub fn is_retracted(c: &Cover, pool: &PathPool, g: &SubdividedGraph) -> bool {
    paths_retracted(&c.resolve(pool), g)
}

/// A path is retractable at an endpoint `v` when every segment incident to
/// `v` lies on some other path of the family; the family is retracted when
/// no path is retractable at either endpoint. Repeated paths are allowed
/// here and always make the family non-retracted.
pub fn paths_retracted(paths: &[&PathSeq], g: &SubdividedGraph) -> bool {
    let mut count = vec![0usize; g.segment_count()];
    for p in paths {
        for &s in p.segments() {
            count[s] += 1;
        }
    }
    !paths.iter().any(|p| retractable(p, &count, g))
}

pub(crate) fn retractable<C>(p: &PathSeq, count: &[C], g: &SubdividedGraph) -> bool
where
    C: Copy + Into<usize>,
{
    let (a, b) = p.endpoints();
    [a, b].into_iter().any(|v| {
        g.incident_segments(v).all(|s| {
            let own = usize::from(p.contains_segment(s));
            count[s].into() > own
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_standard, enumerate_simple_paths, two_subdivision, DEFAULT_POOL_CAP};

    fn setup(tag: &str, params: &[i64]) -> (SubdividedGraph, PathPool) {
        let g = two_subdivision(&build_standard(tag, params).unwrap());
        let pool = enumerate_simple_paths(&g, DEFAULT_POOL_CAP).unwrap();
        (g, pool)
    }

    fn id(g: &SubdividedGraph, pool: &PathPool, names: &[&str]) -> PathId {
        let vs: Vec<_> = names
            .iter()
            .map(|n| g.graph().vertex_by_name(n).unwrap())
            .collect();
        pool.id_of(&PathSeq::from_vertices(g.graph(), &vs).unwrap())
            .unwrap()
    }

    #[test]
    fn cover_is_a_sorted_set() {
        let c = Cover::new([5, 1, 5, 3]);
        assert_eq!(c.ids(), &[1, 3, 5]);
        assert!(Cover::new([1, 2]) < Cover::new([1, 3]));
        assert!(Cover::new([1, 2]) < Cover::new([2]));
        assert_eq!(c.replaced(3, 0).ids(), &[0, 1, 5]);
    }

    #[test]
    fn coverage() {
        let (g, pool) = setup("path", &[1]);
        assert!(!covers_all_segments(&Cover::new([]), &pool, &g));
        let full = id(&g, &pool, &["v0", "v0~v1", "v1"]);
        assert!(covers_all_segments(&Cover::new([full]), &pool, &g));
    }

    #[test]
    fn triangle_covered_by_two_long_paths() {
        let (g, pool) = setup("cycle", &[3]);
        // v0 - v0~v1 - v1 - v1~v2 - v2 and v2 - v2~v0 - v0 - ... would repeat;
        // use two paths through distinct midpoints.
        let p = id(&g, &pool, &["v0~v1", "v1", "v1~v2", "v2", "v2~v0"]);
        let q = id(&g, &pool, &["v2~v0", "v0", "v0~v1"]);
        let c = Cover::new([p, q]);
        assert!(covers_all_segments(&c, &pool, &g));
        assert!(is_retracted(&c, &pool, &g));
        assert!(!covers_all_segments(&Cover::new([p]), &pool, &g));
    }

    #[test]
    fn retractedness() {
        let (g, pool) = setup("path", &[1]);
        let full = id(&g, &pool, &["v0", "v0~v1", "v1"]);
        assert!(is_retracted(&Cover::new([full]), &pool, &g));
        let p = pool.get(full);
        assert!(!paths_retracted(&[p, p], &g));

        // One path overhangs into a segment already covered by another.
        let (g, pool) = setup("path", &[2]);
        let long = id(&g, &pool, &["v0", "v0~v1", "v1", "v1~v2"]);
        let right = id(&g, &pool, &["v1", "v1~v2", "v2"]);
        assert!(!is_retracted(&Cover::new([long, right]), &pool, &g));
        let left = id(&g, &pool, &["v0", "v0~v1", "v1"]);
        assert!(is_retracted(&Cover::new([left, right]), &pool, &g));
    }

    #[test]
    fn shared_midpoint_endpoint_is_not_retractable() {
        let (g, pool) = setup("path", &[1]);
        let a = id(&g, &pool, &["v0", "v0~v1"]);
        let b = id(&g, &pool, &["v0~v1", "v1"]);
        assert!(is_retracted(&Cover::new([a, b]), &pool, &g));
    }
}
