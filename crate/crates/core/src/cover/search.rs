use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::bits::Bits;
use super::types::{retractable, Cover};
use crate::error::{Error, Result};
use crate::graph::{PathId, PathPool, PathSeq, SubdividedGraph};

/// Default cap on search nodes before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Knobs for [`CoverSearch`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub max_size: usize,
    pub node_budget: u64,
    /// Reject pairs where an endpoint of one path is an interior vertex of
    /// the other. Off by default: it is a heuristic and throws away some
    /// retracted covers that are genuinely optimal.
    pub endpoint_filter: bool,
    /// Reject pairs whose shared vertices appear in inconsistent orders.
    /// Such a pair can never be simultaneously geodesic, so this never loses
    /// a realizable cover.
    pub geodesic_pairs: bool,
    /// Only report covers with at least this many paths.
    pub min_size: usize,
    pub parallel: bool,
}

impl SearchOptions {
    pub fn new(max_size: usize) -> Self {
        Self {
            max_size,
            node_budget: DEFAULT_NODE_BUDGET,
            endpoint_filter: false,
            geodesic_pairs: false,
            min_size: 0,
            parallel: true,
        }
    }
}

/// All irredundant retracted covers of size at most `max_size`, sorted.
///
/// A cover is irredundant when every path owns a segment no other path
/// covers. Optimal covers are always irredundant, and restricting to them
/// makes the output independent of pool order.
pub fn find_covers(g: &SubdividedGraph, pool: &PathPool, max_size: usize) -> Result<Vec<Cover>> {
    CoverSearch::new(g, pool, SearchOptions::new(max_size)).run()
}

/// True iff two paths pass the pair filters selected in `opts`.
pub fn pair_compatible(p: &PathSeq, q: &PathSeq, opts: &SearchOptions) -> bool {
    if opts.endpoint_filter {
        let (a, b) = p.endpoints();
        let (c, d) = q.endpoints();
        if q.is_interior(a) || q.is_interior(b) || p.is_interior(c) || p.is_interior(d) {
            return false;
        }
    }
    !opts.geodesic_pairs || orders_agree(p, q)
}

/// Shared vertices occur in the same or exactly reversed order on both.
fn orders_agree(p: &PathSeq, q: &PathSeq) -> bool {
    let pos: Vec<usize> = p
        .vertices()
        .iter()
        .filter_map(|v| q.vertices().iter().position(|w| w == v))
        .collect();
    pos.windows(2).all(|w| w[0] < w[1]) || pos.windows(2).all(|w| w[0] > w[1])
}

pub struct CoverSearch<'a> {
    g: &'a SubdividedGraph,
    pool: &'a PathPool,
    opts: SearchOptions,
    by_segment: Vec<Vec<PathId>>,
    seg_bits: Vec<Bits>,
    compat: Option<Vec<Bits>>,
    nodes: AtomicU64,
}

struct State {
    chosen: Vec<PathId>,
    count: Vec<u16>,
    uncovered: Bits,
    forbidden: Bits,
}

impl<'a> CoverSearch<'a> {
    pub fn new(g: &'a SubdividedGraph, pool: &'a PathPool, opts: SearchOptions) -> Self {
        let n = pool.len();
        let mut by_segment = vec![Vec::new(); g.segment_count()];
        let mut seg_bits = Vec::with_capacity(n);
        for (id, p) in pool.paths().iter().enumerate() {
            let mut b = Bits::new(g.segment_count());
            for &s in p.segments() {
                by_segment[s].push(id);
                b.insert(s);
            }
            seg_bits.push(b);
        }
        let compat = (opts.endpoint_filter || opts.geodesic_pairs).then(|| {
            let rows: Vec<Vec<PathId>> = (0..n)
                .into_par_iter()
                .map(|i| {
                    (0..n)
                        .filter(|&j| pair_compatible(pool.get(i), pool.get(j), &opts))
                        .collect()
                })
                .collect();
            rows.into_iter()
                .map(|r| {
                    let mut b = Bits::new(n);
                    r.into_iter().for_each(|j| b.insert(j));
                    b
                })
                .collect()
        });
        Self {
            g,
            pool,
            opts,
            by_segment,
            seg_bits,
            compat,
            nodes: AtomicU64::new(0),
        }
    }

    /// Search nodes expanded so far.
    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// Collect every cover, splitting the top-level branches across threads.
    pub fn run(&self) -> Result<Vec<Cover>> {
        let mut out = if self.opts.parallel {
            let roots = self.root_branches();
            let parts: Vec<Result<Vec<Cover>>> = roots
                .par_iter()
                .enumerate()
                .map(|(i, &p)| {
                    let mut found = Vec::new();
                    let mut st = self.empty_state();
                    roots[..i].iter().for_each(|&q| st.forbidden.insert(q));
                    let _ = self.branch(&mut st, None, p, &mut |c| {
                        found.push(c.clone());
                        ControlFlow::Continue(())
                    })?;
                    Ok(found)
                })
                .collect();
            let mut all = Vec::new();
            for part in parts {
                all.extend(part?);
            }
            all
        } else {
            let mut all = Vec::new();
            let _ = self.visit(|c| {
                all.push(c.clone());
                ControlFlow::Continue(())
            })?;
            all
        };
        out.sort();
        Ok(out)
    }

    /// Stream covers to `f` in search order; stops early on `Break`.
    pub fn visit(&self, mut f: impl FnMut(&Cover) -> ControlFlow<()>) -> Result<ControlFlow<()>> {
        let mut st = self.empty_state();
        self.expand(&mut st, None, &mut f)
    }

    fn empty_state(&self) -> State {
        State {
            chosen: Vec::new(),
            count: vec![0; self.g.segment_count()],
            uncovered: Bits::full(self.g.segment_count()),
            forbidden: Bits::new(self.pool.len()),
        }
    }

    fn root_branches(&self) -> Vec<PathId> {
        if self.opts.max_size == 0 {
            return Vec::new();
        }
        match self.g.segment_count() {
            0 => Vec::new(),
            _ => self.by_segment[0].clone(),
        }
    }

    fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.opts.node_budget {
            return Err(Error::SearchBudget {
                budget: self.opts.node_budget,
            });
        }
        Ok(())
    }

    fn expand(
        &self,
        st: &mut State,
        cand: Option<&Bits>,
        f: &mut dyn FnMut(&Cover) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        self.tick()?;
        let Some(s) = st.uncovered.first() else {
            if st.chosen.len() >= self.opts.min_size.max(1) && self.irredundant(st) {
                return Ok(f(&Cover::new(st.chosen.iter().copied())));
            }
            return Ok(ControlFlow::Continue(()));
        };
        let slots = self.opts.max_size.saturating_sub(st.chosen.len());
        if slots == 0 {
            return Ok(ControlFlow::Continue(()));
        }
        let options: Vec<PathId> = self.by_segment[s]
            .iter()
            .copied()
            .filter(|&p| !st.forbidden.contains(p) && cand.is_none_or(|c| c.contains(p)))
            .collect();
        if slots == 1 {
            // The last path has to finish the job on its own.
            for p in options {
                let mut rest = st.uncovered.clone();
                rest.difference_with(&self.seg_bits[p]);
                if rest.is_empty() {
                    if let ControlFlow::Break(()) = self.branch(st, cand, p, f)? {
                        return Ok(ControlFlow::Break(()));
                    }
                }
            }
            return Ok(ControlFlow::Continue(()));
        }
        let mut banned = Vec::new();
        let mut flow = ControlFlow::Continue(());
        for p in options {
            if let ControlFlow::Break(()) = self.branch(st, cand, p, f)? {
                flow = ControlFlow::Break(());
                break;
            }
            st.forbidden.insert(p);
            banned.push(p);
        }
        for p in banned {
            st.forbidden.remove(p);
        }
        Ok(flow)
    }

    /// Add `p`, recurse if nothing became retractable, then undo.
    fn branch(
        &self,
        st: &mut State,
        cand: Option<&Bits>,
        p: PathId,
        f: &mut dyn FnMut(&Cover) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let path = self.pool.get(p);
        for &s in path.segments() {
            st.count[s] += 1;
            st.uncovered.remove(s);
        }
        st.chosen.push(p);
        // Retractability only grows as paths are added, so it prunes.
        let ok = !st
            .chosen
            .iter()
            .any(|&q| retractable(self.pool.get(q), &st.count, self.g));
        let flow = if ok {
            match &self.compat {
                Some(rows) => {
                    let mut next = rows[p].clone();
                    if let Some(c) = cand {
                        next.intersect_with(c);
                    }
                    self.expand(st, Some(&next), f)
                }
                None => self.expand(st, None, f),
            }
        } else {
            Ok(ControlFlow::Continue(()))
        };
        st.chosen.pop();
        for &s in path.segments() {
            st.count[s] -= 1;
            if st.count[s] == 0 {
                st.uncovered.insert(s);
            }
        }
        flow
    }

    fn irredundant(&self, st: &State) -> bool {
        st.chosen.iter().all(|&p| {
            self.pool
                .get(p)
                .segments()
                .iter()
                .any(|&s| st.count[s] == 1)
        })
    }
}
