use serde::{Deserialize, Serialize};

use rayon::prelude::*;

use super::bounds::{lower_bound, upper_bound};
use super::report::{Bounds, CoverNumberReport, GraphSummary, WitnessReport};
use crate::cover::{
    is_minimal_in_reroutings, Cover, CoverSearch, SearchOptions, SymmetryTable,
    DEFAULT_NODE_BUDGET, DEFAULT_REROUTE_BUDGET,
};
use crate::error::{Error, Result};
use crate::graph::{
    automorphisms, distances_from, enumerate_simple_paths, lift_automorphism, path_length,
    two_subdivision, Multigraph, PathPool, PathSeq, SubdividedGraph, Weighting,
    AUTOMORPHISM_VERTEX_LIMIT, DEFAULT_POOL_CAP,
};
use crate::lp::{
    build_feasibility_program, check_fixed_weights, solve_feasibility_with_budget,
    FeasibilityResult, DEFAULT_PIVOT_BUDGET,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Any positive edge lengths.
    #[default]
    Weighted,
    /// Every edge has length 1.
    Unweighted,
}

#[derive(Clone, Debug)]
pub struct Budgets {
    pub nodes: u64,
    pub pivots: usize,
    pub reroutes: usize,
    pub pool_cap: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            nodes: DEFAULT_NODE_BUDGET,
            pivots: DEFAULT_PIVOT_BUDGET,
            reroutes: DEFAULT_REROUTE_BUDGET,
            pool_cap: DEFAULT_POOL_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DriverOptions {
    pub mode: Mode,
    pub budgets: Budgets,
    /// Test only one cover per symmetry orbit.
    pub use_symmetry: bool,
    /// In the census, keep only covers minimal among their reroutings.
    pub use_rerouting: bool,
    /// Skip pairs of paths that can never both be geodesics.
    pub geodesic_pairs: bool,
    /// See [`SearchOptions::endpoint_filter`].
    pub endpoint_filter: bool,
    /// Also collect the distinct optimal covers.
    pub census: bool,
    /// Give up (with a bracketing error) beyond this many paths.
    pub max_size: Option<usize>,
    /// Rescale reported weights so the smallest is 1.
    pub normalize: bool,
}

impl Default for DriverOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Weighted,
            budgets: Budgets::default(),
            use_symmetry: true,
            use_rerouting: true,
            geodesic_pairs: true,
            endpoint_filter: false,
            census: false,
            max_size: None,
            normalize: false,
        }
    }
}

/// A cover together with a weighting under which every path is a shortest
/// path, both in terms of one 2-subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub paths: Vec<PathSeq>,
    pub weights: Weighting,
}

struct Prepared {
    g: SubdividedGraph,
    pool: PathPool,
    table: Option<SymmetryTable>,
}

struct Solved {
    number: usize,
    witness: Witness,
    census: Option<Vec<Witness>>,
}

/// The (weighted or unweighted) geodesic cover number, with a witness.
///
/// Disconnected graphs are solved one component at a time and the numbers
/// summed. With `opts.census` set the report also lists one witness per
/// distinct optimal cover.
pub fn cover_number(g: &Multigraph, opts: &DriverOptions) -> Result<CoverNumberReport> {
    let whole = two_subdivision(g);
    let parts: Vec<Vec<usize>> = g
        .components()
        .into_iter()
        .filter(|c| c.len() > 1 || g.degree(c[0]) > 0)
        .collect();
    if opts.census && parts.len() > 1 {
        return Err(Error::Disconnected);
    }
    let mut number = 0;
    let mut paths = Vec::new();
    let mut weights = vec![crate::rational::one(); whole.segment_count()];
    let mut census = None;
    for part in &parts {
        let h = g.induced(part);
        let solved = solve_connected(&h, opts)?;
        number += solved.number;
        let sub = two_subdivision(&h);
        let (mapped, w) = transplant(&sub, &whole, &solved.witness)?;
        paths.extend(mapped);
        for (s, x) in w {
            weights[s] = x;
        }
        if let Some(list) = solved.census {
            census = Some(
                list.iter()
                    .map(|wit| {
                        let (p, w) = transplant(&sub, &whole, wit)?;
                        let mut full = weights.clone();
                        for (s, x) in w {
                            full[s] = x;
                        }
                        Ok(Witness {
                            paths: p,
                            weights: Weighting::new(full)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
        }
    }
    let (lower, upper) = (lower_bound(g), upper_bound(g));
    assert!(
        lower <= number && number <= upper,
        "cover number outside its bounds"
    );
    let witnesses = match &census {
        Some(list) => list.clone(),
        None => vec![Witness {
            paths,
            weights: Weighting::new(weights)?,
        }],
    };
    for w in &witnesses {
        let refs: Vec<&PathSeq> = w.paths.iter().collect();
        assert!(
            check_fixed_weights(&refs, &w.weights, &whole),
            "witness failed verification"
        );
    }
    Ok(CoverNumberReport {
        graph: GraphSummary::of(g),
        mode: opts.mode,
        cover_number: number,
        bounds: Bounds { lower, upper },
        distinct_count: census.as_ref().map(Vec::len),
        witnesses: witnesses
            .iter()
            .map(|w| WitnessReport::new(&whole, w, opts.normalize))
            .collect(),
        timing_ms: None,
    })
}

/// Feasible optimal covers, one per class under symmetry and rerouting.
pub fn distinct_optimal_covers(g: &Multigraph, opts: &DriverOptions) -> Result<Vec<Witness>> {
    let opts = DriverOptions {
        census: true,
        ..opts.clone()
    };
    let report = cover_number(g, &opts)?;
    let whole = two_subdivision(g);
    report
        .witnesses
        .iter()
        .map(|w| w.to_witness(&whole))
        .collect()
}

/// Paths in the whole graph, and the weights of the segments they came from.
type Transplanted = (Vec<PathSeq>, Vec<(usize, crate::rational::Rational)>);

/// Re-expresses a witness on a component in terms of the whole graph's
/// subdivision, by name.
fn transplant(
    sub: &SubdividedGraph,
    whole: &SubdividedGraph,
    w: &Witness,
) -> Result<Transplanted> {
    let vmap: Vec<usize> = (0..sub.vertex_count())
        .map(|v| {
            whole
                .graph()
                .vertex_by_name(sub.vertex_name(v))
                .expect("component names exist")
        })
        .collect();
    let smap: Vec<usize> = (0..sub.segment_count())
        .map(|s| {
            whole
                .segment_by_name(&sub.segment_name(s))
                .expect("component segments exist")
        })
        .collect();
    let paths = w
        .paths
        .iter()
        .map(|p| {
            PathSeq::new(
                whole.graph(),
                p.vertices().iter().map(|&v| vmap[v]).collect(),
                p.segments().iter().map(|&s| smap[s]).collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let weights = (0..sub.segment_count())
        .map(|s| (smap[s], w.weights.get(s).clone()))
        .collect();
    Ok((paths, weights))
}

fn prepare(h: &Multigraph, opts: &DriverOptions) -> Result<Prepared> {
    let g = two_subdivision(h);
    let mut pool = enumerate_simple_paths(&g, opts.budgets.pool_cap)?;
    if opts.mode == Mode::Unweighted {
        let unit = Weighting::uniform(g.segment_count());
        let dist: Vec<_> = (0..g.vertex_count())
            .map(|v| distances_from(&g, &unit, v))
            .collect();
        pool = pool.retain(|p| dist[p.start()][p.end()].as_ref() == Some(&path_length(p, &unit)));
    }
    let table = (opts.use_symmetry && h.vertex_count() <= AUTOMORPHISM_VERTEX_LIMIT)
        .then(|| automorphisms(h))
        .transpose()?
        .map(|group| {
            let lifted: Vec<_> = group.iter().map(|a| lift_automorphism(a, &g)).collect();
            SymmetryTable::new(&lifted, &pool)
        });
    Ok(Prepared { g, pool, table })
}

fn solve_connected(h: &Multigraph, opts: &DriverOptions) -> Result<Solved> {
    let prep = prepare(h, opts)?;
    let (lower, upper) = (lower_bound(h), upper_bound(h));
    for m in lower..=upper {
        if opts.max_size.is_some_and(|cap| m > cap) {
            return Err(Error::Undetermined { lower: m, upper });
        }
        let candidates = match candidates(&prep, m, opts) {
            Err(Error::SearchBudget { .. }) => return Err(Error::Undetermined { lower: m, upper }),
            other => other?,
        };
        let found = if opts.census {
            let all = candidates
                .par_iter()
                .map(|c| Ok(feasibility(&prep, c, opts)?.map(|w| (c.clone(), w))))
                .collect::<Result<Vec<_>>>()?;
            let feasible: Vec<(Cover, Weighting)> = all.into_iter().flatten().collect();
            if feasible.is_empty() {
                None
            } else {
                let mut kept = Vec::new();
                for (c, w) in &feasible {
                    if !opts.use_rerouting
                        || is_minimal_in_reroutings(c, &prep.pool, &prep.g, opts.budgets.reroutes)?
                    {
                        kept.push(witness(&prep, c, w));
                    }
                }
                Some((witness(&prep, &feasible[0].0, &feasible[0].1), Some(kept)))
            }
        } else {
            candidates
                .par_iter()
                .map(|c| feasibility(&prep, c, opts).map(|w| w.map(|w| (c.clone(), w))))
                .find_first(|r| !matches!(r, Ok(None)))
                .transpose()?
                .flatten()
                .map(|(c, w)| (witness(&prep, &c, &w), None))
        };
        if let Some((witness, census)) = found {
            return Ok(Solved {
                number: m,
                witness,
                census,
            });
        }
    }
    // Without the endpoint filter, some retracted cover within the upper
    // bound is always realizable.
    assert!(
        opts.endpoint_filter,
        "no realizable cover within the upper bound"
    );
    Err(Error::FilterTooStrict { upper })
}

/// Covers of exactly `m` paths, one per symmetry orbit when a table exists.
fn candidates(prep: &Prepared, m: usize, opts: &DriverOptions) -> Result<Vec<Cover>> {
    let mut so = SearchOptions::new(m);
    so.min_size = m;
    so.node_budget = opts.budgets.nodes;
    so.geodesic_pairs = opts.geodesic_pairs;
    so.endpoint_filter = opts.endpoint_filter;
    let mut covers = CoverSearch::new(&prep.g, &prep.pool, so).run()?;
    if let Some(t) = &prep.table {
        covers.retain(|c| t.is_minimal(c));
    }
    Ok(covers)
}

fn feasibility(prep: &Prepared, c: &Cover, opts: &DriverOptions) -> Result<Option<Weighting>> {
    match opts.mode {
        // The pool holds only unit-length shortest paths.
        Mode::Unweighted => Ok(Some(Weighting::uniform(prep.g.segment_count()))),
        Mode::Weighted => {
            let lp = build_feasibility_program(c, &prep.pool, &prep.g);
            Ok(
                match solve_feasibility_with_budget(&lp, opts.budgets.pivots)? {
                    FeasibilityResult::Feasible(w) => Some(w),
                    FeasibilityResult::Infeasible => None,
                },
            )
        }
    }
}

fn witness(prep: &Prepared, c: &Cover, w: &Weighting) -> Witness {
    Witness {
        paths: c.resolve(&prep.pool).into_iter().cloned().collect(),
        weights: w.clone(),
    }
}
