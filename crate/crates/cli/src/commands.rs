use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use geocover::cover::{read_cover, write_cover};
use geocover::driver::{Budgets as DriverBudgets, WitnessReport};
use geocover::graph::io::{read_graph, to_dot};
use geocover::graph::{
    build_standard, two_subdivision, PathSeq, SubdividedGraph, DEFAULT_POOL_CAP,
};
use geocover::lp::{check_fixed_weights, paths_feasibility};
use geocover::triple::{
    classify_three, compatible_orientation_two, config_dot, construct_metric_two, diff_paper,
    enumerate_group, group_configs, OrientedPathSystem,
};
use geocover::{
    cover_number, CoverNumberReport, DriverOptions, Error, Mode, Multigraph, Weighting,
};

use crate::args::{
    AppendixArgs, Budgets, ExportArgs, FeasibleArgs, Format, GraphSource, SolveArgs, SystemArgs,
};
use crate::error::CliError;

/// What a command prints and the status it exits with.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }

    fn verdict(stdout: String, positive: bool) -> Self {
        Self {
            stdout,
            code: if positive { 0 } else { 1 },
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_graph(src: &GraphSource) -> Result<Multigraph, CliError> {
    if let Some(path) = &src.graph {
        return Ok(read_graph(&read_file(path)?)?);
    }
    let spec = src.std.as_deref().unwrap_or_default();
    let (name, params) = spec
        .split_first()
        .ok_or_else(|| CliError::Usage("--std needs a graph name".into()))?;
    let params = params
        .iter()
        .map(|p| {
            p.parse::<i64>().map_err(|_| {
                CliError::Usage(format!("parameter `{p}` of `{name}` is not an integer"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(build_standard(name, &params)?)
}

fn driver_budgets(b: &Budgets) -> DriverBudgets {
    let d = DriverBudgets::default();
    DriverBudgets {
        nodes: b.nodes.unwrap_or(d.nodes),
        pivots: b.pivots.unwrap_or(d.pivots),
        reroutes: b.reroutes.unwrap_or(d.reroutes),
        pool_cap: b.pool_cap.unwrap_or(d.pool_cap),
    }
}

fn driver_options(a: &SolveArgs, census: bool) -> DriverOptions {
    DriverOptions {
        mode: if a.unweighted {
            Mode::Unweighted
        } else {
            Mode::Weighted
        },
        budgets: driver_budgets(&a.budgets),
        use_symmetry: !a.no_symmetry,
        use_rerouting: !a.no_rerouting,
        geodesic_pairs: !a.no_pair_filter,
        endpoint_filter: a.endpoint_filter,
        census,
        max_size: a.max_size,
        normalize: a.normalize,
    }
}

/// `number` and `distinct`.
pub fn solve(a: &SolveArgs, census: bool) -> Result<Outcome, CliError> {
    let g = load_graph(&a.source)?;
    let start = Instant::now();
    let mut report = cover_number(&g, &driver_options(a, census))?;
    if a.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let sub = two_subdivision(&g);
    if let Some(w) = report.witnesses.first() {
        if let Some(path) = &a.write_cover {
            write_file(path, &write_cover(&sub, &w.cover.to_paths(&sub)?))?;
        }
        if let Some(path) = &a.write_weights {
            write_file(path, &weights_json(&w.weights))?;
        }
    }
    let out = match a.format {
        Format::Json => report.to_json(),
        Format::Text => render_report(&report, &sub, census)?,
        Format::Dot => {
            let mut out = String::new();
            for (i, w) in report.witnesses.iter().enumerate() {
                out.push_str(&to_dot(
                    &sub,
                    &w.cover.to_paths(&sub)?,
                    &format!("cover {}", i + 1),
                ));
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}

fn weights_json(w: &BTreeMap<String, String>) -> String {
    let mut s = serde_json::to_string_pretty(w).expect("string map serializes");
    s.push('\n');
    s
}

fn render_report(
    r: &CoverNumberReport,
    sub: &SubdividedGraph,
    census: bool,
) -> Result<String, CliError> {
    let mut out = String::new();
    let mode = match r.mode {
        Mode::Weighted => "weighted",
        Mode::Unweighted => "unweighted",
    };
    writeln!(
        out,
        "graph: {} vertices, {} edges",
        r.graph.vertices.len(),
        r.graph.edges.len()
    )
    .unwrap();
    writeln!(out, "{mode} cover number: {}", r.cover_number).unwrap();
    writeln!(out, "bounds: {} <= n <= {}", r.bounds.lower, r.bounds.upper).unwrap();
    if census {
        writeln!(out, "distinct optimal covers: {}", r.witnesses.len()).unwrap();
    }
    for (i, w) in r.witnesses.iter().enumerate() {
        writeln!(out).unwrap();
        writeln!(out, "cover {}:", i + 1).unwrap();
        render_witness(&mut out, w, sub)?;
    }
    if let Some(ms) = r.timing_ms {
        writeln!(out, "\ntime: {ms} ms").unwrap();
    }
    Ok(out)
}

fn render_witness(
    out: &mut String,
    w: &WitnessReport,
    sub: &SubdividedGraph,
) -> Result<(), CliError> {
    let paths = w.cover.to_paths(sub)?;
    let weights = Weighting::from_named_map(sub, &w.weights)?;
    for p in &paths {
        let len = geocover::graph::path_length(p, &weights);
        writeln!(
            out,
            "  {}  (length {})",
            p.display(sub),
            geocover::rational::format(&len)
        )
        .unwrap();
    }
    let listed: Vec<String> = w.weights.iter().map(|(s, v)| format!("{s}={v}")).collect();
    writeln!(out, "  weights: {}", listed.join(" ")).unwrap();
    Ok(())
}

/// `feasible`: solve the linear program for a given cover, or check given weights.
pub fn feasible(a: &FeasibleArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.source)?;
    let sub = two_subdivision(&g);
    let paths = read_cover(&read_file(&a.cover)?, &sub)?;
    if let Some(s) =
        (0..sub.segment_count()).find(|&s| !paths.iter().any(|p| p.contains_segment(s)))
    {
        return Err(Error::Uncovered(sub.segment_name(s)).into());
    }
    let refs: Vec<&PathSeq> = paths.iter().collect();
    if let Some(spec) = &a.check_weights {
        let w = if spec == "unit" {
            Weighting::uniform(sub.segment_count())
        } else {
            let map: BTreeMap<String, String> = serde_json::from_str(&read_file(Path::new(spec))?)
                .map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
            Weighting::from_named_map(&sub, &map)?
        };
        let ok = check_fixed_weights(&refs, &w, &sub);
        let text = if ok {
            "weights accepted: every path is a shortest path\n"
        } else {
            "weights rejected: some path is not a shortest path\n"
        };
        return Ok(Outcome::verdict(text.to_string(), ok));
    }
    let r = paths_feasibility(&sub, &refs, a.pool_cap.unwrap_or(DEFAULT_POOL_CAP))?;
    let out = match (a.format, r.witness()) {
        (Format::Json, Some(w)) => {
            let value = serde_json::json!({
                "feasible": true,
                "weights": w.normalized().to_named_map(&sub),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        (Format::Json, None) => "{\n  \"feasible\": false\n}\n".to_string(),
        (Format::Dot, _) => to_dot(&sub, &paths, "cover"),
        (Format::Text, Some(w)) => {
            let w = w.normalized();
            let mut out = String::from("feasible\n");
            for p in &paths {
                let len = geocover::graph::path_length(p, &w);
                writeln!(
                    out,
                    "  {}  (length {})",
                    p.display(&sub),
                    geocover::rational::format(&len)
                )
                .unwrap();
            }
            let listed: Vec<String> = w
                .to_named_map(&sub)
                .iter()
                .map(|(s, v)| format!("{s}={v}"))
                .collect();
            writeln!(out, "  weights: {}", listed.join(" ")).unwrap();
            out
        }
        (Format::Text, None) => "infeasible\n".to_string(),
    };
    Ok(Outcome::verdict(out, r.is_feasible()))
}

fn system(a: &SystemArgs, expected: usize) -> Result<OrientedPathSystem, CliError> {
    if a.paths.len() != expected {
        return Err(CliError::Usage(format!(
            "expected {expected} --path arguments, got {}",
            a.paths.len()
        )));
    }
    let paths = a
        .paths
        .iter()
        .map(|p| p.split(',').map(|l| l.trim().to_string()).collect())
        .collect();
    Ok(OrientedPathSystem::new(paths)?)
}

/// `classify2`.
pub fn classify2(a: &SystemArgs) -> Result<Outcome, CliError> {
    let sys = system(a, 2)?;
    let real = sys.realize()?;
    let lp = real.feasibility()?.is_feasible();
    let Some(o) = compatible_orientation_two(&sys) else {
        let out = match a.format {
            Format::Dot => to_dot(&real.subdivided, &real.paths, "incompatible"),
            Format::Json => "{\n  \"compatible\": false\n}\n".to_string(),
            Format::Text => format!(
                "incompatible: no orientations agree on the shared points\nlinear program: {}\n",
                if lp { "feasible" } else { "infeasible" }
            ),
        };
        return Ok(Outcome::verdict(out, false));
    };
    let (real, w) = construct_metric_two(&sys, o)?;
    let out = match a.format {
        Format::Dot => to_dot(&real.subdivided, &real.paths, "compatible"),
        Format::Json => {
            let value = serde_json::json!({
                "compatible": true,
                "second_reversed": o[1],
                "weights": w.to_named_map(&real.subdivided),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Text => {
            let mut out = format!(
                "compatible: second path {}\n",
                if o[1] { "reversed" } else { "forward" }
            );
            let listed: Vec<String> = w
                .to_named_map(&real.subdivided)
                .iter()
                .map(|(s, v)| format!("{s}={v}"))
                .collect();
            writeln!(out, "weights: {}", listed.join(" ")).unwrap();
            writeln!(
                out,
                "linear program: {}",
                if lp { "feasible" } else { "infeasible" }
            )
            .unwrap();
            out
        }
    };
    Ok(Outcome::verdict(out, true))
}

/// `classify3`.
pub fn classify3(a: &SystemArgs) -> Result<Outcome, CliError> {
    let sys = system(a, 3)?;
    let verdict = classify_three(&sys);
    let real = sys.realize()?;
    let lp = real.feasibility()?;
    let out = match a.format {
        Format::Dot => to_dot(&real.subdivided, &real.paths, &verdict.to_string()),
        Format::Json => {
            let value = serde_json::json!({
                "verdict": verdict,
                "feasible": lp.is_feasible(),
                "weights": lp.witness().map(|w| w.normalized().to_named_map(&real.subdivided)),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
        }
        Format::Text => format!(
            "{verdict}\nlinear program: {}\n",
            if lp.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            }
        ),
    };
    Ok(Outcome::verdict(out, verdict.is_geodesible()))
}

/// `appendix-b`.
pub fn appendix_b(a: &AppendixArgs) -> Result<Outcome, CliError> {
    if a.format == Format::Dot {
        let mut out = String::new();
        for cfg in group_configs(a.group)? {
            if !(a.distinct_only && cfg.is_degenerate()) {
                out.push_str(&config_dot(&cfg)?);
            }
        }
        return Ok(Outcome::ok(out));
    }
    let all = enumerate_group(a.group)?;
    let diffs = if a.diff_paper {
        Some(diff_paper(a.group, &all))
    } else {
        None
    };
    let rows: Vec<_> = all
        .iter()
        .filter(|r| !(a.distinct_only && !r.identifications.is_empty()))
        .collect();
    let mut out = String::new();
    match a.format {
        Format::Json => {
            out = serde_json::to_string_pretty(&rows).unwrap();
            out.push('\n');
        }
        _ => {
            let width = rows
                .iter()
                .map(|r| r.orders.join(" | ").len())
                .max()
                .unwrap_or(0);
            for r in &rows {
                let ids = if r.identifications.is_empty() {
                    "-".to_string()
                } else {
                    r.identifications.join(",")
                };
                writeln!(
                    out,
                    "{:<9} {:<width$}  {:<7} {:<12} {}",
                    r.case,
                    r.orders.join(" | "),
                    ids,
                    if r.admissible {
                        "admissible"
                    } else {
                        "excluded"
                    },
                    r.verdict,
                )
                .unwrap();
            }
            let admissible = rows.iter().filter(|r| r.admissible).count();
            writeln!(out, "{} rows, {admissible} admissible", rows.len()).unwrap();
        }
    }
    let mut code = 0;
    if let Some(diffs) = diffs {
        if diffs.is_empty() {
            eprintln!("agrees with the published case analysis");
        } else {
            for d in &diffs {
                eprintln!("mismatch: {d}");
            }
            code = 4;
        }
    }
    Ok(Outcome { stdout: out, code })
}

/// `export-dot`.
pub fn export_dot(a: &ExportArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.source)?;
    let sub = two_subdivision(&g);
    let paths = match &a.cover {
        Some(p) => read_cover(&read_file(p)?, &sub)?,
        None => Vec::new(),
    };
    Ok(Outcome::ok(to_dot(&sub, &paths, "graph")))
}
