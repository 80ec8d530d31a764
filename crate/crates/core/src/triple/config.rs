use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::io::to_dot;

use super::system::{classify_three, OrientedPathSystem, Realization, Verdict};

/// The first group: points `a ∈ X1 ∩ X3`, `b ∈ X1 ∩ X2`, `c ∈ X2 ∩ X3` with
/// `a ≺₁ b ≺₂ c ≺₃ a`, plus `e ∈ X1 ∩ X3` and `f ∈ X1 ∩ X2`. `<=` marks a
/// relation that may also be an equality.
pub const GROUP1: [&str; 21] = [
    "a<b<e<=f | b<c<f | c<a<e",
    "a<b<e<=f | b<f<c | c<a<e",
    "a<b<f<=e | b<c<f | c<a<e",
    "a<b<f<=e | b<f<c | c<a<e",
    "a<e<b<f | b<c<f | c<a<e",
    "a<e<b<f | b<f<c | c<a<e",
    "a<e<=f<b | f<b<c | c<a<e",
    "a<f<b<e | f<b<c | c<a<e",
    "a<f<=e<b | f<b<c | c<a<e",
    "e<a<b<f | b<c<f | c<e<a",
    "e<a<b<f | b<c<f | e<c<a",
    "e<a<b<f | b<f<c | c<e<a",
    "e<a<b<f | b<f<c | e<c<a",
    "e<a<f<b | f<b<c | c<e<a",
    "e<a<f<b | f<b<c | e<c<a",
    "e<=f<a<b | f<b<c | c<e<a",
    "e<=f<a<b | f<b<c | e<c<a",
    "f<a<b<e | f<b<c | c<a<e",
    "f<a<e<b | f<b<c | c<a<e",
    "f<=e<a<b | f<b<c | c<e<a",
    "f<=e<a<b | f<b<c | e<c<a",
];

/// The second group's case grid: `a, b ∈ X2 ∩ X3` in opposite orders,
/// `c, e ∈ X1 ∩ X2`, `f, g ∈ X1 ∩ X3`, one row per path.
pub const GROUP2_ROWS: [&[(&str, &str)]; 3] = [
    &[
        ("1a", "c<e<=f<g"),
        ("1b", "c<=f<=e<=g"),
        ("1c", "c<=f<g<=e"),
        ("1d", "f<g<=c<e"),
        ("1e", "f<=c<=g<=e"),
        ("1f", "f<=c<e<=g"),
    ],
    &[
        ("2a", "a<b<=c<e"),
        ("2b", "a<=c<=b<=e"),
        ("2c", "a<=c<e<=b"),
        ("2d", "c<e<=a<b"),
        ("2e", "c<=a<=e<=b"),
        ("2f", "c<=a<b<=e"),
    ],
    &[
        ("3a", "f<g<=b<a"),
        ("3b", "f<=b<=g<=a"),
        ("3c", "f<=b<a<=g"),
    ],
];

/// Admissible first-group configurations with all points distinct.
pub const GROUP1_ADMISSIBLE: [usize; 4] = [6, 7, 12, 14];
/// First-group configurations admissible only after identifying `e = f`.
pub const GROUP1_ADMISSIBLE_IDENTIFIED: [usize; 1] = [9];
/// Admissible second-group grid cells with all points distinct.
pub const GROUP2_ADMISSIBLE: [&str; 7] = [
    "1a,2a,3a", "1a,2d,3a", "1c,2f,3a", "1f,2a,3c", "1f,2d,3c", "1d,2a,3a", "1d,2d,3a",
];

/// One arrangement of labelled points along three paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleConfig {
    pub group: u8,
    /// 1-based position in the group's list (grid order for the second group).
    pub index: usize,
    /// `(6)` style for the first group, `1a,2d,3a` for the second.
    pub case: String,
    /// Points of each path in order. An identified point is named by its
    /// members joined with `=`.
    pub orders: [Vec<String>; 3],
    pub identifications: Vec<Vec<String>>,
}

impl TripleConfig {
    pub fn is_degenerate(&self) -> bool {
        !self.identifications.is_empty()
    }

    pub fn system(&self) -> Result<OrientedPathSystem> {
        OrientedPathSystem::new(self.orders.to_vec())
    }

    /// `a<e=f<b` style rendering of each path.
    pub fn order_strings(&self) -> Vec<String> {
        self.orders.iter().map(|o| o.join("<")).collect()
    }

    pub fn identification_strings(&self) -> Vec<String> {
        self.identifications.iter().map(|c| c.join("=")).collect()
    }
}

/// Realizes a configuration as a graph with its three designated paths.
/// Fails if an identified point also appears under one of its member names.
pub fn config_to_graph(cfg: &TripleConfig) -> Result<Realization> {
    for class in &cfg.identifications {
        let name = class.join("=");
        for (i, o) in cfg.orders.iter().enumerate() {
            if let Some(m) = class.iter().find(|m| o.contains(m)) {
                return Err(Error::InconsistentConfig(format!(
                    "path {} lists `{m}` although it is identified as `{name}`",
                    i + 1
                )));
            }
        }
    }
    cfg.system()?.realize()
}

/// Can all three paths be geodesics at once?
pub fn check_admissible(cfg: &TripleConfig) -> Result<bool> {
    Ok(config_to_graph(cfg)?.feasibility()?.is_feasible())
}

/// A relation chain `x₀ r₀ x₁ r₁ …`, `weak[i]` meaning `rᵢ` may be `=`.
#[derive(Clone, Debug)]
struct Chain {
    labels: Vec<String>,
    weak: Vec<bool>,
}

fn parse_chain(s: &str) -> Chain {
    let mut labels = Vec::new();
    let mut weak = Vec::new();
    for (i, tok) in s.trim().split('<').enumerate() {
        let (w, l) = match tok.strip_prefix('=') {
            Some(rest) => (true, rest),
            None => (false, tok),
        };
        if i > 0 {
            weak.push(w);
        }
        labels.push(l.trim().to_string());
    }
    Chain { labels, weak }
}

/// The distinct-point configuration first, then every admissible way of
/// turning some `<=` relations into equalities. No two consecutive relations
/// of a chain may both become equalities, and the merged points must sit
/// consistently on every path.
fn variants(group: u8, index: usize, case: &str, chains: &[Chain; 3]) -> Vec<TripleConfig> {
    let slots: Vec<(usize, usize)> = chains
        .iter()
        .enumerate()
        .flat_map(|(c, ch)| {
            ch.weak
                .iter()
                .enumerate()
                .filter(|(_, &w)| w)
                .map(move |(k, _)| (c, k))
        })
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0u32..1 << slots.len() {
        let eq: BTreeSet<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        if eq.iter().any(|&(c, k)| eq.contains(&(c, k + 1))) {
            continue;
        }
        let mut parent: BTreeMap<String, String> = BTreeMap::new();
        for ch in chains {
            for l in &ch.labels {
                parent.insert(l.clone(), l.clone());
            }
        }
        fn find(p: &BTreeMap<String, String>, x: &str) -> String {
            let mut x = x.to_string();
            while p[&x] != x {
                x = p[&x].clone();
            }
            x
        }
        for &(c, k) in &eq {
            let (a, b) = (
                find(&parent, &chains[c].labels[k]),
                find(&parent, &chains[c].labels[k + 1]),
            );
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent.insert(hi, lo);
        }
        let mut classes: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for l in parent.keys() {
            classes
                .entry(find(&parent, l))
                .or_default()
                .insert(l.clone());
        }
        let name = |l: &str| {
            classes[&find(&parent, l)]
                .iter()
                .cloned()
                .collect::<Vec<_>>()
                .join("=")
        };
        let mut orders: [Vec<String>; 3] = Default::default();
        for (c, ch) in chains.iter().enumerate() {
            let mut seq: Vec<String> = Vec::new();
            for (k, l) in ch.labels.iter().enumerate() {
                let n = name(l);
                if k > 0 && seq.last() == Some(&n) {
                    if !eq.contains(&(c, k - 1)) {
                        continue 'mask;
                    }
                    continue;
                }
                if seq.contains(&n) {
                    continue 'mask;
                }
                seq.push(n);
            }
            orders[c] = seq;
        }
        let identifications = classes
            .values()
            .filter(|c| c.len() > 1)
            .map(|c| c.iter().cloned().collect())
            .collect();
        out.push(TripleConfig {
            group,
            index,
            case: case.to_string(),
            orders,
            identifications,
        });
    }
    out
}

fn chains_of(template: &str) -> [Chain; 3] {
    let parts: Vec<Chain> = template.split('|').map(parse_chain).collect();
    parts.try_into().expect("three chains")
}

/// Every configuration of a group, distinct-point variant first within each
/// case. Group 1 has 21 cases and group 2 has 108.
pub fn group_configs(group: u8) -> Result<Vec<TripleConfig>> {
    match group {
        1 => Ok(GROUP1
            .iter()
            .enumerate()
            .flat_map(|(i, t)| variants(1, i + 1, &format!("({})", i + 1), &chains_of(t)))
            .collect()),
        2 => {
            let mut out = Vec::new();
            let mut index = 0;
            for (l1, c1) in GROUP2_ROWS[0] {
                for (l2, c2) in GROUP2_ROWS[1] {
                    for (l3, c3) in GROUP2_ROWS[2] {
                        index += 1;
                        let chains = [parse_chain(c1), parse_chain(c2), parse_chain(c3)];
                        out.extend(variants(2, index, &format!("{l1},{l2},{l3}"), &chains));
                    }
                }
            }
            Ok(out)
        }
        g => Err(Error::InconsistentConfig(format!("unknown group {g}"))),
    }
}

/// One line of the configuration atlas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRow {
    pub group: u8,
    pub index: usize,
    pub case: String,
    pub orders: Vec<String>,
    pub identifications: Vec<String>,
    pub admissible: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<BTreeMap<String, String>>,
}

/// Checks every configuration of a group by linear programming, in parallel,
/// and also records the structural verdict.
pub fn enumerate_group(group: u8) -> Result<Vec<AtlasRow>> {
    group_configs(group)?
        .par_iter()
        .map(|cfg| {
            let real = config_to_graph(cfg)?;
            let r = real.feasibility()?;
            Ok(AtlasRow {
                group,
                index: cfg.index,
                case: cfg.case.clone(),
                orders: cfg.order_strings(),
                identifications: cfg.identification_strings(),
                admissible: r.is_feasible(),
                verdict: classify_three(&cfg.system()?),
                witness: r
                    .witness()
                    .map(|w| w.normalized().to_named_map(&real.subdivided)),
            })
        })
        .collect()
}

/// Differences between an atlas and the published case analysis, one line
/// each. Empty means agreement.
pub fn diff_paper(group: u8, rows: &[AtlasRow]) -> Vec<String> {
    let mut out = Vec::new();
    let cases: BTreeSet<usize> = rows.iter().map(|r| r.index).collect();
    let expected_cases = if group == 1 { 21 } else { 108 };
    if cases.len() != expected_cases {
        out.push(format!("{} cases, expected {expected_cases}", cases.len()));
    }
    let distinct: BTreeSet<&str> = rows
        .iter()
        .filter(|r| r.admissible && r.identifications.is_empty())
        .map(|r| r.case.as_str())
        .collect();
    let any: BTreeSet<&str> = rows
        .iter()
        .filter(|r| r.admissible)
        .map(|r| r.case.as_str())
        .collect();
    let (want_distinct, want_any): (BTreeSet<String>, BTreeSet<String>) = if group == 1 {
        let d: BTreeSet<String> = GROUP1_ADMISSIBLE.iter().map(|i| format!("({i})")).collect();
        let mut a = d.clone();
        a.extend(
            GROUP1_ADMISSIBLE_IDENTIFIED
                .iter()
                .map(|i| format!("({i})")),
        );
        (d, a)
    } else {
        let d: BTreeSet<String> = GROUP2_ADMISSIBLE.iter().map(|s| s.to_string()).collect();
        (d, BTreeSet::new())
    };
    let got: BTreeSet<String> = distinct.iter().map(|s| s.to_string()).collect();
    if got != want_distinct {
        out.push(format!(
            "admissible with distinct points: got {}, expected {}",
            fmt_set(&got),
            fmt_set(&want_distinct)
        ));
    }
    if group == 1 {
        let got: BTreeSet<String> = any.iter().map(|s| s.to_string()).collect();
        if got != want_any {
            out.push(format!(
                "admissible allowing identifications: got {}, expected {}",
                fmt_set(&got),
                fmt_set(&want_any)
            ));
        }
    }
    out
}

fn fmt_set(s: &BTreeSet<String>) -> String {
    format!("{{{}}}", s.iter().cloned().collect::<Vec<_>>().join(" "))
}

/// DOT drawing of a configuration's realized graph with its three paths.
pub fn config_dot(cfg: &TripleConfig) -> Result<String> {
    let real = config_to_graph(cfg)?;
    let mut title = format!("group {} {}", cfg.group, cfg.case);
    if cfg.is_degenerate() {
        title.push_str(&format!(" [{}]", cfg.identification_strings().join(", ")));
    }
    Ok(to_dot(&real.subdivided, &real.paths, &title))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(group: u8, case: &str) -> TripleConfig {
        group_configs(group)
            .unwrap()
            .into_iter()
            .find(|c| c.case == case && !c.is_degenerate())
            .unwrap()
    }

    #[test]
    fn case_counts() {
        let g1 = group_configs(1).unwrap();
        assert_eq!(g1.iter().filter(|c| !c.is_degenerate()).count(), 21);
        let g2 = group_configs(2).unwrap();
        assert_eq!(g2.iter().filter(|c| !c.is_degenerate()).count(), 108);
    }

    #[test]
    fn first_config_graph() {
        let real = config_to_graph(&base(1, "(1)")).unwrap();
        let labels = real
            .origin
            .names()
            .iter()
            .filter(|n| !n.starts_with('X'))
            .count();
        assert_eq!(labels, 5);
        assert_eq!(real.origin.vertex_count(), 5 + 6);
    }

    #[test]
    fn identified_points_are_glued() {
        let cfg = group_configs(1)
            .unwrap()
            .into_iter()
            .find(|c| c.case == "(9)" && c.is_degenerate())
            .unwrap();
        assert_eq!(
            cfg.identifications,
            vec![vec!["e".to_string(), "f".to_string()]]
        );
        let real = config_to_graph(&cfg).unwrap();
        assert!(real.origin.vertex_by_name("e=f").is_some());
        assert!(real.origin.vertex_by_name("e").is_none());
    }

    #[test]
    fn inconsistent_identification_is_rejected() {
        let mut cfg = base(1, "(1)");
        cfg.identifications = vec![vec!["e".into(), "f".into()]];
        assert!(matches!(
            config_to_graph(&cfg),
            Err(Error::InconsistentConfig(_))
        ));
    }

    #[test]
    fn single_configs() {
        assert!(check_admissible(&base(1, "(6)")).unwrap());
        assert!(!check_admissible(&base(1, "(1)")).unwrap());
        assert!(!check_admissible(&base(1, "(9)")).unwrap());
    }

    #[test]
    fn properness_rule() {
        // 1b: c<=f<=e<=g; c=f=e would merge two consecutive relations.
        let chains = [
            parse_chain("c<=f<=e<=g"),
            parse_chain("a<b"),
            parse_chain("b<a"),
        ];
        let v = variants(2, 1, "x", &chains);
        assert!(v
            .iter()
            .all(|c| c.identifications.iter().all(|k| k.len() <= 2)));
        assert_eq!(v.len(), 5);
    }
}
