//! Batch property checks driven by a JSON config.
//!
//! A config lists properties to check together with the instance ranges:
//!
//! ```text
//! {"seed": 0, "checks": [
//!   {"property": "schrijver", "max_n": 13},
//!   {"property": "zig_le_chi", "max_order": 6}
//! ]}
//! ```
//!
//! An optional `"limits"` map (same keys as the environment override)
//! replaces the caller's size limits, e.g. `{"cd": 15}` so that Kneser
//! representations of 5-vertex graphs fit.
//!
//! Instances of one check run in parallel; results are collected in
//! instance order, so the report is identical from run to run.

use std::fmt::Write;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{cd, chromatic_number, is_zigzag, zig};
use crate::certificates::{
    clique_minor_number, odd_clique_minor_number, verify_minor_model, verify_odd_expansion,
    MinorModel, OddExpansion,
};
use crate::constructions::{extract_minor_from_kneser_rep, odd_hadwiger_witness, schrijver_expansion};
use crate::decompose::{bipartite_connected_partition, partition_coloring, verify_partition, PartitionCertificate};
use crate::enumerate::{
    labeled_count, labeled_graph, nonisomorphic_graphs, random_graph, random_hypergraph, rng,
    MAX_ENUM_ORDER,
};
use crate::error::{Error, Result};
use crate::families::{kneser_graph, kneser_representation, schrijver};
use crate::graph::{is_proper, Graph, Hypergraph};
use crate::limits::Limits;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub seed: u64,
    /// Size limits for this sweep; the caller's limits apply when absent.
    #[serde(default)]
    pub limits: Option<Limits>,
    pub checks: Vec<CheckSpec>,
}

fn default_random_order() -> usize {
    7
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "property", rename_all = "snake_case", deny_unknown_fields)]
pub enum CheckSpec {
    /// Schrijver expansions for all `2 <= 2k <= n <= max_n`.
    Schrijver { max_n: u32 },
    /// Odd clique expansions on all graphs up to isomorphism with
    /// `1..=max_order` vertices plus `random` random graphs.
    OddHadwiger {
        max_order: usize,
        #[serde(default)]
        random: usize,
        #[serde(default = "default_random_order")]
        random_order: usize,
    },
    /// Minor models from random Kneser representations.
    Dolnikov {
        random: usize,
        max_ground: u32,
        max_edges: usize,
    },
    ZigLeChi { max_order: usize },
    /// Exhaustive over labeled graphs up to `max_order`, plus random graphs
    /// with up to `random_max_order` vertices.
    Decomposition {
        max_order: usize,
        #[serde(default)]
        random: usize,
        #[serde(default)]
        random_max_order: usize,
    },
    RoundTrip { max_order: usize },
    OracleConsistency { max_order: usize },
    ExpansionCertificate { graph: Graph, certificate: OddExpansion },
    MinorCertificate { graph: Graph, certificate: MinorModel },
    PartitionCertificate { graph: Graph, certificate: PartitionCertificate },
}

impl CheckSpec {
    fn name(&self) -> &'static str {
        match self {
            CheckSpec::Schrijver { .. } => "schrijver",
            CheckSpec::OddHadwiger { .. } => "odd_hadwiger",
            CheckSpec::Dolnikov { .. } => "dolnikov",
            CheckSpec::ZigLeChi { .. } => "zig_le_chi",
            CheckSpec::Decomposition { .. } => "decomposition",
            CheckSpec::RoundTrip { .. } => "round_trip",
            CheckSpec::OracleConsistency { .. } => "oracle_consistency",
            CheckSpec::ExpansionCertificate { .. } => "expansion_certificate",
            CheckSpec::MinorCertificate { .. } => "minor_certificate",
            CheckSpec::PartitionCertificate { .. } => "partition_certificate",
        }
    }

    fn validate(&self) -> Result<()> {
        let order_ok = |n: usize| {
            if n > MAX_ENUM_ORDER {
                Err(Error::input(format!("{}: orders above {MAX_ENUM_ORDER} cannot be enumerated", self.name())))
            } else {
                Ok(())
            }
        };
        match *self {
            CheckSpec::OddHadwiger { max_order, random_order, .. } => {
                order_ok(max_order)?;
                order_ok(random_order)
            }
            CheckSpec::ZigLeChi { max_order }
            | CheckSpec::Decomposition { max_order, .. }
            | CheckSpec::RoundTrip { max_order }
            | CheckSpec::OracleConsistency { max_order } => order_ok(max_order),
            CheckSpec::Dolnikov { max_ground, max_edges, .. } if max_ground == 0 || max_edges == 0 => {
                Err(Error::input("dolnikov: max_ground and max_edges must be positive"))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub property: String,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub passed: bool,
    pub results: Vec<CheckOutcome>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table, one row per check.
    pub fn table(&self) -> String {
        let mut out = format!("{:<24} {:>9} {:>9}  status\n", "property", "instances", "failures");
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<24} {:>9} {:>9}  {}",
                r.property,
                r.instances,
                r.failures,
                if r.passed() { "PASS" } else { "FAIL" }
            );
        }
        out
    }
}

pub fn parse_config(raw: &str) -> Result<SweepConfig> {
    let config: SweepConfig = serde_json::from_str(raw)?;
    for check in &config.checks {
        check.validate()?;
    }
    Ok(config)
}

type Verdict = std::result::Result<(), String>;

fn run_instances<T, K, F>(property: &str, items: &[T], key: K, check: F) -> CheckOutcome
where
    T: Sync,
    K: Fn(usize, &T) -> String + Sync,
    F: Fn(&T) -> Verdict + Sync,
{
    let verdicts: Vec<Option<String>> = items
        .par_iter()
        .enumerate()
        .map(|(i, item)| check(item).err().map(|why| format!("{}: {why}", key(i, item))))
        .collect();
    let failures = verdicts.iter().filter(|v| v.is_some()).count();
    CheckOutcome {
        property: property.to_string(),
        instances: items.len(),
        failures,
        first_failure: verdicts.into_iter().flatten().next(),
    }
}

fn describe(g: &Graph) -> String {
    format!("graph {}", g.to_json())
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn check_schrijver(n: u32, k: u32) -> Verdict {
    let g = lib(schrijver(n, k))?;
    let x = lib(schrijver_expansion(n, k))?;
    let report = verify_odd_expansion(&g, &x);
    if !report.is_valid() {
        return Err(report.to_string());
    }
    let expected = (n - 2 * k + 2) as usize;
    if x.order() != expected {
        return Err(format!("{} trees, expected {expected}", x.order()));
    }
    Ok(())
}

fn check_odd_hadwiger(g: &Graph, limits: &Limits) -> Verdict {
    let (l, x) = lib(odd_hadwiger_witness(g))?;
    let report = verify_odd_expansion(g, &x);
    if !report.is_valid() {
        return Err(report.to_string());
    }
    if x.order() != l / 2 + 1 {
        return Err(format!("zigzag length {l} but certificate has {} trees", x.order()));
    }
    let (z, _, _) = lib(zig(g, limits))?;
    if x.order() < z / 2 + 1 {
        return Err(format!("order {} below zig/2 + 1 with zig = {z}", x.order()));
    }
    Ok(())
}

fn check_dolnikov(h: &Hypergraph, limits: &Limits) -> Verdict {
    let (order, m) = lib(extract_minor_from_kneser_rep(h, limits))?;
    let kg = kneser_graph(h);
    let report = verify_minor_model(&kg, &m);
    if !report.is_valid() {
        return Err(report.to_string());
    }
    let (defect, _) = lib(cd(h, limits))?;
    if order != defect || m.order() != defect {
        return Err(format!("order {order} (model {}) but cd = {defect}", m.order()));
    }
    let (chi, _) = lib(chromatic_number(&kg, limits))?;
    if defect > chi {
        return Err(format!("cd = {defect} exceeds chromatic number {chi}"));
    }
    Ok(())
}

fn check_zig_le_chi(g: &Graph, limits: &Limits) -> Verdict {
    let (z, c, w) = lib(zig(g, limits))?;
    let (chi, _) = lib(chromatic_number(g, limits))?;
    if !lib(is_proper(g, &c))? || !lib(is_zigzag(g, &c, &w.sequence))? || w.len() != z {
        return Err("zig witness does not check out".into());
    }
    if z > chi {
        return Err(format!("zig = {z} exceeds chromatic number {chi}"));
    }
    Ok(())
}

fn check_decomposition(g: &Graph) -> Verdict {
    let p = lib(bipartite_connected_partition(g))?;
    let report = verify_partition(g, &p);
    if !report.is_valid() {
        return Err(report.to_string());
    }
    let c = lib(partition_coloring(g, &p))?;
    if !lib(is_proper(g, &c))? {
        return Err("partition coloring is not proper".into());
    }
    Ok(())
}

fn check_round_trip(g: &Graph) -> Verdict {
    let back = kneser_graph(&kneser_representation(g));
    if back.order() != g.order() || back.edges() != g.edges() {
        return Err(format!("round trip produced {}", back.to_json()));
    }
    Ok(())
}

fn check_oracles(g: &Graph, limits: &Limits) -> Verdict {
    let odd = lib(odd_clique_minor_number(g, limits))?;
    let plain = lib(clique_minor_number(g, limits))?;
    if odd > plain {
        return Err(format!("odd Hadwiger number {odd} exceeds Hadwiger number {plain}"));
    }
    let thm1 = lib(odd_hadwiger_witness(g))?.1.order();
    if thm1 > odd {
        return Err(format!("odd expansion of order {thm1} but oracle says {odd}"));
    }
    let (thm2, _) = lib(extract_minor_from_kneser_rep(&kneser_representation(g), limits))?;
    if thm2 > plain {
        return Err(format!("minor model of order {thm2} but oracle says {plain}"));
    }
    let (chi, _) = lib(chromatic_number(g, limits))?;
    if chi <= 2 && odd > 2 {
        return Err(format!("bipartite graph with odd Hadwiger number {odd}"));
    }
    Ok(())
}

fn graphs_up_to(max_order: usize) -> Vec<Graph> {
    (1..=max_order).flat_map(nonisomorphic_graphs).collect()
}

fn run_check(spec: &CheckSpec, seed: u64, limits: &Limits) -> CheckOutcome {
    let name = spec.name();
    let by_graph = |_: usize, g: &Graph| describe(g);
    match spec {
        CheckSpec::Schrijver { max_n } => {
            let pairs: Vec<(u32, u32)> =
                (2..=*max_n).flat_map(|n| (1..=n / 2).map(move |k| (n, k))).collect();
            run_instances(name, &pairs, |_, &(n, k)| format!("S({n},{k})"), |&(n, k)| check_schrijver(n, k))
        }
        CheckSpec::OddHadwiger { max_order, random, random_order } => {
            let mut graphs = graphs_up_to(*max_order);
            let mut r = rng(seed);
            graphs.extend((0..*random).map(|_| random_graph(&mut r, *random_order)));
            run_instances(name, &graphs, by_graph, |g| check_odd_hadwiger(g, limits))
        }
        CheckSpec::Dolnikov { random, max_ground, max_edges } => {
            let mut r = rng(seed);
            let hs: Vec<Hypergraph> =
                (0..*random).map(|_| random_hypergraph(&mut r, *max_ground, *max_edges)).collect();
            run_instances(name, &hs, |_, h| format!("hypergraph {}", h.to_json()), |h| {
                check_dolnikov(h, limits)
            })
        }
        CheckSpec::ZigLeChi { max_order } => {
            run_instances(name, &graphs_up_to(*max_order), by_graph, |g| check_zig_le_chi(g, limits))
        }
        CheckSpec::Decomposition { max_order, random, random_max_order } => {
            let codes: Vec<(usize, u64)> = (1..=*max_order)
                .flat_map(|n| (0..labeled_count(n)).map(move |code| (n, code)))
                .collect();
            let exhaustive = run_instances(
                name,
                &codes,
                |_, &(n, code)| format!("labeled graph {code} on {n} vertices"),
                |&(n, code)| check_decomposition(&labeled_graph(n, code)),
            );
            let mut r = rng(seed);
            let graphs: Vec<Graph> = (0..*random)
                .map(|_| {
                    let n = r.gen_range(1..=(*random_max_order).max(1));
                    random_graph(&mut r, n)
                })
                .collect();
            let sampled = run_instances(name, &graphs, by_graph, check_decomposition);
            CheckOutcome {
                property: name.to_string(),
                instances: exhaustive.instances + sampled.instances,
                failures: exhaustive.failures + sampled.failures,
                first_failure: exhaustive.first_failure.or(sampled.first_failure),
            }
        }
        CheckSpec::RoundTrip { max_order } => {
            run_instances(name, &graphs_up_to(*max_order), by_graph, check_round_trip)
        }
        CheckSpec::OracleConsistency { max_order } => {
            run_instances(name, &graphs_up_to(*max_order), by_graph, |g| check_oracles(g, limits))
        }
        CheckSpec::ExpansionCertificate { graph, certificate } => {
            run_instances(name, &[()], |_, _| "fixture".into(), |_| {
                let r = verify_odd_expansion(graph, certificate);
                if r.is_valid() { Ok(()) } else { Err(r.to_string()) }
            })
        }
        CheckSpec::MinorCertificate { graph, certificate } => {
            run_instances(name, &[()], |_, _| "fixture".into(), |_| {
                let r = verify_minor_model(graph, certificate);
                if r.is_valid() { Ok(()) } else { Err(r.to_string()) }
            })
        }
        CheckSpec::PartitionCertificate { graph, certificate } => {
            run_instances(name, &[()], |_, _| "fixture".into(), |_| {
                let r = verify_partition(graph, certificate);
                if r.is_valid() { Ok(()) } else { Err(r.to_string()) }
            })
        }
    }
}

/// Runs every check of the config in order.
pub fn run_sweep(config: &SweepConfig, limits: &Limits) -> SweepReport {
    let limits = config.limits.as_ref().unwrap_or(limits);
    let results: Vec<CheckOutcome> =
        config.checks.iter().map(|c| run_check(c, config.seed, limits)).collect();
    SweepReport {
        seed: config.seed,
        passed: results.iter().all(CheckOutcome::passed),
        results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweep(raw: &str) -> SweepReport {
        run_sweep(&parse_config(raw).unwrap(), &Limits::default())
    }

    #[test]
    fn small_sweep_passes() {
        let report = sweep(
            r#"{"checks":[
                {"property":"schrijver","max_n":8},
                {"property":"odd_hadwiger","max_order":4,"random":5,"random_order":5},
                {"property":"dolnikov","random":10,"max_ground":5,"max_edges":6},
                {"property":"zig_le_chi","max_order":4},
                {"property":"decomposition","max_order":4,"random":10,"random_max_order":9},
                {"property":"round_trip","max_order":4},
                {"property":"oracle_consistency","max_order":4}
            ]}"#,
        );
        assert!(report.passed, "{}", report.to_json());
        assert_eq!(report.seed, 0);
        assert_eq!(report.results[0].instances, (2..=8u32).map(|n| (n / 2) as usize).sum::<usize>());
    }

    #[test]
    fn corrupted_fixture_fails() {
        // two disjoint singletons in K2 are fine, but the connector is missing
        let report = sweep(
            r#"{"checks":[{"property":"minor_certificate",
                "graph":{"n":2,"edges":[[0,1]]},
                "certificate":{"branch_sets":[[0],[1]],"links":[]}}]}"#,
        );
        assert!(!report.passed);
        assert_eq!(report.results[0].failures, 1);
        assert!(report.results[0].first_failure.is_some());
    }

    #[test]
    fn bad_configs_are_rejected() {
        assert!(parse_config(r#"{"checks":[{"property":"nope"}]}"#).is_err());
        assert!(parse_config(r#"{"checks":[{"property":"round_trip","max_order":9}]}"#).is_err());
        assert!(parse_config(r#"{"checks":[{"property":"round_trip","max_order":3,"x":1}]}"#).is_err());
        assert!(parse_config(r#"{"seed":1}"#).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let raw = r#"{"seed":5,"checks":[{"property":"dolnikov","random":20,"max_ground":6,"max_edges":8}]}"#;
        assert_eq!(sweep(raw).to_json(), sweep(raw).to_json());
    }
}
