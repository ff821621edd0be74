//! Per-orbit reports, their JSON/CSV/text renderings, and the command entry
//! points used by the command-line front end.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::checks::{self, CheckOptions, CheckReport};
use crate::classifier::{self, ClassificationVerdict, SphericalPairTable};
use crate::duality::{self, DualOutcome, DualPairRecord, HypersphericalDatum, SDescriptor};
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::lie;
use crate::orbit::{self, EmbeddingGraph, OrbitDatum, ReductiveFactorList};
use crate::partitions::{Family, GroupType, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::Parse(format!("unknown output format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub max_dim: usize,
    pub oracle_bound: usize,
    pub trials: usize,
    pub seed: u64,
    pub format: OutputFormat,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_dim: 16, oracle_bound: 10, trials: 8, seed: 0, format: OutputFormat::Json, jobs: None }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.max_dim == 0 {
            return Err(Error::Precondition("max_dim must be positive".into()));
        }
        if self.oracle_bound > self.max_dim {
            return Err(Error::Precondition(format!(
                "oracle_bound {} exceeds max_dim {}",
                self.oracle_bound, self.max_dim
            )));
        }
        if self.oracle_bound > lie::DEFAULT_BOUND {
            return Err(Error::BoundExceeded { dim: self.oracle_bound, bound: lie::DEFAULT_BOUND });
        }
        if self.trials == 0 {
            return Err(Error::Precondition("trials must be positive".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::Precondition("jobs must be positive".into()));
        }
        Ok(())
    }

    fn check_options(&self) -> CheckOptions {
        CheckOptions {
            max_dim: self.max_dim,
            oracle_bound: self.oracle_bound,
            trials: self.trials,
            seed: self.seed,
            exec: Execution::Parallel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInvariants {
    pub dim_group: usize,
    pub dim_orbit: usize,
    pub dim_centralizer: usize,
    pub m_gamma: ReductiveFactorList,
    pub levi: ReductiveFactorList,
    pub graph: EmbeddingGraph,
    pub even: bool,
    pub graded_dims: BTreeMap<i64, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub orbit: OrbitDatum,
    pub invariants: OrbitInvariants,
    pub verdict: ClassificationVerdict,
    pub dual: Option<DualPairRecord>,
}

pub fn report(orbit: &OrbitDatum) -> Result<ReportRecord> {
    let invariants = OrbitInvariants {
        dim_group: orbit::dim_group(orbit.group),
        dim_orbit: orbit::dim_orbit(orbit),
        dim_centralizer: orbit::dim_centralizer(orbit),
        m_gamma: orbit::centralizer_reductive(orbit),
        levi: orbit::levi(orbit)?,
        graph: orbit::embedding_graph(orbit)?,
        even: orbit.is_even(),
        graded_dims: orbit::graded_dims(orbit),
    };
    let verdict = classifier::classify(orbit)?;
    let dual = match duality::dual_of(&HypersphericalDatum::from_orbit(orbit, SDescriptor::Zero)?) {
        DualOutcome::Known(rec) => Some(rec),
        DualOutcome::Unknown { .. } => None,
    };
    Ok(ReportRecord { orbit: orbit.clone(), invariants, verdict, dual })
}

/// Parses `"D:8 5,1,1,1"`.
pub fn parse_orbit_spec(spec: &str) -> Result<OrbitDatum> {
    let mut it = spec.split_whitespace();
    let (Some(group), lambda) = (it.next(), it.next()) else {
        return Err(Error::Parse(format!("expected \"FAMILY:DIM PARTITION\", got {spec:?}")));
    };
    if it.next().is_some() {
        return Err(Error::Parse(format!("trailing input in {spec:?}")));
    }
    OrbitDatum::parse(group, lambda.unwrap_or(""))
}

pub const CSV_COLUMNS: [&str; 14] = [
    "group",
    "partition",
    "even",
    "dim_orbit",
    "dim_centralizer",
    "m_gamma",
    "levi",
    "status",
    "kind",
    "reason",
    "evidence",
    "dual",
    "dual_status",
    "citation",
];

fn csv_row(r: &ReportRecord) -> Vec<String> {
    let v = &r.verdict;
    vec![
        r.orbit.group.to_string(),
        r.orbit.lambda.to_string(),
        r.invariants.even.to_string(),
        r.invariants.dim_orbit.to_string(),
        r.invariants.dim_centralizer.to_string(),
        r.invariants.m_gamma.to_string(),
        r.invariants.levi.to_string(),
        format!("{:?}", v.status),
        v.kind.as_ref().map(ToString::to_string).unwrap_or_default(),
        v.reason.as_ref().map(ToString::to_string).unwrap_or_default(),
        v.evidence.join(";"),
        r.dual.as_ref().map(|d| d.side_b.to_string()).unwrap_or_default(),
        r.dual.as_ref().map(|d| format!("{:?}", d.status)).unwrap_or_default(),
        r.dual.as_ref().map(|d| d.citation.clone()).unwrap_or_default(),
    ]
}

fn to_csv<I, R>(header: &[&str], rows: I) -> Result<String>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let internal = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(internal)?;
    for row in rows {
        w.write_record(row).map_err(internal)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(format!("json: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn record_text(r: &ReportRecord, out: &mut String) {
    let inv = &r.invariants;
    let _ = writeln!(out, "{}  {}", r.orbit, r.verdict);
    let parity = if inv.even { "even" } else { "mixed parity" };
    let _ = writeln!(
        out,
        "  dim O = {}, dim Z = {}, M = {}, L = {}, {parity}",
        inv.dim_orbit, inv.dim_centralizer, inv.m_gamma, inv.levi
    );
    if !r.verdict.evidence.is_empty() {
        let _ = writeln!(out, "  table: {}", r.verdict.evidence.join(", "));
    }
    if let Some(d) = &r.dual {
        let _ = writeln!(out, "  dual: {} [{:?}] {}", d.side_b, d.status, d.citation);
        for note in &d.notes {
            let _ = writeln!(out, "  note: {note}");
        }
    }
}

pub fn render_records(records: &[ReportRecord], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => to_json(&records),
        OutputFormat::Csv => to_csv(&CSV_COLUMNS, records.iter().map(csv_row)),
        OutputFormat::Text => {
            let mut out = String::new();
            records.iter().for_each(|r| record_text(r, &mut out));
            Ok(out)
        }
    }
}

pub fn cmd_classify(spec: &str, format: OutputFormat) -> Result<String> {
    let orbit = parse_orbit_spec(spec)?;
    render_records(&[report(&orbit)?], format)
}

/// Every B, C and D orbit up to `max_dim`, one record each, in enumeration order.
pub fn atlas_records(config: &Config) -> Result<Vec<ReportRecord>> {
    config.validate()?;
    let orbits: Vec<OrbitDatum> = [Family::B, Family::C, Family::D]
        .into_iter()
        .flat_map(|f| classifier::family_orbits(f, config.max_dim, false))
        .collect();
    exec::with_threads(config.jobs, || exec::map(Execution::Parallel, &orbits, report).into_iter().collect())
}

pub fn cmd_atlas(config: &Config) -> Result<String> {
    render_records(&atlas_records(config)?, config.format)
}

pub fn cmd_dual(datum: &HypersphericalDatum, format: OutputFormat) -> Result<String> {
    let outcome = duality::dual_of(datum);
    match format {
        OutputFormat::Json => to_json(&outcome),
        OutputFormat::Csv => {
            let row = match &outcome {
                DualOutcome::Known(r) => {
                    vec![r.side_a.to_string(), r.side_b.to_string(), format!("{:?}", r.status), r.citation.clone()]
                }
                DualOutcome::Unknown { verdict } => vec![
                    datum.to_string(),
                    String::new(),
                    "Unknown".into(),
                    verdict.as_ref().map(ToString::to_string).unwrap_or_default(),
                ],
            };
            to_csv(&["side_a", "side_b", "status", "citation"], [row])
        }
        OutputFormat::Text => Ok(match outcome {
            DualOutcome::Known(r) => {
                let mut s = format!("{}\n  <-> {}\n  [{:?}] {}\n", r.side_a, r.side_b, r.status, r.citation);
                r.notes.iter().for_each(|n| s.push_str(&format!("  note: {n}\n")));
                s
            }
            DualOutcome::Unknown { verdict: Some(v) } => format!("{datum}\n  dual unknown; classifier: {v}\n"),
            DualOutcome::Unknown { verdict: None } => format!("{datum}\n  dual unknown\n"),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapResult {
    pub source: OrbitDatum,
    pub target: OrbitDatum,
}

fn render_map(m: &MapResult, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => to_json(m),
        OutputFormat::Csv => to_csv(
            &["source_group", "source_partition", "target_group", "target_partition"],
            [[m.source.group.to_string(), m.source.lambda.to_string(), m.target.group.to_string(), m.target.lambda.to_string()]],
        ),
        OutputFormat::Text => Ok(format!("{} -> {}\n", m.source, m.target)),
    }
}

pub fn cmd_transfer(source: &OrbitDatum, target: GroupType, format: OutputFormat) -> Result<String> {
    let image = duality::moment_transfer(source, target)?;
    render_map(&MapResult { source: source.clone(), target: image }, format)
}

pub fn cmd_bv(group: GroupType, lambda: &Partition, format: OutputFormat) -> Result<String> {
    let source = OrbitDatum::new(group, lambda.clone())?;
    let (g, l) = duality::bv_dual(group, lambda)?;
    render_map(&MapResult { source, target: OrbitDatum::new(g, l)? }, format)
}

pub fn cmd_check(config: &Config, table: &SphericalPairTable) -> Result<CheckReport> {
    config.validate()?;
    exec::with_threads(config.jobs, || checks::run_checks(&config.check_options(), table))
}

pub fn render_check(report: &CheckReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => to_csv(
            &["suite", "passed", "cases", "failures"],
            report.suites.iter().map(|s| {
                [s.name.clone(), s.passed().to_string(), s.cases.to_string(), s.failures.join(" | ")]
            }),
        ),
        OutputFormat::Text => Ok(report.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{CandidateKind, RejectReason};
    use crate::duality::DualSide;

    #[test]
    fn classify_hook_with_dual() {
        let r = report(&parse_orbit_spec("D:8 5,1,1,1").unwrap()).unwrap();
        assert_eq!(r.verdict.kind, Some(CandidateKind::Hook));
        let dual = r.dual.unwrap();
        assert!(matches!(dual.side_b, DualSide::Datum(ref d) if d.h.to_string() == "O7"));
    }

    #[test]
    fn classify_lemma_failure() {
        let r = report(&parse_orbit_spec("D:12 4,4,2,2").unwrap()).unwrap();
        assert!(matches!(r.verdict.reason, Some(RejectReason::FailsDimensionLemma { .. })));
    }

    #[test]
    fn invalid_orbit_names_rule() {
        let err = cmd_classify("D:8 2,1,1,1,1,1,1", OutputFormat::Text).unwrap_err();
        assert!(err.to_string().contains("even parts must occur with even multiplicity"), "{err}");
    }

    #[test]
    fn records_round_trip_through_json() {
        let cfg = Config { max_dim: 6, oracle_bound: 6, ..Config::default() };
        let records = atlas_records(&cfg).unwrap();
        let text = render_records(&records, OutputFormat::Json).unwrap();
        let back: Vec<ReportRecord> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, records);
    }

    #[test]
    fn csv_has_one_row_per_orbit() {
        let cfg = Config { max_dim: 8, oracle_bound: 8, format: OutputFormat::Csv, ..Config::default() };
        let out = cmd_atlas(&cfg).unwrap();
        let orbits: usize = [Family::B, Family::C, Family::D]
            .into_iter()
            .map(|f| classifier::family_orbits(f, 8, false).len())
            .sum();
        assert_eq!(out.lines().count(), orbits + 1);
        assert!(out.starts_with(&CSV_COLUMNS.join(",")));
    }

    #[test]
    fn config_validation() {
        assert!(Config::default().validate().is_ok());
        assert!(Config { oracle_bound: 12, max_dim: 10, ..Config::default() }.validate().is_err());
        assert!(Config { trials: 0, ..Config::default() }.validate().is_err());
    }

    #[test]
    fn rendered_citations_come_from_data() {
        let cfg = Config { max_dim: 12, ..Config::default() };
        let atlas = duality::Atlas::embedded();
        for r in atlas_records(&cfg).unwrap() {
            if let Some(d) = r.dual {
                let known = atlas.rows.iter().any(|row| row.citation == d.citation)
                    || atlas.rule_citations.values().any(|c| *c == d.citation);
                assert!(known, "{}", d.citation);
            }
        }
    }
}
