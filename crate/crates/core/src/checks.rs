//! Cross-check suites: closed formulas against the exact-arithmetic oracle,
//! the procedure against the reference lists, and the combinatorial laws of the
//! duality maps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classifier::{self, PairVerdict, SphericalPairTable};
use crate::duality;
use crate::error::Result;
use crate::exec::{self, Execution};
use crate::lie::{self, CentralizerMode};
use crate::orbit::{self, Factor, OrbitDatum, ReductionMode, ReductiveFactorList};
use crate::partitions::{self, Family, GroupType, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult { name: name.into(), cases: 0, failures: Vec::new() }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suites: Vec<SuiteResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let mark = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{mark}  {:<18} {:>5} cases  {} failures", s.name, s.cases, s.failures.len())?;
            for msg in &s.failures {
                writeln!(f, "      {msg}")?;
            }
        }
        let verdict = if self.passed() { "all suites pass" } else { "some suites fail" };
        writeln!(f, "{verdict}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_dim: usize,
    pub oracle_bound: usize,
    pub trials: usize,
    pub seed: u64,
    pub exec: Execution,
}

pub fn run_checks(opts: &CheckOptions, table: &SphericalPairTable) -> Result<CheckReport> {
    let mut suites = oracle_suites(opts)?;
    suites.push(pair_table_suite(opts, table)?);
    suites.push(reference_list_suite(opts, table)?);
    suites.push(non_even_suite(opts, table)?);
    suites.push(bv_suite(opts.max_dim.min(12), opts.max_dim.min(10))?);
    suites.push(collapse_suite(opts.max_dim.min(12))?);
    suites.push(hook_dimension_suite(8.min(opts.max_dim / 2))?);
    Ok(CheckReport { suites })
}

fn classical_orbits(max_dim: usize, even_only: bool) -> Vec<OrbitDatum> {
    [Family::B, Family::C, Family::D]
        .into_iter()
        .flat_map(|f| classifier::family_orbits(f, max_dim, even_only))
        .collect()
}

/// Centralizer dimension, graded dimensions and Jordan type, each against the oracle.
pub fn oracle_suites(opts: &CheckOptions) -> Result<Vec<SuiteResult>> {
    let orbits = classical_orbits(opts.oracle_bound, false);
    let bound = opts.oracle_bound.max(1);
    let rows = exec::map(opts.exec, &orbits, |o| -> Result<(usize, bool, Partition)> {
        let alg = lie::build_algebra_bounded(o.group, bound)?;
        let t = lie::build_triple_bounded(o, bound)?;
        let graded = lie::graded_dims_oracle(&alg, &t)? == orbit::graded_dims(o);
        Ok((lie::centralizer_dim(&alg, &t, CentralizerMode::E), graded, lie::jordan_type(&t.e)?))
    });
    let mut cent = SuiteResult::new("dim_centralizer");
    let mut graded = SuiteResult::new("graded_dims");
    let mut jordan = SuiteResult::new("jordan_type");
    for (o, row) in orbits.iter().zip(rows) {
        let (c, g, j) = row?;
        let formula = orbit::dim_centralizer(o);
        cent.case(c == formula, || format!("{o}: formula {formula}, oracle {c}"));
        graded.case(g, || format!("{o}: graded dimensions differ"));
        jordan.case(j == o.lambda, || format!("{o}: constructed e has Jordan type {j}"));
    }
    Ok(vec![cent, graded, jordan])
}

/// Each table entry whose witness fits the oracle bound: the witness must reach
/// the entry, and the oracle must not contradict the verdict.
pub fn pair_table_suite(opts: &CheckOptions, table: &SphericalPairTable) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("pair_table");
    for entry in &table.entries {
        let Some(w) = entry.witness.as_ref().filter(|w| w.group.dim <= opts.oracle_bound) else {
            continue;
        };
        let verdict = classifier::classify_with(w, None, table)?;
        suite.case(verdict.evidence.contains(&entry.id), || {
            format!("{}: witness {w} does not reach the entry ({verdict})", entry.id)
        });
        let (l, m) = lie::levi_and_centralizer(w, opts.oracle_bound)?;
        let cert = lie::spherical_certify_with(&l, &m, opts.trials.max(1), opts.seed, opts.exec)?;
        let consistent = match entry.verdict {
            PairVerdict::Spherical => cert.is_certified(),
            PairVerdict::NotSpherical => !cert.is_certified(),
        };
        suite.case(consistent, || format!("{}: table says {:?}, oracle on {w} gives {cert:?}", entry.id, entry.verdict));
    }
    Ok(suite)
}

pub fn reference_list_suite(opts: &CheckOptions, table: &SphericalPairTable) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("reference_lists");
    let orbits = classical_orbits(opts.max_dim, true);
    let verdicts = classifier::classify_orbits(&orbits, table, opts.exec)?;
    for (o, v) in orbits.iter().zip(verdicts) {
        let expected = classifier::reference_list(o.group).contains(&o.lambda);
        suite.case(expected == v.is_candidate(), || format!("{o}: procedure says {v}, reference list says {expected}"));
    }
    Ok(suite)
}

pub fn non_even_suite(opts: &CheckOptions, table: &SphericalPairTable) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("non_even");
    let orbits: Vec<OrbitDatum> =
        classical_orbits(opts.max_dim.min(12), false).into_iter().filter(|o| !o.is_even()).collect();
    let verdicts = classifier::classify_orbits(&orbits, table, opts.exec)?;
    for (o, v) in orbits.iter().zip(verdicts) {
        let (even, odd) = o.parity_blocks();
        let mut blocks = true;
        for b in [even, odd].iter().flatten() {
            blocks &= classifier::classify_with(b, None, table)?.is_candidate();
        }
        suite.case(blocks == v.is_candidate(), || format!("{o}: {v}, blocks give {blocks}"));
    }
    Ok(suite)
}

fn bv_groups(max_dim: usize) -> Vec<GroupType> {
    (1..=max_dim)
        .flat_map(|n| [Family::B, Family::C, Family::D].into_iter().filter_map(move |f| GroupType::new(f, n).ok()))
        .collect()
}

/// `d o d o d = d` up to `range_dim`, order reversal up to `order_dim`.
pub fn bv_suite(range_dim: usize, order_dim: usize) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("bv_duality");
    let has_dual = |g: &GroupType| g.family != Family::B || g.dim > 1;
    for g in bv_groups(range_dim).into_iter().filter(has_dual) {
        for l in partitions::valid_partitions(g) {
            let (g1, d1) = duality::bv_dual(g, &l)?;
            let (g2, d2) = duality::bv_dual(g1, &d1)?;
            let (g3, d3) = duality::bv_dual(g2, &d2)?;
            suite.case(g2 == g && g3 == g1 && d3 == d1, || format!("{g} {l}: d = {d1}, d^3 = {d3}"));
        }
    }
    for g in bv_groups(order_dim).into_iter().filter(has_dual) {
        let valid = partitions::valid_partitions(g);
        let duals: Vec<Partition> = valid.iter().map(|l| duality::bv_dual(g, l).map(|r| r.1)).collect::<Result<_>>()?;
        for (i, l) in valid.iter().enumerate() {
            for (j, m) in valid.iter().enumerate() {
                if i == j || !l.dominates(m)? {
                    continue;
                }
                let ok = duals[j].dominates(&duals[i])?;
                suite.case(ok, || format!("{g}: {l} >= {m} but d({m}) = {} does not dominate d({l}) = {}", duals[j], duals[i]));
            }
        }
    }
    Ok(suite)
}

/// The largest valid partition dominated by `lambda`, by exhaustive search.
pub fn collapse_oracle(group: GroupType, lambda: &Partition) -> Result<Option<Partition>> {
    let below: Vec<Partition> = partitions::valid_partitions(group)
        .into_iter()
        .filter(|m| lambda.dominates(m).unwrap_or(false))
        .collect();
    for m in &below {
        let mut top = true;
        for other in &below {
            top &= m.dominates(other)?;
        }
        if top {
            return Ok(Some(m.clone()));
        }
    }
    Ok(None)
}

pub fn collapse_suite(max_dim: usize) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("collapse");
    for g in bv_groups(max_dim) {
        for l in Partition::all(g.dim) {
            let got = partitions::collapse(g, &l)?;
            let want = collapse_oracle(g, &l)?;
            suite.case(want.as_ref() == Some(&got), || format!("{g} {l}: collapse {got}, oracle {want:?}"));
        }
    }
    Ok(suite)
}

/// The hook datum `(D_k, O_{2k-2a+1}, [2a-1, 1^{2k-2a+1}])` has dimension `4ka - 2a^2`,
/// which is also the Whittaker reduction of `4ka` by `Sp_{2a}`.
pub fn hook_dimension_suite(max_k: usize) -> Result<SuiteResult> {
    let mut suite = SuiteResult::new("hook_dimensions");
    for k in 2..=max_k {
        for a in 1..k {
            let r = 2 * k - 2 * a + 1;
            let o = OrbitDatum::new(GroupType::d(2 * k), Partition::hook(2 * a - 1, r))?;
            let h = ReductiveFactorList::new(vec![Factor::o(r)]);
            let dim = orbit::whittaker_induction_dim(&o, &h, 0)?;
            let reduced = orbit::reduction_dims(4 * k * a, GroupType::c(2 * a), ReductionMode::Whittaker)?;
            let want = 4 * k * a - 2 * a * a;
            suite.case(dim == want && reduced == want, || format!("k={k}, a={a}: dim {dim}, reduction {reduced}, expected {want}"));
        }
    }
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CheckOptions {
        CheckOptions { max_dim: 8, oracle_bound: 6, trials: 8, seed: 0, exec: Execution::default() }
    }

    #[test]
    fn small_config_passes() {
        let report = run_checks(&small(), SphericalPairTable::embedded()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.suite("dim_centralizer").unwrap().cases > 10);
    }

    #[test]
    fn tampered_entry_is_named() {
        let mut table = SphericalPairTable::embedded().clone();
        let entry = table.entries.iter_mut().find(|e| e.id == "so-codim-one").unwrap();
        entry.verdict = PairVerdict::NotSpherical;
        let opts = CheckOptions { oracle_bound: 8, ..small() };
        let suite = pair_table_suite(&opts, &table).unwrap();
        assert!(suite.failures.iter().any(|f| f.starts_with("so-codim-one")), "{suite:?}");
    }

    #[test]
    fn collapse_oracle_examples() {
        let got = collapse_oracle(GroupType::b(7), &"3,2,1,1".parse().unwrap()).unwrap();
        assert_eq!(got, Some("3,1,1,1,1".parse().unwrap()));
    }
}
