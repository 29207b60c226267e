//! The acceptance battery: one entry per criterion, all runs at a single
//! master seed. Used by the `suite` subcommand and the acceptance tests.

use serde::Serialize;

use super::{exponent_check, ExperimentReport, ExponentCheck, Runner};
use crate::error::Result;
use crate::lietype::all_rows;
use crate::matgroup::{GroupSpec, Variant};

pub const CRITERIA: [(u32, &str); 11] = [
    (1, "order formulas match enumeration"),
    (2, "opposite subgroup structure"),
    (3, "big-cell probability"),
    (4, "G = UVUV"),
    (5, "Weyl translates of UVU cover G"),
    (6, "Bruhat roundtrip and census"),
    (7, "Ruzsa and growth self-checks"),
    (8, "triple-product bound"),
    (9, "coverage by 11 random Sylows"),
    (10, "covering criterion soundness"),
    (11, "block exponent comparison"),
];

const ORDER_QS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];
const ODD_QS: [u64; 6] = [3, 5, 7, 9, 11, 13];
const TREND_QS: [u64; 5] = [5, 7, 9, 11, 13];
const ORDER_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub notes: Vec<String>,
    pub reports: Vec<ExperimentReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub exponent_checks: Vec<ExponentCheck>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub pass: bool,
    pub criteria: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn without_timing(mut self) -> SuiteReport {
        for c in &mut self.criteria {
            for r in &mut c.reports {
                r.runtime_ms = None;
            }
        }
        self
    }
}

/// Rank 1 to 3, both variants, every listed q with `|G| <= 10^6`.
pub fn enumerable_configs() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for q in ORDER_QS {
            for variant in [Variant::Sl, Variant::Psl] {
                let spec = GroupSpec::from_order(q, n, variant).expect("listed q are prime powers");
                if spec.order() <= ORDER_LIMIT {
                    out.push(spec);
                }
            }
        }
    }
    out
}

/// Simple groups for the exact product statements.
pub fn simple_groups() -> Vec<GroupSpec> {
    let mut out: Vec<GroupSpec> = [4, 5, 7, 9, 11, 13]
        .iter()
        .map(|&q| GroupSpec::psl(q, 2).unwrap())
        .collect();
    out.push(GroupSpec::psl(2, 3).unwrap());
    out.push(GroupSpec::psl(3, 3).unwrap());
    out
}

fn non_decreasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] <= w[1])
}

fn empirical(reports: &[ExperimentReport]) -> Vec<f64> {
    reports
        .iter()
        .map(|r| r.empirical_value.unwrap_or(f64::NAN))
        .collect()
}

fn trend_note(label: &str, reports: &[ExperimentReport], ok: bool) -> String {
    let parts: Vec<String> = TREND_QS
        .iter()
        .zip(empirical(reports))
        .map(|(q, v)| format!("q={q}: {v}"))
        .collect();
    format!(
        "{label} {} ({})",
        if ok {
            "non-decreasing"
        } else {
            "NOT non-decreasing"
        },
        parts.join(", ")
    )
}

pub fn run_criterion(runner: &Runner, id: u32, seed: u64) -> Result<CriterionResult> {
    let name = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|c| c.1)
        .ok_or_else(|| crate::Error::Degenerate(format!("no criterion {id}")))?;
    let mut notes = Vec::new();
    let mut reports = Vec::new();
    let mut exponent_checks = Vec::new();
    let mut extra_ok = true;
    // set when the pass condition is stated in full by `extra_ok`
    let mut only_listed_gates = false;

    match id {
        1 => {
            for spec in enumerable_configs() {
                reports.push(runner.order_check(&spec)?);
            }
        }
        2 => {
            for spec in enumerable_configs() {
                reports.push(runner.opposite_structure(&spec)?);
            }
        }
        3 => {
            for q in ODD_QS {
                reports.push(runner.big_cell_census(&GroupSpec::sl(q, 2)?)?);
                reports.push(runner.big_cell_census(&GroupSpec::psl(q, 2)?)?);
            }
            reports.push(runner.big_cell_census(&GroupSpec::sl(2, 3)?)?);
            reports.push(runner.big_cell_census(&GroupSpec::sl(3, 3)?)?);
            for q in ODD_QS {
                reports.push(runner.opposite_pair_prob(&GroupSpec::sl(q, 2)?, 100_000, seed)?);
            }
        }
        4 => {
            for spec in simple_groups() {
                reports.push(runner.verify_uuuv(&spec)?);
            }
        }
        5 => {
            for spec in simple_groups() {
                reports.push(runner.verify_toffoli(&spec)?);
            }
        }
        6 => {
            for spec in enumerable_configs() {
                reports.push(runner.bruhat_roundtrip(&spec)?);
            }
            reports.push(runner.bruhat_roundtrip_sampled(&GroupSpec::sl(5, 4)?, 10_000, seed)?);
        }
        7 => {
            for spec in [GroupSpec::psl(7, 2)?, GroupSpec::sl(2, 3)?] {
                reports.push(runner.ruzsa_selfcheck(&spec, 1000, seed)?);
            }
        }
        8 => {
            for q in TREND_QS {
                reports.push(runner.triple_product_stats(&GroupSpec::psl(q, 2)?, 1000, seed)?);
            }
            let ok = non_decreasing(&empirical(&reports));
            notes.push(trend_note("fraction meeting the bound", &reports, ok));
            // only PSL_2(13) is held to the threshold; smaller q are trend points
            let growth_ok = reports.iter().all(|r| r.details["growth_violations"] == 0);
            extra_ok &= ok && growth_ok && reports.last().unwrap().pass;
            only_listed_gates = true;
        }
        9 => {
            let k = runner.gates.coverage_k;
            for q in TREND_QS {
                reports.push(runner.coverage_prob(&GroupSpec::psl(q, 2)?, k, 200, seed)?);
            }
            let ok = non_decreasing(&empirical(&reports));
            notes.push(trend_note("coverage fraction", &reports, ok));
            reports.push(runner.coverage_prob(&GroupSpec::sl(13, 2)?, k, 200, seed)?);
            let n = reports.len();
            extra_ok &= ok && reports[n - 2].pass && reports[n - 1].pass;
            only_listed_gates = true;
        }
        10 => {
            for spec in [GroupSpec::psl(5, 2)?, GroupSpec::psl(7, 2)?] {
                reports.push(runner.criterion_soundness_test(&spec, 100, seed)?);
            }
        }
        11 => {
            for p in all_rows().iter().filter(|p| !p.is_twisted()) {
                for t in 1..=12 {
                    let c = exponent_check(p, t);
                    if c.holds != (t > 4) {
                        extra_ok = false;
                        notes.push(format!(
                            "{} rank {} t={t}: holds={}",
                            p.family.name(),
                            p.rank,
                            c.holds
                        ));
                    }
                    exponent_checks.push(c);
                }
            }
            notes.push(format!("{} row/t pairs checked", exponent_checks.len()));
        }
        _ => unreachable!(),
    }

    let pass = extra_ok && (only_listed_gates || reports.iter().all(|r| r.pass));
    Ok(CriterionResult {
        id,
        name,
        pass,
        notes,
        reports,
        exponent_checks,
    })
}

pub fn run(runner: &Runner, seed: u64) -> Result<SuiteReport> {
    let criteria = CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(runner, id, seed))
        .collect::<Result<Vec<_>>>()?;
    let pass = criteria.iter().all(|c| c.pass);
    Ok(SuiteReport { seed, pass, criteria })
}
