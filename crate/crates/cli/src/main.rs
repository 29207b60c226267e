use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sylowlab::bruhat::{cell_of, decompose, in_big_cell, recompose};
use sylowlab::experiments::{suite, ExperimentReport, Gates, Runner};
use sylowlab::lietype::{all_rows, params_for, EBound, EBoundMode, LieParams, ParamsRow, Thresholds};
use sylowlab::{Error, Exec, Family, GroupSpec, Variant};

const EXIT_GATE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sylowlab",
    version,
    about = "Sylow subgroup products in finite groups of Lie type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args)]
struct Opts {
    /// Lie type family, e.g. A, B, 2A, G2
    #[arg(long, global = true, default_value = "A")]
    family: String,
    /// Lie rank l; matrix experiments use SL_{l+1}
    #[arg(long, global = true)]
    rank: Option<u32>,
    /// Field order, any prime power up to 64
    #[arg(long, global = true)]
    q: Option<u64>,
    /// sl (universal) or psl (simple)
    #[arg(long, global = true, default_value = "psl")]
    variant: Variant,
    #[arg(long, global = true, default_value_t = 1000)]
    trials: u64,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Number of Sylow factors for `coverage`
    #[arg(long, global = true, default_value_t = 11)]
    k: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Threshold overrides, `key = value` per line
    #[arg(long, global = true)]
    gates: Option<PathBuf>,
    /// Worker threads; falls back to SYLOWLAB_THREADS
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Omit runtime_ms so output is byte-reproducible
    #[arg(long, global = true)]
    no_timing: bool,
    /// Emit one row per trial
    #[arg(long, global = true)]
    per_trial: bool,
    /// Matrix for `bruhat`, rows separated by `;`, e.g. "0,-1;1,0"
    #[arg(long, global = true, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Structural parameters of the stored Lie type rows
    Params,
    /// Orders of G, its Sylow p-subgroup, torus and Borel subgroup
    Order,
    /// Bruhat factorization of --matrix, or a full roundtrip census
    Bruhat,
    /// Check G = UVUV
    VerifyUuuv,
    /// Check that the Weyl translates of UVU cover G
    Toffoli,
    /// Monte Carlo frequency of the big Bruhat cell
    OppositeProb,
    /// Sizes of products of three random Sylow subgroups
    TripleSize,
    /// Frequency with which k random Sylow subgroups multiply to G
    Coverage,
    /// Soundness of the product-covering criterion on sampled blocks
    Criterion,
    /// Run the acceptance battery
    Suite,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_GATE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_cap() { EXIT_CAP } else { EXIT_USAGE })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn init_threads(opts: &Opts) -> Result<(), Failure> {
    let threads = match opts.threads {
        Some(t) => Some(t),
        None => match std::env::var("SYLOWLAB_THREADS") {
            Ok(v) => Some(
                v.parse()
                    .map_err(|_| Failure::Usage(format!("SYLOWLAB_THREADS={v} is not a count")))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        if t == 0 {
            return Err(Failure::Usage("thread count must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn family(opts: &Opts) -> Result<Family, Failure> {
    opts.family.parse().map_err(Failure::Lib)
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn group(opts: &Opts) -> Result<GroupSpec, Failure> {
    if family(opts)? != Family::A {
        return Err(Failure::Usage("matrix experiments support family A only".into()));
    }
    let rank = need(opts.rank, "rank")?;
    let q = need(opts.q, "q")?;
    Ok(GroupSpec::from_order(q, rank as usize + 1, opts.variant)?)
}

fn runner(opts: &Opts) -> Result<Runner, Failure> {
    let gates = match &opts.gates {
        Some(path) => Gates::load(path)?,
        None => Gates::default(),
    };
    Ok(Runner::new(gates, Exec::default()))
}

fn sink(opts: &Opts) -> Result<Box<dyn Write>, Failure> {
    Ok(match &opts.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_json(opts: &Opts, value: &Value) -> Result<(), Failure> {
    let mut w = sink(opts)?;
    writeln!(w, "{value}")?;
    Ok(())
}

fn json_only(opts: &Opts, command: &str) -> Result<(), Failure> {
    if opts.format == Format::Csv {
        return Err(Failure::Usage(format!("{command} supports --format json only")));
    }
    Ok(())
}

fn cell(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn emit_report(opts: &Opts, report: ExperimentReport) -> Result<bool, Failure> {
    let report = if opts.no_timing {
        report.without_timing()
    } else {
        report
    };
    let pass = report.pass;
    match opts.format {
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("reports serialize");
            if opts.per_trial {
                value["per_trial"] = json!(report
                    .per_trial
                    .iter()
                    .map(|t| {
                        let metrics: serde_json::Map<String, Value> = report
                            .metric_names
                            .iter()
                            .zip(&t.metrics)
                            .map(|(k, v)| (k.to_string(), json!(v)))
                            .collect();
                        json!({
                            "trial_index": t.trial_index,
                            "seed_stream": t.seed_stream,
                            "outcome": t.outcome,
                            "metrics": metrics,
                        })
                    })
                    .collect::<Vec<_>>());
            }
            emit_json(opts, &value)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink(opts)?);
            if opts.per_trial {
                let mut header = vec!["trial_index", "seed_stream", "outcome"];
                header.extend(&report.metric_names);
                w.write_record(&header)?;
                for t in &report.per_trial {
                    let mut row = vec![
                        t.trial_index.to_string(),
                        t.seed_stream.to_string(),
                        t.outcome.to_string(),
                    ];
                    row.extend(t.metrics.iter().map(|m| m.to_string()));
                    w.write_record(&row)?;
                }
            } else {
                w.write_record([
                    "experiment",
                    "spec",
                    "seed",
                    "trials",
                    "exact_value",
                    "empirical_value",
                    "bound_value",
                    "pass",
                    "runtime_ms",
                ])?;
                w.write_record([
                    report.experiment.clone(),
                    report.spec.clone(),
                    report.seed.to_string(),
                    report.trials.to_string(),
                    cell(report.exact_value),
                    cell(report.empirical_value),
                    cell(report.bound_value),
                    report.pass.to_string(),
                    report.runtime_ms.map(|t| t.to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(pass)
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let opts = &cli.opts;
    init_threads(opts)?;
    match cli.command {
        Command::Params => {
            json_only(opts, "params")?;
            let fam = family(opts)?;
            let rows: Vec<LieParams> = match opts.rank {
                Some(l) => vec![params_for(fam, l)?],
                None => all_rows().into_iter().filter(|p| p.family == fam).collect(),
            };
            let thresholds = Thresholds {
                default_q0: runner(opts)?.gates.lie_q0,
                ..Thresholds::default()
            };
            let mut out = Vec::new();
            for p in &rows {
                let mut v = json!(ParamsRow::new(p, opts.q));
                if let Some(q) = opts.q {
                    // the asymptotic formula is only trusted from q0 on
                    v["e_lower_bound"] = match p.e_lower_bound(q, EBoundMode::Asymptotic, &thresholds)? {
                        EBound::Value(e) => json!(e.to_string()),
                        EBound::BelowThreshold { q0, .. } => json!({ "below_threshold": q0 }),
                    };
                }
                out.push(v);
            }
            emit_json(opts, &json!(out))?;
            Ok(true)
        }
        Command::Order => {
            let params = params_for(family(opts)?, need(opts.rank, "rank")?)?;
            let o = params.order_exact(need(opts.q, "q")?, opts.variant.order_variant())?;
            match opts.format {
                Format::Json => emit_json(opts, &json!(o))?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(sink(opts)?);
                    w.write_record(["group_order", "sylow_order", "torus_order", "borel_order"])?;
                    w.write_record(
                        [&o.group_order, &o.sylow_order, &o.torus_order, &o.borel_order]
                            .map(|x| x.to_string()),
                    )?;
                    w.flush()?;
                }
            }
            Ok(true)
        }
        Command::Bruhat => {
            let spec = group(opts)?;
            match &opts.matrix {
                Some(text) => {
                    json_only(opts, "bruhat --matrix")?;
                    let g = spec.parse_mat(text)?;
                    let form = decompose(&spec, &g);
                    let ok = recompose(&spec, &form) == g;
                    emit_json(
                        opts,
                        &json!({
                            "spec": spec.name(),
                            "matrix": g,
                            "cell": cell_of(&spec, &g),
                            "big_cell": in_big_cell(&spec, &g),
                            "factors": form,
                            "roundtrip": ok,
                        }),
                    )?;
                    Ok(ok)
                }
                None => emit_report(opts, runner(opts)?.bruhat_roundtrip(&spec)?),
            }
        }
        Command::VerifyUuuv => emit_report(opts, runner(opts)?.verify_uuuv(&group(opts)?)?),
        Command::Toffoli => emit_report(opts, runner(opts)?.verify_toffoli(&group(opts)?)?),
        Command::OppositeProb => emit_report(
            opts,
            runner(opts)?.opposite_pair_prob(&group(opts)?, opts.trials, opts.seed)?,
        ),
        Command::TripleSize => emit_report(
            opts,
            runner(opts)?.triple_product_stats(&group(opts)?, opts.trials, opts.seed)?,
        ),
        Command::Coverage => emit_report(
            opts,
            runner(opts)?.coverage_prob(&group(opts)?, opts.k, opts.trials, opts.seed)?,
        ),
        Command::Criterion => emit_report(
            opts,
            runner(opts)?.criterion_soundness_test(&group(opts)?, opts.trials, opts.seed)?,
        ),
        Command::Suite => {
            let report = suite::run(&runner(opts)?, opts.seed)?;
            let report = if opts.no_timing {
                report.without_timing()
            } else {
                report
            };
            match opts.format {
                Format::Json => emit_json(opts, &json!(report))?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(sink(opts)?);
                    w.write_record(["criterion", "name", "pass"])?;
                    for c in &report.criteria {
                        w.write_record([c.id.to_string(), c.name.to_string(), c.pass.to_string()])?;
                    }
                    w.flush()?;
                }
            }
            Ok(report.pass)
        }
    }
}
