//! `lauricella`: evaluate Lauricella functions, list the formula catalogs
//! and run seeded verification with JSON or CSV reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lauricella::harness::{self, catalog, RunConfig, Selector};
use lauricella::series::{eval_lauricella, EvalOptions, Family, LauricellaParams};

/// Overrides the default report directory (`reports`).
const REPORT_DIR_VAR: &str = "LAURICELLA_REPORT_DIR";

#[derive(Parser)]
#[command(name = "lauricella", version, about = "Lauricella hypergeometric functions and formula verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate F_A, F_B, F_C or F_D at a point.
    Eval(EvalArgs),
    /// Check catalog entries at seeded random points.
    Verify(VerifyArgs),
    /// List the decomposition or operator catalog.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    family: String,
    /// Number of variables; inferred from the parameter lists if omitted.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long, default_value_t = 1e-15)]
    tol: f64,
    #[arg(long, default_value_t = 600)]
    degree_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Formula ids such as 3.54 or 2.21.
    ids: Vec<String>,
    #[arg(long, conflicts_with_all = ["operators", "integrals", "decompositions"])]
    all: bool,
    #[arg(long)]
    operators: bool,
    #[arg(long)]
    integrals: bool,
    #[arg(long)]
    decompositions: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    points: usize,
    #[arg(long, default_value_t = 0.7)]
    margin: f64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 600)]
    degree_cap: usize,
    #[arg(long, default_value_t = 64)]
    outer_cap: u32,
    #[arg(long, default_value_t = 48)]
    quad_nodes: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Report path; defaults to `verify-seed<N>.<ext>` in the report directory.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    operators: bool,
    #[arg(long, value_enum, default_value_t = ListFormat::Table)]
    format: ListFormat,
    /// Arity at which general entries are instantiated.
    #[arg(long, default_value_t = 3)]
    r: usize,
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Checks,
    Usage(String),
}

impl From<lauricella::Error> for Failure {
    fn from(e: lauricella::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_list(name: &str, s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Failure::Usage(format!("--{name}: cannot parse {t:?} as a number"))))
        .collect()
}

fn eval(a: EvalArgs) -> Result<(), Failure> {
    let family = Family::parse(&a.family)?;
    let alpha = parse_list("alpha", &a.alpha)?;
    let beta = parse_list("beta", &a.beta)?;
    let gamma = parse_list("gamma", &a.gamma)?;
    let point = parse_list("point", &a.point)?;
    let params = LauricellaParams::new(family, alpha, beta, gamma)?;
    if let Some(r) = a.r {
        if r != params.arity {
            return Err(Failure::Usage(format!("--r {r} does not match parameter lists of arity {}", params.arity)));
        }
    }
    let opts = EvalOptions { degree_cap: a.degree_cap, rel_tol: a.tol, ..EvalOptions::default() };
    let res = eval_lauricella(&params, &point, &opts)?;
    println!("value         {:.16e}", res.value);
    println!("terms_summed  {}", res.terms_summed);
    println!("tail_estimate {:.3e}", res.tail_estimate);
    println!("converged     {}", res.converged);
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<(), Failure> {
    let sel = if a.all {
        Selector::All
    } else if !a.ids.is_empty() {
        Selector::Ids(a.ids.clone())
    } else if a.operators {
        Selector::Operators
    } else if a.integrals {
        Selector::Integrals
    } else if a.decompositions {
        Selector::Decompositions
    } else {
        return Err(Failure::Usage("give formula ids or one of --all, --operators, --integrals, --decompositions".into()));
    };
    let cfg = RunConfig {
        seed: a.seed,
        points_per_formula: a.points,
        margin: a.margin,
        tolerance: a.tol,
        degree_cap: a.degree_cap,
        outer_cap: a.outer_cap,
        quad_nodes: a.quad_nodes,
        ..RunConfig::default()
    };
    let report = harness::run_verify(&cfg, &sel)?;
    let (text, ext) = match a.format {
        ReportFormat::Json => (harness::to_json(&report), "json"),
        ReportFormat::Csv => (harness::to_csv(&report.records)?, "csv"),
    };
    let path = a.output.unwrap_or_else(|| {
        let dir = std::env::var_os(REPORT_DIR_VAR).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("reports"));
        dir.join(format!("verify-seed{}.{ext}", a.seed))
    });
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let s = &report.summary;
    println!("{}", s.line());
    if !s.failures.is_empty() {
        println!("failing ids: {}", s.failures.join(", "));
    }
    println!("report written to {}", path.display());
    if s.ok() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn list(a: CatalogArgs) -> Result<(), Failure> {
    if a.r < 1 {
        return Err(Failure::Usage("--r must be at least 1".into()));
    }
    let csv_err = |e: csv::Error| Failure::Usage(e.to_string());
    if a.operators {
        let rows = catalog::operator_rows(a.r);
        match a.format {
            ListFormat::Json => print!("{}", harness::to_json(&rows)),
            ListFormat::Csv => print!("{}", catalog::operator_csv(&rows).map_err(csv_err)?),
            ListFormat::Table => {
                for r in &rows {
                    println!("{:6} F_{} r={:2} {:12} {}", r.id, r.family, r.arity, r.check, r.chain);
                }
            }
        }
    } else {
        let rows = catalog::formula_rows(a.r);
        match a.format {
            ListFormat::Json => print!("{}", harness::to_json(&rows)),
            ListFormat::Csv => print!("{}", catalog::formula_csv(&rows).map_err(csv_err)?),
            ListFormat::Table => {
                for r in &rows {
                    println!(
                        "{:6} F_{} r={:2} outer={} {:20} {}",
                        r.id,
                        r.family,
                        r.arity,
                        r.outer_sum_arity,
                        r.status,
                        r.slots.join(",")
                    );
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Eval(a) => eval(a),
        Cmd::Verify(a) => verify(a),
        Cmd::Catalog(a) => list(a),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
