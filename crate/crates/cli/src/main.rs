mod render;
mod suite;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use toticay::domsolve::Budget;
use toticay::graph::build_graph;
use toticay::numtheory::consecutive_runs;
use toticay::paperlab::{run_verification, verify_witness_table, TableId, VerificationReport};

use crate::suite::{Suite, SuiteEntry, Tier};

const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "toticay", version, about = "Domination and diameter of Cay(Z_p x Z_m, phi_p x phi_m)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph and print its basic invariants.
    Build(InstanceArgs),
    /// Compute diameter, gamma, gamma_t, gamma_c and compare with the catalogue.
    Params(ParamsArgs),
    /// Run the verification suite or a single instance.
    Verify(VerifyArgs),
    /// Audit a common-neighbour formula table against true adjacency.
    Witness(WitnessArgs),
    /// Longest run of consecutive non-units modulo m.
    Lambda(LambdaArgs),
    /// Write the graph as DOT or an adjacency CSV.
    Export(ExportArgs),
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BudgetArgs {
    /// Time budget per solve, in seconds.
    #[arg(long, env = "TOTICAY_BUDGET_SECS")]
    budget_secs: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Option<Budget> {
        self.budget_secs.map(|s| Budget::with_time(Duration::from_secs(s)))
    }
}

#[derive(Args)]
struct ParamsArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, conflicts_with_all = ["p", "m"])]
    suite: Option<Tier>,
    #[arg(long, requires = "m")]
    p: Option<u64>,
    #[arg(long, requires = "p")]
    m: Option<u64>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write the JSON suite report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a one-row-per-instance CSV summary here.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u64,
    #[arg(long, value_parser = parse_table)]
    table: TableId,
    /// Exit 1 when any pair is unclassified or any formula fails.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LambdaArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Csv,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    m: u64,
    #[arg(long, value_enum, default_value = "dot")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Accepted for uniformity; the export is already machine-readable.
    #[arg(long)]
    json: bool,
}

fn parse_table(s: &str) -> Result<TableId, String> {
    s.parse().map_err(|e: toticay::Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
}

impl From<toticay::Error> for Failure {
    fn from(e: toticay::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Build(a) => build(&a),
        Command::Params(a) => params(&a),
        Command::Verify(a) => verify(&a),
        Command::Witness(a) => witness(&a),
        Command::Lambda(a) => lambda(&a),
        Command::Export(a) => export(&a),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    println!("{text}");
    Ok(())
}

#[derive(Serialize)]
struct BuildSummary {
    p: u64,
    m: u64,
    n: usize,
    degree: usize,
    component_sizes: Vec<usize>,
    diameter: u32,
    diameter_per_component: Vec<u32>,
}

fn build(a: &InstanceArgs) -> Result<u8, Failure> {
    let g = build_graph(a.p, a.m)?;
    let d = g.diameter_report();
    let s = BuildSummary {
        p: a.p,
        m: a.m,
        n: g.n(),
        degree: g.degree(),
        component_sizes: g.components().sizes,
        diameter: d.diameter,
        diameter_per_component: d.per_component,
    };
    if a.json {
        print_json(&s)?;
    } else {
        println!("Z_{} x Z_{}: n={} degree={}", s.p, s.m, s.n, s.degree);
        println!("components: {:?}", s.component_sizes);
        println!("diameter: {} (per component {:?})", s.diameter, s.diameter_per_component);
    }
    Ok(0)
}

fn params(a: &ParamsArgs) -> Result<u8, Failure> {
    let i = &a.instance;
    let budget = a.budget.budget().unwrap_or_default();
    let report = run_verification(i.p, i.m, budget)?;
    if i.json {
        print_json(&report)?;
    } else {
        print!("{}", render::params(&report));
    }
    Ok(report.exit_code() as u8)
}

#[derive(Serialize)]
struct SuiteReport<'a> {
    schema_version: u32,
    suite: &'a str,
    exit_code: u8,
    reports: &'a [VerificationReport],
}

fn verify(a: &VerifyArgs) -> Result<u8, Failure> {
    let suite = match (a.suite, a.p, a.m) {
        (Some(tier), _, _) => Suite::tier(tier),
        (None, Some(p), Some(m)) => Suite::single(p, m),
        _ => return Err(Failure::Usage("verify needs --suite or --p and --m".into())),
    };
    let override_budget = a.budget.budget();
    let mut reports = Vec::with_capacity(suite.entries.len());
    for SuiteEntry { p, m, budget } in &suite.entries {
        let budget = override_budget.unwrap_or(*budget);
        let r = run_verification(*p, *m, budget)?;
        if !a.json {
            println!("{}", render::summary_line(&r));
            io::stdout().flush().ok();
        }
        reports.push(r);
    }
    let code = aggregate_exit(&reports);
    let doc = SuiteReport { schema_version: toticay::paperlab::SCHEMA_VERSION, suite: &suite.name, exit_code: code, reports: &reports };
    if let Some(path) = &a.out {
        let text = serde_json::to_string_pretty(&doc).map_err(|e| io_err(path, e))?;
        fs::write(path, text).map_err(|e| io_err(path, e))?;
    }
    if let Some(path) = &a.csv {
        render::write_csv(path, &reports).map_err(|e| io_err(path, e))?;
    }
    if a.json {
        print_json(&doc)?;
    }
    Ok(code)
}

/// Mismatch wins over inconclusive.
fn aggregate_exit(reports: &[VerificationReport]) -> u8 {
    let codes = reports.iter().map(|r| r.exit_code());
    codes.fold(0, |acc, c| match (acc, c) {
        (1, _) | (_, 1) => 1,
        (2, _) | (_, 2) => 2,
        _ => 0,
    })
}

fn witness(a: &WitnessArgs) -> Result<u8, Failure> {
    let g = build_graph(a.p, a.m)?;
    let report = verify_witness_table(&g, a.table)?;
    if a.json {
        print_json(&report)?;
    } else {
        print!("{}", render::witness(&report));
    }
    let clean = report.failure_count == 0 && report.unclassified == 0;
    Ok(if a.strict && !clean { 1 } else { 0 })
}

fn lambda(a: &LambdaArgs) -> Result<u8, Failure> {
    let runs = consecutive_runs(a.m)?;
    if a.json {
        print_json(&runs)?;
    } else {
        println!("lambda({}) = {}", a.m, runs.lambda);
        if runs.linear_lambda != runs.lambda {
            println!("without wraparound: {}", runs.linear_lambda);
        }
        let longest: Vec<String> = runs
            .runs_of_len(runs.lambda)
            .map(|r| format!("{}..{}", r.start, r.start + r.len - 1))
            .collect();
        println!("longest runs: {}", longest.join(", "));
    }
    Ok(0)
}

fn export(a: &ExportArgs) -> Result<u8, Failure> {
    let g = build_graph(a.p, a.m)?;
    let text = match a.format {
        Format::Dot => g.to_dot(),
        Format::Csv => g.to_adjacency_csv(),
    };
    match &a.out {
        Some(path) => fs::write(path, text).map_err(|e| io_err(path, e))?,
        None => print!("{text}"),
    }
    Ok(0)
}
