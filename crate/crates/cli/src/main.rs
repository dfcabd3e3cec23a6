use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sasaki_core::report::{Check, Report};
use sasaki_core::suites::{dims, table1, Suite};

#[derive(Parser)]
#[command(
    name = "sasaki",
    about = "Exact verification of spinor identities on 3-Sasakian frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the closed-form E_i spinors for dimension 7, 11 or 15.
    Table1 {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the dimensions of the computed spaces.
    Dims {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Clifford,
    Frame,
    Killing,
    Eminus,
    Bilinear,
    Isotropy,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Clifford => vec![Suite::Clifford],
            SuiteArg::Frame => vec![Suite::Frame],
            SuiteArg::Killing => vec![Suite::Killing],
            SuiteArg::Eminus => vec![Suite::EMinus],
            SuiteArg::Bilinear => vec![Suite::Bilinear],
            SuiteArg::Isotropy => vec![Suite::Isotropy],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Serialize)]
struct SuiteResult {
    suite: &'static str,
    n: usize,
    checks: Vec<Check>,
    passed: bool,
    /// Set when the suite does not support this `n` and was skipped under `all`.
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(rename = "elapsedMs")]
    elapsed_ms: u128,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_checks(checks: &[Check]) {
    let width = checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    for c in checks {
        let tag = if c.passed() { "PASS" } else { "FAIL" };
        let pad = width - c.name.chars().count();
        println!("  [{tag}] {}{}  {}", c.name, " ".repeat(pad), c.detail);
    }
}

fn verify(n: usize, suite: SuiteArg, json: bool) -> ExitCode {
    if !(1..=6).contains(&n) {
        return usage(format!("n must be in 1..=6, got {n}"));
    }
    let all = matches!(suite, SuiteArg::All);
    let mut results = Vec::new();
    for s in suite.suites() {
        if !s.range().contains(&n) {
            if !all {
                return usage(format!(
                    "suite {} supports n in {}..={}, got {n}",
                    s.name(),
                    s.range().start(),
                    s.range().end()
                ));
            }
            results.push(SuiteResult {
                suite: s.name(),
                n,
                checks: Vec::new(),
                passed: true,
                skipped: Some(format!("supports n in {}..={}", s.range().start(), s.range().end())),
                elapsed_ms: 0,
            });
            continue;
        }
        let start = Instant::now();
        let report = match s.run(n) {
            Ok(r) => r,
            Err(e) => {
                let mut r = Report::new();
                r.push(format!("{} suite", s.name()), false, e.to_string());
                r
            }
        };
        results.push(SuiteResult {
            suite: s.name(),
            n,
            passed: report.passed(),
            checks: report.checks,
            skipped: None,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    let ok = results.iter().all(|r| r.passed);
    if json {
        let out = if all {
            serde_json::to_string_pretty(&results)
        } else {
            serde_json::to_string_pretty(&results[0])
        };
        println!("{}", out.expect("serializable"));
    } else {
        for r in &results {
            match &r.skipped {
                Some(why) => println!("{} (n = {n}): skipped, {why}", r.suite),
                None => {
                    let tag = if r.passed { "PASS" } else { "FAIL" };
                    println!("{} (n = {n}): {tag} in {} ms", r.suite, r.elapsed_ms);
                    print_checks(&r.checks);
                }
            }
        }
    }
    verdict(ok)
}

fn cmd_table1(dim: usize, json: bool) -> ExitCode {
    if ![7, 11, 15].contains(&dim) {
        return usage(format!("dim must be 7, 11 or 15, got {dim}"));
    }
    let entries = match table1(dim) {
        Ok(e) => e,
        Err(e) => return usage(e),
    };
    let ok = entries.iter().all(|e| e.in_kernel);
    if json {
        println!("{}", serde_json::to_string_pretty(&entries).expect("serializable"));
    } else {
        println!("dim {dim}");
        for e in &entries {
            let mark = if e.in_kernel { "in kernel" } else { "NOT in kernel" };
            println!("  Psi_{{E{},{}}} = {}   [{mark}]", e.i, e.which, e.plain);
        }
    }
    verdict(ok)
}

fn cmd_dims(n: usize, json: bool) -> ExitCode {
    if !(2..=5).contains(&n) {
        return usage(format!("n must be in 2..=5, got {n}"));
    }
    let d = match dims(n) {
        Ok(d) => d,
        Err(e) => return usage(e),
    };
    let ok = d.spinor_dim == 1 << (2 * n - 1)
        && d.invariant_spinor_dim == 2 * n
        && d.killing_dim == n + 1
        && d.e_minus_ranks == [2, 2, 2]
        && d.horizontal_invariant_2_forms.is_none_or(|k| k == 3);
    if json {
        println!("{}", serde_json::to_string_pretty(&d).expect("serializable"));
    } else {
        println!("n = {n}");
        println!("  spinor space            {}", d.spinor_dim);
        println!("  invariant spinors       {}", d.invariant_spinor_dim);
        println!("  Killing spinors         {}", d.killing_dim);
        let ranks: Vec<String> = d.e_minus_ranks.iter().map(|r| r.to_string()).collect();
        println!("  E_i ranks               {}", ranks.join(" "));
        match d.horizontal_invariant_2_forms {
            Some(k) => println!("  invariant horizontal 2-forms  {k}"),
            None => println!("  invariant horizontal 2-forms  skipped (form kernels limited to n <= 4)"),
        }
    }
    verdict(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify { n, suite, json } => verify(n, suite, json),
        Command::Table1 { dim, json } => cmd_table1(dim, json),
        Command::Dims { n, json } => cmd_dims(n, json),
    }
}
