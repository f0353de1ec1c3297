use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qmacd_core::kernel::{build_ka, kernel_checks, Property};
use qmacd_core::macdonald::{composition_stats, nonsym_macdonald, nonsym_macdonald_oracle};
use qmacd_core::verify::{run_checks, run_suite, Suite, SuiteReport, VerifyConfig};
use qmacd_core::Composition;
use serde::Serialize;

use crate::output::{poly_latex, poly_to_json, StatsJson};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qmacd", version, about = "Non-symmetric Macdonald polynomials, q-Dunkl operators and kernel identities")]
pub struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "QMACD_JOBS", default_value_t = 0)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Hecke,
    Dunkl,
    Raising,
    Macdonald,
    Kernel,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Hecke => vec![Suite::Hecke],
            SuiteArg::Dunkl => vec![Suite::Dunkl],
            SuiteArg::Raising => vec![Suite::Raising],
            SuiteArg::Macdonald => vec![Suite::Macdonald],
            SuiteArg::Kernel => vec![Suite::Kernel],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arm/leg statistics and the constants d, d', e of a composition.
    Stats {
        #[arg(long, value_parser = parse_composition, allow_hyphen_values = true)]
        eta: Composition,
    },
    /// The polynomial E_eta(x; q, t).
    Epoly {
        #[arg(long, value_parser = parse_composition, allow_hyphen_values = true)]
        eta: Composition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Solve the eigenvalue problem directly instead of using the recursion.
        #[arg(long)]
        oracle: bool,
    },
    /// Check kernel identities on a truncation.
    Kernel {
        #[arg(long)]
        n: usize,
        /// Weight bound N of the truncation.
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, value_delimiter = ',', value_parser = parse_property, default_value = "a,b,c,uplus")]
        check: Vec<Property>,
    },
    /// Run identity suites exhaustively (or on a seeded sample).
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Check this many randomly chosen cases per identity.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse::<Composition>().map_err(|e| e.to_string())
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse::<Property>().map_err(|e| e.to_string())
}

#[derive(Debug, Serialize)]
struct KernelOutput<'a> {
    n: usize,
    degree: u32,
    passed: bool,
    checks: &'a SuiteReport,
}

#[derive(Debug, Serialize)]
struct VerifyOutput<'a> {
    ns: &'a [usize],
    degree: u32,
    passed: bool,
    checks: &'a SuiteReport,
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn print_json(v: &impl Serialize) {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).expect("stdout is writable");
    writeln!(out).expect("stdout is writable");
}

fn print_table(report: &SuiteReport) {
    let mut err = std::io::stderr().lock();
    for c in &report.checks {
        let status = if c.passed { "ok  " } else { "FAIL" };
        let _ = writeln!(err, "{status} {:<10} n={} cases={:<4} {:>9.3} ms  {}", c.suite.name(), c.n, c.cases, c.elapsed.as_secs_f64() * 1e3, c.identity);
    }
}

fn exit_for(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn configure_pool(jobs: usize) {
    if jobs > 0 {
        // a second call in the same process (tests) keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
}

pub fn execute(cli: Cli) -> i32 {
    configure_pool(cli.jobs);
    match cli.command {
        Command::Stats { eta } => match composition_stats(&eta, eta.len()) {
            Ok(s) => {
                print_json(&StatsJson::from(&s));
                EXIT_PASS
            }
            Err(e) => usage(e),
        },
        Command::Epoly { eta, format, oracle } => {
            if eta.is_empty() {
                return usage("empty composition");
            }
            let p = if oracle {
                match nonsym_macdonald_oracle(&eta) {
                    Ok(p) => p,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return EXIT_FAIL;
                    }
                }
            } else {
                nonsym_macdonald(&eta)
            };
            match format {
                Format::Text => println!("{p}"),
                Format::Latex => println!("{}", poly_latex(&p)),
                Format::Json => println!("{}", poly_to_json(&p)),
            }
            EXIT_PASS
        }
        Command::Kernel { n, degree, check } => {
            if n == 0 {
                return usage("--n must be at least 1");
            }
            let start = Instant::now();
            let k = match build_ka(n, degree) {
                Ok(k) => Arc::new(k),
                Err(e) => return usage(e),
            };
            eprintln!("built K for n={n}, N={degree}: {} terms in {:.3} s", k.value.len(), start.elapsed().as_secs_f64());
            let mut props = check;
            props.sort();
            props.dedup();
            let checks = match kernel_checks(k, &props) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let cfg = VerifyConfig { ns: vec![n], degree, ..VerifyConfig::default() };
            let report = run_checks(Suite::Kernel, checks, &cfg);
            print_table(&report);
            let passed = report.passed();
            print_json(&KernelOutput { n, degree, passed, checks: &report });
            exit_for(passed)
        }
        Command::Verify { suite, n, degree, sample, seed } => {
            if let Some(&bad) = n.iter().find(|&&k| k < 2) {
                return usage(format!("suites need n >= 2, got {bad}"));
            }
            let cfg = VerifyConfig { ns: n.clone(), degree, sample, seed };
            let mut all = SuiteReport { checks: vec![] };
            for s in suite.suites() {
                let start = Instant::now();
                let rep = run_suite(s, &cfg);
                print_table(&rep);
                eprintln!("suite {s}: {} checks in {:.3} s", rep.checks.len(), start.elapsed().as_secs_f64());
                all.extend(rep);
            }
            let passed = all.passed();
            print_json(&VerifyOutput { ns: &n, degree, passed, checks: &all });
            exit_for(passed)
        }
    }
}

/// Parse `args` and run; clap usage errors map to exit code 2.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors() {
        assert_eq!(run_from(["qmacd", "stats", "--eta", "1,-1"]), EXIT_USAGE);
        assert_eq!(run_from(["qmacd", "kernel", "--n", "0"]), EXIT_USAGE);
        assert_eq!(run_from(["qmacd", "kernel", "--n", "2", "--check", "z"]), EXIT_USAGE);
        assert_eq!(run_from(["qmacd", "verify", "--n", "1"]), EXIT_USAGE);
        assert_eq!(run_from(["qmacd", "frobnicate"]), EXIT_USAGE);
    }

    #[test]
    fn suite_lists() {
        assert_eq!(SuiteArg::All.suites().len(), 5);
        assert_eq!(SuiteArg::Dunkl.suites(), vec![Suite::Dunkl]);
    }
}
