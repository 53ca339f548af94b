use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use super::manifest::{ProbeConfig, SuiteManifest};
use super::report::{exit_code, Status, VerificationReport};
use super::suites::{probe_conjectures, run_suite};
use crate::budget::SearchBudget;
use crate::dihedral::{enumerate_shifts_with, predicted_shifts, stable_parameters};
use crate::exec::Exec;
use crate::families::FamilySpec;
use crate::graph::dimacs::{read_dimacs, write_dimacs};
use crate::graph::{are_isomorphic, Graph};
use crate::homsolver::{chromatic_number, closed_form_chi, is_core_with, Certificate, CoreVerdict, SolveOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "kneser-lab", version, about = "Exact checks on stable Kneser graphs and their relatives")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Per-query budget as "<nodes>,<seconds>" ("-" for no limit); overrides KNESER_LAB_BUDGET
    #[arg(long, global = true, value_parser = parse_budget)]
    budget: Option<SearchBudget>,
    /// Run data-parallel loops sequentially
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph and write it as DIMACS
    Construct {
        spec: FamilySpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the shifts of a stable Kneser graph
    Shifts {
        spec: FamilySpec,
        /// Also compute the closed-form prediction and compare
        #[arg(long)]
        predict: bool,
    },
    /// Exact chromatic number with a colouring certificate
    Chi { graph: String },
    /// Decide whether a graph is a core
    Core { graph: String },
    /// Decide whether a homomorphism exists
    Hom { source: String, target: String },
    /// Decide isomorphism
    Iso { a: String, b: String },
    /// Run a verification suite (or "all")
    Verify {
        suite: String,
        /// Write the reports as JSON
        #[arg(long)]
        json: Option<PathBuf>,
        /// Suite manifest replacing the bundled one
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Compare exact chi with the conjectured n-(k-1)s; never fails
    Probe {
        #[arg(long, value_parser = parse_range, default_value = "9..12")]
        n: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "2..3")]
        k: (usize, usize),
        #[arg(long, value_parser = parse_range, default_value = "3..4")]
        s: (usize, usize),
        /// Node limit per instance
        #[arg(long, default_value_t = 2_000_000)]
        nodes: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_budget(text: &str) -> Result<SearchBudget, String> {
    SearchBudget::parse(text).ok_or_else(|| format!("expected \"<nodes>,<seconds>\", got {text:?}"))
}

/// `a..b` (inclusive) or a single value.
fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected a range like 9..12, got {text:?}");
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// A family spec, or else a DIMACS file path.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if let Ok(spec) = arg.parse::<FamilySpec>() {
        return spec.build().map_err(|e| usage(format!("{arg}: {e}")));
    }
    if arg.contains(':') && !std::path::Path::new(arg).exists() {
        return Err(usage(format!("{arg}: not a valid family spec")));
    }
    let text = std::fs::read_to_string(arg).map_err(|e| usage(format!("{arg}: {e}")))?;
    read_dimacs(&text).map_err(|e| usage(format!("{arg}: {e}")))
}

fn io(e: std::io::Error) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn write_json(path: &PathBuf, reports: &[VerificationReport]) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(reports).expect("reports serialize");
    std::fs::write(path, text + "\n").map_err(io)
}

fn print_reports(out: &mut dyn Write, reports: &[VerificationReport]) -> Result<(), Failure> {
    for r in reports {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Exhausted => "EXHAUSTED",
        };
        let probe = if r.probe { " (probe)" } else { "" };
        writeln!(out, "{tag:<9} {} [{}]{probe} expected={} computed={}", r.claim_id, r.parameters, r.expected.value, r.computed)
            .map_err(io)?;
    }
    let count = |s: Status| reports.iter().filter(|r| !r.probe && r.status == s).count();
    writeln!(
        out,
        "{} pass, {} fail, {} exhausted, {} probes",
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Exhausted),
        reports.iter().filter(|r| r.probe).count()
    )
    .map_err(io)
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let budget = cli.global.budget.unwrap_or_else(SearchBudget::from_env);
    let exec = if cli.global.sequential { Exec::Sequential } else { Exec::default() };
    match cli.command {
        Command::Construct { spec, out: path } => {
            let g = spec.build().map_err(|e| usage(format!("{spec}: {e}")))?;
            let text = write_dimacs(&g);
            match path {
                Some(p) => std::fs::write(p, text).map_err(io)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Shifts { spec, predict } => {
            let g = spec.build().map_err(|e| usage(format!("{spec}: {e}")))?;
            let (n, k, s) = stable_parameters(&g).map_err(|e| usage(format!("{spec}: {e}")))?;
            let brute = enumerate_shifts_with(&g, exec).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "brute_force: {{{}}}", brute.texts().join(", ")).map_err(io)?;
            if !predict {
                return Ok(EXIT_OK);
            }
            let predicted = predicted_shifts(n, k, s).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "lemma_formula: {{{}}}", predicted.texts().join(", ")).map_err(io)?;
            let agree = brute.same_members(&predicted);
            writeln!(out, "agree: {agree}").map_err(io)?;
            Ok(if agree { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Chi { graph } => {
            let g = load_graph(&graph)?;
            match chromatic_number(&g, &budget) {
                Ok(c) => {
                    writeln!(out, "chi = {}", c.chi).map_err(io)?;
                    if let Ok(f) = graph.parse::<FamilySpec>().map_err(drop).and_then(|s| closed_form_chi(&s).map_err(drop)) {
                        let kind = if f.proven { "closed form" } else { "conjectured" };
                        writeln!(out, "{kind}: {} ({})", f.value, f.source).map_err(io)?;
                    }
                    writeln!(out, "{}", Certificate::coloring(&graph, &c).to_json()).map_err(io)?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(out, "exhausted: {e}").map_err(io)?;
                    Ok(EXIT_EXHAUSTED)
                }
            }
        }
        Command::Core { graph } => {
            let g = load_graph(&graph)?;
            match is_core_with(&g, &budget, exec) {
                Ok(CoreVerdict::Core) => {
                    writeln!(out, "core").map_err(io)?;
                    Ok(EXIT_OK)
                }
                Ok(CoreVerdict::NotCore { endomorphism, missed }) => {
                    let name = g.label(missed).map_or_else(|| format!("#{}", missed + 1), |l| l.to_string());
                    writeln!(out, "not a core: endomorphism missing {name}").map_err(io)?;
                    let cert = json!({ "kind": "endomorphism", "source": graph, "map": endomorphism.map(), "missed": missed });
                    writeln!(out, "{}", serde_json::to_string_pretty(&cert).expect("serializes")).map_err(io)?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(out, "exhausted: {e}").map_err(io)?;
                    Ok(EXIT_EXHAUSTED)
                }
            }
        }
        Command::Hom { source, target } => {
            let (g, h) = (load_graph(&source)?, load_graph(&target)?);
            let res = crate::homsolver::HomSearch::new(&g, &h).budget(budget).run();
            match &res.outcome {
                SolveOutcome::Found(hom) => {
                    writeln!(out, "found").map_err(io)?;
                    writeln!(out, "{}", Certificate::homomorphism(&source, &target, hom, res.stats).to_json()).map_err(io)?;
                    Ok(EXIT_OK)
                }
                SolveOutcome::NotExists => {
                    writeln!(out, "not_exists ({} nodes)", res.stats.nodes).map_err(io)?;
                    Ok(EXIT_OK)
                }
                SolveOutcome::Exhausted(stats) => {
                    writeln!(out, "exhausted after {} nodes", stats.nodes).map_err(io)?;
                    Ok(EXIT_EXHAUSTED)
                }
            }
        }
        Command::Iso { a, b } => {
            let (g, h) = (load_graph(&a)?, load_graph(&b)?);
            match are_isomorphic(&g.without_labels(), &h.without_labels()) {
                Some(map) => writeln!(out, "isomorphic\n{}", json!(map)).map_err(io)?,
                None => writeln!(out, "not isomorphic").map_err(io)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, json, manifest } => {
            let manifest = match manifest {
                Some(p) => SuiteManifest::load(&p).map_err(|e| usage(format!("{}: {e}", p.display())))?,
                None => SuiteManifest::bundled(),
            };
            let reports = run_suite(&suite, &manifest, &budget, exec).map_err(|e| usage(e.to_string()))?;
            print_reports(out, &reports)?;
            if let Some(p) = json {
                write_json(&p, &reports)?;
            }
            Ok(exit_code(&reports))
        }
        Command::Probe { n, k, s, nodes, json } => {
            let cfg = ProbeConfig { n, k, s, nodes };
            let mut reports = probe_conjectures(&cfg, &budget, exec);
            super::report::sort_reports(&mut reports);
            print_reports(out, &reports)?;
            if let Some(p) = json {
                write_json(&p, &reports)?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line, writing results to `out`; diagnostics go to stderr.
pub fn cli_main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("kneser-lab: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary: arguments from `argv`, results on stdout.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    cli_main_with(args, &mut std::io::stdout().lock())
}
