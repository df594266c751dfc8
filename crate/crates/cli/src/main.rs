use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cubic_covers::generators;
use cubic_covers_cli::audit::audit_report;
use cubic_covers_cli::report::GraphReport;
use cubic_covers_cli::{read_corpus, scan, Format, Op, Options};

#[derive(Parser)]
#[command(name = "cubcov", version, about = "Perfect-matching covers, cores and cycle covers of cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the single graph in a file ("-" for stdin).
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Analyze every graph of a corpus file; one JSON line per graph, then a summary.
    Scan {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
    /// Print a generated graph in MGF.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Re-check every witness of a report file against its corpus.
    Verify { report: PathBuf, corpus: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// Flower snark J_t (odd t >= 5).
    Flower { t: usize },
    Petersen,
    K4,
    K33,
    Prism,
    /// Two vertices joined by three parallel edges.
    Theta,
}

#[derive(Args)]
struct Flags {
    #[arg(long, value_enum, default_value = "auto")]
    format: Format,
    /// Operations to run (comma separated); defaults to
    /// structure,mu,oddness,fan-raspaud,cores,covers.
    #[arg(long, value_enum, value_delimiter = ',')]
    ops: Option<Vec<Op>>,
    /// Compute μ_k for k = 1..=K.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=6))]
    mu_upto: u8,
    /// Also compute the exact shortest cycle cover.
    #[arg(long)]
    scc: bool,
    /// Also search for a Fulkerson cover.
    #[arg(long)]
    fulkerson: bool,
    /// Also test hypohamiltonicity and the vertex-deleted statements.
    #[arg(long)]
    hypo: bool,
    /// Per-graph wall-clock budget; later fields are recorded as timeouts.
    #[arg(long)]
    budget_ms: Option<u64>,
    #[arg(long, default_value_t = cubic_covers::matching::DEFAULT_PM_CAP)]
    pm_cap: usize,
    /// Cycle-space dimension limit for the exact shortest cover.
    #[arg(long, default_value_t = cubic_covers::cyclecover::DEFAULT_DIM_CAP)]
    dim_cap: usize,
    /// Cycle limit for the exact shortest cover (default: unlimited).
    #[arg(long)]
    scc_max_cycles: Option<usize>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Include per-field timings (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Flags {
    fn options(&self) -> Options {
        let mut ops = match &self.ops {
            Some(list) => list.iter().copied().collect(),
            None => Options::default_ops(),
        };
        for (on, op) in [(self.scc, Op::Scc), (self.fulkerson, Op::Fulkerson), (self.hypo, Op::Hypo)] {
            if on {
                ops.insert(op);
            }
        }
        Options {
            ops,
            mu_upto: self.mu_upto as usize,
            pm_cap: self.pm_cap,
            dim_cap: self.dim_cap,
            scc_max_cycles: self.scc_max_cycles,
            budget_ms: self.budget_ms,
            timings: self.timings,
        }
    }

    fn writer(&self) -> io::Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
            None => Box::new(io::BufWriter::new(io::stdout().lock())),
        })
    }
}

fn read_input(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("cubcov: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Gen { family } => {
            let g = match family {
                Family::Flower { t } => match generators::flower_snark(t) {
                    Ok(g) => g,
                    Err(e) => return usage_error(e),
                },
                Family::Petersen => generators::petersen(),
                Family::K4 => generators::k4(),
                Family::K33 => generators::k33(),
                Family::Prism => generators::prism(),
                Family::Theta => generators::theta(),
            };
            print!("{}", g.to_mgf());
            ExitCode::SUCCESS
        }
        Command::Analyze { file, flags } => {
            let text = match read_input(&file) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("{}: {e}", file.display())),
            };
            let entries = read_corpus(&text, flags.format);
            let [entry] = entries.as_slice() else {
                return usage_error(format!("expected exactly one graph, found {}", entries.len()));
            };
            let g = match &entry.graph {
                Ok(g) => g,
                Err(e) => return usage_error(e),
            };
            let report = cubic_covers_cli::analyze(g, 0, &entry.source, &flags.options());
            let written = flags.writer().and_then(|mut w| {
                serde_json::to_writer(&mut w, &report)?;
                w.write_all(b"\n")?;
                w.flush()
            });
            if let Err(e) = written {
                return usage_error(e);
            }
            if report.counterexample_candidate {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Scan { file, flags } => {
            let text = match read_input(&file) {
                Ok(t) => t,
                Err(e) => return usage_error(format!("{}: {e}", file.display())),
            };
            let entries = read_corpus(&text, flags.format);
            let result = flags
                .writer()
                .and_then(|mut w| scan(&entries, &flags.options(), flags.workers, &mut *w));
            match result {
                Ok(out) if out.summary.counterexample_candidates > 0 => ExitCode::from(1),
                Ok(_) => ExitCode::SUCCESS,
                Err(e) => usage_error(e),
            }
        }
        Command::Verify { report, corpus } => {
            let (reports, text) = match (fs::read_to_string(&report), read_input(&corpus)) {
                (Ok(r), Ok(c)) => (r, c),
                (Err(e), _) | (_, Err(e)) => return usage_error(e),
            };
            let entries = read_corpus(&text, Format::Auto);
            let mut failures = 0;
            let mut audited = 0;
            for (lineno, line) in reports.lines().enumerate() {
                let value: serde_json::Value = match serde_json::from_str(line) {
                    Ok(v) => v,
                    Err(e) => return usage_error(format!("report line {}: {e}", lineno + 1)),
                };
                if value.get("summary").is_some() {
                    continue;
                }
                let r: GraphReport = match serde_json::from_value(value) {
                    Ok(r) => r,
                    Err(e) => return usage_error(format!("report line {}: {e}", lineno + 1)),
                };
                let Some(entry) = entries.get(r.index) else {
                    println!("index {}: not in corpus", r.index);
                    failures += 1;
                    continue;
                };
                let problems = match (&entry.graph, &r.parse_error) {
                    (Ok(g), None) if entry.source == r.source => audit_report(g, &r),
                    (Err(_), Some(_)) => Vec::new(),
                    _ => vec!["report does not match corpus entry".to_string()],
                };
                audited += 1;
                for p in &problems {
                    println!("index {}: {p}", r.index);
                }
                failures += !problems.is_empty() as usize;
            }
            println!("audited {audited} reports, {failures} with problems");
            if failures > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            }
        }
    }
}
