//! `workbench` command line.
//!
//! Exit codes: 0 success, 1 data or validation error, 2 usage error. Data
//! goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::{plot_data, Error, PlotKind, DEFAULT_ADDR, KB_PATH_ENV};
use crate::canonical;
use crate::kb::{
    export_graph, parse_kb, parse_kb_unvalidated, validate_kb, KbStore, KnowledgeBase,
};
use crate::scenario::{diff_rankings, run_scenario, RankingReport, Scenario};
use crate::ErrorKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "workbench",
    version,
    about = "PROMETHEE ranking workbench over a technique knowledge base"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a knowledge base and print the violation report.
    Validate {
        #[arg(env = KB_PATH_ENV)]
        kb: PathBuf,
    },
    /// Rank the alternatives of a scenario.
    Rank {
        #[arg(env = KB_PATH_ENV)]
        kb: PathBuf,
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare two ranking reports.
    Diff { before: PathBuf, after: PathBuf },
    /// Print the schema graph of a knowledge base.
    Graph {
        #[arg(env = KB_PATH_ENV)]
        kb: PathBuf,
    },
    /// Turn a ranking report into chart data.
    Plot {
        report: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Points)]
        kind: Kind,
    },
    /// Serve the HTTP API.
    Serve {
        #[arg(env = KB_PATH_ENV)]
        kb: PathBuf,
        #[arg(long, default_value = DEFAULT_ADDR)]
        addr: SocketAddr,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Points,
    Histogram,
}

impl From<Kind> for PlotKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Points => PlotKind::Points,
            Kind::Histogram => PlotKind::Histogram,
        }
    }
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind as K;
            let rendered = e.render().to_string();
            return match e.kind() {
                K::DisplayHelp | K::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {}", e.code(), e);
            match e.kind() {
                ErrorKind::Usage => EXIT_USAGE,
                _ => EXIT_DATA,
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_kb(path: &Path) -> Result<KnowledgeBase, Error> {
    Ok(parse_kb(&read(path)?)?)
}

fn load_report(path: &Path) -> Result<RankingReport, Error> {
    let report = RankingReport::from_json(&read(path)?).map_err(|source| Error::Json {
        what: "report",
        source,
    })?;
    report.verify()?;
    Ok(report)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes()).map_err(|source| Error::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn emit_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Error> {
    let text = canonical::to_string(value).map_err(|source| Error::Json {
        what: "output",
        source,
    })?;
    emit(out, &text)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Validate { kb } => {
            let doc = parse_kb_unvalidated(&read(&kb)?)?;
            let violations = validate_kb(&doc);
            emit_json(out, &violations)?;
            Ok(if violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_DATA
            })
        }
        Command::Rank {
            kb,
            scenario,
            format,
        } => {
            let kb = load_kb(&kb)?;
            let scenario = Scenario::from_json(&read(&scenario)?)?;
            let report = run_scenario(&kb, &scenario)?;
            match format {
                Format::Json => emit(out, &report.to_canonical_json())?,
                Format::Csv => emit(out, &to_csv(&report))?,
                Format::Table => emit(out, &to_table(&report))?,
            }
            Ok(EXIT_OK)
        }
        Command::Diff { before, after } => {
            let a = load_report(&before)?;
            let b = load_report(&after)?;
            emit_json(out, &diff_rankings(&a, &b))?;
            Ok(EXIT_OK)
        }
        Command::Graph { kb } => {
            emit_json(out, &export_graph(&load_kb(&kb)?))?;
            Ok(EXIT_OK)
        }
        Command::Plot { report, kind } => {
            emit_json(out, &plot_data(&load_report(&report)?, kind.into()))?;
            Ok(EXIT_OK)
        }
        Command::Serve { kb, addr } => {
            let store = KbStore::open(&kb)?;
            let runtime = tokio::runtime::Runtime::new().map_err(|source| Error::Io {
                path: "<runtime>".into(),
                source,
            })?;
            runtime
                .block_on(super::http::serve(store, addr))
                .map_err(|source| Error::Io {
                    path: addr.to_string(),
                    source,
                })?;
            Ok(EXIT_OK)
        }
    }
}

const DECIMALS: u32 = 6;

fn to_csv(report: &RankingReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = [
        "rank",
        "alternative",
        "label",
        "phi_plus",
        "phi_minus",
        "phi",
        "phi_exact",
        "phi_display",
    ];
    w.write_record(header).expect("in-memory csv");
    for line in &report.ranked {
        let flow = report
            .flows
            .get(&line.alternative)
            .expect("ranked alternative has flows");
        w.write_record([
            line.rank.to_string(),
            line.alternative.clone(),
            line.label.clone(),
            flow.positive.to_decimal_string(DECIMALS),
            flow.negative.to_decimal_string(DECIMALS),
            flow.net.to_decimal_string(DECIMALS),
            flow.net.to_string(),
            line.net_display.clone(),
        ])
        .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8 csv")
}

fn to_table(report: &RankingReport) -> String {
    let width = report
        .ranked
        .iter()
        .map(|l| l.alternative.len())
        .chain(["alternative".len()])
        .max()
        .unwrap_or(0);
    let mut s = format!(
        "scenario: {} ({} alternatives, {} criteria)\n",
        report.scenario,
        report.table.num_alternatives(),
        report.table.num_criteria()
    );
    s.push_str(&format!(
        "{:<4}  {:<width$}  {:>8}  {:>8}  {:>8}\n",
        "rank", "alternative", "phi+", "phi-", "phi"
    ));
    for line in &report.ranked {
        let f = report
            .flows
            .get(&line.alternative)
            .expect("ranked alternative has flows");
        s.push_str(&format!(
            "{:<4}  {:<width$}  {:>8}  {:>8}  {:>8}\n",
            line.rank,
            line.alternative,
            f.positive.to_decimal_string(3),
            f.negative.to_decimal_string(3),
            line.net_display
        ));
    }
    s
}
