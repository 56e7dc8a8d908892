use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use extremal_split::classify::{
    bundled_catalog, check_paper_catalog, enumerate_small, fujiwara_design, rl_replicate, verify_catalog,
    verify_catalog_texts, ClassifyError,
};
use extremal_split::design::{sts, DesignError};
use extremal_split::graph::SplitGraph;
use extremal_split::input::{parse_input, Format, Input, InputError};
use extremal_split::report::{analyze, catalog_table, census_table, classify_input, ReportError};
use extremal_split::spectral::SpectralError;

const DEFAULT_MAX_N: usize = 400;

#[derive(Parser)]
#[command(name = "extremal-split", version, about = "Split graphs from block designs and their exact spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for standard input
    path: PathBuf,
    /// Input format; detected from the header when omitted
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Design parameters, graph metrics and exact spectrum
    Analyze(InputArgs),
    /// Classify against the four-eigenvalue theorem
    Classify(InputArgs),
    /// Write a generated design or split graph
    Generate {
        #[command(subcommand)]
        kind: Generator,
        /// Output file; standard output when omitted
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        /// Analyze the generated object as well
        #[arg(long, global = true)]
        analyze: bool,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Census of all small connected split graphs
    Enumerate {
        #[arg(long = "c")]
        c_max: usize,
        #[arg(long = "s")]
        s_max: usize,
        /// Keep only graphs of diameter 3 with four distinct eigenvalues
        #[arg(long)]
        only_extremal: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Verify a directory of design files, or the bundled examples
    Catalog {
        dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Generator {
    /// K_c with a pendant vertex at every clique vertex
    Corona {
        #[arg(long)]
        c: usize,
    },
    /// Steiner triple system on v points
    Sts {
        #[arg(long)]
        v: usize,
    },
    /// (v−1)/2 copies of an STS(v)
    Fujiwara {
        #[arg(long)]
        v: usize,
    },
    /// r copies of an (r,1)-design read from a file
    RlReplicate {
        path: PathBuf,
        #[arg(long, value_parser = parse_format)]
        format: Option<Format>,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

enum Failure {
    Input(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Violation(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Violation(m) => m,
        }
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<DesignError> for Failure {
    fn from(e: DesignError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<SpectralError> for Failure {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::AssertionFailure { .. } | SpectralError::Linalg(_) => Failure::Violation(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::TheoremViolation(_)
            | ClassifyError::PredictionMismatch(_)
            | ClassifyError::CatalogMismatch { .. }
            | ClassifyError::Linalg(_) => Failure::Violation(e.to_string()),
            ClassifyError::Spectral(s) => s.into(),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::TooLarge { .. } => Failure::Input(e.to_string()),
            ReportError::Spectral(s) => s.into(),
            ReportError::Classify(c) => c.into(),
        }
    }
}

fn max_order() -> Result<usize, Failure> {
    match std::env::var("EXTREMAL_SPLIT_MAX_N") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("EXTREMAL_SPLIT_MAX_N: `{s}` is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let io = |e: std::io::Error| Failure::Input(format!("{}: {e}", path.display()));
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn read_input(path: &Path, format: Option<Format>) -> Result<(Input, Format), Failure> {
    let text = read_text(path)?;
    parse_input(&text, format).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(value: &T, json: bool, text: impl FnOnce(&T) -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
    } else {
        print!("{}", text(value));
    }
}

fn label(path: &Path) -> String {
    path.display().to_string()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(a) => {
            let (input, format) = read_input(&a.path, a.format)?;
            let report = analyze(&input, &label(&a.path), format, max_order()?)?;
            emit(&report, a.json, |r| r.to_text());
        }
        Command::Classify(a) => {
            let (input, format) = read_input(&a.path, a.format)?;
            let report = classify_input(&input, &label(&a.path), format, max_order()?)?;
            emit(&report, a.json, |r| r.to_text());
        }
        Command::Generate {
            kind,
            output,
            analyze: then_analyze,
            json,
        } => {
            let (input, format, name) = match kind {
                Generator::Corona { c } => {
                    if c == 0 {
                        return Err(Failure::Input("corona needs c ≥ 1".into()));
                    }
                    (Input::Graph(SplitGraph::corona_clique(c)), Format::Split, format!("corona c={c}"))
                }
                Generator::Sts { v } => (Input::Design(sts(v)?), Format::Blocks, format!("sts v={v}")),
                Generator::Fujiwara { v } => (Input::Design(fujiwara_design(v)?), Format::Blocks, format!("fujiwara v={v}")),
                Generator::RlReplicate { path, format } => {
                    let (input, _) = read_input(&path, format)?;
                    let Input::Design(d0) = input else {
                        return Err(Failure::Input("rl-replicate needs a design, not a split graph".into()));
                    };
                    (Input::Design(rl_replicate(&d0)?), Format::Blocks, format!("rl-replicate {}", path.display()))
                }
            };
            let text = match &input {
                Input::Design(d) => d.to_block_list(),
                Input::Graph(g) => g.to_split_format(),
            };
            match &output {
                Some(p) => std::fs::write(p, &text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
            if then_analyze {
                let label = output.as_ref().map_or(name, |p| label(p));
                let report = analyze(&input, &label, format, max_order()?)?;
                emit(&report, json, |r| r.to_text());
            }
        }
        Command::Enumerate {
            c_max,
            s_max,
            only_extremal,
            jobs,
            json,
        } => {
            let mut census = enumerate_small(c_max, s_max, jobs)?;
            if only_extremal && json {
                census.entries.retain(|e| e.three_extremal());
            }
            emit(&census, json, |c| census_table(c, only_extremal));
        }
        Command::Catalog { dir, json } => {
            let report = match &dir {
                Some(d) => verify_catalog(d)?,
                None => {
                    let report = verify_catalog_texts(&bundled_catalog())?;
                    check_paper_catalog(&report)?;
                    report
                }
            };
            emit(&report, json, catalog_table);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
