use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hindex::geometry::engine::citation_points;
use hindex::geometry::{classify_profile, fit_trendline, trendline_gate};
use hindex::io::{
    build_report, emit_plot_svg, emit_report, parse_citations, parse_methods, run_benchmark,
    BenchmarkConfig, InputFormat, ReportFormat,
};
use hindex::{CitationProfile, Method};

const EXIT_INPUT: u8 = 1;
const EXIT_DISAGREEMENT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "hindex",
    version,
    about = "h-index by sort-and-scan, counting and geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the h-index of a citation list.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Draw the citation polyline against the journal-number line as SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Trendline::Auto)]
        trendline: Trendline,
    },
    /// Time the methods on random profiles and fit their scaling exponents.
    Bench {
        #[arg(long, default_value = "10000,100000,1000000", value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value = "sort,count")]
        methods: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Sort,
    Count,
    Oracle,
    Geometric,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Trendline {
    Auto,
    On,
    Off,
}

fn load(path: &PathBuf, format: Format) -> Result<CitationProfile, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let format = match format {
        Format::Csv => InputFormat::Csv,
        Format::Json => InputFormat::Json,
    };
    let counts = parse_citations(BufReader::new(file), format)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(CitationProfile::from_counts(counts))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Compute {
            input,
            format,
            method,
            output,
        } => {
            let profile = load(&input, format)?;
            let mut report = build_report(&profile);
            let selected = match method {
                MethodArg::All => Method::ALL.to_vec(),
                MethodArg::Sort => vec![Method::SortScan],
                MethodArg::Count => vec![Method::Counting],
                MethodArg::Oracle => vec![Method::Oracle],
                MethodArg::Geometric => vec![Method::Geometric],
            };
            report.retain_methods(&selected);
            let format = match output {
                Output::Json => ReportFormat::Json,
                Output::Text => ReportFormat::PlainText,
            };
            write!(stdout, "{}", emit_report(&report, format)).map_err(|e| e.to_string())?;
            if !report.agreement {
                eprintln!("error: h-index methods disagree; this is a bug");
                return Ok(ExitCode::from(EXIT_DISAGREEMENT));
            }
        }
        Command::Plot {
            input,
            format,
            output,
            trendline,
        } => {
            let profile = load(&input, format)?;
            let trace = classify_profile(&profile).map_err(|e| e.to_string())?;
            let fit = match trendline {
                Trendline::Off => None,
                Trendline::Auto => trendline_gate(&profile),
                Trendline::On => {
                    Some(fit_trendline(&citation_points(&profile)).map_err(|e| e.to_string())?)
                }
            };
            let svg = emit_plot_svg(&profile, &trace, fit.as_ref()).map_err(|e| e.to_string())?;
            match output {
                Some(path) => {
                    std::fs::write(&path, svg).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => write!(stdout, "{svg}").map_err(|e| e.to_string())?,
            }
        }
        Command::Bench {
            sizes,
            runs,
            seed,
            methods,
        } => {
            let config = BenchmarkConfig {
                sizes,
                methods: parse_methods(&methods).map_err(|e| e.to_string())?,
                runs,
                seed,
            };
            let report = run_benchmark(&config).map_err(|e| e.to_string())?;
            write!(stdout, "{}", report.to_text()).map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
