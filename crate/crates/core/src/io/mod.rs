//! Ingestion, reports, plots and the benchmark harness.

pub mod bench;
pub mod parse;
pub mod report;
pub mod svg;

pub use bench::{
    generate_counts, parse_methods, run_benchmark, BenchmarkConfig, BenchmarkReport, BenchmarkRow,
};
pub use parse::{parse_citations, InputFormat};
pub use report::{build_report, emit_report, MetricsReport, ProfileSummary, ReportFormat};
pub use svg::emit_plot_svg;
