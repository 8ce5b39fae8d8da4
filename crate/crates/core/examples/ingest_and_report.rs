// Parses citation lists from CSV and JSON and renders the metrics report in
// both output formats.
//
// cargo run --example ingest_and_report

use hindex::io::{build_report, emit_report, parse_citations, InputFormat, ReportFormat};
use hindex::CitationProfile;

const TWO_COLUMN_CSV: &str = "paper_id,citations\r\n\
    smith2019,10\r\nsmith2020a,9\r\nsmith2020b,7\r\nsmith2021,3\r\n\
    smith2022,2\r\nsmith2023a,1\r\nsmith2023b,1\r\n";

pub fn run_example() -> hindex::Result<(String, String)> {
    let counts = parse_citations(TWO_COLUMN_CSV.as_bytes(), InputFormat::Csv)?;
    let report = build_report(&CitationProfile::from_counts(counts));
    let text = emit_report(&report, ReportFormat::PlainText);
    println!("{text}");

    let counts = parse_citations(&b"[700, 600, 8, 7, 7, 6]"[..], InputFormat::Json)?;
    let json = emit_report(
        &build_report(&CitationProfile::from_counts(counts)),
        ReportFormat::Json,
    );
    println!("{json}");
    Ok((text, json))
}

#[allow(dead_code)]
fn main() -> hindex::Result<()> {
    run_example().map(|_| ())
}
