//! Per-profile bundle of every method's result and its serialisations.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::geometry::{
    estimate_h_via_trendline, geometric_h_index, GeometricTrace, Point2, TrendlineEstimate,
};
use crate::metrics::{
    h_index_counting, h_index_oracle, h_index_sort_scan, CitationProfile, HIndexResult, Method,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    PlainText,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProfileSummary {
    pub n: usize,
    pub min: Option<u64>,
    pub max: Option<u64>,
    pub total: u128,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub summary: ProfileSummary,
    /// One entry per method, in [`Method::ALL`] order.
    pub results: Vec<HIndexResult>,
    /// `None` only for the empty profile.
    pub trace: Option<GeometricTrace>,
    /// Present when the profile passes the trendline gate.
    pub trendline: Option<TrendlineEstimate>,
    pub agreement: bool,
}

impl MetricsReport {
    /// The oracle's h, or the first listed method's when the oracle was
    /// filtered out.
    pub fn h(&self) -> usize {
        self.result(Method::Oracle)
            .or_else(|| self.results.first())
            .map_or(0, |r| r.h)
    }

    pub fn result(&self, method: Method) -> Option<&HIndexResult> {
        self.results.iter().find(|r| r.method == method)
    }

    /// Drops results of methods not listed. `agreement` keeps describing all
    /// four methods.
    pub fn retain_methods(&mut self, methods: &[Method]) {
        self.results.retain(|r| methods.contains(&r.method));
    }
}

/// Runs all four methods and the geometric trace on `profile`.
pub fn build_report(profile: &CitationProfile) -> MetricsReport {
    let (geometric, trace) = geometric_h_index(profile);
    let results = vec![
        h_index_sort_scan(profile),
        h_index_counting(profile),
        h_index_oracle(profile),
        geometric,
    ];
    let agreement = results.windows(2).all(|w| w[0].h == w[1].h);
    let trendline = estimate_h_via_trendline(profile)
        .ok()
        .filter(|est| est.applicable);

    MetricsReport {
        summary: ProfileSummary {
            n: profile.len(),
            min: profile.min_citations(),
            max: profile.max_citations(),
            total: profile.total_citations(),
        },
        results,
        trace,
        trendline,
        agreement,
    }
}

pub fn emit_report(report: &MetricsReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_string_pretty(&JsonReport::from(report))
                .expect("report serialisation cannot fail");
            out.push('\n');
            out
        }
        ReportFormat::PlainText => plain_text(report),
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    n: usize,
    h: usize,
    methods: MethodMap<'a>,
    case: Option<&'static str>,
    postulate: Option<&'static str>,
    intersection: Option<[f64; 2]>,
    distances: Option<&'a [f64]>,
    argmin_index: Option<usize>,
    summary: &'a ProfileSummary,
    trendline: Option<JsonTrendline>,
    agreement: bool,
}

#[derive(Serialize)]
struct JsonTrendline {
    slope: f64,
    intercept: f64,
    r_squared: f64,
    intersection: [f64; 2],
    estimate: usize,
}

struct MethodMap<'a>(&'a [HIndexResult]);

impl Serialize for MethodMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for r in self.0 {
            map.serialize_entry(r.method.as_str(), &r.h)?;
        }
        map.end()
    }
}

fn pair(p: Point2) -> [f64; 2] {
    [p.x, p.y]
}

impl<'a> From<&'a MetricsReport> for JsonReport<'a> {
    fn from(r: &'a MetricsReport) -> Self {
        let trace = r.trace.as_ref();
        JsonReport {
            n: r.summary.n,
            h: r.h(),
            methods: MethodMap(&r.results),
            case: trace.map(|t| t.case.as_str()),
            postulate: trace.map(|t| t.postulate.label()),
            intersection: trace.and_then(|t| t.intersection).map(pair),
            distances: trace.and_then(|t| t.distances.as_deref()),
            argmin_index: trace.and_then(|t| t.argmin_index),
            summary: &r.summary,
            trendline: r.trendline.map(|est| JsonTrendline {
                slope: est.fit.slope,
                intercept: est.fit.intercept,
                r_squared: est.fit.r_squared,
                intersection: pair(est.intersection),
                estimate: est.estimate,
            }),
            agreement: r.agreement,
        }
    }
}

fn plain_text(r: &MetricsReport) -> String {
    let mut out = String::new();
    let s = &r.summary;
    let _ = writeln!(out, "papers: {}", s.n);
    if let (Some(min), Some(max)) = (s.min, s.max) {
        let _ = writeln!(out, "citations: total {}, min {min}, max {max}", s.total);
    }
    let _ = writeln!(out, "h-index: {}", r.h());
    let methods: Vec<String> = r
        .results
        .iter()
        .map(|res| format!("{}={}", res.method, res.h))
        .collect();
    let _ = writeln!(out, "methods: {}", methods.join(" "));
    let _ = writeln!(out, "agreement: {}", r.agreement);

    if let Some(t) = &r.trace {
        let _ = writeln!(out, "case: {}", t.case.as_str());
        let _ = writeln!(out, "postulate: {}", t.postulate.label());
        if let Some(p) = t.intersection {
            let _ = writeln!(out, "intersection: ({:.6}, {:.6})", p.x, p.y);
        }
        if let (Some(d), Some(i)) = (&t.distances, t.argmin_index) {
            let list: Vec<String> = d.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "distances: {}", list.join(", "));
            let _ = writeln!(out, "minimum distance: {} at journal {i}", d[i - 1]);
        }
    }
    if let Some(est) = &r.trendline {
        let _ = writeln!(
            out,
            "trendline: y = {:.6}x + {:.6} (r^2 = {:.6})",
            est.fit.slope, est.fit.intercept, est.fit.r_squared
        );
        let _ = writeln!(
            out,
            "trendline intersection: ({:.6}, {:.6})",
            est.intersection.x, est.intersection.y
        );
        let _ = writeln!(out, "trendline estimate: {}", est.estimate);
    }
    out
}
