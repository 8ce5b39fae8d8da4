//! Wall-clock scaling harness for the h-index methods.
//!
//! Each `(size, method)` pair gets one discarded warm-up run followed by
//! `runs` timed runs; the row keeps the median. Every timed run starts from
//! the unsorted counts, so sorting is part of the sort-based methods' cost.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{fit_trendline, geometric_h_index, LineFit, Point2};
use crate::metrics::{counting_h, h_index_oracle, sort_scan_h, CitationProfile, Method};

pub const MIN_RUNS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchmarkConfig {
    pub sizes: Vec<usize>,
    pub methods: Vec<Method>,
    pub runs: usize,
    pub seed: u64,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        Self {
            sizes: vec![10_000, 100_000, 1_000_000],
            methods: vec![Method::SortScan, Method::Counting],
            runs: MIN_RUNS,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchmarkRow {
    pub n: usize,
    pub method: Method,
    pub median_runtime: Duration,
    pub runs: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkReport {
    pub rows: Vec<BenchmarkRow>,
    /// Log-log fit of median runtime against `n`, per method. The slope is the
    /// empirical scaling exponent. `None` with fewer than two distinct sizes.
    pub scaling: Vec<(Method, Option<LineFit>)>,
}

impl BenchmarkReport {
    pub fn exponent(&self, method: Method) -> Option<f64> {
        self.scaling
            .iter()
            .find(|(m, _)| *m == method)
            .and_then(|(_, fit)| fit.map(|f| f.slope))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>10}  {:<10}  {:>14}  {:>4}",
            "n", "method", "median", "runs"
        );
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{:>10}  {:<10}  {:>14}  {:>4}",
                row.n,
                row.method.as_str(),
                format!("{:.3?}", row.median_runtime),
                row.runs
            );
        }
        for (method, fit) in &self.scaling {
            match fit {
                Some(fit) => {
                    let _ = writeln!(
                        out,
                        "scaling {}: exponent {:.3} (r^2 = {:.3})",
                        method, fit.slope, fit.r_squared
                    );
                }
                None => {
                    let _ = writeln!(out, "scaling {method}: n/a");
                }
            }
        }
        out
    }
}

/// `n` citation counts drawn uniformly from `[0, 2n]`. Identical `(n, seed)`
/// always yields identical counts.
pub fn generate_counts(n: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    let upper = 2 * n as u64;
    (0..n).map(|_| rng.gen_range(0..=upper)).collect()
}

fn run_once(method: Method, counts: &[u64]) -> usize {
    match method {
        Method::SortScan => {
            let mut ascending = counts.to_vec();
            ascending.sort_unstable();
            sort_scan_h(&ascending)
        }
        Method::Counting => counting_h(counts),
        Method::Oracle => h_index_oracle(&CitationProfile::from_counts(counts.to_vec())).h,
        Method::Geometric => {
            geometric_h_index(&CitationProfile::from_counts(counts.to_vec()))
                .0
                .h
        }
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len().is_multiple_of(2) {
        (samples[mid - 1] + samples[mid]) / 2
    } else {
        samples[mid]
    }
}

pub fn run_benchmark(config: &BenchmarkConfig) -> Result<BenchmarkReport> {
    if let Some(&bad) = config.sizes.iter().find(|&&n| n == 0) {
        return Err(Error::InvalidSize(bad));
    }
    if config.sizes.is_empty() {
        return Err(Error::InvalidSize(0));
    }
    if config.runs < MIN_RUNS {
        return Err(Error::InvalidRuns(config.runs));
    }

    let mut rows = Vec::new();
    for &n in &config.sizes {
        let counts = generate_counts(n, config.seed);
        for &method in &config.methods {
            black_box(run_once(method, black_box(&counts)));
            let samples = (0..config.runs)
                .map(|_| {
                    let start = Instant::now();
                    black_box(run_once(method, black_box(&counts)));
                    start.elapsed()
                })
                .collect();
            rows.push(BenchmarkRow {
                n,
                method,
                median_runtime: median(samples),
                runs: config.runs,
            });
        }
    }

    let scaling = config
        .methods
        .iter()
        .map(|&method| {
            let points: Vec<Point2> = rows
                .iter()
                .filter(|r| r.method == method)
                .map(|r| {
                    let secs = r.median_runtime.as_secs_f64().max(1e-9);
                    Point2::new((r.n as f64).ln(), secs.ln())
                })
                .collect();
            (method, fit_trendline(&points).ok())
        })
        .collect();

    Ok(BenchmarkReport { rows, scaling })
}

/// Parses a comma-separated method list such as `sort,count`.
pub fn parse_methods(list: &str) -> Result<Vec<Method>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(generate_counts(1000, 7), generate_counts(1000, 7));
        assert_ne!(generate_counts(1000, 7), generate_counts(1000, 8));
        assert!(generate_counts(50, 1).iter().all(|&c| c <= 100));
    }

    #[test]
    fn methods_agree_on_generated_counts() {
        let counts = generate_counts(5000, 3);
        let h: Vec<usize> = Method::ALL.iter().map(|&m| run_once(m, &counts)).collect();
        assert!(h.windows(2).all(|w| w[0] == w[1]), "{h:?}");
    }

    #[test]
    fn rejects_bad_config() {
        let mut config = BenchmarkConfig {
            sizes: vec![10, 0],
            ..Default::default()
        };
        assert_eq!(run_benchmark(&config), Err(Error::InvalidSize(0)));
        config.sizes = vec![10];
        config.runs = 4;
        assert_eq!(run_benchmark(&config), Err(Error::InvalidRuns(4)));
        assert!(matches!(
            parse_methods("sort,median"),
            Err(Error::UnknownMethod(_))
        ));
    }

    #[test]
    fn small_run_produces_rows() {
        let config = BenchmarkConfig {
            sizes: vec![100, 1000],
            methods: vec![Method::Counting, Method::Oracle],
            runs: 5,
            seed: 1,
        };
        let report = run_benchmark(&config).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert!(report.rows.iter().all(|r| r.runs == 5));
        assert!(report.exponent(Method::Counting).is_some());
        assert!(report.to_text().contains("scaling counting"));
    }

    #[test]
    fn even_median() {
        let d = |ms| Duration::from_millis(ms);
        assert_eq!(
            median(vec![d(4), d(1), d(3), d(2)]),
            Duration::from_micros(2500)
        );
    }
}
