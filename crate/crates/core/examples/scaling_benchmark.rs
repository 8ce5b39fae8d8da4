// Times the four methods on random profiles and fits log(time) against
// log(n). Run in release mode for meaningful numbers:
//
// cargo run --release --example scaling_benchmark

use hindex::io::{run_benchmark, BenchmarkConfig, BenchmarkReport};
use hindex::Method;

pub fn run_example() -> hindex::Result<BenchmarkReport> {
    let config = BenchmarkConfig {
        sizes: vec![1_000, 10_000, 100_000],
        methods: Method::ALL.to_vec(),
        runs: 5,
        seed: 7,
    };
    let report = run_benchmark(&config)?;
    print!("{}", report.to_text());
    Ok(report)
}

#[allow(dead_code)]
fn main() -> hindex::Result<()> {
    run_example().map(|_| ())
}
