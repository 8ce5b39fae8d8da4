// Least-squares trendline through the citation points and its crossing with
// the journal-number line.
//
// cargo run --example trendline_fit

use hindex::geometry::trendline_gate;
use hindex::{estimate_h_via_trendline, h_index_oracle, CitationProfile};

pub fn run_example() -> hindex::Result<usize> {
    let a1 = CitationProfile::from_counts(vec![10, 9, 8, 8, 7, 5, 4, 3, 2, 1, 1]);
    let est = estimate_h_via_trendline(&a1)?;
    println!(
        "a1 trendline: y = {:.5}x + {:.5}, r^2 = {:.4}",
        est.fit.slope, est.fit.intercept, est.fit.r_squared
    );
    println!(
        "meets y = x at ({:.6}, {:.6}); floor gives {}, oracle says {}",
        est.intersection.x,
        est.intersection.y,
        est.estimate,
        h_index_oracle(&a1).h
    );

    for counts in [vec![10, 9, 7, 3, 2, 1, 1], vec![400, 300, 200, 2]] {
        let profile = CitationProfile::from_counts(counts.clone());
        let fit = estimate_h_via_trendline(&profile)?.fit;
        println!(
            "{counts:?}: r^2 = {:.4}, near-linear: {}",
            fit.r_squared,
            trendline_gate(&profile).is_some()
        );
    }
    Ok(est.estimate)
}

#[allow(dead_code)]
fn main() -> hindex::Result<()> {
    run_example().map(|_| ())
}
