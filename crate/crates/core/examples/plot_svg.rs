// Renders the Cartesian construction for a1 (with trendline) and a4 (with
// the minimum vertical gap) as SVG files in the system temp directory.
//
// cargo run --example plot_svg

use std::path::PathBuf;

use hindex::geometry::trendline_gate;
use hindex::io::emit_plot_svg;
use hindex::{classify_profile, CitationProfile};

pub fn run_example() -> hindex::Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for (name, counts) in [
        ("a1", vec![10, 9, 8, 8, 7, 5, 4, 3, 2, 1, 1]),
        ("a4", vec![400, 300, 200, 2]),
    ] {
        let profile = CitationProfile::from_counts(counts);
        let trace = classify_profile(&profile)?;
        let fit = trendline_gate(&profile);
        let svg = emit_plot_svg(&profile, &trace, fit.as_ref())?;
        let path = std::env::temp_dir().join(format!("hindex-{name}.svg"));
        std::fs::write(&path, svg).expect("temp dir is writable");
        println!("{name}: {}", path.display());
        written.push(path);
    }
    Ok(written)
}

#[allow(dead_code)]
fn main() -> hindex::Result<()> {
    run_example().map(|_| ())
}
