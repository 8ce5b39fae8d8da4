// Walks the geometric rule engine over the use cases and prints which rule
// decided each h-index.
//
// cargo run --example geometric_trace

use hindex::{geometric_h_index, CitationProfile, GeometricCase};

pub fn run_example() -> hindex::Result<Vec<(usize, &'static str)>> {
    let cases: [&[u64]; 7] = [
        &[10, 9, 8, 8, 7, 5, 4, 3, 2, 1, 1],
        &[10, 9, 7, 3, 2, 1, 1],
        &[4, 3, 2, 1],
        &[400, 300, 200, 2],
        &[700, 600, 8, 7, 7, 6],
        &[5, 5],
        &[0, 0],
    ];
    let mut out = Vec::new();
    for counts in cases {
        let profile = CitationProfile::from_counts(counts.to_vec());
        let (result, trace) = geometric_h_index(&profile);
        let trace = trace.expect("non-empty profile");
        print!(
            "{counts:?}\n  h = {} by rule {} ({})",
            result.h,
            trace.postulate.label(),
            trace.case.as_str()
        );
        match trace.case {
            GeometricCase::IntegerIntersection | GeometricCase::FractionalIntersection => {
                let p = trace.intersection.unwrap();
                print!(", polyline meets y = x at ({:.6}, {:.6})", p.x, p.y);
            }
            GeometricCase::NoCrossingMinDistance => {
                let d: Vec<String> = trace
                    .distances
                    .iter()
                    .flatten()
                    .map(f64::to_string)
                    .collect();
                print!(
                    ", vertical gaps [{}], minimum at journal {}",
                    d.join(", "),
                    trace.argmin_index.unwrap()
                );
            }
            GeometricCase::EntirelyAbove | GeometricCase::EntirelyBelow => {}
        }
        println!();
        out.push((result.h, trace.postulate.label()));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> hindex::Result<()> {
    run_example().map(|_| ())
}
