// The five classic use cases, each computed by all four methods.
//
// cargo run --example use_cases

use hindex::{
    geometric_h_index, h_index_counting, h_index_oracle, h_index_sort_scan, normalize_profile,
};

const CASES: [(&str, &[i64]); 6] = [
    ("a1", &[10, 9, 8, 8, 7, 5, 4, 3, 2, 1, 1]),
    ("a2", &[10, 9, 7, 3, 2, 1, 1]),
    ("a3", &[4, 3, 2, 1]),
    ("a4", &[400, 300, 200, 2]),
    ("a5", &[700, 600, 8, 7, 7, 6]),
    // a1 in ascending order
    ("a6", &[1, 1, 2, 3, 4, 5, 7, 8, 8, 9, 10]),
];

pub fn run_example() -> hindex::Result<Vec<usize>> {
    let mut found = Vec::new();
    println!(
        "{:<4} {:>9} {:>9} {:>7} {:>10}",
        "case", "sort_scan", "counting", "oracle", "geometric"
    );
    for (name, counts) in CASES {
        let profile = normalize_profile(counts)?;
        let h = [
            h_index_sort_scan(&profile).h,
            h_index_counting(&profile).h,
            h_index_oracle(&profile).h,
            geometric_h_index(&profile).0.h,
        ];
        println!("{name:<4} {:>9} {:>9} {:>7} {:>10}", h[0], h[1], h[2], h[3]);
        assert!(h.iter().all(|&x| x == h[0]));
        found.push(h[0]);
    }
    Ok(found)
}

#[allow(dead_code)]
fn main() -> hindex::Result<()> {
    run_example().map(|_| ())
}
