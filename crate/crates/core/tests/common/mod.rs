#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest `h` such that at least `h` entries of `counts` are `>= h`,
/// found by trying every candidate on the unsorted counts.
pub fn brute_force_h(counts: &[u64]) -> usize {
    (0..=counts.len())
        .rev()
        .find(|&h| counts.iter().filter(|&&c| c >= h as u64).count() >= h)
        .unwrap()
}

/// The five published use cases with their published h values.
pub const USE_CASES: [(&str, &[u64], usize); 5] = [
    ("a1", &[10, 9, 8, 8, 7, 5, 4, 3, 2, 1, 1], 5),
    ("a2", &[10, 9, 7, 3, 2, 1, 1], 3),
    ("a3", &[4, 3, 2, 1], 2),
    ("a4", &[400, 300, 200, 2], 3),
    ("a5", &[700, 600, 8, 7, 7, 6], 6),
];

/// Random profile with `n` in `[0, max_n]` and counts in `[0, 10^6]`. The
/// value ceiling is drawn per profile so that small-count profiles, whose
/// polylines actually cross `y = x`, are well represented.
pub fn random_counts(rng: &mut ChaCha8Rng, max_n: usize) -> Vec<u64> {
    let n = rng.gen_range(0..=max_n);
    let ceiling = match rng.gen_range(0..4) {
        0 => 1_000_000,
        1 => 2 * n as u64 + 1,
        2 => n as u64 / 2 + 1,
        _ => rng.gen_range(0..=1_000),
    };
    (0..n).map(|_| rng.gen_range(0..=ceiling)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
