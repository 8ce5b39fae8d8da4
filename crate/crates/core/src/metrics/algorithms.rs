use super::profile::{CitationProfile, HIndexResult, Method};

/// Scans citation counts sorted in *ascending* order. At 0-based position
/// `i` there are `n - i` papers with at least `sorted_asc[i]` citations; the
/// first position where that paper count does not exceed the citations is h.
pub fn sort_scan_h(sorted_asc: &[u64]) -> usize {
    let n = sorted_asc.len();
    for (i, &cited) in sorted_asc.iter().enumerate() {
        let remaining = n - i;
        if remaining as u64 <= cited {
            return remaining;
        }
    }
    0
}

/// Linear-time h-index over unsorted counts.
///
/// Counts above `n` are clamped into bucket `n` since h never exceeds the
/// number of papers.
pub fn counting_h(counts: &[u64]) -> usize {
    let n = counts.len();
    let mut buckets = vec![0usize; n + 1];
    for &c in counts {
        let bucket = usize::try_from(c).map_or(n, |c| c.min(n));
        buckets[bucket] += 1;
    }
    let mut at_least = 0;
    for h in (1..=n).rev() {
        at_least += buckets[h];
        if at_least >= h {
            return h;
        }
    }
    0
}

pub fn h_index_sort_scan(profile: &CitationProfile) -> HIndexResult {
    let ascending: Vec<u64> = profile.sorted_desc().iter().rev().copied().collect();
    HIndexResult::new(sort_scan_h(&ascending), Method::SortScan)
}

pub fn h_index_counting(profile: &CitationProfile) -> HIndexResult {
    HIndexResult::new(counting_h(profile.raw()), Method::Counting)
}

/// Ground truth: tests every rank `i` for `citations_at(i) >= i` without
/// stopping early and keeps the largest passing rank.
pub fn h_index_oracle(profile: &CitationProfile) -> HIndexResult {
    let h = profile
        .sorted_desc()
        .iter()
        .enumerate()
        .map(|(idx, &c)| (idx + 1, c))
        .filter(|&(rank, c)| c >= rank as u64)
        .map(|(rank, _)| rank)
        .max()
        .unwrap_or(0);
    HIndexResult::new(h, Method::Oracle)
}
