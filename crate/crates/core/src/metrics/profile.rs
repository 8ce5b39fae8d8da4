use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Citation counts of one author's papers.
///
/// Keeps the input order (`raw`) next to a non-increasing copy
/// (`sorted_desc`). Rank `i` (1-based) in `sorted_desc` is the journal number
/// of the Cartesian construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CitationProfile {
    raw: Vec<u64>,
    sorted_desc: Vec<u64>,
}

/// Validates signed input and builds a profile. Ascending, descending or
/// unordered input all give the same `sorted_desc`.
pub fn normalize_profile(raw: &[i64]) -> Result<CitationProfile> {
    let counts = raw
        .iter()
        .enumerate()
        .map(|(index, &c)| u64::try_from(c).map_err(|_| Error::NegativeCitation { index }))
        .collect::<Result<Vec<_>>>()?;
    Ok(CitationProfile::from_counts(counts))
}

impl CitationProfile {
    pub fn from_counts(raw: Vec<u64>) -> Self {
        let mut sorted_desc = raw.clone();
        sorted_desc.sort_unstable_by(|a, b| b.cmp(a));
        Self { raw, sorted_desc }
    }

    pub fn raw(&self) -> &[u64] {
        &self.raw
    }

    pub fn sorted_desc(&self) -> &[u64] {
        &self.sorted_desc
    }

    /// Number of papers.
    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }

    /// Citations of the paper at 1-based `rank` in descending order.
    ///
    /// Panics when `rank` is 0 or greater than [`len`](Self::len).
    pub fn citations_at(&self, rank: usize) -> u64 {
        assert!(rank >= 1, "ranks are 1-based");
        self.sorted_desc[rank - 1]
    }

    pub fn total_citations(&self) -> u128 {
        self.raw.iter().map(|&c| u128::from(c)).sum()
    }

    pub fn max_citations(&self) -> Option<u64> {
        self.sorted_desc.first().copied()
    }

    pub fn min_citations(&self) -> Option<u64> {
        self.sorted_desc.last().copied()
    }
}

impl From<Vec<u64>> for CitationProfile {
    fn from(raw: Vec<u64>) -> Self {
        Self::from_counts(raw)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SortScan,
    Counting,
    Oracle,
    Geometric,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::SortScan,
        Method::Counting,
        Method::Oracle,
        Method::Geometric,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::SortScan => "sort_scan",
            Method::Counting => "counting",
            Method::Oracle => "oracle",
            Method::Geometric => "geometric",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    /// Accepts the canonical names and the short CLI spellings
    /// (`sort`, `count`).
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sort" | "sort_scan" | "sortscan" => Ok(Method::SortScan),
            "count" | "counting" => Ok(Method::Counting),
            "oracle" => Ok(Method::Oracle),
            "geometric" | "geo" => Ok(Method::Geometric),
            _ => Err(Error::UnknownMethod(s.to_string())),
        }
    }
}

/// An h-index together with the method that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HIndexResult {
    pub h: usize,
    pub method: Method,
    /// 1-based rank of the last paper counted into `h`; `None` when `h == 0`.
    pub pivot: Option<usize>,
}

impl HIndexResult {
    pub(crate) fn new(h: usize, method: Method) -> Self {
        Self {
            h,
            method,
            pivot: (h > 0).then_some(h),
        }
    }
}
