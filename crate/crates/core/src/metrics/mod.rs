//! Citation profiles and the algebraic h-index algorithms.

mod algorithms;
mod profile;

pub use algorithms::{
    counting_h, h_index_counting, h_index_oracle, h_index_sort_scan, sort_scan_h,
};
pub use profile::{normalize_profile, CitationProfile, HIndexResult, Method};
