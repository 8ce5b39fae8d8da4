//! Citation metrics: the h-index computed three independent ways and checked
//! against a brute-force evaluation of its definition.
//!
//! * [`metrics`] holds the [`CitationProfile`] data model and the algebraic
//!   algorithms (sort-and-scan, counting, definition oracle).
//! * [`geometry`] reads the h-index off the Cartesian picture: the citation
//!   polyline against the journal-number line `y = x`, a least-squares
//!   trendline, and a rule engine over intersections and vertical distances.
//! * [`io`] parses CSV/JSON citation lists, renders reports and SVG plots, and
//!   times the algorithms to estimate their empirical scaling.
//!
//! ```
//! use hindex::{normalize_profile, h_index_sort_scan, geometric_h_index};
//!
//! let profile = normalize_profile(&[10, 9, 7, 3, 2, 1, 1]).unwrap();
//! assert_eq!(h_index_sort_scan(&profile).h, 3);
//!
//! let (result, trace) = geometric_h_index(&profile);
//! assert_eq!(result.h, 3);
//! assert_eq!(trace.unwrap().postulate.label(), "iii.b");
//! ```

pub mod error;
pub mod geometry;
pub mod io;
pub mod metrics;

pub use error::{Error, Result};
pub use geometry::{
    classify_profile, estimate_h_via_trendline, euclidean_distance, fit_trendline,
    geometric_h_index, intersect_with_identity, vertical_distances, GeometricCase, GeometricTrace,
    LineFit, Point2, Postulate, TrendlineEstimate,
};
pub use metrics::{
    h_index_counting, h_index_oracle, h_index_sort_scan, normalize_profile, CitationProfile,
    HIndexResult, Method,
};
