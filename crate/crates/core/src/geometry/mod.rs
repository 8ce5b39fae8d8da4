//! The Cartesian reading of the h-index.
//!
//! Papers sorted by descending citations are plotted as points `(i, y_i)`
//! where `i` is the 1-based journal number. The journal-number line `y = x`
//! rises while the citation polyline falls, and h sits where they meet. The
//! [`engine`] turns that picture into a decision procedure; [`fit`] provides
//! the least-squares trendline used for near-linear profiles.

pub mod engine;
pub mod fit;
mod point;

pub use engine::{
    classify_profile, estimate_h_via_trendline, geometric_h_index, min_distance_rule,
    trendline_gate, vertical_distances, GeometricCase, GeometricTrace, MinDistance, Postulate,
    TrendlineEstimate, INTEGER_TOLERANCE, R_SQUARED_GATE,
};
pub use fit::{fit_trendline, intersect_with_identity, LineFit};
pub use point::{euclidean_distance, Point2};
