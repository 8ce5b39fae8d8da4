//! Rule engine that reads the h-index off the citation polyline.
//!
//! With citations non-increasing and journal numbers strictly increasing, the
//! signed gap `y_i - i` is strictly decreasing, so the polyline meets `y = x`
//! at most once. The rules, applied in order:
//!
//! | label   | situation                                         | h            |
//! |---------|---------------------------------------------------|--------------|
//! | `i.a`   | some rank has `y_i = i`                           | `i`          |
//! | `ii.a`  | near-linear profile crosses between `k` and `k+1` | `floor(x*)`  |
//! | `iii.a` | nearest point (min vertical gap) lies on `y = x`  | `i*`         |
//! | `iii.b` | nearest point lies below `y = x`                  | `i* - 1`     |
//! | `iii.c` | nearest point lies above `y = x`                  | `i*`         |
//! | `above` | every point above `y = x`                         | `n`          |
//! | `below` | every point below `y = x`                         | `0`          |
//!
//! Profiles whose points do not look like a straight line (see
//! [`trendline_gate`]) go through the minimum-distance rules rather than the
//! crossing rule.

use serde::Serialize;

use super::fit::{fit_trendline, intersect_with_identity, LineFit};
use super::point::Point2;
use crate::error::{Error, Result};
use crate::metrics::{CitationProfile, HIndexResult, Method};

/// Minimum r² for a profile to count as near-linear.
pub const R_SQUARED_GATE: f64 = 0.95;

/// A trendline crossing within this distance of an integer is that integer.
pub const INTEGER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeometricCase {
    IntegerIntersection,
    FractionalIntersection,
    NoCrossingMinDistance,
    EntirelyAbove,
    EntirelyBelow,
}

impl GeometricCase {
    pub fn as_str(self) -> &'static str {
        match self {
            GeometricCase::IntegerIntersection => "integer_intersection",
            GeometricCase::FractionalIntersection => "fractional_intersection",
            GeometricCase::NoCrossingMinDistance => "no_crossing_min_distance",
            GeometricCase::EntirelyAbove => "entirely_above",
            GeometricCase::EntirelyBelow => "entirely_below",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Postulate {
    IntegerEqual,
    FractionalFloor,
    NearestOnLine,
    NearestBelow,
    NearestAbove,
    AllAbove,
    AllBelow,
}

impl Postulate {
    pub fn label(self) -> &'static str {
        match self {
            Postulate::IntegerEqual => "i.a",
            Postulate::FractionalFloor => "ii.a",
            Postulate::NearestOnLine => "iii.a",
            Postulate::NearestBelow => "iii.b",
            Postulate::NearestAbove => "iii.c",
            Postulate::AllAbove => "above",
            Postulate::AllBelow => "below",
        }
    }
}

impl Serialize for Postulate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// How the h-index was read off the picture.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometricTrace {
    pub case: GeometricCase,
    /// Present for the two intersection cases.
    pub intersection: Option<Point2>,
    /// `|y_i - i|` per journal number; present for `NoCrossingMinDistance`.
    pub distances: Option<Vec<f64>>,
    /// 1-based journal number of the minimum distance.
    pub argmin_index: Option<usize>,
    pub postulate: Postulate,
}

impl GeometricTrace {
    fn bare(case: GeometricCase, postulate: Postulate) -> Self {
        Self {
            case,
            intersection: None,
            distances: None,
            argmin_index: None,
            postulate,
        }
    }

    /// The minimum vertical distance, when the distance rule was applied.
    pub fn min_distance(&self) -> Option<f64> {
        Some(self.distances.as_ref()?[self.argmin_index? - 1])
    }
}

/// `|y_i - i|` for every journal number `i = 1..=n`.
pub fn vertical_distances(profile: &CitationProfile) -> Result<Vec<f64>> {
    if profile.is_empty() {
        return Err(Error::EmptyProfile);
    }
    Ok(integer_gaps(profile.sorted_desc())
        .map(|d| d as f64)
        .collect())
}

fn integer_gaps(sorted_desc: &[u64]) -> impl Iterator<Item = u64> + '_ {
    sorted_desc
        .iter()
        .enumerate()
        .map(|(idx, &y)| y.abs_diff(idx as u64 + 1))
}

/// Outcome of the minimum-distance rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinDistance {
    pub argmin_index: usize,
    pub postulate: Postulate,
    pub h: usize,
}

/// Applies the minimum-distance rules to a non-increasing citation list.
///
/// Ties prefer the smallest journal number whose point is on or above `y = x`,
/// then the smallest journal number overall. Returns `None` for empty input.
pub fn min_distance_rule(sorted_desc: &[u64]) -> Option<MinDistance> {
    let min = integer_gaps(sorted_desc).min()?;
    let at_min = |idx: &usize| sorted_desc[*idx].abs_diff(*idx as u64 + 1) == min;
    let idx = (0..sorted_desc.len())
        .filter(at_min)
        .find(|&idx| sorted_desc[idx] > idx as u64)
        .or_else(|| (0..sorted_desc.len()).find(at_min))?;

    let journal = idx + 1;
    let (postulate, h) = match sorted_desc[idx].cmp(&(journal as u64)) {
        std::cmp::Ordering::Equal => (Postulate::NearestOnLine, journal),
        std::cmp::Ordering::Less => (Postulate::NearestBelow, journal - 1),
        std::cmp::Ordering::Greater => (Postulate::NearestAbove, journal),
    };
    Some(MinDistance {
        argmin_index: journal,
        postulate,
        h,
    })
}

/// Least-squares fit of `(i, y_i)`, returned only when the profile is close
/// enough to a straight line to trust it: r² at least [`R_SQUARED_GATE`] and
/// no single drop between neighbouring papers larger than `n`.
pub fn trendline_gate(profile: &CitationProfile) -> Option<LineFit> {
    let n = profile.len();
    if n < 2 {
        return None;
    }
    let sorted = profile.sorted_desc();
    if sorted.windows(2).any(|w| w[0] - w[1] > n as u64) {
        return None;
    }
    let fit = fit_trendline(&citation_points(profile)).ok()?;
    (fit.r_squared >= R_SQUARED_GATE).then_some(fit)
}

pub fn citation_points(profile: &CitationProfile) -> Vec<Point2> {
    profile
        .sorted_desc()
        .iter()
        .enumerate()
        .map(|(idx, &y)| Point2::new((idx + 1) as f64, y as f64))
        .collect()
}

fn locate(profile: &CitationProfile) -> Result<(usize, GeometricTrace)> {
    let sorted = profile.sorted_desc();
    if sorted.is_empty() {
        return Err(Error::EmptyProfile);
    }
    let y = |rank: usize| sorted[rank - 1];

    // First journal number at which the polyline is on or below y = x.
    let Some(k) = (1..=sorted.len()).find(|&i| y(i) <= i as u64) else {
        return Ok((
            sorted.len(),
            GeometricTrace::bare(GeometricCase::EntirelyAbove, Postulate::AllAbove),
        ));
    };
    if y(k) == k as u64 {
        let mut trace =
            GeometricTrace::bare(GeometricCase::IntegerIntersection, Postulate::IntegerEqual);
        trace.intersection = Some(Point2::new(k as f64, k as f64));
        return Ok((k, trace));
    }
    if k == 1 {
        return Ok((
            0,
            GeometricTrace::bare(GeometricCase::EntirelyBelow, Postulate::AllBelow),
        ));
    }

    // y(k-1) > k-1 and y(k) < k: the segment from k-1 to k crosses y = x.
    if trendline_gate(profile).is_some() {
        let left = k - 1;
        let above = (y(left) - left as u64) as f64;
        let below = (k as u64 - y(k)) as f64;
        let x = left as f64 + above / (above + below);
        let mut trace = GeometricTrace::bare(
            GeometricCase::FractionalIntersection,
            Postulate::FractionalFloor,
        );
        trace.intersection = Some(Point2::new(x, x));
        return Ok((left, trace));
    }

    let rule = min_distance_rule(sorted).expect("profile is non-empty");
    let trace = GeometricTrace {
        case: GeometricCase::NoCrossingMinDistance,
        intersection: None,
        distances: Some(vertical_distances(profile)?),
        argmin_index: Some(rule.argmin_index),
        postulate: rule.postulate,
    };
    Ok((rule.h, trace))
}

pub fn classify_profile(profile: &CitationProfile) -> Result<GeometricTrace> {
    locate(profile).map(|(_, trace)| trace)
}

/// h-index from the geometric rules. The empty profile yields `h = 0` and no
/// trace.
pub fn geometric_h_index(profile: &CitationProfile) -> (HIndexResult, Option<GeometricTrace>) {
    match locate(profile) {
        Ok((h, trace)) => (HIndexResult::new(h, Method::Geometric), Some(trace)),
        Err(_) => (HIndexResult::new(0, Method::Geometric), None),
    }
}

/// Trendline-based approximation of h.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrendlineEstimate {
    pub estimate: usize,
    pub intersection: Point2,
    pub fit: LineFit,
    /// Whether the profile passes [`trendline_gate`]. Outside the gate the
    /// estimate is unreliable.
    pub applicable: bool,
}

/// Fits a line through `(i, y_i)`, meets it with `y = x` and floors the
/// crossing into `[0, n]`.
///
/// This is an approximation. It matches the true h on straight-line profiles,
/// but a passing gate does not guarantee agreement: curvature near the
/// crossing can shift the fitted intersection past an integer.
pub fn estimate_h_via_trendline(profile: &CitationProfile) -> Result<TrendlineEstimate> {
    let n = profile.len();
    let fit = fit_trendline(&citation_points(profile))?;
    if fit.slope >= 1.0 {
        return Err(Error::NotApplicable("slope is not below that of y = x"));
    }
    let intersection = intersect_with_identity(&fit)?;
    let x = intersection.x;
    let rounded = x.round();
    let floor = if (x - rounded).abs() < INTEGER_TOLERANCE {
        rounded
    } else {
        x.floor()
    };
    let estimate = floor.clamp(0.0, n as f64) as usize;
    Ok(TrendlineEstimate {
        estimate,
        intersection,
        fit,
        applicable: trendline_gate(profile).is_some(),
    })
}
