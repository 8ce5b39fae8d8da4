use serde::Serialize;

use super::point::Point2;
use crate::error::{Error, Result};

/// `y = slope * x + intercept` from an ordinary least-squares fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination in `[0, 1]`; 1 when every `y` is equal.
    pub r_squared: f64,
}

impl LineFit {
    pub fn eval(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }

    pub fn sum_squared_residuals(&self, points: &[Point2]) -> f64 {
        points.iter().map(|p| (p.y - self.eval(p.x)).powi(2)).sum()
    }
}

/// Minimises the squared vertical residuals over `points`.
pub fn fit_trendline(points: &[Point2]) -> Result<LineFit> {
    if points.len() < 2 {
        return Err(Error::DegenerateFit("need at least two points"));
    }
    if !points.iter().all(Point2::is_finite) {
        return Err(Error::DegenerateFit("non-finite coordinate"));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.x).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.y).sum::<f64>() / n;

    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for p in points {
        let dx = p.x - mean_x;
        let dy = p.y - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateFit("all x coordinates are equal"));
    }

    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let mut fit = LineFit {
        slope,
        intercept,
        r_squared: 1.0,
    };
    if syy > 0.0 {
        let ss_res = fit.sum_squared_residuals(points);
        fit.r_squared = (1.0 - ss_res / syy).clamp(0.0, 1.0);
    }
    Ok(fit)
}

/// Where the fitted line meets the journal-number line `y = x`.
pub fn intersect_with_identity(fit: &LineFit) -> Result<Point2> {
    let denom = 1.0 - fit.slope;
    if denom == 0.0 {
        return Err(if fit.intercept == 0.0 {
            Error::CoincidentLines
        } else {
            Error::ParallelLines
        });
    }
    let x = fit.intercept / denom;
    Ok(Point2::new(x, x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(ys: &[f64]) -> Vec<Point2> {
        ys.iter()
            .enumerate()
            .map(|(i, &y)| Point2::new((i + 1) as f64, y))
            .collect()
    }

    #[test]
    fn exact_identity_line() {
        let fit = fit_trendline(&pts(&[1.0, 2.0, 3.0, 4.0, 5.0])).unwrap();
        assert!((fit.slope - 1.0).abs() < 1e-12);
        assert!(fit.intercept.abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn horizontal_line() {
        let fit = fit_trendline(&pts(&[2.0, 2.0, 2.0])).unwrap();
        assert_eq!(fit.slope, 0.0);
        assert_eq!(fit.intercept, 2.0);
        assert_eq!(fit.r_squared, 1.0);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            fit_trendline(&[Point2::new(1.0, 1.0)]),
            Err(Error::DegenerateFit(_))
        ));
        assert!(matches!(
            fit_trendline(&[Point2::new(3.0, 1.0), Point2::new(3.0, 5.0)]),
            Err(Error::DegenerateFit(_))
        ));
        assert!(matches!(
            fit_trendline(&[Point2::new(1.0, f64::NAN), Point2::new(2.0, 5.0)]),
            Err(Error::DegenerateFit(_))
        ));
    }

    #[test]
    fn intersections() {
        let at = |slope, intercept| {
            intersect_with_identity(&LineFit {
                slope,
                intercept,
                r_squared: 1.0,
            })
        };
        assert_eq!(at(-1.0, 5.0).unwrap(), Point2::new(2.5, 2.5));
        assert_eq!(at(0.0, 7.0).unwrap(), Point2::new(7.0, 7.0));
        assert!((at(-0.98182, 11.1636).unwrap().x - 5.633).abs() < 1e-3);
        assert_eq!(at(1.0, 3.0), Err(Error::ParallelLines));
        assert_eq!(at(1.0, 0.0), Err(Error::CoincidentLines));
    }
}
