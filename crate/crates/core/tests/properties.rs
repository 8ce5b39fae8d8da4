mod common;

use common::brute_force_h;
use proptest::prelude::*;

use hindex::geometry::{min_distance_rule, trendline_gate};
use hindex::*;

fn counts() -> impl Strategy<Value = Vec<u64>> {
    prop_oneof![
        prop::collection::vec(0u64..=1_000_000, 0..=200),
        prop::collection::vec(0u64..=250, 0..=200),
        prop::collection::vec(0u64..=20, 0..=40),
    ]
}

fn profile(c: &[u64]) -> CitationProfile {
    CitationProfile::from_counts(c.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn all_methods_match_brute_force(c in counts()) {
        let p = profile(&c);
        let expected = brute_force_h(&c);
        prop_assert_eq!(h_index_oracle(&p).h, expected);
        prop_assert_eq!(h_index_sort_scan(&p).h, expected);
        prop_assert_eq!(h_index_counting(&p).h, expected);
        prop_assert_eq!(geometric_h_index(&p).0.h, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn profile_invariants(c in counts()) {
        let p = profile(&c);
        prop_assert_eq!(p.raw(), &c[..]);
        prop_assert!(p.sorted_desc().windows(2).all(|w| w[0] >= w[1]));
        let mut a = p.sorted_desc().to_vec();
        let mut b = c.clone();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn definition_soundness(c in counts()) {
        let p = profile(&c);
        let r = h_index_oracle(&p);
        let s = p.sorted_desc();
        prop_assert!(r.h <= p.len());
        prop_assert!(s[..r.h].iter().all(|&y| y >= r.h as u64));
        if r.h < p.len() {
            prop_assert!(s[r.h] < r.h as u64 + 1);
        }
        prop_assert_eq!(r.pivot, (r.h > 0).then_some(r.h));
    }

    #[test]
    fn order_invariance(c in counts(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut shuffled = c.clone();
        shuffled.shuffle(&mut common::rng(seed));
        prop_assert_eq!(h_index_sort_scan(&profile(&c)).h, h_index_sort_scan(&profile(&shuffled)).h);
        let (a, b) = (profile(&c), profile(&shuffled));
        prop_assert_eq!(a.sorted_desc(), b.sorted_desc());
    }

    #[test]
    fn monotonicity(c in counts(), extra in 0u64..1_000, pick in any::<prop::sample::Index>()) {
        let h = h_index_counting(&profile(&c)).h;
        let mut appended = c.clone();
        appended.push(extra);
        prop_assert!(h_index_counting(&profile(&appended)).h >= h);
        if !c.is_empty() {
            let mut bumped = c.clone();
            let i = pick.index(c.len());
            bumped[i] += 1;
            prop_assert!(h_index_sort_scan(&profile(&bumped)).h >= h);
        }
    }

    #[test]
    fn clamp_safety(c in counts()) {
        let n = c.len() as u64;
        let clamped: Vec<u64> = c.iter().map(|&x| x.min(n)).collect();
        prop_assert_eq!(h_index_oracle(&profile(&c)).h, h_index_oracle(&profile(&clamped)).h);
    }

    #[test]
    fn trace_shape(c in counts()) {
        let p = profile(&c);
        let Ok(trace) = classify_profile(&p) else {
            prop_assert!(c.is_empty());
            return Ok(());
        };
        let is_intersection = matches!(
            trace.case,
            GeometricCase::IntegerIntersection | GeometricCase::FractionalIntersection
        );
        prop_assert_eq!(trace.intersection.is_some(), is_intersection);
        let is_distance = trace.case == GeometricCase::NoCrossingMinDistance;
        prop_assert_eq!(trace.distances.is_some(), is_distance);
        prop_assert_eq!(trace.argmin_index.is_some(), is_distance);

        if let (Some(d), Some(i)) = (&trace.distances, trace.argmin_index) {
            let min = d.iter().copied().fold(f64::INFINITY, f64::min);
            prop_assert_eq!(d[i - 1], min);
        }
        // An integer crossing always has x == y == citations at x: the
        // "x below y at an integer intersection" situation never comes up.
        if trace.case == GeometricCase::IntegerIntersection {
            let pt = trace.intersection.unwrap();
            prop_assert_eq!(pt.x, pt.y);
            prop_assert_eq!(pt.x.fract(), 0.0);
            prop_assert_eq!(p.citations_at(pt.x as usize) as f64, pt.x);
            prop_assert_eq!(trace.postulate, Postulate::IntegerEqual);
        }
    }

    #[test]
    fn floor_semantics(c in counts()) {
        let p = profile(&c);
        let (r, trace) = geometric_h_index(&p);
        if let Some(trace) = trace.filter(|t| t.case == GeometricCase::FractionalIntersection) {
            let x = trace.intersection.unwrap().x;
            let floor = x.floor();
            prop_assert!(floor <= x && x < floor + 1.0);
            prop_assert!(x.fract() > 0.0);
            prop_assert_eq!(r.h, floor as usize);
        }
    }

    #[test]
    fn distance_consistency(c in prop::collection::vec(0u64..=500, 1..=100)) {
        let p = profile(&c);
        let d = vertical_distances(&p).unwrap();
        for (i, &gap) in d.iter().enumerate() {
            let j = (i + 1) as f64;
            let expected = euclidean_distance(Point2::new(j, j), Point2::new(j, p.sorted_desc()[i] as f64));
            prop_assert_eq!(gap, expected);
        }
    }

    #[test]
    fn min_distance_rule_matches_definition(c in prop::collection::vec(0u64..=60, 1..=60)) {
        let p = profile(&c);
        let rule = min_distance_rule(p.sorted_desc()).unwrap();
        prop_assert_eq!(rule.h, brute_force_h(&c));
    }

    #[test]
    fn intersection_lies_on_both_lines(c in prop::collection::vec(0u64..=1_000, 2..=100)) {
        let p = profile(&c);
        let Ok(fit) = fit_trendline(&geometry::engine::citation_points(&p)) else {
            return Ok(());
        };
        prop_assert!(fit.slope < 1.0);
        let pt = intersect_with_identity(&fit).unwrap();
        let scale = pt.x.abs().max(1.0);
        prop_assert!((pt.x - pt.y).abs() <= 1e-9 * scale);
        prop_assert!((fit.eval(pt.x) - pt.y).abs() <= 1e-9 * scale);
    }

    #[test]
    fn least_squares_is_optimal(
        pts in prop::collection::vec((-100.0f64..100.0, -1e4f64..1e4), 2..50)
    ) {
        let points: Vec<Point2> = pts.iter().map(|&(x, y)| Point2::new(x, y)).collect();
        let Ok(fit) = fit_trendline(&points) else { return Ok(()); };
        prop_assert!((0.0..=1.0).contains(&fit.r_squared));
        let best = fit.sum_squared_residuals(&points);
        for (ds, dc) in [(1e-3, 0.0), (-1e-3, 0.0), (0.0, 1e-3), (0.0, -1e-3)] {
            let moved = LineFit { slope: fit.slope + ds, intercept: fit.intercept + dc, ..fit };
            prop_assert!(moved.sum_squared_residuals(&points) >= best * (1.0 - 1e-12) - 1e-9);
        }
    }

    #[test]
    fn gated_trendline_has_descending_slope(c in prop::collection::vec(0u64..=100, 2..=50)) {
        if let Some(fit) = trendline_gate(&profile(&c)) {
            prop_assert!(fit.slope <= 0.0);
            prop_assert!(fit.r_squared >= geometry::R_SQUARED_GATE);
        }
    }
}
