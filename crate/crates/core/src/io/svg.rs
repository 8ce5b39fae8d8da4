//! SVG rendering of the Cartesian construction: journal-number line,
//! citation polyline, optional trendline and the point that decided h.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{intersect_with_identity, GeometricTrace, LineFit};
use crate::metrics::CitationProfile;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 24.0;
const BOTTOM: f64 = 56.0;

const JOURNAL_COLOR: &str = "#1f4e9c";
const CITATION_COLOR: &str = "#8b4513";
const TRENDLINE_COLOR: &str = "#808000";
const MARKER_COLOR: &str = "#c0392b";

struct Frame {
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        LEFT + x / self.x_max * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - y / self.y_max * (HEIGHT - TOP - BOTTOM)
    }
}

/// Renders the plot as a standalone SVG 1.1 document. Output depends only on
/// the arguments.
pub fn emit_plot_svg(
    profile: &CitationProfile,
    trace: &GeometricTrace,
    fit: Option<&LineFit>,
) -> Result<String> {
    let n = profile.len();
    let max_y = profile.max_citations().ok_or(Error::EmptyProfile)?;
    let frame = Frame {
        x_max: (n + 1) as f64,
        y_max: (max_y.max(n as u64) + 1) as f64,
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="plot-area"><rect x="{LEFT}" y="{TOP}" width="{}" height="{}"/></clipPath></defs>"#,
        WIDTH - LEFT - RIGHT,
        HEIGHT - TOP - BOTTOM
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    axes(&mut svg, &frame, n, max_y);

    let end = frame.x_max.min(frame.y_max);
    let _ = writeln!(
        svg,
        r#"<line class="journal-line" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{JOURNAL_COLOR}" stroke-width="2"/>"#,
        frame.px(0.0),
        frame.py(0.0),
        frame.px(end),
        frame.py(end)
    );

    let points: Vec<String> = profile
        .sorted_desc()
        .iter()
        .enumerate()
        .map(|(idx, &y)| {
            format!(
                "{:.2},{:.2}",
                frame.px((idx + 1) as f64),
                frame.py(y as f64)
            )
        })
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline class="citation-line" points="{}" fill="none" stroke="{CITATION_COLOR}" stroke-width="2"/>"#,
        points.join(" ")
    );

    if let Some(fit) = fit {
        let (x1, x2) = (1.0, n as f64);
        let _ = writeln!(
            svg,
            r#"<line class="trendline" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{TRENDLINE_COLOR}" stroke-width="1.5" stroke-dasharray="6 4" clip-path="url(#plot-area)"/>"#,
            frame.px(x1),
            frame.py(fit.eval(x1)),
            frame.px(x2),
            frame.py(fit.eval(x2))
        );
        if let Ok(p) = intersect_with_identity(fit) {
            if (0.0..=frame.x_max).contains(&p.x) {
                let _ = writeln!(
                    svg,
                    r#"<circle class="trendline-marker" data-x="{:.6}" data-y="{:.6}" cx="{:.2}" cy="{:.2}" r="3" fill="{TRENDLINE_COLOR}"/>"#,
                    p.x,
                    p.y,
                    frame.px(p.x),
                    frame.py(p.y)
                );
            }
        }
    }

    if let Some(p) = trace.intersection {
        let _ = writeln!(
            svg,
            r#"<circle class="marker" data-x="{:.6}" data-y="{:.6}" cx="{:.2}" cy="{:.2}" r="5" fill="{MARKER_COLOR}"/>"#,
            p.x,
            p.y,
            frame.px(p.x),
            frame.py(p.y)
        );
    } else if let Some(journal) = trace.argmin_index {
        let y = profile.citations_at(journal) as f64;
        let x = journal as f64;
        let _ = writeln!(
            svg,
            r#"<line class="distance-segment" data-journal="{journal}" data-length="{}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{MARKER_COLOR}" stroke-width="2"/>"#,
            (y - x).abs(),
            frame.px(x),
            frame.py(x),
            frame.px(x),
            frame.py(y)
        );
    }

    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="12">postulate {}</text>"#,
        WIDTH / 2.0,
        TOP - 8.0,
        trace.postulate.label()
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn axes(svg: &mut String, frame: &Frame, n: usize, max_y: u64) {
    let (x0, y0) = (frame.px(0.0), frame.py(0.0));
    let _ = writeln!(
        svg,
        r#"<path class="axis" d="M{x0:.2},{:.2} L{x0:.2},{y0:.2} L{:.2},{y0:.2}" fill="none" stroke="black"/>"#,
        frame.py(frame.y_max),
        frame.px(frame.x_max)
    );

    let x_step = tick_step(n as u64);
    for x in (x_step..=n as u64).step_by(x_step as usize) {
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="10">{x}</text>"#,
            frame.px(x as f64),
            y0 + 14.0
        );
    }
    let top = max_y.max(n as u64);
    let y_step = tick_step(top);
    for y in (0..=top).step_by(y_step as usize) {
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end" font-family="sans-serif" font-size="10">{y}</text>"#,
            x0 - 6.0,
            frame.py(y as f64) + 3.0
        );
    }

    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="13">Journal number</text>"#,
        (LEFT + WIDTH - RIGHT) / 2.0,
        HEIGHT - 16.0
    );
    let mid = (TOP + HEIGHT - BOTTOM) / 2.0;
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{mid:.2}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 18 {mid:.2})">Citations</text>"#
    );
}

/// 1, 2 or 5 times a power of ten, giving at most ten ticks up to `max`.
fn tick_step(max: u64) -> u64 {
    let mut magnitude = 1u64;
    loop {
        for m in [1, 2, 5] {
            let step = m * magnitude;
            if max / step <= 10 {
                return step;
            }
        }
        magnitude *= 10;
    }
}
