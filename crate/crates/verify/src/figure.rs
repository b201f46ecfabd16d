//! Curve data for `β_d(π/2)` against `x`, as CSV and a standalone SVG plot.

use std::fmt::Write as _;
use std::io::{self, Write};

use hilbert_strip::report::format_real;
use hilbert_strip::{beta_half_theta, Result};
use rayon::prelude::*;

pub const CSV_HEADER: &str = "x,beta";

/// `(x, β)` on the uniform grid `x_i = x_max·i/points`, `i = 1..=points`.
pub fn curve(x_max: f64, points: usize) -> Result<Vec<(f64, f64)>> {
    (1..=points)
        .into_par_iter()
        .map(|i| {
            let x = x_max * i as f64 / points as f64;
            beta_half_theta(x).map(|b| (x, b))
        })
        .collect()
}

pub fn write_csv<W: Write>(mut w: W, curve: &[(f64, f64)]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for &(x, b) in curve {
        writeln!(w, "{},{}", format_real(x), format_real(b))?;
    }
    Ok(())
}

/// Parses CSV written by [`write_csv`].
pub fn read_csv(text: &str) -> Option<Vec<(f64, f64)>> {
    let mut lines = text.lines();
    if lines.next()? != CSV_HEADER {
        return None;
    }
    lines
        .map(|line| {
            let (x, b) = line.split_once(',')?;
            Some((x.parse().ok()?, b.parse().ok()?))
        })
        .collect()
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 50.0;
const TICKS: usize = 5;

/// Line plot with axes, tick labels and a title.
pub fn render_svg(curve: &[(f64, f64)]) -> String {
    let x_max = curve.iter().map(|p| p.0).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let y_lo = 1.0;
    let y_hi = curve.iter().map(|p| p.1).fold(y_lo, f64::max);
    let y_hi = if y_hi - y_lo < 1e-3 { y_lo + 1e-3 } else { y_hi };

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + plot_w * x / x_max;
    let sy = |y: f64| MARGIN_TOP + plot_h * (1.0 - (y - y_lo) / (y_hi - y_lo));
    let x_axis_y = MARGIN_TOP + plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="18" text-anchor="middle" font-size="14">β_d(π/2) as a function of x</text>"#,
        WIDTH / 2.0
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{MARGIN_LEFT}" y1="{x_axis_y}" x2="{}" y2="{x_axis_y}" stroke="black"/>"#,
        MARGIN_LEFT + plot_w
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{x_axis_y}" stroke="black"/>"#
    );
    for i in 0..=TICKS {
        let t = i as f64 / TICKS as f64;
        let xv = x_max * t;
        let px = sx(xv);
        let _ = writeln!(
            svg,
            r#"<line x1="{px:.2}" y1="{x_axis_y}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{xv:.2}</text>"#,
            x_axis_y + 5.0,
            x_axis_y + 20.0
        );
        let yv = y_lo + (y_hi - y_lo) * t;
        let py = sy(yv);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{MARGIN_LEFT}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{yv:.4}</text>"#,
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT - 8.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">x</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );
    let points: Vec<String> = curve
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
        points.join(" ")
    );
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let c = curve(4.0, 16).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &c).unwrap();
        let back = read_csv(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn svg_has_axes_and_curve() {
        let svg = render_svg(&curve(4.0, 32).unwrap());
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("<polyline"));
        assert_eq!(svg.matches("<line").count(), 2 + 2 * (TICKS + 1));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn flat_curve_still_renders() {
        let svg = render_svg(&curve(0.5, 16).unwrap());
        assert!(!svg.contains("NaN"));
    }
}
