//! Deterministic renderers: CSV rows, SVG polylines, file-or-stdout sink.
//!
//! Floats print with Rust's shortest round-trip formatting; files are
//! UTF-8 with LF line endings and `.` decimal separators.

use radial_zeta::diagnostics::{CrReport, SpiralRow};
use radial_zeta::Real;
use std::io::Write;
use std::path::PathBuf;

/// Shortest round-trip rendering of one float.
pub fn fmt_f(v: Real) -> String {
    format!("{v}")
}

/// Writes `content` to `path`, or to stdout when no path is given.
pub fn write_sink(path: Option<&PathBuf>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

pub fn spiral_csv(rows: &[SpiralRow]) -> String {
    let mut out = String::from("n,zeta_re,zeta_im,center_re,center_im\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            fmt_f(r.zeta.re),
            fmt_f(r.zeta.im),
            fmt_f(r.center.re),
            fmt_f(r.center.im)
        ));
    }
    out
}

/// One polyline per sequence (partial sums, then centers), viewBox fitted
/// to the union of both with a 5% margin. The imaginary axis points up.
pub fn spiral_svg(rows: &[SpiralRow]) -> String {
    let mut min_x = Real::INFINITY;
    let mut max_x = Real::NEG_INFINITY;
    let mut min_y = Real::INFINITY;
    let mut max_y = Real::NEG_INFINITY;
    for r in rows {
        for v in [r.zeta, r.center] {
            min_x = min_x.min(v.re);
            max_x = max_x.max(v.re);
            min_y = min_y.min(-v.im);
            max_y = max_y.max(-v.im);
        }
    }
    let margin = 0.05 * (max_x - min_x).max(max_y - min_y).max(1e-12);
    let (x0, y0) = (min_x - margin, min_y - margin);
    let (w, h) = (max_x - min_x + 2.0 * margin, max_y - min_y + 2.0 * margin);
    let stroke = 0.002 * w.max(h);

    let polyline = |pick: &dyn Fn(&SpiralRow) -> (Real, Real), color: &str| {
        let points: Vec<String> = rows
            .iter()
            .map(|r| {
                let (px, py) = pick(r);
                format!("{},{}", fmt_f(px), fmt_f(py))
            })
            .collect();
        format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\" points=\"{}\"/>",
            fmt_f(stroke),
            points.join(" ")
        )
    };

    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n{}\n{}\n</svg>\n",
        fmt_f(x0),
        fmt_f(y0),
        fmt_f(w),
        fmt_f(h),
        polyline(&|r| (r.zeta.re, -r.zeta.im), "#345995"),
        polyline(&|r| (r.center.re, -r.center.im), "#b5342e"),
    )
}

pub fn diagnose_csv(reports: &[CrReport]) -> String {
    let mut out = String::from("n,h,res1,res2,predicted\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            fmt_f(r.h),
            fmt_f(r.res1),
            fmt_f(r.res2),
            fmt_f(r.predicted)
        ));
    }
    out
}
