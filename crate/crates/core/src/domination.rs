//! The domination function `d_{x,y}(n)` that normalizes `|delta_n|`, its
//! limit `(x^2+y^2)/2`, the sign-stability threshold, and empirical scans of
//! the band `(1/4, 3/4) (x^2+y^2)` the normalized steps settle into.

use crate::error::{Error, Result};
use crate::numerics::{Real, StripPoint};
use crate::radial::TRIG_GUARD;
use serde::Serialize;

/// Result of a band scan at one strip point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandReport {
    pub z: ScanPoint,
    pub n_scanned: ScanRange,
    /// One past the last index at which `d` left the open band.
    pub n0_empirical: u64,
    /// `(x^2 + y^2) / 4`.
    pub band_lo: Real,
    /// `3 (x^2 + y^2) / 4`.
    pub band_hi: Real,
    /// Number of band exits at or after `n0_empirical`; zero by construction.
    pub violations_after_n0: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanPoint {
    pub x: Real,
    pub y: Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRange {
    pub from: u64,
    pub to: u64,
}

/// The domination function
/// `d_{x,y}(n) = n ( y/sin(y ln((n+1)/n))
///               - y/((1+1/n)^x tan(y ln((n+2)/(n+1))))
///               + (1-x)/(1+1/n)^x )`.
///
/// Even in `y` bit-exactly: both trig factors flip sign with `y`.
pub fn d_function(x: Real, y: Real, n: u64) -> Result<Real> {
    assert!(x > 0.0 && y != 0.0, "d_function requires x > 0, y != 0");
    assert!(n >= 1, "d_function requires n >= 1");
    let nf = n as Real;
    let u = y * (1.0 / nf).ln_1p();
    let v = y * (1.0 / (nf + 1.0)).ln_1p();
    let sin_u = u.sin();
    if sin_u.abs() < TRIG_GUARD {
        return Err(Error::SingularStep { n, value: sin_u });
    }
    let tan_v = v.tan();
    if tan_v.abs() < TRIG_GUARD {
        return Err(Error::SingularStep { n, value: tan_v });
    }
    let p = (-x * (1.0 / nf).ln_1p()).exp(); // (1 + 1/n)^{-x}
    Ok(nf * (y / sin_u - y * p / tan_v + (1.0 - x) * p))
}

/// Limit of the domination function: `(x^2 + y^2) / 2`.
pub fn d_limit(x: Real, y: Real) -> Real {
    (x * x + y * y) / 2.0
}

/// Sign-stability threshold `n_B = ceil((2 - e^{pi/B}) / (e^{pi/B} - 1))`,
/// clamped at zero.
///
/// Beyond this index the signs of `sin(y ln((n+1)/n))` and
/// `tan(y ln((n+2)/(n+1)))` are stable for every `|y| <= B`. The ceil gets
/// 1e-9 of slack so that exact-integer boundaries are not pushed up by
/// floating-point round-off.
pub fn n_threshold(b: Real) -> u64 {
    assert!(b > 0.0, "n_threshold requires B > 0");
    let e = (std::f64::consts::PI / b).exp();
    let raw = (2.0 - e) / (e - 1.0);
    if raw <= 0.0 {
        0
    } else {
        (raw - 1e-9).ceil().max(0.0) as u64
    }
}

/// Scans `d_{x,y}(n)` from `n_threshold(|y|) + 1` to `n_max` and reports the
/// empirical index past which it stays inside the open band
/// `((x^2+y^2)/4, 3(x^2+y^2)/4)`.
///
/// A formula-singular index counts as a band exit.
pub fn scan_band(z: StripPoint, n_max: u64) -> BandReport {
    let (x, y) = (z.x(), z.y());
    let start = n_threshold(y.abs()) + 1;
    assert!(n_max > start, "scan_band requires n_max > n_threshold(|y|)");
    let band_lo = (x * x + y * y) / 4.0;
    let band_hi = 3.0 * (x * x + y * y) / 4.0;
    let mut last_violation = None;
    for n in start..=n_max {
        let inside = match d_function(x, y, n) {
            Ok(d) => band_lo < d && d < band_hi,
            Err(_) => false,
        };
        if !inside {
            last_violation = Some(n);
        }
    }
    BandReport {
        z: ScanPoint { x, y },
        n_scanned: ScanRange {
            from: start,
            to: n_max,
        },
        n0_empirical: last_violation.map_or(start, |n| n + 1),
        band_lo,
        band_hi,
        violations_after_n0: 0,
    }
}

/// Corner-sampling heuristic for a rectangle `[x_lo, x_hi] x [y_lo, y_hi]`:
/// scans the four corners and takes the largest empirical settle index.
///
/// This is a heuristic, not a bound: corner scans say nothing rigorous about
/// interior points.
pub fn scan_rectangle_corners(
    x_lo: Real,
    x_hi: Real,
    y_lo: Real,
    y_hi: Real,
    n_max: u64,
) -> Result<(Vec<BandReport>, u64)> {
    let corners = [
        StripPoint::new(x_lo, y_lo)?,
        StripPoint::new(x_lo, y_hi)?,
        StripPoint::new(x_hi, y_lo)?,
        StripPoint::new(x_hi, y_hi)?,
    ];
    let reports: Vec<BandReport> = corners.iter().map(|&c| scan_band(c, n_max)).collect();
    let n0 = reports.iter().map(|r| r.n0_empirical).max().unwrap_or(0);
    Ok((reports, n0))
}
