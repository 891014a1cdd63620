//! Numerical differentiation checks: finite-difference Jacobians, the
//! Cauchy-Riemann residuals of the closed-form tail `r_n = g_n f_n`, and
//! deterministic export of the spiral data behind the plots.
//!
//! These certify decay laws empirically; nothing here proves holomorphy.

use crate::error::Error;
use crate::error::Result;
use crate::numerics::{recip_pow, Complex, Real, StripPoint};
use crate::radial::center_closed_tail;
use crate::series::PartialSumState;

/// Cauchy-Riemann residual report at one `(z, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrReport {
    pub x: Real,
    pub y: Real,
    pub n: u64,
    /// Finite-difference step used.
    pub h: Real,
    /// `|d r_x / dx - d r_y / dy|`.
    pub res1: Real,
    /// `|d r_x / dy + d r_y / dx|`.
    pub res2: Real,
    /// Leading size `(n+1)^{-x} |(1-x)/(1-z)|`.
    pub predicted: Real,
}

/// One exported spiral row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpiralRow {
    pub n: u64,
    pub zeta: Complex,
    pub center: Complex,
}

/// Central-difference Jacobian of a plane map at `(x, y)`.
///
/// Row-major; `[i][j] = d f_i / d coordinate_j`. Truncation is `O(h^2)`.
/// Evaluation errors of `f` propagate unchanged.
pub fn jacobian_fd<F>(f: F, x: Real, y: Real, h: Real) -> Result<[[Real; 2]; 2]>
where
    F: Fn(Real, Real) -> Result<(Real, Real)>,
{
    assert!(h > 0.0, "jacobian_fd requires h > 0");
    let (fx_px, fy_px) = f(x + h, y)?;
    let (fx_mx, fy_mx) = f(x - h, y)?;
    let (fx_py, fy_py) = f(x, y + h)?;
    let (fx_my, fy_my) = f(x, y - h)?;
    let inv = 1.0 / (2.0 * h);
    Ok([
        [(fx_px - fx_mx) * inv, (fx_py - fx_my) * inv],
        [(fy_px - fy_mx) * inv, (fy_py - fy_my) * inv],
    ])
}

/// The closed-form tail `r_n = g_n f_n` as a plane map of `(x, y)`:
/// `g_n = (n+1)^{-z}` and
/// `f_n = (1 - x - y cot(y ln((n+2)/(n+1)))) / (1 - z)`.
pub fn residual_map(n: u64, x: Real, y: Real) -> Result<(Real, Real)> {
    let w = y * (1.0 / ((n + 1) as Real)).ln_1p();
    if crate::radial::near_cot_pole(w) {
        return Err(Error::SingularTangent { n });
    }
    let g = recip_pow(n + 1, x, y);
    let f = Complex::new(1.0 - x - y / w.tan(), 0.0) / Complex::new(1.0 - x, -y);
    let v = g * f;
    Ok((v.re, v.im))
}

/// Default finite-difference step, `1e-6 (1 + |z|)`.
pub fn default_fd_step(z: StripPoint) -> Real {
    1e-6 * (1.0 + z.value().norm())
}

/// Cauchy-Riemann residuals of the closed-form tail at `(z, n)` with the
/// default step.
pub fn cr_residual(z: StripPoint, n: u64) -> Result<CrReport> {
    cr_residual_with_step(z, n, default_fd_step(z))
}

/// [`cr_residual`] with a caller-chosen step.
///
/// `n` must lie past the sign-stability threshold of `|y|`.
pub fn cr_residual_with_step(z: StripPoint, n: u64, h: Real) -> Result<CrReport> {
    assert!(
        n > crate::domination::n_threshold(z.y().abs()),
        "cr_residual requires n beyond n_threshold(|y|)"
    );
    let (x, y) = (z.x(), z.y());
    let j = jacobian_fd(|a, b| residual_map(n, a, b), x, y, h)?;
    let res1 = (j[0][0] - j[1][1]).abs();
    let res2 = (j[0][1] + j[1][0]).abs();
    let one_minus_z = ((1.0 - x) * (1.0 - x) + y * y).sqrt();
    let predicted = (-x * (((n + 1) as Real).ln())).exp() * (1.0 - x).abs() / one_minus_z;
    Ok(CrReport {
        x,
        y,
        n,
        h,
        res1,
        res2,
        predicted,
    })
}

/// Least-squares slope of `ln(value)` against `ln(n)` over the samples.
///
/// Non-finite logarithms (for example an exactly vanishing residual) are
/// dropped before fitting.
pub fn fit_decay_exponent(samples: &[(u64, Real)]) -> Real {
    let pts: Vec<(Real, Real)> = samples
        .iter()
        .filter(|&&(_, v)| v > 0.0 && v.is_finite())
        .map(|&(n, v)| ((n as Real).ln(), v.ln()))
        .collect();
    assert!(
        pts.len() >= 2,
        "decay fit needs at least two usable samples"
    );
    let n = pts.len() as Real;
    let mean_x = pts.iter().map(|p| p.0).sum::<Real>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<Real>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (px, py) in pts {
        num += (px - mean_x) * (py - mean_y);
        den += (px - mean_x) * (px - mean_x);
    }
    num / den
}

/// Log-spaced sample indices in `[lo, hi]`, deduplicated and ascending.
pub fn log_spaced(lo: u64, hi: u64, count: usize) -> Vec<u64> {
    assert!(lo >= 1 && hi > lo && count >= 2);
    let (a, b) = ((lo as Real).ln(), (hi as Real).ln());
    let mut out: Vec<u64> = (0..count)
        .map(|i| {
            let t = i as Real / (count - 1) as Real;
            (a + t * (b - a)).exp().round() as u64
        })
        .collect();
    out.dedup();
    out
}

/// Deterministic `(n, zeta_n, c_n)` table for `n = 0..=n_max`, with the
/// center by closed form and singular indices bumped to `n + 1`.
pub fn spiral_export(z: StripPoint, n_max: u64) -> Vec<SpiralRow> {
    assert!(n_max >= 1, "spiral_export requires n_max >= 1");
    let mut rows = Vec::with_capacity(n_max as usize + 1);
    let mut state = PartialSumState::new(z);
    for n in 0..=n_max {
        state.advance_to(n);
        let zeta = state.zeta();
        let center = match center_closed_tail(z, n) {
            Ok(tail) => zeta + tail,
            // Singular tangent at this exact index: evaluate the next one.
            Err(_) => {
                let mut peek = state;
                peek.advance();
                peek.zeta()
                    + center_closed_tail(z, n + 1).expect("adjacent index is never also singular")
            }
        };
        rows.push(SpiralRow { n, zeta, center });
    }
    rows
}
