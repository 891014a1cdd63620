//! Per-step arguments of the partial-sum path, the cumulated argument, the
//! derived angle `gamma_n`, and the winding quantity `U_z` whose limit is an
//! integer at the nontrivial zeros.
//!
//! The cumulated argument after `n` steps is
//! `sum_{j=1..n} arg(zeta_{j+1} / zeta_j)`, each term on the principal
//! branch, and `gamma_n = -y ln(n+1) - arg_sum`. The `U` sequence value is
//! `(gamma_n + arctan(y / (1-x))) / pi`.

use crate::error::{Error, Result};
use crate::numerics::{principal_arg_ratio, Complex, CriticalStripPoint, KahanSum, Real};
use crate::series::PartialSumState;
use serde::Serialize;

/// Near-zero flag threshold scale: partial sums below
/// `1e-13 n^{1-x}` make the step argument numerically delicate.
const NEAR_ZERO_SCALE: Real = 1e-13;

/// Winding accumulator at a critical-strip point.
///
/// After `n` steps the inner series holds `zeta_{n+1}` and `arg_sum` holds
/// the cumulated argument with `n` terms. The state is a plain value: a
/// cloned checkpoint resumed later is bit-identical to an uninterrupted run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingState {
    point: CriticalStripPoint,
    steps: u64,
    series: PartialSumState,
    arg_sum: KahanSum,
    flagged: u64,
}

impl WindingState {
    pub fn new(z: CriticalStripPoint) -> Self {
        let mut series = PartialSumState::new(z.strip());
        series.advance(); // zeta_1 = 1
        Self {
            point: z,
            steps: 0,
            series,
            arg_sum: KahanSum::new(),
            flagged: 0,
        }
    }

    pub fn point(&self) -> CriticalStripPoint {
        self.point
    }

    /// Number of argument steps accumulated so far.
    pub fn n(&self) -> u64 {
        self.steps
    }

    /// Current partial sum `zeta_{n+1}`.
    pub fn zeta(&self) -> Complex {
        self.series.zeta()
    }

    /// Cumulated argument `sum_{j=1..n} arg(zeta_{j+1}/zeta_j)`.
    pub fn arg_sum(&self) -> Real {
        self.arg_sum.value()
    }

    /// `gamma_n = -y ln(n+1) - arg_sum`.
    pub fn gamma(&self) -> Real {
        -self.point.y() * ((self.steps + 1) as Real).ln() - self.arg_sum.value()
    }

    /// `gamma_n` reduced to `[0, 2 pi)`.
    pub fn gamma_mod_2pi(&self) -> Real {
        self.gamma().rem_euclid(std::f64::consts::TAU)
    }

    /// Steps whose partial sum fell under the near-zero threshold.
    pub fn flagged_steps(&self) -> u64 {
        self.flagged
    }
}

/// `arg(zeta_next / zeta_n)` on the principal branch.
pub fn theta_step(zeta_n: Complex, zeta_next: Complex) -> Result<Real> {
    principal_arg_ratio(zeta_n, zeta_next)
}

/// One series advance plus argument accumulation. Returns the step angle.
///
/// A partial sum under the near-zero threshold is still processed on the
/// principal branch but counted in [`WindingState::flagged_steps`]; only a
/// true underflow is an error.
pub fn advance_winding(state: &mut WindingState) -> Result<Real> {
    let before = state.series.zeta();
    let mut series = state.series;
    series.advance();
    let after = series.zeta();
    let theta = theta_step(before, after)?;
    state.series = series;
    state.arg_sum.add(theta);
    state.steps += 1;
    let threshold = NEAR_ZERO_SCALE * (state.steps as Real).powf(1.0 - state.point.x());
    if after.norm() < threshold {
        state.flagged += 1;
    }
    Ok(theta)
}

/// `U` sequence value `(-y ln(n+1) - arg_sum + arctan(y/(1-x))) / pi`.
pub fn u_sequence_value(state: &WindingState) -> Real {
    let z = state.point;
    (state.gamma() + (z.y() / (1.0 - z.x())).atan()) / std::f64::consts::PI
}

/// A `U` estimate with its integer verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UzEstimate {
    pub value: Real,
    pub nearest_integer: i64,
    pub residual: Real,
    pub n_used: u64,
    pub converged: bool,
    pub flagged_steps: u64,
}

impl UzEstimate {
    /// Column names of the CSV interface.
    pub fn csv_header() -> &'static str {
        "index,t,u_value,nearest_integer,residual,n_used,converged,flagged_steps"
    }

    /// One CSV row; `index` and `t` supply the caller's context.
    pub fn csv_row(&self, index: u32, t: Real) -> String {
        format!(
            "{index},{t},{},{},{},{},{},{}",
            self.value,
            self.nearest_integer,
            self.residual,
            self.n_used,
            self.converged,
            self.flagged_steps
        )
    }
}

fn estimate_from(value: Real, n_used: u64, converged: bool, flagged: u64) -> UzEstimate {
    let nearest = value.round();
    UzEstimate {
        value,
        nearest_integer: nearest as i64,
        residual: (value - nearest).abs(),
        n_used,
        converged,
        flagged_steps: flagged,
    }
}

/// Advances to `n_max`, sampling the `U` value at `n_max/2` and `n_max`.
///
/// Converged means: both samples round to the same integer, both residuals
/// stay under `residual_threshold`, and the drift between the samples is
/// under half of it. An exhausted or broken run reports `converged = false`
/// with whatever was reached.
pub fn u_limit(z: CriticalStripPoint, n_max: u64, residual_threshold: Real) -> UzEstimate {
    assert!(n_max >= 1_000, "u_limit requires n_max >= 1e3");
    let mut state = WindingState::new(z);
    let half = n_max / 2;
    while state.n() < half {
        if advance_winding(&mut state).is_err() {
            return estimate_from(
                u_sequence_value(&state),
                state.n(),
                false,
                state.flagged_steps(),
            );
        }
    }
    let u_half = u_sequence_value(&state);
    while state.n() < n_max {
        if advance_winding(&mut state).is_err() {
            return estimate_from(
                u_sequence_value(&state),
                state.n(),
                false,
                state.flagged_steps(),
            );
        }
    }
    let u_full = u_sequence_value(&state);
    let converged = u_half.round() == u_full.round()
        && (u_half - u_half.round()).abs() < residual_threshold
        && (u_full - u_full.round()).abs() < residual_threshold
        && (u_half - u_full).abs() < residual_threshold / 2.0;
    estimate_from(u_full, n_max, converged, state.flagged_steps())
}

/// Sine of the next step angle from the law-of-cosines induction on the
/// two previous states, used solely to validate [`theta_step`].
///
/// `prev` and `curr` must be consecutive (`curr.n() == prev.n() + 1`), and
/// `sin_theta_n` is the sine of the step that led into `curr`.
pub fn sin_theta_induction(
    prev: &WindingState,
    curr: &WindingState,
    sin_theta_n: Real,
) -> Result<Real> {
    assert_eq!(
        curr.n(),
        prev.n() + 1,
        "states must be consecutive winding steps"
    );
    let n = curr.n();
    let (x, y) = (curr.point.x(), curr.point.y());
    let nf = n as Real;

    let gamma_prev = prev.gamma();
    let gamma_curr = curr.gamma();
    let a = (-y * (1.0 / nf).ln_1p() + gamma_prev).sin();
    let phase_next = -y * (1.0 / (nf + 1.0)).ln_1p() + gamma_curr;
    let p1 = (x * ((n + 1) as Real).ln()).exp(); // (n+1)^x
    let p2 = (x * ((n + 2) as Real).ln()).exp(); // (n+2)^x

    let radicand = a * a / (p1 * p1 * sin_theta_n * sin_theta_n)
        + 1.0 / (p2 * p2)
        + 2.0 * a * phase_next.cos() / (p1 * p2 * sin_theta_n);
    if radicand <= 1e-14 {
        return Err(Error::NumericalBreakdown { n, radicand });
    }
    Ok(phase_next.sin() / (p2 * radicand.sqrt()))
}
