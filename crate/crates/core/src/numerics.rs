//! Scalar and complex primitives shared by every other module.
//!
//! All arithmetic is IEEE binary64 behind the [`Real`] alias; swapping the
//! alias (together with the [`Complex`] alias built on it) is the single
//! point of change for a higher-precision build.

use crate::error::{Error, Result};

/// Scalar type used throughout the crate.
pub type Real = f64;

/// Complex value built on [`Real`].
pub type Complex = num_complex::Complex<Real>;

/// Default underflow guard for argument computations.
pub const DEFAULT_EPS_MIN: Real = 1e-300;

/// A point of the open half-plane `x > 0`, `y != 0`, the domain of the
/// radial construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripPoint {
    x: Real,
    y: Real,
}

impl StripPoint {
    /// Validates `x > 0` strictly and `y != 0` strictly.
    pub fn new(x: Real, y: Real) -> Result<Self> {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::Domain(format!(
                "re(z) must satisfy x > 0 strictly, got {x}"
            )));
        }
        if !y.is_finite() || y == 0.0 {
            return Err(Error::Domain(format!(
                "im(z) must satisfy y != 0 strictly, got {y}"
            )));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> Real {
        self.x
    }

    pub fn y(&self) -> Real {
        self.y
    }

    /// The point as a complex value.
    pub fn value(&self) -> Complex {
        Complex::new(self.x, self.y)
    }

    /// Complex conjugate, which stays inside the domain.
    pub fn conj(&self) -> Self {
        Self {
            x: self.x,
            y: -self.y,
        }
    }
}

/// A strip point further constrained to the critical strip `0 < x < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalStripPoint(StripPoint);

impl CriticalStripPoint {
    pub fn new(x: Real, y: Real) -> Result<Self> {
        let p = StripPoint::new(x, y)?;
        if x >= 1.0 {
            return Err(Error::Domain(format!(
                "re(z) must satisfy 0 < x < 1 strictly, got {x}"
            )));
        }
        Ok(Self(p))
    }

    pub fn strip(&self) -> StripPoint {
        self.0
    }

    pub fn x(&self) -> Real {
        self.0.x
    }

    pub fn y(&self) -> Real {
        self.0.y
    }

    pub fn conj(&self) -> Self {
        Self(self.0.conj())
    }
}

/// `n^{-z}` for arbitrary complex exponent, as
/// `exp(-x ln n) * (cos(-y ln n) + i sin(-y ln n))`.
///
/// This is the one place the crate raises an integer to a complex power, so
/// every series shares identical rounding.
pub(crate) fn recip_pow(n: u64, x: Real, y: Real) -> Complex {
    debug_assert!(n >= 1);
    let ln_n = (n as Real).ln();
    let modulus = (-x * ln_n).exp();
    let (sin, cos) = (-y * ln_n).sin_cos();
    Complex::new(modulus * cos, modulus * sin)
}

/// The term `n^{-z}` of the Riemann series at a strip point.
pub fn power_term(n: u64, z: StripPoint) -> Complex {
    assert!(n >= 1, "power_term requires n >= 1");
    recip_pow(n, z.x(), z.y())
}

/// `arg(b / a)` on the principal branch `(-pi, pi]`, with the default
/// underflow guard.
pub fn principal_arg_ratio(a: Complex, b: Complex) -> Result<Real> {
    principal_arg_ratio_eps(a, b, DEFAULT_EPS_MIN)
}

/// `arg(b / a)` on the principal branch with a caller-chosen guard.
///
/// Errors with [`Error::NearZeroOperand`] when either modulus is at or
/// below `eps_min`: the angle is then numerically meaningless.
pub fn principal_arg_ratio_eps(a: Complex, b: Complex, eps_min: Real) -> Result<Real> {
    let na = a.norm();
    let nb = b.norm();
    if na <= eps_min {
        return Err(Error::NearZeroOperand {
            modulus: na,
            eps_min,
        });
    }
    if nb <= eps_min {
        return Err(Error::NearZeroOperand {
            modulus: nb,
            eps_min,
        });
    }
    // arg(b/a) = arg(b * conj(a)); the product form avoids one division.
    let p = b * a.conj();
    Ok(p.im.atan2(p.re))
}

/// Compensated (Kahan) accumulator for one real component.
///
/// Accumulation order is the caller's responsibility; with a fixed order the
/// result is bit-reproducible across runs.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KahanSum {
    sum: Real,
    compensation: Real,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, value: Real) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> Real {
        self.sum
    }
}
