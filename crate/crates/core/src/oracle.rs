//! Independent reference values of zeta, used to validate the radial
//! construction and never to implement it.
//!
//! Two routes: brute-force summation with an integral tail estimate for
//! `Re z > 1`, and the alternating (eta) series accelerated by binomially
//! weighted averaging of its partial sums for `Re z > 0`.

use crate::error::{Error, Result};
use crate::numerics::{recip_pow, Complex, KahanSum, Real};

/// A reference value with the work spent and an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub value: Complex,
    pub terms_used: u64,
    pub est_error: Real,
}

/// Plain compensated partial sum of `sum n^{-z}` to `n = terms`, for
/// `Re z > 1`. The estimate covers the integral tail plus the leading
/// Euler-Maclaurin boundary corrections.
pub fn zeta_direct(z: Complex, terms: u64) -> OracleResult {
    assert!(z.re > 1.0, "zeta_direct requires Re z > 1");
    assert!(terms >= 1);
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    for n in 1..=terms {
        let t = recip_pow(n, z.re, z.im);
        re.add(t.re);
        im.add(t.im);
    }
    let nf = terms as Real;
    let dist = (z - Complex::new(1.0, 0.0)).norm();
    let est_error =
        nf.powf(1.0 - z.re) / dist + 0.5 * nf.powf(-z.re) + z.norm() * nf.powf(-z.re - 1.0) / 12.0;
    OracleResult {
        value: Complex::new(re.value(), im.value()),
        terms_used: terms,
        est_error,
    }
}

/// Evaluates `eta(z) = sum (-1)^{n-1} n^{-z}` by binomially weighted
/// averaging of delayed partial sums, then converts through
/// `zeta = eta / (1 - 2^{1-z})`.
///
/// The averaging window starts past `~1.3 |y|` terms so every averaging
/// pass contracts geometrically; successive orders give the a-posteriori
/// error estimate.
pub fn zeta_eta(z: Complex, tol: Real) -> Result<OracleResult> {
    assert!(z.re > 0.0, "zeta_eta requires Re z > 0");
    assert!(tol > 0.0);

    // 1 - 2^{1-z} = 1 - e^{(1-z) ln 2}
    let one_minus_z = Complex::new(1.0, 0.0) - z;
    let denom = Complex::new(1.0, 0.0) - (one_minus_z * std::f64::consts::LN_2).exp();
    let denom_norm = denom.norm();
    if denom_norm <= 1e-12 {
        return Err(Error::EtaPole {
            modulus: denom_norm,
        });
    }

    let delay = 10 + (1.3 * z.im.abs()).ceil() as u64;
    let mut order = 24u64;
    let (mut eta, mut raw_est, mut terms);
    loop {
        (eta, raw_est, terms) = eta_binomial_average(z, delay, order);
        if raw_est <= tol / 4.0 || order >= 384 {
            break;
        }
        order *= 2;
    }

    let value = eta / denom;
    // Inflate the order-to-order change and add a round-off floor.
    let est_error =
        (10.0 * raw_est + Real::EPSILON * terms as Real * (1.0 + eta.norm())) / denom_norm;
    Ok(OracleResult {
        value,
        terms_used: terms,
        est_error,
    })
}

/// Partial sums `S_delay .. S_{delay+order}` of the alternating series,
/// averaged in place `order` times. Returns the top average, the magnitude
/// of the last order-to-order change, and the number of series terms used.
fn eta_binomial_average(z: Complex, delay: u64, order: u64) -> (Complex, Real, u64) {
    let terms = delay + order;
    let mut window: Vec<Complex> = Vec::with_capacity(order as usize + 1);
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    for n in 1..=terms {
        let t = recip_pow(n, z.re, z.im);
        if n % 2 == 1 {
            re.add(t.re);
            im.add(t.im);
        } else {
            re.add(-t.re);
            im.add(-t.im);
        }
        if n >= delay {
            window.push(Complex::new(re.value(), im.value()));
        }
    }
    let mut prev = window[0];
    let mut last_change = Real::INFINITY;
    while window.len() > 1 {
        for i in 0..window.len() - 1 {
            window[i] = 0.5 * (window[i] + window[i + 1]);
        }
        window.pop();
        last_change = (window[0] - prev).norm();
        prev = window[0];
    }
    (window[0], last_change, terms)
}
