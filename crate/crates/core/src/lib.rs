//! Radial-convergence summation of the Riemann series.
//!
//! The partial sums of `sum n^{-z}` trace a logarithmic spiral in the
//! complex plane: converging for `Re z > 1`, circular for `Re z = 1`,
//! diverging for `Re z < 1`. This crate computes the spiral's center by
//! intersecting successive lines attached to the partial sums at the
//! spiral's constant pitch angle. The limit of those intersection points
//! extends the series to the whole half-plane `Re z > 0`, where it
//! coincides with the zeta function, and yields a winding quantity `U_z`
//! that settles on an even integer at the nontrivial zeros.
//!
//! Module map:
//!
//! * [`numerics`] — domain-gated argument types and complex primitives;
//! * [`series`] — compensated incremental partial sums;
//! * [`radial`] — pitch angle, intersection centers by two routes, step
//!   terms, limit center with tail bounds;
//! * [`domination`] — the normalized step modulus, its limit and band scans;
//! * [`oracle`] — independent zeta references (direct sum, accelerated eta);
//! * [`winding`] — cumulated argument, `gamma_n`, the `U` sequence;
//! * [`zeros`] — embedded zero table and external table ingestion;
//! * [`diagnostics`] — finite-difference Jacobians, Cauchy-Riemann
//!   residuals, spiral data export.

pub mod diagnostics;
pub mod domination;
pub mod error;
pub mod numerics;
pub mod oracle;
pub mod radial;
pub mod series;
pub mod winding;
pub mod zeros;

pub use error::{Error, Result};
pub use numerics::{Complex, CriticalStripPoint, Real, StripPoint};
pub use radial::{CenterResult, PitchAngle};
pub use winding::{UzEstimate, WindingState};
pub use zeros::{ZeroRecord, ZerosFormat};
