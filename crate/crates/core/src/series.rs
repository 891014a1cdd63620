//! Incremental partial sums of the Riemann series with O(1) advance.
//!
//! The state accumulates `zeta_n(z) = sum_{j=1..n} j^{-z}` with `zeta_0 = 0`,
//! component-wise compensated, in fixed ascending order. Two runs over the
//! same inputs are bit-identical.

use crate::numerics::{power_term, Complex, KahanSum, StripPoint};

/// Partial-sum state at some index `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumState {
    z: StripPoint,
    n: u64,
    re: KahanSum,
    im: KahanSum,
}

impl PartialSumState {
    /// State at `n = 0`, i.e. `zeta_0 = 0`.
    pub fn new(z: StripPoint) -> Self {
        Self {
            z,
            n: 0,
            re: KahanSum::new(),
            im: KahanSum::new(),
        }
    }

    pub fn z(&self) -> StripPoint {
        self.z
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Current value `zeta_n(z)`.
    pub fn zeta(&self) -> Complex {
        Complex::new(self.re.value(), self.im.value())
    }

    /// Adds the next term: `zeta_{n+1} = zeta_n + (n+1)^{-z}`.
    #[inline]
    pub fn advance(&mut self) {
        let term = power_term(self.n + 1, self.z);
        self.re.add(term.re);
        self.im.add(term.im);
        self.n += 1;
    }

    /// Advances until the state reaches index `n`.
    pub fn advance_to(&mut self, n: u64) {
        while self.n < n {
            self.advance();
        }
    }
}

/// `zeta_n(z)` from scratch.
pub fn partial_sum(z: StripPoint, n: u64) -> Complex {
    let mut state = PartialSumState::new(z);
    state.advance_to(n);
    state.zeta()
}

#[cfg(test)]
// Reference constants keep their full source digits.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::numerics::StripPoint;

    #[test]
    fn zeta_zero_is_zero() {
        let z = StripPoint::new(0.5, -2.0).unwrap();
        assert_eq!(partial_sum(z, 0), Complex::new(0.0, 0.0));
    }

    #[test]
    fn zeta_one_is_one() {
        let z = StripPoint::new(0.5, -2.0).unwrap();
        assert_eq!(partial_sum(z, 1), Complex::new(1.0, 0.0));
    }

    #[test]
    fn first_advance_adds_unit_term() {
        let z = StripPoint::new(2.0, 1.0).unwrap();
        let mut s = PartialSumState::new(z);
        s.advance();
        assert_eq!(s.n(), 1);
        assert_eq!(s.zeta(), Complex::new(1.0, 0.0));
    }

    #[test]
    fn two_terms_match_direct_evaluation() {
        let z = StripPoint::new(2.0, 1.0).unwrap();
        let direct = Complex::new(1.0, 0.0) + power_term(2, z);
        let v = partial_sum(z, 2);
        assert!((v - direct).norm() <= 1e-16);
        // Reference digits computed at 40-digit working precision.
        assert!((v.re - 1.192309725340993031645).abs() < 1e-15);
        assert!((v.im - -0.1597403190784087002875).abs() < 1e-15);
    }

    #[test]
    fn three_terms_against_brute_force_oracle() {
        // zeta_3(1 - 3i), reference digits computed at 40-digit precision.
        let z = StripPoint::new(1.0, -3.0).unwrap();
        let v = partial_sum(z, 3);
        assert!((v.re - 0.4271268153030456455819).abs() < 1e-15);
        assert!((v.im - 0.38549143141381015769).abs() < 1e-15);
    }

    #[test]
    fn advancing_equals_partial_sum() {
        let z = StripPoint::new(0.5, -14.134725141734694).unwrap();
        let mut s = PartialSumState::new(z);
        for _ in 0..257 {
            s.advance();
        }
        assert_eq!(s.zeta(), partial_sum(z, 257));
    }

    #[test]
    fn fixed_order_is_bit_reproducible() {
        let z = StripPoint::new(0.5, -2.0).unwrap();
        let a = partial_sum(z, 10_000);
        let b = partial_sum(z, 10_000);
        assert_eq!(a.re.to_bits(), b.re.to_bits());
        assert_eq!(a.im.to_bits(), b.im.to_bits());
    }

    #[test]
    fn conjugation_symmetry() {
        let z = StripPoint::new(0.5, -2.0).unwrap();
        let a = partial_sum(z, 5_000);
        let b = partial_sum(z.conj(), 5_000);
        let scale = a.norm().max(1.0);
        assert!((a.re - b.re).abs() / scale < 1e-14);
        assert!((a.im + b.im).abs() / scale < 1e-14);
    }
}
