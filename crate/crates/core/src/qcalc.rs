//! The zeta-derivative operator and the Jackson q-difference quotient.
//!
//! For a normalized `f(z) = z + a_2 z^2 + ...` the operator is the
//! convolution `d_zeta f(z) = (f * h_zeta)(z) / z` with the generator
//! `h_zeta(z) = z / ((1 - zeta z)(1 - z)) = sum [n]_zeta z^n`, so that
//! `d_zeta f(z) = 1 + sum_{n >= 2} [n]_zeta a_n z^(n-1)`. At `zeta = 1` it is
//! the ordinary derivative; at real `zeta = q` it is Jackson's
//! `(f(qz) - f(z)) / ((q - 1) z)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QdiscError, Result};
use crate::function::DiscFunction;
use crate::series::{fmt_complex, is_finite, PowerSeries};

/// Slack admitted beyond the unit circle so that `e^{i theta}` is accepted.
pub const ZETA_BOUNDARY_SLACK: f64 = 1e-12;

/// Below this modulus the Jackson quotient switches to `f'(0)`.
pub const JACKSON_ORIGIN_THRESHOLD: f64 = 1e-9;

/// Operator parameter `zeta` in the closed unit disc.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Complex64", into = "Complex64")]
pub struct ZetaParam(Complex64);

impl ZetaParam {
    pub fn new(value: Complex64) -> Result<Self> {
        if !is_finite(value) || value.norm() > 1.0 + ZETA_BOUNDARY_SLACK {
            return Err(QdiscError::ZetaOutOfRange(fmt_complex(value)));
        }
        Ok(Self(value))
    }

    pub fn real(value: f64) -> Result<Self> {
        Self::new(Complex64::new(value, 0.0))
    }

    /// `e^{i theta}` on the unit circle.
    pub fn on_circle(theta: f64) -> Self {
        Self(Complex64::from_polar(1.0, theta))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn modulus(self) -> f64 {
        self.0.norm()
    }

    pub fn is_one(self) -> bool {
        self.0 == Complex64::new(1.0, 0.0)
    }
}

impl TryFrom<Complex64> for ZetaParam {
    type Error = QdiscError;

    fn try_from(value: Complex64) -> Result<Self> {
        Self::new(value)
    }
}

impl From<ZetaParam> for Complex64 {
    fn from(value: ZetaParam) -> Self {
        value.0
    }
}

/// Jackson parameter `q` in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct QParam(f64);

impl QParam {
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&value) {
            return Err(QdiscError::QOutOfRange(value));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for QParam {
    type Error = QdiscError;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl From<QParam> for f64 {
    fn from(value: QParam) -> Self {
        value.0
    }
}

impl From<QParam> for ZetaParam {
    fn from(q: QParam) -> Self {
        ZetaParam(Complex64::new(q.0, 0.0))
    }
}

/// `[n]_zeta = 1 + zeta + ... + zeta^(n-1)`.
///
/// Built by the recurrence `[n+1] = 1 + zeta [n]`, never as
/// `(1 - zeta^n) / (1 - zeta)`, so `zeta = 1` returns `n` exactly.
pub fn bracket(zeta: ZetaParam, n: usize) -> Result<Complex64> {
    if n == 0 {
        return Err(QdiscError::BracketIndex);
    }
    Ok(brackets(zeta, n)[n - 1])
}

/// `[1]_zeta, ..., [n_max]_zeta`.
pub fn brackets(zeta: ZetaParam, n_max: usize) -> Vec<Complex64> {
    let zeta = zeta.value();
    let mut out = Vec::with_capacity(n_max);
    let mut current = Complex64::new(0.0, 0.0);
    for _ in 0..n_max {
        current = current * zeta + 1.0;
        out.push(current);
    }
    out
}

/// Truncation of `h_zeta(z) = sum_{n >= 1} [n]_zeta z^n`.
pub fn h_zeta_series(zeta: ZetaParam, order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(QdiscError::InvalidParameter(
            "generator order must be at least 1".into(),
        ));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(0.0, 0.0));
    coeffs.extend(brackets(zeta, order));
    Ok(PowerSeries::from_vec_unchecked(coeffs))
}

/// The convolution `f * h_zeta`, i.e. `z d_zeta f(z)`, with coefficients
/// `[n]_zeta a_n`.
pub fn convolve_with_generator(f: &PowerSeries, zeta: ZetaParam) -> Result<PowerSeries> {
    if !f.is_normalized() {
        return Err(QdiscError::NotNormalized);
    }
    Ok(f.hadamard(&h_zeta_series(zeta, f.order())?))
}

/// `d_zeta f = (f * h_zeta) / z`: coefficient `n - 1` is `[n]_zeta a_n`,
/// constant term 1, order `N - 1`.
pub fn zeta_derivative(f: &PowerSeries, zeta: ZetaParam) -> Result<PowerSeries> {
    Ok(convolve_with_generator(f, zeta)?.lowered())
}

/// Jackson's quotient `(f(qz) - f(z)) / ((q - 1) z)`; `f'(0)` at the origin.
pub fn jackson_quotient<F: DiscFunction + ?Sized>(f: &F, q: QParam, z: Complex64) -> Result<Complex64> {
    if !is_finite(z) || z.norm() >= 1.0 {
        return Err(QdiscError::PointOutsideDisc {
            point: fmt_complex(z),
        });
    }
    if z.norm() < JACKSON_ORIGIN_THRESHOLD {
        return Ok(f.derivative(Complex64::new(0.0, 0.0)));
    }
    let q = q.value();
    Ok((f.value(z * q) - f.value(z)) / ((q - 1.0) * z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::TruncatedSeries;
    use crate::series::{TailBound, TailKind};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn zeta(re: f64, im: f64) -> ZetaParam {
        ZetaParam::new(c(re, im)).unwrap()
    }

    fn all_ones(order: usize) -> PowerSeries {
        PowerSeries::from_fn(order, |n| c(if n == 0 { 0.0 } else { 1.0 }, 0.0)).unwrap()
    }

    #[test]
    fn parameter_domains() {
        assert!(ZetaParam::new(c(0.6, 0.8)).is_ok());
        assert!(ZetaParam::new(c(1.0 + 5e-13, 0.0)).is_ok());
        assert!(ZetaParam::new(c(1.0 + 1e-9, 0.0)).is_err());
        assert!(ZetaParam::new(c(f64::NAN, 0.0)).is_err());
        assert!(QParam::new(0.0).is_ok());
        assert_eq!(QParam::new(1.0).unwrap_err(), QdiscError::QOutOfRange(1.0));
        assert!(QParam::new(-0.1).is_err());
        for k in 0..64 {
            ZetaParam::new(ZetaParam::on_circle(k as f64 * 0.1).value()).unwrap();
        }
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(zeta(0.0, 0.0), 3).unwrap(), c(1.0, 0.0));
        assert_eq!(bracket(zeta(1.0, 0.0), 4).unwrap(), c(4.0, 0.0));
        assert_eq!(bracket(zeta(0.0, 1.0), 3).unwrap(), c(0.0, 1.0));
        assert_eq!(bracket(zeta(0.5, 0.0), 1).unwrap(), c(1.0, 0.0));
        assert_eq!(bracket(zeta(0.5, 0.0), 0).unwrap_err(), QdiscError::BracketIndex);
    }

    #[test]
    fn bracket_at_one_is_exact_for_large_n() {
        let b = brackets(zeta(1.0, 0.0), 4096);
        for (i, v) in b.iter().enumerate() {
            assert_eq!(*v, c((i + 1) as f64, 0.0));
        }
    }

    #[test]
    fn generator_examples() {
        let h0 = h_zeta_series(zeta(0.0, 0.0), 6).unwrap();
        assert_eq!(h0, all_ones(6));
        let h1 = h_zeta_series(zeta(1.0, 0.0), 6).unwrap();
        for n in 0..=6 {
            assert_eq!(h1.coeff(n), c(n as f64, 0.0));
        }
        let half = h_zeta_series(zeta(0.5, 0.0), 3).unwrap();
        assert_eq!(half.coeff(3), c(1.75, 0.0));
        assert!(half.is_normalized());
        assert!(h_zeta_series(zeta(0.5, 0.0), 0).is_err());
    }

    #[test]
    fn zeta_derivative_examples() {
        let z = PowerSeries::from_real(&[0.0, 1.0], true).unwrap();
        let d = zeta_derivative(&z, zeta(0.3, 0.1)).unwrap();
        assert_eq!(d.coeffs(), &[c(1.0, 0.0)]);

        let f = PowerSeries::new(
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.5, -0.25), c(-1.0, 2.0), c(0.125, 0.0)],
            true,
        )
        .unwrap();
        assert_eq!(zeta_derivative(&f, zeta(1.0, 0.0)).unwrap(), f.differentiate());

        // a_n = 1: coefficients [n]_q, the expansion of 1/((1 - z)(1 - qz)).
        let q = 0.3;
        let d = zeta_derivative(&all_ones(128), zeta(q, 0.0)).unwrap();
        for n in 1..=128 {
            let expected = (1.0 - q.powi(n as i32)) / (1.0 - q);
            assert!((d.coeff(n - 1) - c(expected, 0.0)).norm() < 1e-15);
        }
        let z0 = c(0.4, -0.3);
        let closed = 1.0 / ((1.0 - z0) * (1.0 - z0 * q));
        let tail = TailBound::new(TailKind::ConvexCoeffBound, 128).derivative_at_radius(0.5, 1);
        assert!((d.horner(z0) - closed).norm() <= tail + 1e-14);

        let bad = PowerSeries::from_real(&[0.0, 2.0, 1.0], false).unwrap();
        assert_eq!(
            zeta_derivative(&bad, zeta(0.5, 0.0)).unwrap_err(),
            QdiscError::NotNormalized
        );
    }

    #[test]
    fn jackson_quotient_examples() {
        let sq = TruncatedSeries::new(
            PowerSeries::from_real(&[0.0, 0.0, 1.0], false).unwrap(),
            TailBound::new(TailKind::ExactClosedForm, 2),
        );
        let v = jackson_quotient(&sq, QParam::new(0.5).unwrap(), c(0.4, 0.0)).unwrap();
        assert!((v - c(0.6, 0.0)).norm() < 1e-15);

        let geo = TruncatedSeries::new(all_ones(128), TailBound::new(TailKind::ConvexCoeffBound, 128));
        let v = jackson_quotient(&geo, QParam::new(0.5).unwrap(), c(0.0, 0.0)).unwrap();
        assert_eq!(v, c(1.0, 0.0));
        let v = jackson_quotient(&geo, QParam::new(0.5).unwrap(), c(1e-12, 0.0)).unwrap();
        assert_eq!(v, c(1.0, 0.0));

        let q = QParam::new(0.3).unwrap();
        let z0 = c(0.5, 0.0);
        let quotient = jackson_quotient(&geo, q, z0).unwrap();
        let operator = zeta_derivative(geo.series(), q.into()).unwrap().horner(z0);
        let budget = 2.0 * TailBound::new(TailKind::ConvexCoeffBound, 128).at_radius(0.5) / (0.7 * 0.5)
            + TailBound::new(TailKind::ConvexCoeffBound, 128).derivative_at_radius(0.5, 1);
        assert!((quotient - operator).norm() <= budget + 1e-14);

        assert!(matches!(
            jackson_quotient(&geo, q, c(0.0, -1.0)),
            Err(QdiscError::PointOutsideDisc { .. })
        ));
    }

    #[test]
    fn z_times_jackson_derivative_has_bracket_coefficients() {
        let f = PowerSeries::from_real(&[0.0, 1.0, 0.25, -0.5, 0.75], true).unwrap();
        let q = zeta(0.6, 0.0);
        let z_dq = convolve_with_generator(&f, q).unwrap();
        for n in 1..=4 {
            assert_eq!(z_dq.coeff(n), f.coeff(n) * bracket(q, n).unwrap());
        }
        assert_eq!(z_dq.coeff(0), c(0.0, 0.0));
    }
}
