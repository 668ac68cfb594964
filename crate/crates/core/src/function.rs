//! Point evaluators for analytic functions on the unit disc.
//!
//! Checks are written against [`DiscFunction`], which is implemented both by
//! closed-form catalog entries and by truncated series. A truncated series
//! reports how large its dropped tail can be at each radius so that margins
//! carry an honest error budget.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::series::{horner, PowerSeries, TailBound};

/// Trapezoid nodes used when divided differences fall back to a contour.
const CONTOUR_NODES: usize = 128;

/// Error bounds on each evaluator channel at a given radius.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TailErrors {
    pub value: f64,
    pub derivative: f64,
    pub second_derivative: f64,
    pub zeta_derivative: f64,
    pub zeta_second_difference: f64,
}

impl TailErrors {
    pub fn is_zero(&self) -> bool {
        *self == TailErrors::default()
    }
}

/// An analytic function on the open unit disc, evaluated pointwise.
pub trait DiscFunction: Sync {
    fn value(&self, z: Complex64) -> Complex64;

    fn derivative(&self, z: Complex64) -> Complex64;

    fn second_derivative(&self, z: Complex64) -> Complex64;

    /// `d_zeta f(z)`, the divided difference `f[z, zeta z]`.
    fn zeta_derivative(&self, zeta: Complex64, z: Complex64) -> Complex64 {
        divided_difference(self, z, zeta * z)
    }

    /// `f[z, z, zeta z]`; equals `(f'(z) - d_zeta f(z)) / ((1 - zeta) z)` and
    /// stays regular at `zeta = 1`, where it is `f''(z) / 2`.
    fn zeta_second_difference(&self, zeta: Complex64, z: Complex64) -> Complex64 {
        confluent_difference(self, z, zeta * z)
    }

    /// Tail error bounds at radius `r`; zero for closed forms.
    fn tail(&self, _r: f64) -> TailErrors {
        TailErrors::default()
    }

    /// True when every channel is a closed form (no truncation error).
    fn is_exact(&self) -> bool {
        true
    }

    fn is_normalized(&self) -> bool {
        let zero = Complex64::default();
        self.value(zero).norm() < 1e-14 && (self.derivative(zero) - 1.0).norm() < 1e-14
    }
}

fn contour_radius(x: Complex64) -> f64 {
    0.75 * (1.0 - x.norm())
}

/// First divided difference `f[x, y]`; `f'(x)` when the nodes coincide.
///
/// Close nodes are handled by a Cauchy integral on a circle around `x`, which
/// avoids the cancellation in `(f(x) - f(y)) / (x - y)`.
pub fn divided_difference<F: DiscFunction + ?Sized>(f: &F, x: Complex64, y: Complex64) -> Complex64 {
    if x == y {
        return f.derivative(x);
    }
    let rho = contour_radius(x);
    if (x - y).norm() >= 0.5 * rho {
        return (f.value(x) - f.value(y)) / (x - y);
    }
    let fx = f.value(x);
    contour_mean(rho, x, |t, _| (f.value(t) - fx) / (t - y))
}

/// Confluent second divided difference `f[x, x, y]`; `f''(x) / 2` when `y = x`.
pub fn confluent_difference<F: DiscFunction + ?Sized>(
    f: &F,
    x: Complex64,
    y: Complex64,
) -> Complex64 {
    if x == y {
        return f.second_derivative(x) * 0.5;
    }
    let rho = contour_radius(x);
    if (x - y).norm() >= 0.5 * rho {
        let first = (f.value(x) - f.value(y)) / (x - y);
        return (f.derivative(x) - first) / (x - y);
    }
    let fx = f.value(x);
    let dfx = f.derivative(x);
    contour_mean(rho, x, |t, offset| {
        (f.value(t) - fx - dfx * offset) / (offset * (t - y))
    })
}

/// `(1/M) sum g(t_m, t_m - x)` over `t_m = x + rho e^{i theta_m}`: the trapezoid
/// rule for `(1 / 2 pi i) \oint g(t) / (t - x) dt`.
///
/// Callers subtract the Taylor polynomial of `f` at `x` from the integrand;
/// its contour integral vanishes and removing it avoids cancellation.
fn contour_mean(rho: f64, x: Complex64, g: impl Fn(Complex64, Complex64) -> Complex64) -> Complex64 {
    let step = 2.0 * PI / CONTOUR_NODES as f64;
    let sum = (0..CONTOUR_NODES).fold(Complex64::default(), |acc, m| {
        let offset = Complex64::from_polar(rho, step * m as f64);
        acc + g(x + offset, offset)
    });
    sum / CONTOUR_NODES as f64
}

/// A truncated series viewed as a point evaluator, with a tail model.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    series: PowerSeries,
    first: PowerSeries,
    second: PowerSeries,
    tail: TailBound,
}

impl TruncatedSeries {
    pub fn new(series: PowerSeries, tail: TailBound) -> Self {
        let first = series.differentiate();
        let second = first.differentiate();
        Self {
            series,
            first,
            second,
            tail,
        }
    }

    pub fn series(&self) -> &PowerSeries {
        &self.series
    }

    pub fn tail_bound(&self) -> TailBound {
        self.tail
    }
}

impl DiscFunction for TruncatedSeries {
    fn value(&self, z: Complex64) -> Complex64 {
        self.series.horner(z)
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        self.first.horner(z)
    }

    fn second_derivative(&self, z: Complex64) -> Complex64 {
        self.second.horner(z)
    }

    /// `sum [n]_zeta a_n z^(n-1)`, straight from the coefficients.
    fn zeta_derivative(&self, zeta: Complex64, z: Complex64) -> Complex64 {
        let coeffs = self.series.coeffs();
        let mut bracket = Complex64::new(0.0, 0.0);
        let mut lowered = Vec::with_capacity(coeffs.len().saturating_sub(1));
        for a in coeffs.iter().skip(1) {
            bracket = bracket * zeta + 1.0;
            lowered.push(a * bracket);
        }
        horner(&lowered, z)
    }

    /// `sum_{n >= 2} c_n(zeta) a_n z^(n-2)` with
    /// `c_n(zeta) = sum_{k=1}^{n-1} k zeta^(n-1-k)`.
    fn zeta_second_difference(&self, zeta: Complex64, z: Complex64) -> Complex64 {
        let coeffs = self.series.coeffs();
        let mut weight = Complex64::new(0.0, 0.0);
        let mut lowered = Vec::with_capacity(coeffs.len().saturating_sub(2));
        for (n, a) in coeffs.iter().enumerate().skip(2) {
            weight = weight * zeta + (n - 1) as f64;
            lowered.push(a * weight);
        }
        horner(&lowered, z)
    }

    fn tail(&self, r: f64) -> TailErrors {
        let d1 = self.tail.derivative_at_radius(r, 1);
        TailErrors {
            value: self.tail.at_radius(r),
            derivative: d1,
            second_derivative: self.tail.derivative_at_radius(r, 2),
            zeta_derivative: d1,
            zeta_second_difference: 0.5 * self.tail.derivative_at_radius(r, 2),
        }
    }

    fn is_exact(&self) -> bool {
        self.tail_bound().at_radius(0.5) == 0.0
    }

    fn is_normalized(&self) -> bool {
        self.series.is_normalized()
    }
}
