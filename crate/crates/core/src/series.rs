//! Truncated power series with complex coefficients.
//!
//! A [`PowerSeries`] stores `a_0, a_1, ..., a_N` densely from power 0. The
//! truncation order `N` is `coeffs.len() - 1`. Everything here is a pure
//! function of immutable values, so series can be shared across threads.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QdiscError, Result};

/// Complex scalars are plain `f64` pairs; finiteness is checked where values
/// enter a series, a grid or an operator parameter.
pub type ComplexScalar = Complex64;

pub(crate) fn fmt_complex(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

pub(crate) fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// A truncated complex power series `a_0 + a_1 z + ... + a_N z^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
    normalized: bool,
}

impl PowerSeries {
    /// Builds a series from its coefficients, lowest power first.
    ///
    /// With `normalized_expected` set, `a_0 = 0` and `a_1 = 1` must hold
    /// exactly.
    pub fn new(coeffs: Vec<Complex64>, normalized_expected: bool) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(QdiscError::EmptySeries);
        }
        if let Some(index) = coeffs.iter().position(|c| !is_finite(*c)) {
            return Err(QdiscError::NonfiniteCoefficient { index });
        }
        let normalized = has_normalized_prefix(&coeffs);
        if normalized_expected && !normalized {
            let a1 = coeffs.get(1).copied().unwrap_or_default();
            return Err(QdiscError::NormalizationViolation {
                a0: fmt_complex(coeffs[0]),
                a1: fmt_complex(a1),
            });
        }
        Ok(Self { coeffs, normalized })
    }

    /// Convenience constructor for real coefficients.
    pub fn from_real(coeffs: &[f64], normalized_expected: bool) -> Result<Self> {
        Self::new(
            coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
            normalized_expected,
        )
    }

    /// Materializes `rule(n)` for `n = 0..=order`.
    pub fn from_fn(order: usize, rule: impl FnMut(usize) -> Complex64) -> Result<Self> {
        Self::new((0..=order).map(rule).collect(), false)
    }

    /// Internal constructor for coefficients already known to be finite.
    pub(crate) fn from_vec_unchecked(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        let normalized = has_normalized_prefix(&coeffs);
        Self { coeffs, normalized }
    }

    /// Highest retained power `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    /// `a_0 = 0` and `a_1 = 1` exactly.
    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Evaluates the polynomial at a point of the open unit disc.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        if !is_finite(z) || z.norm() >= 1.0 {
            return Err(QdiscError::PointOutsideDisc {
                point: fmt_complex(z),
            });
        }
        Ok(self.horner(z))
    }

    /// Horner evaluation without the disc check.
    pub fn horner(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// Term-by-term derivative: `coeff'[n] = (n + 1) coeff[n + 1]`, order `N - 1`.
    ///
    /// A constant series differentiates to the zero constant.
    pub fn differentiate(&self) -> PowerSeries {
        if self.coeffs.len() == 1 {
            return Self::from_vec_unchecked(vec![Complex64::default()]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * n as f64)
            .collect();
        Self::from_vec_unchecked(coeffs)
    }

    /// Coefficientwise (Hadamard) product, truncated to the smaller order.
    pub fn hadamard(&self, other: &PowerSeries) -> PowerSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .collect();
        Self::from_vec_unchecked(coeffs)
    }

    /// Drops `a_0` and lowers every power by one, i.e. `(f(z) - a_0) / z`.
    pub(crate) fn lowered(&self) -> PowerSeries {
        if self.coeffs.len() == 1 {
            return Self::from_vec_unchecked(vec![Complex64::default()]);
        }
        Self::from_vec_unchecked(self.coeffs[1..].to_vec())
    }
}

fn has_normalized_prefix(coeffs: &[Complex64]) -> bool {
    coeffs.len() >= 2 && coeffs[0] == Complex64::new(0.0, 0.0) && coeffs[1] == Complex64::new(1.0, 0.0)
}

pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::default(), |acc, c| acc * z + c)
}

/// How the modulus of a dropped tail `sum_{n > N} a_n z^n` is bounded.
///
/// `ConvexCoeffBound` and `StarlikeCoeffBound` rely on the classical
/// coefficient estimates `|a_n| <= 1` (convex) and `|a_n| <= n` (starlike).
/// They only feed error budgets, never the inequalities being checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TailKind {
    ExactClosedForm,
    ConvexCoeffBound,
    StarlikeCoeffBound,
    None,
}

impl TailKind {
    /// Exponent `g` in the coefficient bound `|a_n| <= n^g`.
    fn growth(self) -> Option<u32> {
        match self {
            TailKind::ConvexCoeffBound => Some(0),
            TailKind::StarlikeCoeffBound => Some(1),
            TailKind::ExactClosedForm | TailKind::None => None,
        }
    }
}

/// A tail kind bound to a truncation order; evaluable at any radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailBound {
    pub kind: TailKind,
    pub order: usize,
}

impl TailBound {
    pub fn new(kind: TailKind, order: usize) -> Self {
        Self { kind, order }
    }

    /// Bound on `|sum_{n > N} a_n z^n|` for `|z| <= r`.
    pub fn at_radius(&self, r: f64) -> f64 {
        self.weighted(r, 0)
    }

    /// Bound on the tail of the `k`-th derivative, `sum_{n > N} n^k |a_n| r^(n - k)`.
    ///
    /// Also bounds the tail of `d_zeta f` for `k = 1` because `|[n]_zeta| <= n`
    /// on the closed disc.
    pub fn derivative_at_radius(&self, r: f64, k: u32) -> f64 {
        if k == 0 {
            return self.at_radius(r);
        }
        let moment = self.weighted(r, k);
        if moment == 0.0 || moment.is_infinite() {
            moment
        } else {
            moment / r.powi(k as i32)
        }
    }

    fn weighted(&self, r: f64, extra: u32) -> f64 {
        match self.kind {
            TailKind::ExactClosedForm => 0.0,
            TailKind::None => f64::INFINITY,
            kind => {
                let g = kind.growth().expect("coefficient-bound kinds carry a growth");
                power_tail(g + extra, self.order, r)
            }
        }
    }
}

/// Tail estimate for a series of order `order` at radius `r`.
///
/// `ConvexCoeffBound` gives `r^(N+1) / (1 - r)`, `StarlikeCoeffBound` gives
/// `sum_{n > N} n r^n`, `ExactClosedForm` gives 0 and `None` the infinite
/// sentinel.
pub fn tail_estimate(kind: TailKind, order: usize, r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(QdiscError::RadiusOutOfRange(r));
    }
    Ok(TailBound::new(kind, order).at_radius(r))
}

/// `sum_{n > order} n^k r^n` for `0 < r < 1`.
pub(crate) fn power_tail(k: u32, order: usize, r: f64) -> f64 {
    let n0 = (order + 1) as f64;
    match k {
        0 => r.powf(n0) / (1.0 - r),
        1 => r.powf(n0) * (n0 - (n0 - 1.0) * r) / ((1.0 - r) * (1.0 - r)),
        _ => {
            // Sum until the ratio test closes the remainder geometrically.
            let ln_r = r.ln();
            let kf = k as f64;
            let mut sum = 0.0;
            let mut n = order + 1;
            for _ in 0..50_000_000usize {
                let nf = n as f64;
                let term = (kf * nf.ln() + nf * ln_r).exp();
                sum += term;
                let ratio = ((nf + 1.0) / nf).powf(kf) * r;
                if term == 0.0 {
                    return sum;
                }
                if ratio < 1.0 {
                    let rest = term * ratio / (1.0 - ratio);
                    if rest <= 1e-17 * sum {
                        return sum + rest;
                    }
                }
                n += 1;
            }
            f64::INFINITY
        }
    }
}
