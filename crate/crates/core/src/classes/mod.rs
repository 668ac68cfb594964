//! Grid samplers for starlikeness, convexity and the class `R(zeta, alpha)`.
//!
//! A sampler evaluates the real part of a quotient at every grid point and
//! reports the smallest margin. Sampling can refute membership but never
//! prove it, so a PASS means "passes at this grid".

mod grid;
mod report;

pub use grid::{DiscGrid, STANDARD_ANGLES, STANDARD_RADII};
pub use report::{IdentityReport, MarginComponent, MarginReport, SharpnessReport, Verdict};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{QdiscError, Result};
use crate::function::DiscFunction;
use crate::qcalc::{QParam, ZetaParam};
use crate::series::fmt_complex;

/// Denominators below this modulus mark a grid point as singular.
pub const SINGULARITY_GUARD: f64 = 1e-14;

/// Default tolerance for closed-form evaluators.
pub const EXACT_TOLERANCE: f64 = 1e-9;

/// Default tolerance for truncated series (the tail budget comes on top).
pub const SERIES_TOLERANCE: f64 = 1e-6;

pub fn default_tolerance<F: DiscFunction + ?Sized>(f: &F) -> f64 {
    if f.is_exact() {
        EXACT_TOLERANCE
    } else {
        SERIES_TOLERANCE
    }
}

/// Outcome at one grid point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sample {
    Value { margin: f64, tail: f64 },
    Singular,
}

impl Sample {
    pub fn exact(margin: f64) -> Self {
        Sample::Value { margin, tail: 0.0 }
    }
}

/// Evaluates `eval` at every grid point and reduces in enumeration order.
///
/// Points may be evaluated in parallel; the reduction is sequential, so the
/// result is bit-identical for any thread count. Ties keep the first point.
pub fn sweep(
    label: &str,
    grid: &DiscGrid,
    eval: impl Fn(Complex64) -> Sample + Sync,
) -> Result<MarginComponent> {
    let points = grid.points();
    if points.is_empty() {
        return Err(QdiscError::EmptyGrid);
    }
    let samples: Vec<Sample> = points.par_iter().map(|&z| eval(z)).collect();
    reduce(label, &points, &samples)
}

pub(crate) fn reduce(label: &str, points: &[Complex64], samples: &[Sample]) -> Result<MarginComponent> {
    let mut best: Option<(f64, Complex64)> = None;
    let mut tail_budget = 0.0f64;
    let mut singular = 0;
    for (z, sample) in points.iter().zip(samples) {
        match *sample {
            Sample::Value { margin, tail } if !margin.is_nan() => {
                tail_budget = tail_budget.max(tail);
                if best.map_or(true, |(m, _)| margin < m) {
                    best = Some((margin, *z));
                }
            }
            _ => singular += 1,
        }
    }
    let (min_margin, argmin) = best.ok_or(QdiscError::AllPointsSingular)?;
    Ok(MarginComponent {
        label: label.to_string(),
        min_margin,
        argmin,
        tail_budget,
        evaluated_points: points.len() - singular,
        singular_points: singular,
    })
}

/// `num / den` with first-order propagation of the operand error bounds.
///
/// Returns `None` when the denominator is below [`SINGULARITY_GUARD`]. The
/// bound is infinite when the denominator error could reach zero.
pub fn quotient(num: Complex64, num_tail: f64, den: Complex64, den_tail: f64) -> Option<(Complex64, f64)> {
    let den_abs = den.norm();
    if !(den_abs >= SINGULARITY_GUARD) {
        return None;
    }
    let value = num / den;
    let tail = if num_tail == 0.0 && den_tail == 0.0 {
        0.0
    } else if den_tail >= den_abs {
        f64::INFINITY
    } else {
        (num_tail + value.norm() * den_tail) / (den_abs - den_tail)
    };
    Some((value, tail))
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(QdiscError::AlphaOutOfRange(alpha));
    }
    Ok(())
}

/// `z f'(z) / f(z)` with its error bound.
pub fn starlike_quotient<F: DiscFunction + ?Sized>(f: &F, z: Complex64) -> Option<(Complex64, f64)> {
    let t = f.tail(z.norm());
    quotient(z * f.derivative(z), z.norm() * t.derivative, f.value(z), t.value)
}

/// `1 + z f''(z) / f'(z)` with its error bound.
pub fn convex_quotient<F: DiscFunction + ?Sized>(f: &F, z: Complex64) -> Option<(Complex64, f64)> {
    let t = f.tail(z.norm());
    quotient(
        z * f.second_derivative(z),
        z.norm() * t.second_derivative,
        f.derivative(z),
        t.derivative,
    )
    .map(|(v, e)| (v + 1.0, e))
}

/// `f'(z) / d_zeta f(z)` with its error bound.
pub fn r_class_quotient<F: DiscFunction + ?Sized>(
    f: &F,
    zeta: ZetaParam,
    z: Complex64,
) -> Option<(Complex64, f64)> {
    let t = f.tail(z.norm());
    quotient(
        f.derivative(z),
        t.derivative,
        f.zeta_derivative(zeta.value(), z),
        t.zeta_derivative,
    )
}

pub(crate) fn margin_sample(q: Option<(Complex64, f64)>, shift: f64) -> Sample {
    match q {
        Some((v, tail)) => Sample::Value {
            margin: v.re - shift,
            tail,
        },
        None => Sample::Singular,
    }
}

/// Grid minimum of `Re{z f'/f} - alpha` (starlike of order `alpha`).
pub fn starlike_margin<F: DiscFunction + ?Sized>(
    f: &F,
    alpha: f64,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    check_alpha(alpha)?;
    let c = sweep("starlike", grid, |z| margin_sample(starlike_quotient(f, z), alpha))?;
    Ok(
        MarginReport::from_components("starlike-margin", "starlike of order alpha", vec![c], tolerance)
            .with_param("alpha", alpha)
            .with_param("grid", grid.describe()),
    )
}

/// Grid minimum of `Re{1 + z f''/f'}` (convexity).
pub fn convex_margin<F: DiscFunction + ?Sized>(
    f: &F,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    let c = sweep("convex", grid, |z| margin_sample(convex_quotient(f, z), 0.0))?;
    Ok(
        MarginReport::from_components("convex-margin", "convex univalent", vec![c], tolerance)
            .with_param("grid", grid.describe()),
    )
}

/// Grid minimum of `Re{f'/d_zeta f} - alpha` (membership in `R(zeta, alpha)`).
pub fn r_class_margin<F: DiscFunction + ?Sized>(
    f: &F,
    zeta: ZetaParam,
    alpha: f64,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    check_alpha(alpha)?;
    if !f.is_normalized() {
        return Err(QdiscError::NotNormalized);
    }
    let c = sweep("r_class", grid, |z| {
        margin_sample(r_class_quotient(f, zeta, z), alpha)
    })?;
    Ok(MarginReport::from_components(
        "r-class-margin",
        "derivative over zeta-derivative exceeds alpha",
        vec![c],
        tolerance,
    )
    .with_param("alpha", alpha)
    .with_param("zeta", fmt_complex(zeta.value()))
    .with_param("grid", grid.describe()))
}

/// `p(z) = (2 f'(z) / d_q f(z) - (1 + q)) / (1 - q)`, the positive-real-part
/// function attached to a convex `f`; `p(0) = 1`.
pub fn herglotz_p<F: DiscFunction + ?Sized>(f: &F, q: QParam, z: Complex64) -> Result<Complex64> {
    if !f.is_normalized() {
        return Err(QdiscError::NotNormalized);
    }
    if !(z.norm() < 1.0) {
        return Err(QdiscError::PointOutsideDisc {
            point: fmt_complex(z),
        });
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let q = q.value();
    let d = f.zeta_derivative(Complex64::new(q, 0.0), z);
    if d.norm() < SINGULARITY_GUARD {
        return Err(QdiscError::DenominatorSingular {
            point: fmt_complex(z),
        });
    }
    Ok((f.derivative(z) * 2.0 / d - (1.0 + q)) / (1.0 - q))
}
