use num_complex::Complex64;

use crate::catalog::{self, CatalogEntry, EntryKind};
use crate::classes::{
    margin_sample, quotient, r_class_quotient, sweep, DiscGrid, IdentityReport, MarginReport, Sample,
};
use crate::error::{QdiscError, Result};
use crate::function::DiscFunction;
use crate::qcalc::{bracket, convolve_with_generator, QParam};
use crate::series::{PowerSeries, TailBound, TailKind};

pub(crate) const DISTORTION_ANCHOR: &str =
    "convex f, |z| = r: (1+qr)/(1+r) <= Re, |f'/d_q f| <= (1-qr)/(1-r), sharp";
pub(crate) const LOG_KERNEL_ANCHOR: &str =
    "convex f: Re{f/D} > (1+q)/2 with D = log(1/(1-z)) * (f * h_q)";

/// Tolerance for the circle bounds and their attainment.
pub const DISTORTION_TOLERANCE: f64 = 1e-12;

/// `((1 + qr)/(1 + r), (1 - qr)/(1 - r))`.
pub fn q_distortion_bounds(q: QParam, r: f64) -> (f64, f64) {
    let q = q.value();
    ((1.0 + q * r) / (1.0 + r), (1.0 - q * r) / (1.0 - r))
}

/// The four bounds on `f'/d_q f` over `|z| = r`; for `half_plane` also the
/// attainment of both bounds at `z = -r` and `z = r`.
pub fn check_q_distortion(f: &CatalogEntry, q: QParam, r: f64, angles: usize) -> Result<MarginReport> {
    super::require_convex(f)?;
    if !(r > 0.0 && r < 1.0) {
        return Err(QdiscError::RadiusOutOfRange(r));
    }
    let grid = DiscGrid::circle(r, angles)?;
    let (lower, upper) = q_distortion_bounds(q, r);
    let zeta = q.into();
    let clause = |label: &str, pick: fn(Complex64, f64, f64) -> f64| {
        sweep(label, &grid, |z| match r_class_quotient(f, zeta, z) {
            Some((v, tail)) => Sample::Value {
                margin: pick(v, lower, upper),
                tail,
            },
            None => Sample::Singular,
        })
    };
    let components = vec![
        clause("re_lower", |v, lo, _| v.re - lo)?,
        clause("re_upper", |v, _, hi| hi - v.re)?,
        clause("modulus_lower", |v, lo, _| v.norm() - lo)?,
        clause("modulus_upper", |v, _, hi| hi - v.norm())?,
    ];
    let mut report = MarginReport::from_components("q-distortion", DISTORTION_ANCHOR, components, DISTORTION_TOLERANCE)
        .with_param("function", f.label())
        .with_param("q", q.value())
        .with_param("r", r)
        .with_param("angles", angles)
        .with_param("lower", lower)
        .with_param("upper", upper);
    if matches!(f.kind(), EntryKind::HalfPlane) {
        let at = |x: f64| f.derivative(Complex64::new(x, 0.0)) / f.zeta_derivative(Complex64::new(q.value(), 0.0), Complex64::new(x, 0.0));
        let samples = vec![
            ((at(-r) - lower).norm(), format!("z=-{r}")),
            ((at(r) - upper).norm(), format!("z={r}")),
        ];
        report = report.with_identity(IdentityReport::from_samples(
            "q-distortion/attainment",
            "z/(1-z) attains both bounds on the real axis",
            samples,
            DISTORTION_TOLERANCE,
        ));
    }
    Ok(report)
}

/// `D = log(1/(1-z)) * (f * h_q)` from the order-`order` truncation of `f`:
/// coefficients `[n]_q a_n / n`.
pub fn log_kernel_denominator(f: &CatalogEntry, q: QParam, order: usize) -> Result<PowerSeries> {
    let zdq = convolve_with_generator(&f.truncate(order)?, q.into())?;
    Ok(zdq.hadamard(&catalog::entry("log_convex")?.truncate(order)?))
}

/// `Re{f(z)/D(z)} - (1+q)/2` over the grid with `D` from
/// [`log_kernel_denominator`].
///
/// For convex `f` the coefficients of `D` are bounded by 1, so the dropped
/// tail is at most `r^(N+1)/(1-r)`.
pub fn check_log_kernel_quotient(
    f: &CatalogEntry,
    q: QParam,
    grid: &DiscGrid,
    order: usize,
    tolerance: f64,
) -> Result<MarginReport> {
    super::require_convex(f)?;
    let d = log_kernel_denominator(f, q, order)?;
    let tail = TailBound::new(TailKind::ConvexCoeffBound, order);
    let alpha = (1.0 + q.value()) / 2.0;
    let c = sweep("log_kernel", grid, |z| {
        margin_sample(quotient(f.value(z), 0.0, d.horner(z), tail.at_radius(z.norm())), alpha)
    })?;
    let zeta = q.into();
    let mut samples = Vec::with_capacity(order);
    for n in 1..=order {
        let expected = f.coeff(n) * bracket(zeta, n)? * Complex64::new(1.0 / n as f64, 0.0);
        samples.push(((d.coeff(n) - expected).norm(), format!("n={n}")));
    }
    let identity = IdentityReport::from_samples(
        "log-kernel-quotient/coefficients",
        "D has coefficients [n]_q a_n / n",
        samples,
        0.0,
    );
    Ok(
        MarginReport::from_components("log-kernel-quotient", LOG_KERNEL_ANCHOR, vec![c], tolerance)
            .with_param("function", f.label())
            .with_param("q", q.value())
            .with_param("order", order)
            .with_param("grid", grid.describe())
            .with_identity(identity),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::SERIES_TOLERANCE;

    #[test]
    fn bound_formulas() {
        let (lo, hi) = q_distortion_bounds(QParam::new(0.5).unwrap(), 0.5);
        assert!((lo - 5.0 / 6.0).abs() < 1e-15);
        assert!((hi - 1.5).abs() < 1e-15);
        let (lo, hi) = q_distortion_bounds(QParam::new(0.0).unwrap(), 0.25);
        assert_eq!((lo, hi), (1.0 / 1.25, 1.0 / 0.75));
    }

    #[test]
    fn half_plane_attains_the_bounds() {
        let f = catalog::entry("half_plane").unwrap();
        for q in [0.3, 0.7] {
            for r in [0.5, 0.9] {
                let rep = check_q_distortion(&f, QParam::new(q).unwrap(), r, 512).unwrap();
                assert!(rep.passed(), "{q} {r}: {}", rep.min_margin);
                assert!(rep.identities[0].max_abs_deviation <= 1e-12);
            }
        }
        assert!(check_q_distortion(&f, QParam::new(0.3).unwrap(), 1.0, 8).is_err());
    }

    #[test]
    fn convex_corpus_respects_the_bounds() {
        for id in catalog::CONVEX_IDS {
            let f = catalog::entry(id).unwrap();
            let rep = check_q_distortion(&f, QParam::new(0.7).unwrap(), 0.9, 512).unwrap();
            assert!(rep.passed(), "{id}: {}", rep.min_margin);
        }
    }

    #[test]
    fn denominator_coefficients() {
        let log = catalog::entry("log_convex").unwrap();
        let q = QParam::new(0.25).unwrap();
        let d = log_kernel_denominator(&log, q, 16).unwrap();
        let n = 5.0f64;
        let bracket5 = (1.0 - 0.25f64.powi(5)) / 0.75;
        assert!((d.coeff(5).re - bracket5 / (n * n)).abs() < 1e-15);
        let rep = check_log_kernel_quotient(&log, q, &DiscGrid::standard(), 128, SERIES_TOLERANCE).unwrap();
        assert!(rep.passed(), "{}", rep.min_margin);
        assert!(rep.identities[0].passed());
        let half = catalog::entry("half_plane").unwrap();
        let rep = check_log_kernel_quotient(&half, QParam::new(0.5).unwrap(), &DiscGrid::standard(), 128, SERIES_TOLERANCE)
            .unwrap();
        assert!(rep.passed(), "{}", rep.min_margin);
    }
}
