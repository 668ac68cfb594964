use num_complex::Complex64;

use crate::catalog::{self, CatalogEntry, EntryKind};
use crate::classes::{
    herglotz_p, r_class_margin, r_class_quotient, sweep, DiscGrid, IdentityReport, MarginComponent,
    MarginReport, Sample, SharpnessReport,
};
use crate::error::{QdiscError, Result};
use crate::function::DiscFunction;
use crate::qcalc::{QParam, ZetaParam};
use crate::series::fmt_complex;

use super::{require_convex, SHARPNESS_RADII};

pub(crate) const QUOTIENT_BOUNDS_ANCHOR: &str =
    "convex f: Re{f'/((1-zeta) d_zeta f)} > Re{(1+zeta)/(2(1-zeta))} > 0";
pub(crate) const SHARP_BOUND_ANCHOR: &str =
    "convex f: Re{f'/((1-zeta) d_zeta f)} > (1-|zeta|^2)/(2|1-zeta|^2), best possible";
pub(crate) const Q_CLASS_ANCHOR: &str = "convex f lies in R(q, (1+q)/2)";
pub(crate) const HERGLOTZ_ANCHOR: &str =
    "convex f: p = (2f'/d_q f - (1+q))/(1-q) has positive real part, p(0) = 1";

/// Tolerance for closed-form identities such as the extremal value at `z = -1`.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Deviation allowed between `p` for `z/(1-z)` and `(1+z)/(1-z)`.
pub const HERGLOTZ_TOLERANCE: f64 = 1e-10;

fn zeta_not_one(zeta: ZetaParam) -> Result<()> {
    if zeta.is_one() {
        Err(QdiscError::ZetaEqualsOne)
    } else {
        Ok(())
    }
}

fn zeta_interior(zeta: ZetaParam) -> Result<()> {
    if zeta.modulus() < 1.0 {
        Ok(())
    } else {
        Err(QdiscError::ZetaOnBoundary(fmt_complex(zeta.value())))
    }
}

/// `f'/((1 - zeta) d_zeta f)` with its error bound.
fn scaled_quotient<F: DiscFunction + ?Sized>(f: &F, zeta: ZetaParam, z: Complex64) -> Option<(Complex64, f64)> {
    let s = 1.0 - zeta.value();
    r_class_quotient(f, zeta, z).map(|(v, e)| (v / s, e / s.norm()))
}

fn scaled_sweep(
    label: &str,
    f: &CatalogEntry,
    zeta: ZetaParam,
    grid: &DiscGrid,
    shift: f64,
) -> Result<MarginComponent> {
    sweep(label, grid, |z| match scaled_quotient(f, zeta, z) {
        Some((v, tail)) => Sample::Value {
            margin: v.re - shift,
            tail,
        },
        None => Sample::Singular,
    })
}

/// The lower bound `Re{(1+zeta)/(2(1-zeta))}` and its two consequences,
/// `Re{(f'/d_zeta f - 1)/(1-zeta)} > -1/2` and positivity of the scaled
/// quotient.
///
/// The chain is checked pointwise: `lower_bound` is the pointwise
/// difference and `bound_positive` the (constant) right side.
pub fn check_quotient_bounds(
    f: &CatalogEntry,
    zeta: ZetaParam,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    require_convex(f)?;
    zeta_not_one(zeta)?;
    let w = zeta.value();
    let bound = ((1.0 + w) / (2.0 * (1.0 - w))).re;
    let lower = scaled_sweep("lower_bound", f, zeta, grid, bound)?;
    let shifted = sweep("shifted_form", grid, |z| match r_class_quotient(f, zeta, z) {
        Some((v, tail)) => {
            let s = 1.0 - w;
            Sample::Value {
                margin: ((v - 1.0) / s).re + 0.5,
                tail: tail / s.norm(),
            }
        }
        None => Sample::Singular,
    })?;
    let positive = scaled_sweep("positivity", f, zeta, grid, 0.0)?;
    let mut components = vec![lower, shifted, positive];
    if zeta.modulus() < 1.0 {
        components.push(MarginComponent {
            label: "bound_positive".into(),
            min_margin: bound,
            argmin: Complex64::new(0.0, 0.0),
            tail_budget: 0.0,
            evaluated_points: 1,
            singular_points: 0,
        });
    }
    Ok(
        MarginReport::from_components("quotient-bounds", QUOTIENT_BOUNDS_ANCHOR, components, tolerance)
            .with_param("function", f.label())
            .with_param("zeta", fmt_complex(w))
            .with_param("bound", bound)
            .with_param("grid", grid.describe()),
    )
}

/// `(1 - |zeta|^2) / (2 |1 - zeta|^2)`.
pub fn quotient_sharp_bound(zeta: ZetaParam) -> f64 {
    let w = zeta.value();
    (1.0 - w.norm_sqr()) / (2.0 * (1.0 - w).norm_sqr())
}

/// `(1 - zeta z)/((1 - zeta)(1 - z))`: the scaled quotient of `z/(1-z)`,
/// written so that it extends to `z = -1`.
pub fn half_plane_quotient(zeta: Complex64, z: Complex64) -> Complex64 {
    (1.0 - zeta * z) / ((1.0 - zeta) * (1.0 - z))
}

/// The sharp lower bound; for `half_plane` the report also carries the gap
/// sequence over growing discs and the extremal value at `z = -1`.
pub fn check_quotient_sharp_bound(
    f: &CatalogEntry,
    zeta: ZetaParam,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    require_convex(f)?;
    zeta_interior(zeta)?;
    let bound = quotient_sharp_bound(zeta);
    let c = scaled_sweep("sharp_bound", f, zeta, grid, bound)?;
    let mut report = MarginReport::from_components("quotient-sharp-bound", SHARP_BOUND_ANCHOR, vec![c], tolerance)
        .with_param("function", f.label())
        .with_param("zeta", fmt_complex(zeta.value()))
        .with_param("bound", bound)
        .with_param("grid", grid.describe());
    if matches!(f.kind(), EntryKind::HalfPlane) {
        let extremal = half_plane_quotient(zeta.value(), Complex64::new(-1.0, 0.0));
        report = report
            .with_sharpness(quotient_sharpness(zeta, &SHARPNESS_RADII, grid.angles(), tolerance)?)
            .with_identity(IdentityReport::new(
                "quotient-sharp-bound/extremal",
                "z/(1-z) attains the bound at z = -1",
                (extremal.re - bound).abs(),
                "z=-1",
                IDENTITY_TOLERANCE,
            ));
    }
    Ok(report)
}

/// Gaps between the grid minimum for `z/(1-z)` and the sharp bound as
/// `r_max` grows.
pub fn quotient_sharpness(
    zeta: ZetaParam,
    r_max: &[f64],
    angles: usize,
    tolerance: f64,
) -> Result<SharpnessReport> {
    zeta_interior(zeta)?;
    let f = catalog::entry("half_plane")?;
    let bound = quotient_sharp_bound(zeta);
    let mut gaps = Vec::with_capacity(r_max.len());
    for &r in r_max {
        let grid = DiscGrid::standard_up_to(r, angles)?;
        gaps.push(scaled_sweep("sharp_bound", &f, zeta, &grid, bound)?.min_margin);
    }
    Ok(SharpnessReport::new(f.label(), r_max.to_vec(), gaps, tolerance))
}

/// `f` in `R(q, (1+q)/2)` for convex `f`.
pub fn check_q_class(f: &CatalogEntry, q: QParam, grid: &DiscGrid, tolerance: f64) -> Result<MarginReport> {
    require_convex(f)?;
    let alpha = (1.0 + q.value()) / 2.0;
    Ok(r_class_margin(f, q.into(), alpha, grid, tolerance)?
        .with_check_id("q-class", Q_CLASS_ANCHOR)
        .with_param("function", f.label())
        .with_param("q", q.value()))
}

/// `Re p > 0` over the grid; for `half_plane` also `p = (1+z)/(1-z)`.
pub fn check_herglotz_positivity(
    f: &CatalogEntry,
    q: QParam,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    require_convex(f)?;
    let c = sweep("re_p", grid, |z| match herglotz_p(f, q, z) {
        Ok(p) => Sample::exact(p.re),
        Err(_) => Sample::Singular,
    })?;
    let mut report = MarginReport::from_components("herglotz-positivity", HERGLOTZ_ANCHOR, vec![c], tolerance)
        .with_param("function", f.label())
        .with_param("q", q.value())
        .with_param("grid", grid.describe());
    let origin = herglotz_p(f, q, Complex64::new(0.0, 0.0))?;
    report = report.with_identity(IdentityReport::new(
        "herglotz-positivity/origin",
        "p(0) = 1",
        (origin - 1.0).norm(),
        "z=0",
        0.0,
    ));
    if matches!(f.kind(), EntryKind::HalfPlane) {
        let mut samples = Vec::with_capacity(grid.len());
        for z in grid.points() {
            let p = herglotz_p(f, q, z)?;
            samples.push(((p - (1.0 + z) / (1.0 - z)).norm(), fmt_complex(z)));
        }
        report = report.with_identity(IdentityReport::from_samples(
            "herglotz-positivity/half-plane",
            "p = (1+z)/(1-z) for z/(1-z)",
            samples,
            HERGLOTZ_TOLERANCE,
        ));
    }
    Ok(report)
}
