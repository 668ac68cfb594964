use num_complex::Complex64;

use crate::catalog::{self, CatalogEntry, EntryKind};
use crate::classes::{
    default_tolerance, margin_sample, quotient, starlike_quotient, sweep, DiscGrid, MarginComponent,
    MarginReport, Sample, SharpnessReport,
};
use crate::error::Result;
use crate::function::DiscFunction;
use crate::qcalc::ZetaParam;
use crate::series::fmt_complex;

use super::{require_convex, SHARPNESS_RADII};

pub(crate) const HZETA_ANCHOR: &str =
    "generator h_zeta is starlike of order (1-|zeta|)/(2(1+|zeta|))";
pub(crate) const CONVEX_BOUND_ANCHOR: &str =
    "convex f: Re{(f'/d_zeta f - zeta)/(1 - zeta)} > 1/2 for |zeta| <= 1";

/// `h(zeta, z) = z f[z, z, zeta z] / f[z, zeta z] + 1/2` with its error bound.
///
/// `(f'/d_zeta f - zeta)/(1 - zeta) = h + 1/2`, and unlike that quotient `h`
/// is regular at `zeta = 1`, where it equals `z f''/(2 f') + 1/2`.
pub fn auxiliary_h<F: DiscFunction + ?Sized>(
    f: &F,
    zeta: Complex64,
    z: Complex64,
) -> Option<(Complex64, f64)> {
    let r = z.norm();
    let t = f.tail(r);
    quotient(
        z * f.zeta_second_difference(zeta, z),
        r * t.zeta_second_difference,
        f.zeta_derivative(zeta, z),
        t.zeta_derivative,
    )
    .map(|(v, e)| (v + 0.5, e))
}

/// `(f'/d_zeta f - zeta)/(1 - zeta)` evaluated as written; `None` at `zeta = 1`.
pub fn convex_bound_direct<F: DiscFunction + ?Sized>(
    f: &F,
    zeta: Complex64,
    z: Complex64,
) -> Option<Complex64> {
    if zeta == Complex64::new(1.0, 0.0) {
        return None;
    }
    Some((f.derivative(z) / f.zeta_derivative(zeta, z) - zeta) / (1.0 - zeta))
}

/// Grid minimum of `Re h(zeta, z)` for any evaluator.
pub fn convex_zeta_bound_margin<F: DiscFunction + ?Sized>(
    f: &F,
    zeta: ZetaParam,
    grid: &DiscGrid,
) -> Result<MarginComponent> {
    sweep("re_h", grid, |z| margin_sample(auxiliary_h(f, zeta.value(), z), 0.0))
}

/// The bound for a declared-convex catalog entry; `half_plane` also gets
/// its sharpness sequence.
pub fn check_convex_zeta_bound(
    f: &CatalogEntry,
    zeta: ZetaParam,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    require_convex(f)?;
    let c = convex_zeta_bound_margin(f, zeta, grid)?;
    let mut report = MarginReport::from_components("convex-zeta-bound", CONVEX_BOUND_ANCHOR, vec![c], tolerance)
        .with_param("function", f.label())
        .with_param("zeta", fmt_complex(zeta.value()))
        .with_param("grid", grid.describe())
        .with_note("margin is Re h(zeta, z); the bounded quotient equals h + 1/2");
    if zeta.is_one() {
        report = report.with_note(
            "zeta = 1: the quotient is 0/0 and is read as its continuation z f''/(2 f') + 1/2",
        );
    }
    if matches!(f.kind(), EntryKind::HalfPlane) {
        report = report.with_sharpness(convex_bound_sharpness(zeta, &SHARPNESS_RADII, grid.angles(), tolerance)?);
    }
    Ok(report)
}

/// Grid minima of `Re h` for `z/(1-z)` on growing discs; they equal
/// `1/(1 + r_max) - 1/2` and shrink to 0.
pub fn convex_bound_sharpness(
    zeta: ZetaParam,
    r_max: &[f64],
    angles: usize,
    tolerance: f64,
) -> Result<SharpnessReport> {
    let f = catalog::entry("half_plane")?;
    let mut gaps = Vec::with_capacity(r_max.len());
    for &r in r_max {
        let grid = DiscGrid::standard_up_to(r, angles)?;
        gaps.push(convex_zeta_bound_margin(&f, zeta, &grid)?.min_margin);
    }
    Ok(SharpnessReport::new(f.label(), r_max.to_vec(), gaps, tolerance))
}

/// `Re{z h_zeta'/h_zeta}` against `(1 - |zeta|)/(2(1 + |zeta|))`.
pub fn check_hzeta_starlike(zeta: ZetaParam, grid: &DiscGrid) -> Result<MarginReport> {
    let f = catalog::entry_with_zeta("h_zeta", zeta)?;
    let rho = zeta.modulus().min(1.0);
    let bound = (1.0 - rho) / (2.0 * (1.0 + rho));
    let c = sweep("starlike_order", grid, |z| match starlike_quotient(&f, z) {
        Some((v, tail)) => Sample::Value {
            margin: v.re - bound,
            tail,
        },
        None => Sample::Singular,
    })?;
    Ok(
        MarginReport::from_components("hzeta-starlike", HZETA_ANCHOR, vec![c], default_tolerance(&f))
            .with_param("zeta", fmt_complex(zeta.value()))
            .with_param("order_bound", bound)
            .with_param("grid", grid.describe()),
    )
}
