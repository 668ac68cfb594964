use num_complex::Complex64;

use crate::catalog::{self, Membership};
use crate::classes::{sweep, DiscGrid, IdentityReport, MarginComponent, MarginReport, Sample};
use crate::error::Result;
use crate::function::DiscFunction;
use crate::qcalc::{bracket, ZetaParam};
use crate::series::fmt_complex;

use super::convex_bound::convex_zeta_bound_margin;

pub(crate) const STARLIKE_COUNTEREXAMPLE_ANCHOR: &str =
    "the convex zeta bound fails for the starlike z + z^2/2";
pub(crate) const NONUNIVALENT_ANCHOR: &str =
    "z + z^2/(1+zeta) has Re d_zeta f > 0 but is not univalent (univalent iff |a| <= 1/2)";

/// Tolerance for the coefficient identity `[2]_zeta / (1 + zeta) = 1`, which
/// holds only to rounding for complex `zeta`.
pub const COEFFICIENT_TOLERANCE: f64 = 4.0 * f64::EPSILON;

/// Minimizes the convex-bound margin `Re h(zeta, z)` of `z + z^2/2` over
/// every `zeta` sample and grid point.
///
/// A FAIL verdict means a violation was found, which is the expected
/// outcome; `witness_zeta` and `argmin` locate it.
pub fn find_starlike_counterexample(
    grid: &DiscGrid,
    zeta_samples: &[ZetaParam],
    tolerance: f64,
) -> Result<MarginReport> {
    let f = catalog::entry("quad_starlike")?;
    let mut best: Option<(MarginComponent, ZetaParam)> = None;
    for &zeta in zeta_samples {
        let c = convex_zeta_bound_margin(&f, zeta, grid)?;
        if best.as_ref().map_or(true, |(b, _)| c.min_margin < b.min_margin) {
            best = Some((c, zeta));
        }
    }
    let (c, zeta) = best.ok_or(crate::error::QdiscError::EmptyGrid)?;
    let evaluated = grid.len() * zeta_samples.len();
    let mut report = MarginReport::from_components(
        "starlike-counterexample",
        STARLIKE_COUNTEREXAMPLE_ANCHOR,
        vec![c],
        tolerance,
    )
    .with_witness_zeta(zeta.value())
    .with_param("function", f.label())
    .with_param("zeta_samples", zeta_samples.len())
    .with_param("grid", grid.describe())
    .with_note("expected verdict FAIL: a violation of the convex bound exists");
    report.evaluated_points = evaluated;
    Ok(report)
}

/// Confirms the example `f = z + z^2/(1+zeta)`:
///
/// - `d_zeta f = 1 + z` (coefficient identity `[2]_zeta a_2 = 1`);
/// - `Re{1 + z} >= 1 - r_max > 0` on the grid (`re_dzeta`);
/// - `|a_2| > 1/2`, so `f` is not univalent (`a2_exceeds_half`);
/// - `f'` vanishes at `z0 = -(1+zeta)/2` inside the disc
///   (`critical_point_inside`, margin `1 - |z0|`).
///
/// PASS means every clause of the example was confirmed.
pub fn check_nonunivalent_example(zeta: ZetaParam, grid: &DiscGrid, tolerance: f64) -> Result<MarginReport> {
    let f = catalog::entry_with_zeta("quad_nonunivalent", zeta)?;
    let w = zeta.value();
    let a2 = f.coeff(2);
    let re_dzeta = sweep("re_dzeta", grid, |z| Sample::exact(f.zeta_derivative(w, z).re))?;
    let z0 = -(1.0 + w) / 2.0;
    let a2_clause = MarginComponent {
        label: "a2_exceeds_half".into(),
        min_margin: a2.norm() - 0.5,
        argmin: Complex64::new(0.0, 0.0),
        tail_budget: 0.0,
        evaluated_points: 1,
        singular_points: 0,
    };
    let critical = MarginComponent {
        label: "critical_point_inside".into(),
        min_margin: 1.0 - z0.norm(),
        argmin: z0,
        tail_budget: 0.0,
        evaluated_points: 1,
        singular_points: 0,
    };
    let coefficient = IdentityReport::new(
        "nonunivalent-example/coefficient",
        "[2]_zeta a_2 = 1, so d_zeta f = 1 + z",
        (bracket(zeta, 2)? * a2 - 1.0).norm(),
        format!("zeta={}", fmt_complex(w)),
        COEFFICIENT_TOLERANCE,
    );
    let critical_value = IdentityReport::new(
        "nonunivalent-example/critical-point",
        "f'(z0) = 0",
        f.derivative(z0).norm(),
        format!("z0={}", fmt_complex(z0)),
        COEFFICIENT_TOLERANCE,
    );
    let mut report = MarginReport::from_components(
        "nonunivalent-example",
        NONUNIVALENT_ANCHOR,
        vec![re_dzeta, a2_clause, critical],
        tolerance,
    )
    .with_param("zeta", fmt_complex(w))
    .with_param("a2", fmt_complex(a2))
    .with_param("grid", grid.describe())
    .with_identity(coefficient)
    .with_identity(critical_value);
    if f.has(Membership::NotUnivalent) {
        report = report.with_note("declared NOT_UNIVALENT; the clauses confirm it");
    }
    Ok(report)
}
