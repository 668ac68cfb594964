use crate::catalog::CatalogEntry;
use crate::classes::{DiscGrid, IdentityReport};
use crate::error::Result;
use crate::qcalc::{jackson_quotient, zeta_derivative, QParam, ZetaParam};
use crate::series::fmt_complex;

pub(crate) const EQUIVALENCE_ANCHOR: &str =
    "Jackson quotient (f(qz) - f(z))/((q-1)z) equals sum [n]_q a_n z^(n-1)";
pub(crate) const DEGENERATION_ANCHOR: &str = "d_1 f = f' and d_0 f = f(z)/z";

/// Slack allowed on top of the tail budget when comparing the two forms.
pub const EQUIVALENCE_SLACK: f64 = 1e-10;

/// Tolerance for `d_0 f(z) = f(z)/z` on the grid.
pub const DEGENERATION_TOLERANCE: f64 = 1e-12;

/// Compares Jackson's quotient with the coefficient operator on the grid.
///
/// The reported deviation at each point is `|difference| - tail(|z|)`, so
/// PASS means agreement within tail budget plus [`EQUIVALENCE_SLACK`].
/// `|[n]_q a_n|` is bounded by `n` times the entry's coefficient bound,
/// which gives the tail.
pub fn check_operator_equivalence(
    f: &CatalogEntry,
    q: QParam,
    grid: &DiscGrid,
    order: usize,
) -> Result<IdentityReport> {
    let series = f.truncated(order)?;
    let dq = zeta_derivative(series.series(), q.into())?;
    let tail = series.tail_bound();
    let mut samples = Vec::with_capacity(grid.len());
    for z in grid.points() {
        let direct = jackson_quotient(f, q, z)?;
        let coefficient = dq.evaluate(z)?;
        let excess = (direct - coefficient).norm() - tail.derivative_at_radius(z.norm(), 1);
        samples.push((excess.max(0.0), fmt_complex(z)));
    }
    Ok(IdentityReport::from_samples(
        "operator-equivalence",
        EQUIVALENCE_ANCHOR,
        samples,
        EQUIVALENCE_SLACK,
    )
    .with_param("function", f.label())
    .with_param("q", q.value())
    .with_param("order", order)
    .with_param("grid", grid.describe()))
}

/// `zeta = 1` reproduces the derivative coefficientwise (exact) and
/// `zeta = 0` reproduces `f(z)/z` on the grid.
pub fn check_operator_degenerations(
    f: &CatalogEntry,
    grid: &DiscGrid,
    order: usize,
) -> Result<Vec<IdentityReport>> {
    let series = f.truncate(order)?;
    let d1 = zeta_derivative(&series, ZetaParam::real(1.0)?)?;
    let derivative = series.differentiate();
    let coefficient = (0..=d1.order().max(derivative.order()))
        .map(|n| ((d1.coeff(n) - derivative.coeff(n)).norm(), format!("n={n}")));
    let at_one = IdentityReport::from_samples(
        "operator-degenerations/zeta-one",
        DEGENERATION_ANCHOR,
        coefficient,
        0.0,
    )
    .with_param("function", f.label())
    .with_param("order", order);
    let d0 = zeta_derivative(&series, ZetaParam::real(0.0)?)?;
    let mut samples = Vec::with_capacity(grid.len());
    for z in grid.points() {
        let lhs = d0.evaluate(z)?;
        let rhs = series.evaluate(z)? / z;
        samples.push(((lhs - rhs).norm(), fmt_complex(z)));
    }
    let at_zero = IdentityReport::from_samples(
        "operator-degenerations/zeta-zero",
        DEGENERATION_ANCHOR,
        samples,
        DEGENERATION_TOLERANCE,
    )
    .with_param("function", f.label())
    .with_param("order", order)
    .with_param("grid", grid.describe());
    Ok(vec![at_one, at_zero])
}
