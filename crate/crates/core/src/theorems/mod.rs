//! One check per inequality, identity and counterexample about the
//! zeta-derivative, plus a search harness for the open `R(zeta, (1+|zeta|)/2)`
//! question.
//!
//! Checks on catalog entries evaluate the closed forms; generic helpers take
//! any [`DiscFunction`](crate::DiscFunction) so truncated series go through
//! the same code with a tail budget.

mod closure;
mod conjecture;
mod convex_bound;
mod corollaries;
mod counterexamples;
mod distortion;
mod operator;
mod proof;

pub use closure::{check_convolution_closure, ClosureClause};
pub use conjecture::{explore_conjecture, ConjectureReport, ConjectureRow};
pub use convex_bound::{
    auxiliary_h, check_convex_zeta_bound, check_hzeta_starlike, convex_bound_direct,
    convex_bound_sharpness, convex_zeta_bound_margin,
};
pub use corollaries::{
    check_herglotz_positivity, check_q_class, check_quotient_bounds, check_quotient_sharp_bound,
    half_plane_quotient, quotient_sharp_bound, quotient_sharpness,
};
pub use counterexamples::{check_nonunivalent_example, find_starlike_counterexample};
pub use distortion::{check_log_kernel_quotient, check_q_distortion, log_kernel_denominator, q_distortion_bounds};
pub use operator::{check_operator_degenerations, check_operator_equivalence};
pub use proof::{
    angle_identity_deviation, check_angle_identity, ANGLE_SAMPLE_SEED, ANGLE_TOLERANCE, check_angle_identity_samples,
    check_rotation_inequality, rotation_angle_pairs,
};

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::catalog::{CatalogEntry, Membership};
use crate::error::{QdiscError, Result};
use crate::qcalc::ZetaParam;

/// Default truncation order for checks that materialize series.
pub const DEFAULT_ORDER: usize = 128;

/// Moduli of the interior part of [`default_zeta_grid`].
pub const INTERIOR_ZETA_MODULI: [f64; 4] = [0.25, 0.5, 0.75, 0.95];

/// `r_max` values used to exhibit sharpness.
pub const SHARPNESS_RADII: [f64; 4] = [0.8, 0.9, 0.95, 0.99];

/// 32 points `e^{2 pi i k / 32}` on the unit circle followed by 16 arguments
/// on each interior modulus in [`INTERIOR_ZETA_MODULI`]: 96 values.
pub fn default_zeta_grid() -> Vec<ZetaParam> {
    let mut grid: Vec<ZetaParam> = (0..32)
        .map(|k| ZetaParam::on_circle(2.0 * PI * k as f64 / 32.0))
        .collect();
    grid.extend(
        zeta_circle_grid(&INTERIOR_ZETA_MODULI, 16).expect("interior moduli lie in the disc"),
    );
    grid
}

/// `rho e^{2 pi i k / args}` for each modulus (modulus-major).
pub fn zeta_circle_grid(moduli: &[f64], args: usize) -> Result<Vec<ZetaParam>> {
    if args == 0 || moduli.is_empty() {
        return Err(QdiscError::EmptyGrid);
    }
    let step = 2.0 * PI / args as f64;
    moduli
        .iter()
        .flat_map(|&rho| (0..args).map(move |k| (rho, step * k as f64)))
        .map(|(rho, theta)| ZetaParam::new(Complex64::from_polar(rho, theta)))
        .collect()
}

pub(crate) fn require_convex(f: &CatalogEntry) -> Result<()> {
    if f.is_convex() {
        Ok(())
    } else {
        Err(QdiscError::NotConvexInput(f.label()))
    }
}

pub(crate) fn require(f: &CatalogEntry, m: Membership) -> Result<()> {
    if f.has(m) {
        Ok(())
    } else {
        Err(QdiscError::MembershipMismatch {
            id: f.label(),
            expected: m.as_str(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_zeta_grid_covers_the_boundary() {
        let grid = default_zeta_grid();
        assert_eq!(grid.len(), 96);
        let boundary = grid.iter().filter(|z| (z.modulus() - 1.0).abs() < 1e-12).count();
        assert_eq!(boundary, 32);
        assert!(grid.iter().any(|z| z.is_one()));
        assert!(zeta_circle_grid(&[1.5], 4).is_err());
    }
}
