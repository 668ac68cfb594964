use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::CatalogEntry;
use crate::classes::{sweep, DiscGrid, IdentityReport, MarginReport, Sample, SINGULARITY_GUARD};
use crate::error::{QdiscError, Result};
use crate::function::DiscFunction;

use super::require_convex;

pub(crate) const ANGLE_ANCHOR: &str =
    "e^{ia}/(1-e^{ia}) - e^{ib}/(1-e^{ib}) = (i/2)(cot(a/2) - cot(b/2))";
pub(crate) const ROTATION_ANCHOR: &str =
    "convex f: rotation differences have positive real part and bounded argument";

/// Tolerance for the cotangent identity.
pub const ANGLE_TOLERANCE: f64 = 1e-12;

/// Fixed seed for [`check_angle_identity_samples`].
pub const ANGLE_SAMPLE_SEED: u64 = 0x5eed_a61e;

/// Angles combined pairwise by [`rotation_angle_pairs`].
pub const ROTATION_ANGLES: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 3.0];

/// `e^{it}/(1 - e^{it})`, with `1 - cos t` taken as `2 sin^2(t/2)` so small
/// angles keep their digits.
fn cayley(t: f64) -> Complex64 {
    let half = (t / 2.0).sin();
    let one_minus = Complex64::new(2.0 * half * half, -t.sin());
    Complex64::from_polar(1.0, t) / one_minus
}

/// `|e^{ia}/(1-e^{ia}) - e^{ib}/(1-e^{ib}) - (i/2)(cot(a/2) - cot(b/2))|`.
pub fn angle_identity_deviation(a: f64, b: f64) -> f64 {
    let lhs = cayley(a) - cayley(b);
    let cot = |t: f64| 1.0 / (t / 2.0).tan();
    let rhs = Complex64::new(0.0, 0.5 * (cot(a) - cot(b)));
    (lhs - rhs).norm()
}

fn check_angles(a: f64, b: f64) -> Result<()> {
    if 0.0 < b && b < a && a < PI {
        Ok(())
    } else {
        Err(QdiscError::AngleOutOfRange { a, b })
    }
}

/// The identity at one pair `0 < b < a < pi`.
pub fn check_angle_identity(a: f64, b: f64) -> Result<IdentityReport> {
    check_angles(a, b)?;
    Ok(IdentityReport::new(
        "angle-identity",
        ANGLE_ANCHOR,
        angle_identity_deviation(a, b),
        format!("a={a} b={b}"),
        ANGLE_TOLERANCE,
    )
    .with_param("a", a)
    .with_param("b", b))
}

/// The identity at `samples` pairs drawn uniformly from `0 < b < a < pi`
/// with a fixed seed.
pub fn check_angle_identity_samples(samples: usize, seed: u64) -> Result<IdentityReport> {
    if samples == 0 {
        return Err(QdiscError::InvalidParameter("at least one sample is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(samples);
    while pairs.len() < samples {
        let u: f64 = rng.gen_range(0.0..PI);
        let v: f64 = rng.gen_range(0.0..PI);
        let (a, b) = if u > v { (u, v) } else { (v, u) };
        if check_angles(a, b).is_ok() {
            pairs.push((a, b));
        }
    }
    let deviations = pairs
        .iter()
        .map(|&(a, b)| (angle_identity_deviation(a, b), format!("a={a} b={b}")));
    Ok(
        IdentityReport::from_samples("angle-identity", ANGLE_ANCHOR, deviations, ANGLE_TOLERANCE)
            .with_param("samples", samples)
            .with_param("seed", seed),
    )
}

/// Pairs `b < a` from [`ROTATION_ANGLES`] followed by their mirror images
/// `(-a, -b)`.
pub fn rotation_angle_pairs() -> Vec<(f64, f64)> {
    let mut pairs = Vec::new();
    for (i, &b) in ROTATION_ANGLES.iter().enumerate() {
        for &a in &ROTATION_ANGLES[i + 1..] {
            pairs.push((a, b));
        }
    }
    let mirrored: Vec<_> = pairs.iter().map(|&(a, b)| (-a, -b)).collect();
    pairs.extend(mirrored);
    pairs
}

/// For convex `f` and `0 < b < a < pi` (or the mirror `-pi < a < b < 0`):
///
/// - `Re{(E(a) - E(b)) (f(e^{ib} z) - f(z)) / (f(z) - f(e^{ia} z))} > 0`
///   with `E(t) = e^{it}/(1 - e^{it})`;
/// - the principal argument of `(f(e^{ib} z) - f(z)) / (f(e^{ia} z) - f(z))`
///   lies in `(-pi, 0)`, or in `(0, pi)` for negative angles.
///
/// The second clause is reported as the distance of the argument to the
/// ends of its interval.
pub fn check_rotation_inequality(
    f: &CatalogEntry,
    a: f64,
    b: f64,
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<MarginReport> {
    require_convex(f)?;
    let negative = a < 0.0;
    if negative {
        check_angles(-a, -b)?;
    } else {
        check_angles(a, b)?;
    }
    let ra = Complex64::from_polar(1.0, a);
    let rb = Complex64::from_polar(1.0, b);
    let weight = cayley(a) - cayley(b);
    let ratio = |z: Complex64| -> Option<Complex64> {
        let fz = f.value(z);
        let den = f.value(ra * z) - fz;
        if den.norm() < SINGULARITY_GUARD {
            return None;
        }
        Some((f.value(rb * z) - fz) / den)
    };
    let real_part = sweep("real_part", grid, |z| match ratio(z) {
        // (f(z) - f(e^{ia} z)) = -den, so the product is -weight * ratio
        Some(w) => Sample::exact((-(weight * w)).re),
        None => Sample::Singular,
    })?;
    let argument = sweep("argument_range", grid, |z| match ratio(z) {
        Some(w) => {
            let arg = w.arg();
            let margin = if negative {
                arg.min(PI - arg)
            } else {
                (-arg).min(PI + arg)
            };
            Sample::exact(margin)
        }
        None => Sample::Singular,
    })?;
    Ok(
        MarginReport::from_components(
            "rotation-inequality",
            ROTATION_ANCHOR,
            vec![real_part, argument],
            tolerance,
        )
        .with_param("function", f.label())
        .with_param("a", a)
        .with_param("b", b)
        .with_param("grid", grid.describe())
        .with_note("argument taken on the principal branch at each sampled point"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::classes::EXACT_TOLERANCE;

    #[test]
    fn identity_examples() {
        assert!(check_angle_identity(PI / 2.0, PI / 4.0).unwrap().passed());
        assert!((cayley(PI / 2.0) - Complex64::new(-0.5, 0.5)).norm() < 1e-15);
        assert!(check_angle_identity(2.9, 0.1).unwrap().passed());
        let r = check_angle_identity(1.0 + 1e-6, 1.0).unwrap();
        assert!(r.passed());
        assert!(matches!(
            check_angle_identity(0.5, 1.0),
            Err(QdiscError::AngleOutOfRange { .. })
        ));
        assert!(check_angle_identity(PI, 1.0).is_err());
    }

    #[test]
    fn identity_on_random_pairs_is_reproducible() {
        let r1 = check_angle_identity_samples(1000, ANGLE_SAMPLE_SEED).unwrap();
        let r2 = check_angle_identity_samples(1000, ANGLE_SAMPLE_SEED).unwrap();
        assert!(r1.passed(), "{} {}", r1.max_abs_deviation, r1.argmax);
        assert_eq!(r1, r2);
    }

    #[test]
    fn angle_pairs_cover_both_signs() {
        let pairs = rotation_angle_pairs();
        assert_eq!(pairs.len(), 20);
        assert!(pairs.contains(&(3.0, 0.5)));
        assert!(pairs.contains(&(-3.0, -0.5)));
    }

    #[test]
    fn rotation_inequality_examples() {
        let half = catalog::entry("half_plane").unwrap();
        let grid = DiscGrid::circle(0.5, 8).unwrap();
        let r = check_rotation_inequality(&half, PI / 2.0, PI / 4.0, &grid, EXACT_TOLERANCE).unwrap();
        assert!(r.component("real_part").unwrap().min_margin > 0.0);
        let log = catalog::entry("log_convex").unwrap();
        let r = check_rotation_inequality(&log, 3.0, 0.5, &DiscGrid::standard(), EXACT_TOLERANCE).unwrap();
        assert!(r.passed(), "{}", r.min_margin);
        let r = check_rotation_inequality(&half, -PI / 2.0, -PI / 4.0, &DiscGrid::standard(), EXACT_TOLERANCE)
            .unwrap();
        assert!(r.passed(), "{}", r.min_margin);
        assert!(check_rotation_inequality(&half, 0.5, 1.0, &grid, EXACT_TOLERANCE).is_err());
        let koebe = catalog::entry("koebe").unwrap();
        assert!(check_rotation_inequality(&koebe, 1.0, 0.5, &grid, EXACT_TOLERANCE).is_err());
    }
}
