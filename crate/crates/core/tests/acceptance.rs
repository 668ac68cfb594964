use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use qdisc::catalog;
use qdisc::classes::{convex_margin, starlike_margin, DiscGrid, Verdict, EXACT_TOLERANCE, STANDARD_ANGLES};
use qdisc::qcalc::{QParam, ZetaParam};
use qdisc::theorems::{
    check_angle_identity_samples, check_convex_zeta_bound, check_herglotz_positivity, check_log_kernel_quotient,
    check_nonunivalent_example, check_operator_degenerations, check_operator_equivalence, check_q_distortion,
    check_rotation_inequality, default_zeta_grid, explore_conjecture, find_starlike_counterexample,
    quotient_sharp_bound, quotient_sharpness, rotation_angle_pairs, zeta_circle_grid, ANGLE_SAMPLE_SEED,
    SHARPNESS_RADII,
};
use qdisc::{Result, TailBound, TailKind, TruncatedSeries};

const ORDER: usize = 128;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { passed, detail })
}

fn q(v: f64) -> QParam {
    QParam::new(v).expect("q in [0, 1)")
}

fn operator_equivalence() -> Result<Outcome> {
    let grid = DiscGrid::uniform(0.8, 40, 260)?;
    let mut worst = 0.0f64;
    let mut ok = grid.len() == 10_400;
    for f in catalog::all_entries() {
        for v in [0.0, 0.25, 0.5, 0.9] {
            let r = check_operator_equivalence(&f, q(v), &grid, ORDER)?;
            ok &= r.passed();
            worst = worst.max(r.max_abs_deviation);
        }
    }
    outcome(ok, format!("{} points, max deviation beyond tail {worst:.2e}", grid.len()))
}

fn degenerations() -> Result<Outcome> {
    let mut ok = true;
    let (mut one, mut zero) = (0.0f64, 0.0f64);
    for f in catalog::all_entries() {
        let r = check_operator_degenerations(&f, &DiscGrid::standard(), ORDER)?;
        ok &= r[0].max_abs_deviation == 0.0 && r[1].max_abs_deviation <= 1e-12;
        one = one.max(r[0].max_abs_deviation);
        zero = zero.max(r[1].max_abs_deviation);
    }
    outcome(ok, format!("zeta = 1 coefficient deviation {one:.1e}, zeta = 0 point deviation {zero:.2e}"))
}

fn convex_zeta_bound() -> Result<Outcome> {
    let grid = DiscGrid::standard();
    let zetas = default_zeta_grid();
    let boundary = zetas.iter().filter(|z| (z.modulus() - 1.0).abs() < 1e-12).count();
    let mut ok = zetas.len() == 96 && boundary == 32;
    let mut worst = f64::INFINITY;
    let mut sharp = true;
    for f in catalog::convex_corpus() {
        for &zeta in &zetas {
            let r = check_convex_zeta_bound(&f, zeta, &grid, EXACT_TOLERANCE)?;
            ok &= r.min_margin > -1e-9;
            worst = worst.min(r.min_margin);
            if let Some(s) = &r.sharpness {
                // Grid minima of Re h for z/(1-z) are 1/(1+r_max) - 1/2.
                let closed = s.r_max.iter().map(|r| 1.0 / (1.0 + r) - 0.5);
                let near = s.gaps.iter().zip(closed).all(|(g, c)| (g - c).abs() < 1e-12);
                sharp &= s.passed() && s.r_max == SHARPNESS_RADII && near;
            }
        }
    }
    outcome(
        ok && sharp,
        format!("{} zetas ({boundary} on the circle), min Re h {worst:.4e}, half_plane sharp: {sharp}", zetas.len()),
    )
}

fn quotient_sharpness_gap() -> Result<Outcome> {
    let zeta = ZetaParam::real(0.5)?;
    let s = quotient_sharpness(zeta, &[0.95, 0.99], STANDARD_ANGLES, EXACT_TOLERANCE)?;
    let bound = quotient_sharp_bound(zeta);
    // For z/(1-z) the minimum sits at z = -r_max; the bound is (1-1/4)/(2/4).
    let oracle = |r: f64| (1.0 + 0.5 * r) / ((1.0 - 0.5) * (1.0 + r)) - 0.75 / 0.5;
    let (g95, g99) = (s.gaps[0], s.gaps[1]);
    let ok = (bound - 1.5).abs() < 1e-15
        && g95 > 0.0
        && g95 <= 0.02
        && g99 > 0.0
        && g99 <= 0.004
        && (g95 - oracle(0.95)).abs() < 1e-12
        && (g99 - oracle(0.99)).abs() < 1e-12;
    outcome(ok, format!("gap {g95:.6} at r_max 0.95, {g99:.6} at r_max 0.99"))
}

fn distortion_attainment() -> Result<Outcome> {
    let mut ok = true;
    let mut worst = f64::INFINITY;
    let mut attain = 0.0f64;
    let f = catalog::entry("half_plane")?;
    for v in [0.3, 0.7] {
        for r in [0.5, 0.9] {
            let rep = check_q_distortion(&f, q(v), r, 512)?;
            let id = &rep.identities[0];
            ok &= rep.evaluated_points == 4 * 512 && rep.min_margin >= -1e-12 && id.max_abs_deviation <= 1e-12;
            worst = worst.min(rep.min_margin);
            attain = attain.max(id.max_abs_deviation);
        }
    }
    outcome(ok, format!("min clause margin {worst:.2e}, attainment deviation {attain:.2e}"))
}

fn herglotz() -> Result<Outcome> {
    let grid = DiscGrid::standard();
    let mut ok = true;
    let mut worst = f64::INFINITY;
    let mut identity = 0.0f64;
    for f in catalog::convex_corpus() {
        for v in [0.25, 0.5, 0.9] {
            let r = check_herglotz_positivity(&f, q(v), &grid, EXACT_TOLERANCE)?;
            ok &= r.min_margin > -1e-9;
            worst = worst.min(r.min_margin);
            for id in r.identities.iter().filter(|i| i.check_id.ends_with("half-plane")) {
                ok &= id.max_abs_deviation <= 1e-10;
                identity = identity.max(id.max_abs_deviation);
            }
        }
    }
    let half = check_herglotz_positivity(&catalog::entry("half_plane")?, q(0.5), &grid, EXACT_TOLERANCE)?;
    ok &= half.identities.iter().any(|i| i.check_id.ends_with("half-plane"));
    outcome(ok, format!("min Re p {worst:.4e}, half_plane p - (1+z)/(1-z) {identity:.2e}"))
}

fn log_kernel() -> Result<Outcome> {
    let grid = DiscGrid::standard();
    let mut ok = true;
    let mut worst = f64::INFINITY;
    for f in catalog::convex_corpus() {
        for v in [0.25, 0.5, 0.9] {
            let r = check_log_kernel_quotient(&f, q(v), &grid, ORDER, 1e-6)?;
            ok &= r.min_margin > -(r.tail_budget + 1e-6) && r.identities.iter().all(|i| i.max_abs_deviation == 0.0);
            worst = worst.min(r.min_margin);
        }
    }
    outcome(ok, format!("N = {ORDER}, min margin {worst:.4e}, coefficient identity exact"))
}

fn closure() -> Result<Outcome> {
    let grid = DiscGrid::standard_up_to(0.9, STANDARD_ANGLES)?;
    let log = catalog::entry("log_convex")?;
    let koebe = catalog::entry("koebe")?;
    let square = log.truncate(ORDER)?.hadamard(&log.truncate(ORDER)?);
    let square = TruncatedSeries::new(square, TailBound::new(TailKind::ConvexCoeffBound, ORDER));
    let convex = convex_margin(&square, &grid, 1e-6)?;
    let ones = log.truncate(ORDER)?.hadamard(&koebe.truncate(ORDER)?);
    let max_ulps = ones.coeffs()[1..]
        .iter()
        .map(|c| ((c.re - 1.0).abs() / f64::EPSILON).ceil() as u32 + if c.im == 0.0 { 0 } else { u32::MAX / 2 })
        .max()
        .unwrap_or(0);
    let exact = ones.coeffs()[1..].iter().filter(|c| **c == Complex64::new(1.0, 0.0)).count();
    let half_plane = TruncatedSeries::new(ones, TailBound::new(TailKind::StarlikeCoeffBound, ORDER));
    let star = starlike_margin(&half_plane, 0.0, &grid, 1e-6)?;
    let ok = convex.min_margin > -(convex.tail_budget + 1e-6) && max_ulps <= 1 && star.verdict == Verdict::Pass;
    outcome(
        ok,
        format!(
            "convex margin {:.4}, ones {exact}/{ORDER} bitwise and all within {max_ulps} ulp, starlike margin {:.4}",
            convex.min_margin, star.min_margin
        ),
    )
}

fn counterexamples() -> Result<Outcome> {
    let grid = DiscGrid::standard();
    let w = find_starlike_counterexample(&grid, &default_zeta_grid(), EXACT_TOLERANCE)?;
    let mut ok = w.min_margin < -1e-3 && w.verdict == Verdict::Fail;
    for zeta in [Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.9)] {
        let r = check_nonunivalent_example(ZetaParam::new(zeta)?, &grid, EXACT_TOLERANCE)?;
        let re = r.component("re_dzeta").map_or(f64::NAN, |c| c.min_margin);
        let a2 = r.component("a2_exceeds_half").map_or(f64::NAN, |c| c.min_margin);
        let crit = r.component("critical_point_inside").map_or(f64::NAN, |c| c.min_margin);
        // d_zeta f = 1 + z, so the grid minimum of Re is 1 - r_max.
        ok &= r.verdict == Verdict::Pass && a2 > 0.0 && crit > 0.0 && (re - (1.0 - grid.r_max())).abs() < 1e-12;
    }
    outcome(
        ok,
        format!(
            "witness margin {:.6} at zeta {}, z {}; quadratic family confirmed for 0, 0.5, 0.9i",
            w.min_margin,
            w.witness_zeta.unwrap_or_default(),
            w.argmin
        ),
    )
}

fn proof_machinery() -> Result<Outcome> {
    let angles = check_angle_identity_samples(1000, ANGLE_SAMPLE_SEED)?;
    let grid = DiscGrid::standard();
    let pairs = rotation_angle_pairs();
    let mirrored = pairs.iter().any(|&(a, b)| a < 0.0 && b < 0.0);
    let mut ok = angles.max_abs_deviation <= 1e-12 && mirrored;
    let (mut worst, mut arg) = (f64::INFINITY, f64::INFINITY);
    for f in catalog::convex_corpus() {
        for &(a, b) in &pairs {
            let r = check_rotation_inequality(&f, a, b, &grid, EXACT_TOLERANCE)?;
            let re = r.component("real_part").expect("real part clause");
            let range = r.component("argument_range").expect("argument clause");
            ok &= re.min_margin > -1e-9 && range.min_margin > 0.0 && range.singular_points == 0;
            worst = worst.min(re.min_margin);
            arg = arg.min(range.min_margin);
        }
    }
    outcome(
        ok,
        format!(
            "angle deviation {:.2e}; {} pairs, rotation margin {worst:.4e}, argument distance {arg:.4e}",
            angles.max_abs_deviation,
            pairs.len()
        ),
    )
}

fn conjecture_explorer() -> Result<Outcome> {
    let start = Instant::now();
    let zetas = zeta_circle_grid(&[0.3, 0.6, 0.9], 64)?;
    let r = explore_conjecture(&catalog::convex_corpus(), &zetas, &DiscGrid::standard(), EXACT_TOLERANCE)?;
    let elapsed = start.elapsed();
    outcome(
        elapsed < Duration::from_secs(30) && r.real_slice_consistent && r.real_slice_min.is_some(),
        format!(
            "{:.1} s, real slice min {:.4e}; complex zeta global min {:.4} ({} at zeta {})",
            elapsed.as_secs_f64(),
            r.real_slice_min.unwrap_or(f64::NAN),
            r.global_min,
            r.witness_function,
            r.witness_zeta
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 11] = [
        ("operator equivalence", operator_equivalence),
        ("degenerations", degenerations),
        ("convex zeta bound and sharpness", convex_zeta_bound),
        ("sharp quotient bound gap", quotient_sharpness_gap),
        ("distortion attainment", distortion_attainment),
        ("Herglotz positivity", herglotz),
        ("log-kernel quotient", log_kernel),
        ("convolution closure", closure),
        ("counterexamples", counterexamples),
        ("proof machinery", proof_machinery),
        ("conjecture explorer", conjecture_explorer),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (passed, detail) = match run() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !passed {
            failures += 1;
        }
        println!("[{}] {:>2} {name}: {detail}", if passed { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("{} of {} criteria passed in {:.1} s", criteria.len() - failures, criteria.len(), start.elapsed().as_secs_f64());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
