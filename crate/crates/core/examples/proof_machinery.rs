// The cotangent identity for Cayley differences and the rotation
// inequality for convex functions, including mirrored angles.

use qdisc::catalog;
use qdisc::classes::{DiscGrid, EXACT_TOLERANCE};
use qdisc::theorems::{
    check_angle_identity, check_angle_identity_samples, check_rotation_inequality, rotation_angle_pairs,
    ANGLE_SAMPLE_SEED,
};

pub fn run_example() -> qdisc::Result<()> {
    let one = check_angle_identity(2.0, 0.5)?;
    println!("angle identity at (2, 0.5): deviation {:.3e}", one.max_abs_deviation);
    let many = check_angle_identity_samples(1000, ANGLE_SAMPLE_SEED)?;
    println!("1000 seeded pairs: max deviation {:.3e} {}", many.max_abs_deviation, many.verdict.as_str());

    let grid = DiscGrid::standard();
    for f in catalog::convex_corpus() {
        let mut worst = f64::INFINITY;
        for (a, b) in rotation_angle_pairs() {
            let report = check_rotation_inequality(&f, a, b, &grid, EXACT_TOLERANCE)?;
            assert!(report.passed(), "{} fails at a={a} b={b}", f.label());
            worst = worst.min(report.min_margin);
        }
        println!("{:<12} rotation inequality min margin {worst:.6}", f.label());
    }
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
