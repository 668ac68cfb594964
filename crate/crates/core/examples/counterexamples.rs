// The convex zeta bound fails for the starlike z + z^2/2, and
// z + z^2/(1+zeta) has Re d_zeta f > 0 without being univalent.

use num_complex::Complex64;
use qdisc::classes::{DiscGrid, EXACT_TOLERANCE};
use qdisc::qcalc::ZetaParam;
use qdisc::theorems::{check_nonunivalent_example, default_zeta_grid, find_starlike_counterexample};

pub fn run_example() -> qdisc::Result<()> {
    let grid = DiscGrid::standard();
    let witness = find_starlike_counterexample(&grid, &default_zeta_grid(), EXACT_TOLERANCE)?;
    println!(
        "z + z^2/2: min Re h = {:.6} at zeta = {:?}, z = {} ({} points) -> {}",
        witness.min_margin,
        witness.witness_zeta,
        witness.argmin,
        witness.evaluated_points,
        witness.verdict.as_str()
    );

    for zeta in [Complex64::new(0.0, 0.0), Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.9)] {
        let report = check_nonunivalent_example(ZetaParam::new(zeta)?, &grid, EXACT_TOLERANCE)?;
        for c in &report.components {
            println!("  zeta={zeta} {:<22} {:.6}", c.label, c.min_margin);
        }
        println!("  zeta={zeta} -> {}", report.verdict.as_str());
    }
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
