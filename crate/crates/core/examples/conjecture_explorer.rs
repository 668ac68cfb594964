// Searches for convex f outside R(zeta, (1+|zeta|)/2) with complex zeta.
// Real nonnegative zeta must stay consistent; complex rows are data.

use qdisc::catalog;
use qdisc::classes::{DiscGrid, EXACT_TOLERANCE};
use qdisc::theorems::{explore_conjecture, zeta_circle_grid};

pub fn run_example() -> qdisc::Result<()> {
    let zetas = zeta_circle_grid(&[0.3, 0.6, 0.9], 64)?;
    let report = explore_conjecture(&catalog::convex_corpus(), &zetas, &DiscGrid::standard(), EXACT_TOLERANCE)?;
    println!("rows: {}", report.rows.len());
    println!(
        "global min {:.6} for {} at zeta = {}, z = {}",
        report.global_min, report.witness_function, report.witness_zeta, report.witness_z
    );
    println!("counterexample found: {}", report.counterexample_found);
    println!("real slice min {:?}, consistent: {}", report.real_slice_min, report.real_slice_consistent);
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
