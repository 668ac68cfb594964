// Re h(zeta, z) > 0 for convex f over the full zeta grid, boundary
// included, and the shrinking gap of the extremal function z/(1-z).

use qdisc::catalog;
use qdisc::classes::{DiscGrid, EXACT_TOLERANCE};
use qdisc::theorems::{
    check_convex_zeta_bound, check_hzeta_starlike, convex_bound_sharpness, default_zeta_grid, SHARPNESS_RADII,
};
use qdisc::qcalc::ZetaParam;

pub fn run_example() -> qdisc::Result<()> {
    let grid = DiscGrid::standard();
    let zetas = default_zeta_grid();
    for f in catalog::convex_corpus() {
        let mut worst = f64::INFINITY;
        for &zeta in &zetas {
            let report = check_convex_zeta_bound(&f, zeta, &grid, EXACT_TOLERANCE)?;
            assert!(report.passed(), "{} fails at zeta = {}", f.label(), zeta.value());
            worst = worst.min(report.min_margin);
        }
        println!("{:<12} min Re h over {} zetas: {worst:.6}", f.label(), zetas.len());
    }

    let sharp = convex_bound_sharpness(ZetaParam::real(0.5)?, &SHARPNESS_RADII, 256, EXACT_TOLERANCE)?;
    println!("half_plane gaps at r_max {:?}: {:?}", sharp.r_max, sharp.gaps);
    println!("strictly decreasing: {}", sharp.strictly_decreasing);

    for zeta in [0.0, 0.5, 1.0] {
        let report = check_hzeta_starlike(ZetaParam::real(zeta)?, &grid)?;
        println!("h_zeta starlike order margin at zeta = {zeta}: {:.6}", report.min_margin);
    }
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
