// Lower bounds for f'/((1-zeta) d_zeta f), the sharp constant
// (1-|zeta|^2)/(2|1-zeta|^2) and membership in R(q, (1+q)/2).

use num_complex::Complex64;
use qdisc::catalog;
use qdisc::classes::{DiscGrid, EXACT_TOLERANCE};
use qdisc::qcalc::{QParam, ZetaParam};
use qdisc::theorems::{
    check_q_class, check_quotient_bounds, check_quotient_sharp_bound, quotient_sharp_bound, quotient_sharpness,
};

pub fn run_example() -> qdisc::Result<()> {
    let grid = DiscGrid::standard();
    let zetas = [
        ZetaParam::real(0.0)?,
        ZetaParam::real(0.5)?,
        ZetaParam::new(Complex64::new(0.3, 0.4))?,
        ZetaParam::new(Complex64::new(0.0, 1.0))?,
    ];
    for f in catalog::convex_corpus() {
        for &zeta in &zetas {
            let chain = check_quotient_bounds(&f, zeta, &grid, EXACT_TOLERANCE)?;
            println!("{:<12} zeta={:<8} bounds min {:.6} {}", f.label(), zeta.value(), chain.min_margin, chain.verdict.as_str());
        }
        let sharp = check_quotient_sharp_bound(&f, ZetaParam::real(0.5)?, &grid, EXACT_TOLERANCE)?;
        println!("{:<12} sharp-bound gap {:.6}", f.label(), sharp.min_margin);
    }

    let zeta = ZetaParam::real(0.5)?;
    println!("sharp constant at zeta = 0.5: {}", quotient_sharp_bound(zeta));
    let s = quotient_sharpness(zeta, &[0.95, 0.99], 256, EXACT_TOLERANCE)?;
    println!("half_plane gaps at r_max {:?}: {:?}", s.r_max, s.gaps);

    for q in [0.0, 0.25, 0.5, 0.9] {
        let f = catalog::entry("log_convex")?;
        let report = check_q_class(&f, QParam::new(q)?, &grid, EXACT_TOLERANCE)?;
        println!("log_convex in R({q}, {}): margin {:.6}", (1.0 + q) / 2.0, report.min_margin);
    }
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
