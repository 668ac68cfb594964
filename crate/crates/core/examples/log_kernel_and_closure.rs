// Quotients against the log-kernel convolution and closure of convex and
// starlike functions under Hadamard products.

use qdisc::catalog;
use qdisc::classes::{DiscGrid, SERIES_TOLERANCE, STANDARD_ANGLES};
use qdisc::qcalc::QParam;
use qdisc::theorems::{check_convolution_closure, check_log_kernel_quotient, log_kernel_denominator, ClosureClause};

pub fn run_example() -> qdisc::Result<()> {
    let order = 128;
    let q = QParam::new(0.5)?;
    let half_plane = catalog::entry("half_plane")?;
    let d = log_kernel_denominator(&half_plane, q, order)?;
    println!("D coefficients for z/(1-z), q = 0.5: {:?}", &d.coeffs()[1..5]);

    let grid = DiscGrid::standard();
    for f in catalog::convex_corpus() {
        let report = check_log_kernel_quotient(&f, q, &grid, order, SERIES_TOLERANCE)?;
        println!("{:<12} margin {:.6} tail {:.3e} {}", f.label(), report.min_margin, report.tail_budget, report.verdict.as_str());
    }

    let disc = DiscGrid::standard_up_to(0.9, STANDARD_ANGLES)?;
    let log_convex = catalog::entry("log_convex")?;
    let convex = check_convolution_closure(&log_convex, &log_convex, ClosureClause::Convex, &disc, order, SERIES_TOLERANCE)?;
    println!("log_convex * log_convex convex margin {:.6} {}", convex.min_margin, convex.verdict.as_str());
    let koebe = catalog::entry("koebe")?;
    let star = check_convolution_closure(
        &log_convex,
        &koebe,
        ClosureClause::Starlike { alpha: 0.0 },
        &disc,
        order,
        SERIES_TOLERANCE,
    )?;
    println!("log_convex * koebe starlike margin {:.6} {}", star.min_margin, star.verdict.as_str());
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
