// Two-sided bounds on f'/d_q f over circles, with equality for z/(1-z) at
// z = -r and z = r, and the positive-real-part function p built from them.

use qdisc::catalog;
use qdisc::classes::{DiscGrid, EXACT_TOLERANCE};
use qdisc::qcalc::QParam;
use qdisc::theorems::{check_herglotz_positivity, check_q_distortion, q_distortion_bounds};

pub fn run_example() -> qdisc::Result<()> {
    for q in [0.3, 0.7] {
        let q = QParam::new(q)?;
        for r in [0.5, 0.9] {
            let (lo, hi) = q_distortion_bounds(q, r);
            println!("q={} r={r}: bounds [{lo:.6}, {hi:.6}]", q.value());
            for f in catalog::convex_corpus() {
                let report = check_q_distortion(&f, q, r, 512)?;
                println!("  {:<12} min clause margin {:.3e} {}", f.label(), report.min_margin, report.verdict.as_str());
            }
        }
    }

    let grid = DiscGrid::standard();
    for f in catalog::convex_corpus() {
        for q in [0.25, 0.5, 0.9] {
            let report = check_herglotz_positivity(&f, QParam::new(q)?, &grid, EXACT_TOLERANCE)?;
            println!("{:<12} q={q}: min Re p = {:.6}", f.label(), report.min_margin);
        }
    }
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
