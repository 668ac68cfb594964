// The zeta-derivative as a Hadamard product, checked against the Jackson
// difference quotient and its two degenerate parameters.

use num_complex::Complex64;
use qdisc::classes::DiscGrid;
use qdisc::qcalc::{bracket, jackson_quotient, zeta_derivative, QParam, ZetaParam};
use qdisc::theorems::{check_operator_degenerations, check_operator_equivalence};
use qdisc::{catalog, DiscFunction, PowerSeries};

pub fn run_example() -> qdisc::Result<()> {
    let zeta = ZetaParam::new(Complex64::new(0.3, 0.4))?;
    println!("[n]_zeta for zeta = 0.3+0.4i:");
    for n in 1..=5 {
        println!("  [{n}] = {}", bracket(zeta, n)?);
    }

    let cubic = PowerSeries::from_real(&[0.0, 1.0, 0.5, 0.25], true)?;
    let d = zeta_derivative(&cubic, zeta)?;
    println!("d_zeta (z + z^2/2 + z^3/4) coefficients: {:?}", d.coeffs());

    let f = catalog::entry("log_convex")?;
    let q = QParam::new(0.5)?;
    let z = Complex64::new(0.4, 0.2);
    let jackson = jackson_quotient(&f, q, z)?;
    let closed = f.zeta_derivative(Complex64::new(0.5, 0.0), z);
    println!("Jackson quotient {jackson} vs divided difference {closed}");

    let grid = DiscGrid::uniform(0.8, 40, 260)?;
    for id in ["half_plane", "koebe", "log_convex"] {
        let report = check_operator_equivalence(&catalog::entry(id)?, q, &grid, 128)?;
        println!(
            "{id}: max deviation beyond tail {:.3e} -> {}",
            report.max_abs_deviation,
            report.verdict.as_str()
        );
    }
    for report in check_operator_degenerations(&f, &DiscGrid::standard(), 128)? {
        println!("{}: {:.3e} -> {}", report.anchor, report.max_abs_deviation, report.verdict.as_str());
    }
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
