// The named functions of the test corpus and what the samplers say about
// their declared memberships.

use qdisc::catalog::{self, Membership};
use qdisc::classes::{convex_margin, default_tolerance, starlike_margin, DiscGrid};

pub fn run_example() -> qdisc::Result<()> {
    let grid = DiscGrid::standard();
    for row in catalog::listing() {
        println!("{:<18} {:?} tail={:?}", row.id, row.memberships, row.tail_kind);
    }
    for f in catalog::all_entries() {
        let tol = default_tolerance(&f);
        let star = starlike_margin(&f, 0.0, &grid, tol)?;
        let convex = convex_margin(&f, &grid, tol)?;
        println!(
            "{:<28} starlike min {:>10.4} ({})  convex min {:>10.4} ({})",
            f.label(),
            star.min_margin,
            star.verdict.as_str(),
            convex.min_margin,
            convex.verdict.as_str()
        );
        if f.has(Membership::Convex) {
            assert!(convex.passed(), "{} is declared convex", f.label());
        }
    }
    Ok(())
}

fn main() -> qdisc::Result<()> {
    run_example()
}
