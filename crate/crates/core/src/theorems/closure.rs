use crate::catalog::{CatalogEntry, Membership};
use crate::classes::{convex_margin, starlike_margin, DiscGrid, MarginReport};
use crate::error::Result;
use crate::function::TruncatedSeries;
use crate::series::{TailBound, TailKind};

use super::{require, require_convex};

pub(crate) const CLOSURE_ANCHOR: &str =
    "K * K is contained in K and K * S*(alpha) in S*(alpha)";

/// Which closure statement to test.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClosureClause {
    /// Both factors convex; the product is tested for convexity.
    Convex,
    /// Second factor starlike of order `alpha`; so is the product.
    Starlike { alpha: f64 },
}

/// Materializes `f * g` to `order` and runs the matching class sampler.
///
/// Product coefficients obey `|a_n b_n| <= 1` when both factors are convex
/// and `<= n` when one is starlike, which sets the tail model.
pub fn check_convolution_closure(
    f: &CatalogEntry,
    g: &CatalogEntry,
    clause: ClosureClause,
    grid: &DiscGrid,
    order: usize,
    tolerance: f64,
) -> Result<MarginReport> {
    require_convex(f)?;
    let tail = match clause {
        ClosureClause::Convex => {
            require(g, Membership::Convex)?;
            TailKind::ConvexCoeffBound
        }
        ClosureClause::Starlike { alpha } => {
            if alpha > 0.0 && alpha <= 0.5 {
                require(g, Membership::StarlikeHalf)?;
            } else {
                require(g, Membership::Starlike)?;
            }
            TailKind::StarlikeCoeffBound
        }
    };
    let product = f.truncate(order)?.hadamard(&g.truncate(order)?);
    let h = TruncatedSeries::new(product, TailBound::new(tail, order));
    let report = match clause {
        ClosureClause::Convex => convex_margin(&h, grid, tolerance)?,
        ClosureClause::Starlike { alpha } => starlike_margin(&h, alpha, grid, tolerance)?,
    };
    let clause_name = match clause {
        ClosureClause::Convex => "convex",
        ClosureClause::Starlike { .. } => "starlike",
    };
    Ok(report
        .with_check_id("convolution-closure", CLOSURE_ANCHOR)
        .with_param("f", f.label())
        .with_param("g", g.label())
        .with_param("clause", clause_name)
        .with_param("order", order))
}
