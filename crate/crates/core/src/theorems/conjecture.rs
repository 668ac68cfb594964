use num_complex::Complex64;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::classes::{r_class_quotient, sweep, DiscGrid, Sample};
use crate::error::{QdiscError, Result};
use crate::format::{ser_complex, ser_f64};
use crate::qcalc::ZetaParam;

use super::require_convex;

pub(crate) const CONJECTURE_ANCHOR: &str =
    "open question: does convex f satisfy Re{f'/d_zeta f} > (1+|zeta|)/2?";

/// Grid minimum of `Re{f'/d_zeta f} - (1+|zeta|)/2` for one `(f, zeta)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureRow {
    pub function: String,
    #[serde(serialize_with = "ser_complex")]
    pub zeta: Complex64,
    #[serde(serialize_with = "ser_f64")]
    pub min_margin: f64,
    #[serde(serialize_with = "ser_complex")]
    pub argmin: Complex64,
    #[serde(serialize_with = "ser_f64")]
    pub tail_budget: f64,
    pub singular_points: usize,
}

impl ConjectureRow {
    /// `zeta` is real and nonnegative, where membership in `R(q, (1+q)/2)`
    /// is known for convex `f`.
    pub fn is_real_slice(&self) -> bool {
        self.zeta.im == 0.0 && self.zeta.re >= 0.0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub check_id: String,
    pub anchor: String,
    pub grid: String,
    pub rows: Vec<ConjectureRow>,
    #[serde(serialize_with = "ser_f64")]
    pub global_min: f64,
    pub witness_function: String,
    #[serde(serialize_with = "ser_complex")]
    pub witness_zeta: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub witness_z: Complex64,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    #[serde(serialize_with = "ser_f64")]
    pub tail_budget: f64,
    pub counterexample_found: bool,
    /// Smallest margin over rows with real nonnegative `zeta`, if any.
    pub real_slice_min: Option<f64>,
    /// No real nonnegative row falls below `-(tolerance + tail)`.
    pub real_slice_consistent: bool,
}

impl ConjectureReport {
    pub fn zeta_grid(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = Vec::new();
        for row in &self.rows {
            if !out.contains(&row.zeta) {
                out.push(row.zeta);
            }
        }
        out
    }

    /// Rows as CSV with a header line; floats use 17 significant digits.
    pub fn to_csv(&self) -> String {
        use crate::format::sig17;
        let mut out = String::from(
            "function,zeta_re,zeta_im,min_margin,argmin_re,argmin_im,tail_budget,singular_points\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.function,
                sig17(r.zeta.re),
                sig17(r.zeta.im),
                sig17(r.min_margin),
                sig17(r.argmin.re),
                sig17(r.argmin.im),
                sig17(r.tail_budget),
                r.singular_points
            ));
        }
        out
    }
}

/// Sweeps `Re{f'/d_zeta f} - (1+|zeta|)/2` over every `(f, zeta)` pair,
/// function-major, and reports the global minimum.
///
/// The outcome for complex `zeta` is data, not an assertion. Rows with real
/// nonnegative `zeta` must not be violated; `real_slice_consistent` records
/// that cross-check.
pub fn explore_conjecture(
    functions: &[CatalogEntry],
    zeta_grid: &[ZetaParam],
    grid: &DiscGrid,
    tolerance: f64,
) -> Result<ConjectureReport> {
    if functions.is_empty() || zeta_grid.is_empty() {
        return Err(QdiscError::EmptyGrid);
    }
    for f in functions {
        require_convex(f)?;
    }
    let mut rows = Vec::with_capacity(functions.len() * zeta_grid.len());
    for f in functions {
        for &zeta in zeta_grid {
            let alpha = (1.0 + zeta.modulus().min(1.0)) / 2.0;
            let c = sweep("conjecture", grid, |z| match r_class_quotient(f, zeta, z) {
                Some((v, tail)) => Sample::Value {
                    margin: v.re - alpha,
                    tail,
                },
                None => Sample::Singular,
            })?;
            rows.push(ConjectureRow {
                function: f.label(),
                zeta: zeta.value(),
                min_margin: c.min_margin,
                argmin: c.argmin,
                tail_budget: c.tail_budget,
                singular_points: c.singular_points,
            });
        }
    }
    let mut worst = &rows[0];
    for row in &rows[1..] {
        if row.min_margin < worst.min_margin {
            worst = row;
        }
    }
    let tail_budget = rows.iter().map(|r| r.tail_budget).fold(0.0, f64::max);
    let violated = |r: &ConjectureRow| r.min_margin < -(tolerance + r.tail_budget);
    let real_slice_min = rows
        .iter()
        .filter(|r| r.is_real_slice())
        .map(|r| r.min_margin)
        .reduce(f64::min);
    let real_slice_consistent = !rows.iter().any(|r| r.is_real_slice() && violated(r));
    Ok(ConjectureReport {
        check_id: "conjecture".into(),
        anchor: CONJECTURE_ANCHOR.into(),
        grid: grid.describe(),
        global_min: worst.min_margin,
        witness_function: worst.function.clone(),
        witness_zeta: worst.zeta,
        witness_z: worst.argmin,
        tolerance,
        tail_budget,
        counterexample_found: worst.min_margin < -(tolerance + tail_budget),
        real_slice_min,
        real_slice_consistent,
        rows,
    })
}
