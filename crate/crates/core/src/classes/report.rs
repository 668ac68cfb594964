use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::format::{ser_complex, ser_f64, ser_opt_complex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    /// PASS iff `margin > -(tolerance + tail)`; INCONCLUSIVE when the tail is
    /// the infinite sentinel.
    pub fn from_margin(min_margin: f64, tolerance: f64, tail_budget: f64) -> Self {
        if tail_budget.is_infinite() {
            Verdict::Inconclusive
        } else if min_margin > -(tolerance + tail_budget) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// One inequality evaluated over a grid: its smallest margin and where.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MarginComponent {
    pub label: String,
    #[serde(serialize_with = "ser_f64")]
    pub min_margin: f64,
    #[serde(serialize_with = "ser_complex")]
    pub argmin: Complex64,
    #[serde(serialize_with = "ser_f64")]
    pub tail_budget: f64,
    pub evaluated_points: usize,
    pub singular_points: usize,
}

/// Deviation of an identity that should hold exactly (or to rounding).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub check_id: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "ser_f64")]
    pub max_abs_deviation: f64,
    /// Parameter tuple at which the largest deviation occurred.
    pub argmax: String,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl IdentityReport {
    pub fn new(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        max_abs_deviation: f64,
        argmax: impl Into<String>,
        tolerance: f64,
    ) -> Self {
        let verdict = if max_abs_deviation <= tolerance {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self {
            check_id: check_id.into(),
            anchor: anchor.into(),
            params: BTreeMap::new(),
            max_abs_deviation,
            argmax: argmax.into(),
            tolerance,
            verdict,
        }
    }

    /// Folds `(deviation, label)` samples into a report, keeping the first
    /// largest deviation.
    pub fn from_samples(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        samples: impl IntoIterator<Item = (f64, String)>,
        tolerance: f64,
    ) -> Self {
        let mut worst = (0.0f64, String::from("none"));
        for (dev, label) in samples {
            if dev > worst.0 || dev.is_nan() {
                worst = (dev, label);
            }
        }
        Self::new(check_id, anchor, worst.0, worst.1, tolerance)
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Result of one inequality check over a grid.
///
/// `min_margin`, `argmin` and `tail_budget` summarize all components; the
/// verdict follows [`Verdict::from_margin`] and is downgraded to FAIL if any
/// attached identity fails.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MarginReport {
    pub check_id: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    #[serde(serialize_with = "ser_f64")]
    pub min_margin: f64,
    #[serde(serialize_with = "ser_complex")]
    pub argmin: Complex64,
    #[serde(serialize_with = "ser_opt_complex")]
    pub witness_zeta: Option<Complex64>,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    #[serde(serialize_with = "ser_f64")]
    pub tail_budget: f64,
    pub evaluated_points: usize,
    pub singular_points: usize,
    pub components: Vec<MarginComponent>,
    pub identities: Vec<IdentityReport>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharpness: Option<SharpnessReport>,
    pub verdict: Verdict,
}

/// Grid minima of an extremal function as the sampled disc grows.
///
/// A sharp bound shows up as gaps that stay above the bound and shrink
/// strictly as `r_max` increases.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SharpnessReport {
    pub function: String,
    pub r_max: Vec<f64>,
    pub gaps: Vec<f64>,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub strictly_decreasing: bool,
    pub above_bound: bool,
}

impl SharpnessReport {
    pub fn new(function: impl Into<String>, r_max: Vec<f64>, gaps: Vec<f64>, tolerance: f64) -> Self {
        let strictly_decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
        let above_bound = gaps.iter().all(|&g| g > -tolerance);
        Self {
            function: function.into(),
            r_max,
            gaps,
            tolerance,
            strictly_decreasing,
            above_bound,
        }
    }

    pub fn passed(&self) -> bool {
        self.strictly_decreasing && self.above_bound
    }
}

impl MarginReport {
    pub fn from_components(
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        components: Vec<MarginComponent>,
        tolerance: f64,
    ) -> Self {
        assert!(!components.is_empty(), "a report needs at least one component");
        let mut worst = &components[0];
        for c in &components[1..] {
            if c.min_margin < worst.min_margin {
                worst = c;
            }
        }
        let tail_budget = components
            .iter()
            .map(|c| c.tail_budget)
            .fold(0.0, f64::max);
        let mut report = Self {
            check_id: check_id.into(),
            anchor: anchor.into(),
            params: BTreeMap::new(),
            min_margin: worst.min_margin,
            argmin: worst.argmin,
            witness_zeta: None,
            tolerance,
            tail_budget,
            evaluated_points: components.iter().map(|c| c.evaluated_points).sum(),
            singular_points: components.iter().map(|c| c.singular_points).sum(),
            components,
            identities: Vec::new(),
            notes: Vec::new(),
            sharpness: None,
            verdict: Verdict::Pass,
        };
        report.refresh_verdict();
        report
    }

    fn refresh_verdict(&mut self) {
        let margin = Verdict::from_margin(self.min_margin, self.tolerance, self.tail_budget);
        let sharp_failed = self.sharpness.as_ref().is_some_and(|s| !s.passed());
        self.verdict = if sharp_failed || self.identities.iter().any(|i| !i.passed()) {
            Verdict::Fail
        } else {
            margin
        };
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn with_identity(mut self, identity: IdentityReport) -> Self {
        self.identities.push(identity);
        self.refresh_verdict();
        self
    }

    pub fn with_sharpness(mut self, sharpness: SharpnessReport) -> Self {
        self.sharpness = Some(sharpness);
        self.refresh_verdict();
        self
    }

    /// Records the `zeta` at which the reported minimum was found.
    pub fn with_witness_zeta(mut self, zeta: Complex64) -> Self {
        self.witness_zeta = Some(zeta);
        self
    }

    pub fn with_check_id(mut self, check_id: impl Into<String>, anchor: impl Into<String>) -> Self {
        self.check_id = check_id.into();
        self.anchor = anchor.into();
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn component(&self, label: &str) -> Option<&MarginComponent> {
        self.components.iter().find(|c| c.label == label)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(label: &str, m: f64, tail: f64) -> MarginComponent {
        MarginComponent {
            label: label.into(),
            min_margin: m,
            argmin: Complex64::new(m, 0.0),
            tail_budget: tail,
            evaluated_points: 1,
            singular_points: 0,
        }
    }

    #[test]
    fn verdict_rule() {
        assert_eq!(Verdict::from_margin(0.0, 1e-9, 0.0), Verdict::Pass);
        assert_eq!(Verdict::from_margin(-1e-10, 1e-9, 0.0), Verdict::Pass);
        assert_eq!(Verdict::from_margin(-1e-9, 1e-9, 0.0), Verdict::Fail);
        assert_eq!(Verdict::from_margin(-0.5, 1e-9, 0.6), Verdict::Pass);
        assert_eq!(Verdict::from_margin(5.0, 1e-9, f64::INFINITY), Verdict::Inconclusive);
    }

    #[test]
    fn report_summarizes_components() {
        let r = MarginReport::from_components(
            "x",
            "anchor",
            vec![comp("a", 0.3, 0.0), comp("b", 0.1, 1e-3), comp("c", 0.1, 0.0)],
            1e-9,
        );
        assert_eq!(r.min_margin, 0.1);
        assert_eq!(r.tail_budget, 1e-3);
        assert_eq!(r.evaluated_points, 3);
        assert!(r.passed());
        let r = r.with_identity(IdentityReport::new("id", "a", 1.0, "p", 0.5));
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn identity_samples_keep_first_worst() {
        let r = IdentityReport::from_samples(
            "id",
            "a",
            vec![(1e-13, "p1".to_string()), (3e-13, "p2".into()), (3e-13, "p3".into())],
            1e-12,
        );
        assert_eq!(r.argmax, "p2");
        assert!(r.passed());
    }
}
