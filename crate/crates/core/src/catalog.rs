//! Named analytic functions used as the test corpus.
//!
//! Each entry knows its coefficient rule, closed forms for `f`, `f'`, `f''`
//! and its declared class memberships. Memberships are metadata: the
//! samplers in [`crate::classes`] validate them, they are not derived.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{QdiscError, Result};
use crate::function::{confluent_difference, divided_difference, DiscFunction, TruncatedSeries};
use crate::qcalc::ZetaParam;
use crate::series::{fmt_complex, PowerSeries, TailBound, TailKind};

/// Identifiers accepted by [`entry`].
pub const ENTRY_IDS: [&str; 7] = [
    "half_plane",
    "koebe",
    "h_zeta",
    "quad_starlike",
    "quad_nonunivalent",
    "log_convex",
    "strip_convex",
];

/// Entries declared convex.
pub const CONVEX_IDS: [&str; 3] = ["half_plane", "log_convex", "strip_convex"];

const DEFAULT_H_ZETA: f64 = 0.5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Membership {
    Convex,
    Starlike,
    StarlikeHalf,
    NotUnivalent,
    NotConvex,
}

impl Membership {
    pub fn as_str(self) -> &'static str {
        match self {
            Membership::Convex => "CONVEX",
            Membership::Starlike => "STARLIKE",
            Membership::StarlikeHalf => "STARLIKE_HALF",
            Membership::NotUnivalent => "NOT_UNIVALENT",
            Membership::NotConvex => "NOT_CONVEX",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EntryKind {
    /// `z / (1 - z)`, coefficients 1.
    HalfPlane,
    /// `z / (1 - z)^2`, coefficients `n`.
    Koebe,
    /// `z / ((1 - zeta z)(1 - z))`, coefficients `[n]_zeta`.
    HZeta(ZetaParam),
    /// `z + z^2 / 2`.
    QuadStarlike,
    /// `z + z^2 / (1 + zeta)` with `|zeta| < 1`.
    QuadNonunivalent(ZetaParam),
    /// `-log(1 - z)`, coefficients `1/n`.
    LogConvex,
    /// `atanh z = log((1 + z)/(1 - z)) / 2`, odd coefficients `1/n`.
    StripConvex,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    id: &'static str,
    kind: EntryKind,
    memberships: Vec<Membership>,
    tail_kind: TailKind,
}

/// Looks up an entry; parametrized entries get their default `zeta`
/// (0.5 for `h_zeta`, 0 for `quad_nonunivalent`).
pub fn entry(id: &str) -> Result<CatalogEntry> {
    match id {
        "h_zeta" => entry_with_zeta(id, ZetaParam::real(DEFAULT_H_ZETA)?),
        "quad_nonunivalent" => entry_with_zeta(id, ZetaParam::real(0.0)?),
        _ => build(id, None),
    }
}

/// Looks up a `zeta`-parametrized entry (`h_zeta` or `quad_nonunivalent`).
pub fn entry_with_zeta(id: &str, zeta: ZetaParam) -> Result<CatalogEntry> {
    build(id, Some(zeta))
}

fn build(id: &str, zeta: Option<ZetaParam>) -> Result<CatalogEntry> {
    use Membership::*;
    let (id, kind, memberships, tail_kind) = match (id, zeta) {
        ("half_plane", None) => (
            "half_plane",
            EntryKind::HalfPlane,
            vec![Convex, Starlike, StarlikeHalf],
            TailKind::ConvexCoeffBound,
        ),
        ("koebe", None) => (
            "koebe",
            EntryKind::Koebe,
            vec![Starlike, NotConvex],
            TailKind::StarlikeCoeffBound,
        ),
        ("h_zeta", Some(z)) => (
            "h_zeta",
            EntryKind::HZeta(z),
            vec![Starlike],
            TailKind::StarlikeCoeffBound,
        ),
        ("quad_starlike", None) => (
            "quad_starlike",
            EntryKind::QuadStarlike,
            vec![Starlike, NotConvex],
            TailKind::ExactClosedForm,
        ),
        ("quad_nonunivalent", Some(z)) => {
            if z.modulus() >= 1.0 {
                return Err(QdiscError::ZetaOnBoundary(fmt_complex(z.value())));
            }
            (
                "quad_nonunivalent",
                EntryKind::QuadNonunivalent(z),
                vec![NotUnivalent, NotConvex],
                TailKind::ExactClosedForm,
            )
        }
        ("log_convex", None) => (
            "log_convex",
            EntryKind::LogConvex,
            vec![Convex, Starlike, StarlikeHalf],
            TailKind::ConvexCoeffBound,
        ),
        ("strip_convex", None) => (
            "strip_convex",
            EntryKind::StripConvex,
            vec![Convex, Starlike, StarlikeHalf],
            TailKind::ConvexCoeffBound,
        ),
        (id, Some(_)) if ENTRY_IDS.contains(&id) => {
            return Err(QdiscError::InvalidParameter(format!(
                "`{id}` takes no zeta parameter"
            )))
        }
        (id, _) => return Err(QdiscError::UnknownEntry(id.to_string())),
    };
    Ok(CatalogEntry {
        id,
        kind,
        memberships,
        tail_kind,
    })
}

/// The convex corpus: `half_plane`, `log_convex`, `strip_convex`.
pub fn convex_corpus() -> Vec<CatalogEntry> {
    CONVEX_IDS.iter().map(|id| entry(id).expect("registered")).collect()
}

/// Every registered entry with default parameters.
pub fn all_entries() -> Vec<CatalogEntry> {
    ENTRY_IDS.iter().map(|id| entry(id).expect("registered")).collect()
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `log(1 - z)` with the modulus part computed through `ln_1p`.
fn ln_one_minus(z: Complex64) -> Complex64 {
    let u = z.re * z.re + z.im * z.im - 2.0 * z.re;
    Complex64::new(0.5 * u.ln_1p(), (-z.im).atan2(1.0 - z.re))
}

impl CatalogEntry {
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn kind(&self) -> EntryKind {
        self.kind
    }

    pub fn zeta(&self) -> Option<ZetaParam> {
        match self.kind {
            EntryKind::HZeta(z) | EntryKind::QuadNonunivalent(z) => Some(z),
            _ => None,
        }
    }

    /// Id with its parameter, e.g. `h_zeta(0.5+0i)`.
    pub fn label(&self) -> String {
        match self.zeta() {
            Some(z) => format!("{}({})", self.id, fmt_complex(z.value())),
            None => self.id.to_string(),
        }
    }

    pub fn memberships(&self) -> &[Membership] {
        &self.memberships
    }

    pub fn has(&self, m: Membership) -> bool {
        self.memberships.contains(&m)
    }

    pub fn is_convex(&self) -> bool {
        self.has(Membership::Convex)
    }

    pub fn tail_kind(&self) -> TailKind {
        self.tail_kind
    }

    /// Entries added to enrich the corpus rather than taken from the
    /// operator's own examples.
    pub fn is_corpus_enrichment(&self) -> bool {
        matches!(self.kind, EntryKind::StripConvex)
    }

    /// True when `d_zeta f` has its own closed form rather than going
    /// through the generic divided difference.
    pub fn has_exact_dzeta(&self) -> bool {
        matches!(
            self.kind,
            EntryKind::HalfPlane | EntryKind::QuadStarlike | EntryKind::QuadNonunivalent(_)
        )
    }

    /// Coefficient `a_n`.
    pub fn coeff(&self, n: usize) -> Complex64 {
        let nf = n as f64;
        if n == 0 {
            return Complex64::default();
        }
        if n == 1 {
            return one();
        }
        match self.kind {
            EntryKind::HalfPlane => one(),
            EntryKind::Koebe => Complex64::new(nf, 0.0),
            EntryKind::HZeta(z) => {
                let zeta = z.value();
                (0..n).fold(Complex64::default(), |acc, _| acc * zeta + 1.0)
            }
            EntryKind::QuadStarlike => {
                if n == 2 {
                    Complex64::new(0.5, 0.0)
                } else {
                    Complex64::default()
                }
            }
            EntryKind::QuadNonunivalent(z) => {
                if n == 2 {
                    one() / (one() + z.value())
                } else {
                    Complex64::default()
                }
            }
            EntryKind::LogConvex => Complex64::new(1.0 / nf, 0.0),
            EntryKind::StripConvex => {
                if n % 2 == 1 {
                    Complex64::new(1.0 / nf, 0.0)
                } else {
                    Complex64::default()
                }
            }
        }
    }

    /// `a_0 .. a_order` as a normalized series.
    pub fn truncate(&self, order: usize) -> Result<PowerSeries> {
        if order == 0 {
            return Err(QdiscError::InvalidParameter(
                "truncation order must be at least 1".into(),
            ));
        }
        let coeffs = match self.kind {
            EntryKind::HZeta(z) => {
                let mut c = vec![Complex64::default()];
                c.extend(crate::qcalc::brackets(z, order));
                c
            }
            _ => (0..=order).map(|n| self.coeff(n)).collect(),
        };
        PowerSeries::new(coeffs, true)
    }

    /// The truncation as a point evaluator carrying this entry's tail model.
    pub fn truncated(&self, order: usize) -> Result<TruncatedSeries> {
        let tail = if self.is_polynomial() && order >= 2 {
            TailKind::ExactClosedForm
        } else {
            self.tail_kind
        };
        Ok(TruncatedSeries::new(
            self.truncate(order)?,
            TailBound::new(tail, order),
        ))
    }

    fn is_polynomial(&self) -> bool {
        matches!(self.kind, EntryKind::QuadStarlike | EntryKind::QuadNonunivalent(_))
    }

    fn a2(&self) -> Complex64 {
        self.coeff(2)
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl DiscFunction for CatalogEntry {
    fn value(&self, z: Complex64) -> Complex64 {
        match self.kind {
            EntryKind::HalfPlane => z / (1.0 - z),
            EntryKind::Koebe => z / ((1.0 - z) * (1.0 - z)),
            EntryKind::HZeta(zeta) => z / ((1.0 - z) * (1.0 - zeta.value() * z)),
            EntryKind::QuadStarlike | EntryKind::QuadNonunivalent(_) => z + self.a2() * z * z,
            EntryKind::LogConvex => -ln_one_minus(z),
            EntryKind::StripConvex => (ln_one_minus(-z) - ln_one_minus(z)) * 0.5,
        }
    }

    fn derivative(&self, z: Complex64) -> Complex64 {
        match self.kind {
            EntryKind::HalfPlane => 1.0 / ((1.0 - z) * (1.0 - z)),
            EntryKind::Koebe => (1.0 + z) / (1.0 - z).powi(3),
            EntryKind::HZeta(zeta) => {
                let zeta = zeta.value();
                let u = 1.0 / (1.0 - z);
                let v = 1.0 / (1.0 - zeta * z);
                u * v * (1.0 + z * u + zeta * z * v)
            }
            EntryKind::QuadStarlike | EntryKind::QuadNonunivalent(_) => 1.0 + self.a2() * z * 2.0,
            EntryKind::LogConvex => 1.0 / (1.0 - z),
            EntryKind::StripConvex => 1.0 / (1.0 - z * z),
        }
    }

    fn second_derivative(&self, z: Complex64) -> Complex64 {
        match self.kind {
            EntryKind::HalfPlane => 2.0 / (1.0 - z).powi(3),
            EntryKind::Koebe => (4.0 + z * 2.0) / (1.0 - z).powi(4),
            EntryKind::HZeta(zeta) => {
                let zeta = zeta.value();
                let u = 1.0 / (1.0 - z);
                let v = 1.0 / (1.0 - zeta * z);
                let s = 1.0 + z * u + zeta * z * v;
                let ds = u * (1.0 + z * u) + zeta * v * (1.0 + zeta * z * v);
                u * v * ((u + zeta * v) * s + ds)
            }
            EntryKind::QuadStarlike | EntryKind::QuadNonunivalent(_) => self.a2() * 2.0,
            EntryKind::LogConvex => 1.0 / ((1.0 - z) * (1.0 - z)),
            EntryKind::StripConvex => {
                let w = 1.0 - z * z;
                z * 2.0 / (w * w)
            }
        }
    }

    fn zeta_derivative(&self, zeta: Complex64, z: Complex64) -> Complex64 {
        match self.kind {
            EntryKind::HalfPlane => 1.0 / ((1.0 - z) * (1.0 - zeta * z)),
            // [2]_zeta = 1 + zeta
            EntryKind::QuadStarlike | EntryKind::QuadNonunivalent(_) => {
                1.0 + (1.0 + zeta) * self.a2() * z
            }
            _ => divided_difference(self, z, zeta * z),
        }
    }

    fn zeta_second_difference(&self, zeta: Complex64, z: Complex64) -> Complex64 {
        match self.kind {
            EntryKind::HalfPlane => 1.0 / ((1.0 - z) * (1.0 - z) * (1.0 - zeta * z)),
            // c_2(zeta) = 1
            EntryKind::QuadStarlike | EntryKind::QuadNonunivalent(_) => self.a2(),
            _ => confluent_difference(self, z, zeta * z),
        }
    }

    fn is_normalized(&self) -> bool {
        true
    }
}

/// One row of the catalog listing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogListing {
    pub id: String,
    pub memberships: Vec<Membership>,
    pub tail_kind: TailKind,
    pub exact_eval: bool,
    pub exact_dzeta: &'static str,
    pub parameter: Option<String>,
    pub corpus_enrichment: bool,
}

pub fn listing() -> Vec<CatalogListing> {
    all_entries()
        .into_iter()
        .map(|e| CatalogListing {
            id: e.id().to_string(),
            memberships: e.memberships().to_vec(),
            tail_kind: e.tail_kind(),
            exact_eval: true,
            exact_dzeta: if e.has_exact_dzeta() {
                "closed-form"
            } else {
                "divided-difference"
            },
            parameter: e.zeta().map(|_| "zeta".to_string()),
            corpus_enrichment: e.is_corpus_enrichment(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{convex_margin, starlike_margin, DiscGrid, Verdict};
    use crate::qcalc::zeta_derivative;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coefficient_rules() {
        assert_eq!(entry("half_plane").unwrap().coeff(7), c(1.0, 0.0));
        assert_eq!(entry("koebe").unwrap().coeff(7), c(7.0, 0.0));
        let q = entry_with_zeta("quad_nonunivalent", ZetaParam::real(0.0).unwrap()).unwrap();
        assert_eq!(q.coeff(2), c(1.0, 0.0));
        assert!(q.coeff(2).norm() > 0.5);
        for e in all_entries() {
            assert_eq!(e.coeff(0), c(0.0, 0.0), "{}", e.id());
            assert_eq!(e.coeff(1), c(1.0, 0.0), "{}", e.id());
        }
    }

    #[test]
    fn truncation_examples() {
        let t = entry("half_plane").unwrap().truncate(3).unwrap();
        assert_eq!(t.coeffs(), &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]);
        let t = entry("log_convex").unwrap().truncate(4).unwrap();
        assert_eq!(
            t.coeffs(),
            &[c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(1.0 / 3.0, 0.0), c(0.25, 0.0)]
        );
        let h = entry_with_zeta("h_zeta", ZetaParam::new(c(0.0, 1.0)).unwrap()).unwrap();
        let t = h.truncate(3).unwrap();
        assert_eq!(t.coeffs(), &[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]);
        assert!(t.is_normalized());
    }

    #[test]
    fn lookup_errors() {
        assert_eq!(entry("nope").unwrap_err(), QdiscError::UnknownEntry("nope".into()));
        assert!(matches!(
            entry_with_zeta("quad_nonunivalent", ZetaParam::real(1.0).unwrap()),
            Err(QdiscError::ZetaOnBoundary(_))
        ));
        assert!(entry_with_zeta("koebe", ZetaParam::real(0.5).unwrap()).is_err());
    }

    #[test]
    fn closed_forms_match_truncations_within_tail() {
        let grid = DiscGrid::standard();
        let order = 128;
        let mut entries = all_entries();
        entries.push(entry_with_zeta("h_zeta", ZetaParam::new(c(-0.3, 0.9)).unwrap()).unwrap());
        entries.push(entry_with_zeta("h_zeta", ZetaParam::real(1.0).unwrap()).unwrap());
        entries.push(entry_with_zeta("quad_nonunivalent", ZetaParam::new(c(0.0, 0.9)).unwrap()).unwrap());
        for e in entries {
            let s = e.truncated(order).unwrap();
            for z in grid.points() {
                let tail = s.tail(z.norm());
                let scale = 1e-13 * (1.0 + e.value(z).norm());
                assert!(
                    (s.value(z) - e.value(z)).norm() <= tail.value + scale,
                    "{} f at {z}",
                    e.label()
                );
                let scale = 1e-12 * (1.0 + e.derivative(z).norm());
                assert!(
                    (s.derivative(z) - e.derivative(z)).norm() <= tail.derivative + scale,
                    "{} f' at {z}",
                    e.label()
                );
                let scale = 1e-11 * (1.0 + e.second_derivative(z).norm());
                assert!(
                    (s.second_derivative(z) - e.second_derivative(z)).norm()
                        <= tail.second_derivative + scale,
                    "{} f'' at {z}",
                    e.label()
                );
            }
        }
    }

    #[test]
    fn half_plane_zeta_derivative_matches_the_operator() {
        let e = entry("half_plane").unwrap();
        let series = e.truncate(128).unwrap();
        let tail = TailBound::new(TailKind::ConvexCoeffBound, 128);
        for zeta in [c(0.0, 0.0), c(0.5, 0.0), c(-0.6, 0.8), c(0.3, 0.4), c(1.0, 0.0)] {
            let d = zeta_derivative(&series, ZetaParam::new(zeta).unwrap()).unwrap();
            for z in DiscGrid::standard().points() {
                let exact = e.zeta_derivative(zeta, z);
                let budget = tail.derivative_at_radius(z.norm(), 1);
                assert!((d.horner(z) - exact).norm() <= budget + 1e-12 * exact.norm());
                // the generic route agrees with the closed form
                let generic = divided_difference(&e, z, zeta * z);
                assert!((generic - exact).norm() <= 1e-12 * exact.norm());
            }
        }
    }

    #[test]
    fn declared_memberships_survive_the_samplers() {
        let grid = DiscGrid::standard();
        for e in all_entries() {
            if e.has(Membership::Convex) {
                let r = convex_margin(&e, &grid, 1e-9).unwrap();
                assert!(r.passed(), "{} convex: {}", e.id(), r.min_margin);
                assert_eq!(r.singular_points, 0);
            }
            if e.has(Membership::Starlike) {
                let r = starlike_margin(&e, 0.0, &grid, 1e-9).unwrap();
                assert!(r.passed(), "{} starlike: {}", e.id(), r.min_margin);
            }
            if e.has(Membership::StarlikeHalf) {
                let r = starlike_margin(&e, 0.5, &grid, 1e-9).unwrap();
                assert!(r.passed(), "{} starlike-1/2: {}", e.id(), r.min_margin);
            }
            if e.has(Membership::NotConvex) {
                let r = convex_margin(&e, &grid, 1e-9).unwrap();
                assert_eq!(r.verdict, Verdict::Fail, "{}", e.id());
                assert!(r.min_margin < -1e-3, "{}: {}", e.id(), r.min_margin);
            }
        }
    }

    #[test]
    fn listing_covers_every_entry() {
        let rows = listing();
        assert_eq!(rows.len(), ENTRY_IDS.len());
        let strip = rows.iter().find(|r| r.id == "strip_convex").unwrap();
        assert!(strip.corpus_enrichment);
        let hp = rows.iter().find(|r| r.id == "half_plane").unwrap();
        assert_eq!(hp.exact_dzeta, "closed-form");
    }
}
