use serde::Serialize;

use crate::catalog::{self, CatalogEntry, Membership};
use crate::classes::{DiscGrid, Verdict, EXACT_TOLERANCE, SERIES_TOLERANCE};
use crate::error::{QdiscError, Result};
use crate::qcalc::{QParam, ZetaParam};
use crate::theorems::{self, ClosureClause};

use super::config::RunConfig;
use super::output::Body;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Margin,
    Identity,
    Explore,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CheckSpec {
    pub id: &'static str,
    pub aliases: &'static [&'static str],
    pub kind: CheckKind,
    /// FAIL for checks whose purpose is to exhibit a violation.
    pub expected: Verdict,
    pub summary: &'static str,
}

pub const CHECKS: [CheckSpec; 16] = [
    spec("operator-equivalence", &[], CheckKind::Identity, "Jackson quotient vs coefficient operator"),
    spec("operator-degenerations", &[], CheckKind::Identity, "zeta = 1 gives f', zeta = 0 gives f/z"),
    spec("hzeta-starlike", &[], CheckKind::Margin, "order of starlikeness of the generator h_zeta"),
    spec("convex-zeta-bound", &["theorem1"], CheckKind::Margin, "convex f: Re h(zeta, z) > 0, sharp for z/(1-z)"),
    spec("angle-identity", &[], CheckKind::Identity, "cotangent identity for Cayley differences"),
    spec("rotation-inequality", &[], CheckKind::Margin, "rotation differences of convex f"),
    spec("quotient-bounds", &[], CheckKind::Margin, "lower bound chain for f'/((1-zeta) d_zeta f)"),
    spec("quotient-sharp-bound", &[], CheckKind::Margin, "sharp bound (1-|zeta|^2)/(2|1-zeta|^2)"),
    spec("q-class", &[], CheckKind::Margin, "convex f lies in R(q, (1+q)/2)"),
    spec("herglotz-positivity", &[], CheckKind::Margin, "p = (2f'/d_q f - (1+q))/(1-q) has Re p > 0"),
    spec("q-distortion", &[], CheckKind::Margin, "bounds on f'/d_q f over |z| = r"),
    spec("log-kernel-quotient", &[], CheckKind::Margin, "Re{f/D} > (1+q)/2 with the log kernel"),
    spec("convolution-closure", &[], CheckKind::Margin, "Hadamard products stay convex / starlike"),
    CheckSpec {
        id: "starlike-counterexample",
        aliases: &[],
        kind: CheckKind::Margin,
        expected: Verdict::Fail,
        summary: "z + z^2/2 violates the convex zeta bound",
    },
    spec("nonunivalent-example", &[], CheckKind::Margin, "z + z^2/(1+zeta): Re d_zeta f > 0, not univalent"),
    spec("conjecture", &[], CheckKind::Explore, "search for convex f outside R(zeta, (1+|zeta|)/2)"),
];

const fn spec(id: &'static str, aliases: &'static [&'static str], kind: CheckKind, summary: &'static str) -> CheckSpec {
    CheckSpec {
        id,
        aliases,
        kind,
        expected: Verdict::Pass,
        summary,
    }
}

pub fn lookup(id: &str) -> Result<&'static CheckSpec> {
    CHECKS
        .iter()
        .find(|c| c.id == id || c.aliases.contains(&id))
        .ok_or_else(|| QdiscError::ConfigInvalid(format!("unknown check {id:?}")))
}

/// Checks run by `verify --check all`: everything except the explorer.
pub fn verify_ids() -> Vec<&'static str> {
    CHECKS
        .iter()
        .filter(|c| c.kind != CheckKind::Explore)
        .map(|c| c.id)
        .collect()
}

/// One unit of work produced by expanding a check over its parameters.
pub struct Task {
    pub spec: &'static CheckSpec,
    run: Box<dyn Fn() -> Result<Body> + Send + Sync>,
}

impl Task {
    pub fn run(&self) -> Result<Body> {
        (self.run)()
    }
}

fn zeta_list(cfg: &RunConfig, default: &[(f64, f64)]) -> Vec<ZetaParam> {
    cfg.zetas.clone().unwrap_or_else(|| {
        default
            .iter()
            .map(|&(re, im)| ZetaParam::new(num_complex::Complex64::new(re, im)).expect("default zeta in disc"))
            .collect()
    })
}

fn q_list(cfg: &RunConfig, default: &[f64]) -> Vec<QParam> {
    cfg.qs
        .clone()
        .unwrap_or_else(|| default.iter().map(|&q| QParam::new(q).expect("default q in range")).collect())
}

fn functions(cfg: &RunConfig, default: &[&str]) -> Result<Vec<CatalogEntry>> {
    match &cfg.functions {
        Some(ids) => ids.iter().map(|id| catalog::entry(id)).collect(),
        None => default.iter().map(|id| catalog::entry(id)).collect(),
    }
}

fn tol(cfg: &RunConfig, default: f64) -> f64 {
    cfg.tolerance.unwrap_or(default)
}

const ALL_IDS: [&str; 7] = catalog::ENTRY_IDS;
const CONVEX: [&str; 3] = catalog::CONVEX_IDS;

/// Expands a check into tasks using the config's parameters or the check's
/// defaults. Tasks are listed in a fixed order.
pub fn tasks(spec: &'static CheckSpec, cfg: &RunConfig) -> Result<Vec<Task>> {
    let mut out: Vec<Task> = Vec::new();
    let mut push = |f: Box<dyn Fn() -> Result<Body> + Send + Sync>| out.push(Task { spec, run: f });
    let standard = DiscGrid::standard();
    let grid = cfg.grid.resolve(&standard)?;
    let order = cfg.order;
    match spec.id {
        "operator-equivalence" => {
            let grid = cfg.grid.resolve(&DiscGrid::uniform(0.8, 40, 260)?)?;
            for f in functions(cfg, &ALL_IDS)? {
                for q in q_list(cfg, &[0.0, 0.25, 0.5, 0.9]) {
                    let (f, grid) = (f.clone(), grid.clone());
                    push(Box::new(move || {
                        theorems::check_operator_equivalence(&f, q, &grid, order).map(Body::Identity)
                    }));
                }
            }
        }
        "operator-degenerations" => {
            for f in functions(cfg, &ALL_IDS)? {
                for part in 0..2 {
                    let (f, grid) = (f.clone(), grid.clone());
                    push(Box::new(move || {
                        let mut reports = theorems::check_operator_degenerations(&f, &grid, order)?;
                        Ok(Body::Identity(reports.swap_remove(part)))
                    }));
                }
            }
        }
        "hzeta-starlike" => {
            for zeta in zeta_list(cfg, &[(0.0, 0.0), (0.5, 0.0), (1.0, 0.0), (0.0, 1.0), (-0.6, 0.3)]) {
                let grid = grid.clone();
                push(Box::new(move || theorems::check_hzeta_starlike(zeta, &grid).map(Body::Margin)));
            }
        }
        "convex-zeta-bound" => {
            let t = tol(cfg, EXACT_TOLERANCE);
            let zetas = zeta_list(
                cfg,
                &[(0.0, 0.0), (0.5, 0.0), (0.3, 0.4), (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -0.95)],
            );
            for f in functions(cfg, &CONVEX)? {
                for &zeta in &zetas {
                    let (f, grid) = (f.clone(), grid.clone());
                    push(Box::new(move || {
                        theorems::check_convex_zeta_bound(&f, zeta, &grid, t).map(Body::Margin)
                    }));
                }
            }
        }
        "angle-identity" => {
            let (samples, seed) = (cfg.samples, cfg.seed);
            push(Box::new(move || {
                theorems::check_angle_identity_samples(samples, seed).map(Body::Identity)
            }));
        }
        "rotation-inequality" => {
            let t = tol(cfg, EXACT_TOLERANCE);
            for f in functions(cfg, &CONVEX)? {
                for (a, b) in theorems::rotation_angle_pairs() {
                    let (f, grid) = (f.clone(), grid.clone());
                    push(Box::new(move || {
                        theorems::check_rotation_inequality(&f, a, b, &grid, t).map(Body::Margin)
                    }));
                }
            }
        }
        "quotient-bounds" => {
            let t = tol(cfg, EXACT_TOLERANCE);
            let zetas = zeta_list(cfg, &[(0.0, 0.0), (0.5, 0.0), (0.3, 0.4), (-0.5, 0.0), (0.0, 1.0)]);
            for f in functions(cfg, &CONVEX)? {
                for &zeta in &zetas {
                    let (f, grid) = (f.clone(), grid.clone());
                    push(Box::new(move || {
                        theorems::check_quotient_bounds(&f, zeta, &grid, t).map(Body::Margin)
                    }));
                }
            }
        }
        "quotient-sharp-bound" => {
            let t = tol(cfg, EXACT_TOLERANCE);
            let zetas = zeta_list(cfg, &[(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (-0.5, 0.0)]);
            for f in functions(cfg, &CONVEX)? {
                for &zeta in &zetas {
                    let (f, grid) = (f.clone(), grid.clone());
                    push(Box::new(move || {
                        theorems::check_quotient_sharp_bound(&f, zeta, &grid, t).map(Body::Margin)
                    }));
                }
            }
        }
        "q-class" | "herglotz-positivity" | "log-kernel-quotient" => {
            let id = spec.id;
            let defaults: &[f64] = if id == "q-class" {
                &[0.0, 0.25, 0.5, 0.9]
            } else {
                &[0.25, 0.5, 0.9]
            };
            let t = tol(
                cfg,
                if id == "log-kernel-quotient" { SERIES_TOLERANCE } else { EXACT_TOLERANCE },
            );
            for f in functions(cfg, &CONVEX)? {
                for q in q_list(cfg, defaults) {
                    let (f, grid) = (f.clone(), grid.clone());
                    push(Box::new(move || {
                        let report = match id {
                            "q-class" => theorems::check_q_class(&f, q, &grid, t),
                            "herglotz-positivity" => theorems::check_herglotz_positivity(&f, q, &grid, t),
                            _ => theorems::check_log_kernel_quotient(&f, q, &grid, order, t),
                        };
                        report.map(Body::Margin)
                    }));
                }
            }
        }
        "q-distortion" => {
            let angles = cfg.grid.angles.unwrap_or(512);
            let radii = cfg.radii.clone().unwrap_or_else(|| vec![0.5, 0.9]);
            for f in functions(cfg, &CONVEX)? {
                for q in q_list(cfg, &[0.3, 0.7]) {
                    for &r in &radii {
                        let f = f.clone();
                        push(Box::new(move || theorems::check_q_distortion(&f, q, r, angles).map(Body::Margin)));
                    }
                }
            }
        }
        "convolution-closure" => {
            let t = tol(cfg, SERIES_TOLERANCE);
            let grid = cfg.grid.resolve(&DiscGrid::standard_up_to(0.9, crate::classes::STANDARD_ANGLES)?)?;
            let pairs: Vec<(CatalogEntry, CatalogEntry)> = match &cfg.functions {
                Some(ids) if ids.len() == 2 => vec![(catalog::entry(&ids[0])?, catalog::entry(&ids[1])?)],
                Some(_) => {
                    return Err(QdiscError::ConfigInvalid(
                        "convolution-closure takes exactly two functions".into(),
                    ))
                }
                None => [
                    ("log_convex", "log_convex"),
                    ("half_plane", "strip_convex"),
                    ("strip_convex", "log_convex"),
                    ("log_convex", "koebe"),
                    ("strip_convex", "h_zeta"),
                ]
                .iter()
                .map(|(f, g)| Ok((catalog::entry(f)?, catalog::entry(g)?)))
                .collect::<Result<_>>()?,
            };
            for (f, g) in pairs {
                let clause = if g.is_convex() {
                    ClosureClause::Convex
                } else if g.has(Membership::Starlike) {
                    ClosureClause::Starlike { alpha: 0.0 }
                } else {
                    return Err(QdiscError::MembershipMismatch {
                        id: g.label(),
                        expected: "CONVEX or STARLIKE",
                    });
                };
                let grid = grid.clone();
                push(Box::new(move || {
                    theorems::check_convolution_closure(&f, &g, clause, &grid, order, t).map(Body::Margin)
                }));
            }
        }
        "starlike-counterexample" => {
            let t = tol(cfg, EXACT_TOLERANCE);
            let zetas = cfg.zetas.clone().unwrap_or_else(theorems::default_zeta_grid);
            push(Box::new(move || {
                theorems::find_starlike_counterexample(&grid, &zetas, t).map(Body::Margin)
            }));
        }
        "nonunivalent-example" => {
            let t = tol(cfg, EXACT_TOLERANCE);
            for zeta in zeta_list(cfg, &[(0.0, 0.0), (0.5, 0.0), (0.0, 0.9)]) {
                let grid = grid.clone();
                push(Box::new(move || {
                    theorems::check_nonunivalent_example(zeta, &grid, t).map(Body::Margin)
                }));
            }
        }
        "conjecture" => {
            let t = tol(cfg, EXACT_TOLERANCE);
            let fs = functions(cfg, &CONVEX)?;
            let zetas = match &cfg.zetas {
                Some(z) => z.clone(),
                None => theorems::zeta_circle_grid(&cfg.zeta_moduli, cfg.zeta_args)
                    .map_err(|e| QdiscError::ConfigInvalid(e.to_string()))?,
            };
            push(Box::new(move || {
                theorems::explore_conjecture(&fs, &zetas, &grid, t).map(Body::Conjecture)
            }));
        }
        other => unreachable!("check {other} is registered but has no runner"),
    }
    Ok(out)
}
