use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use serde::Deserialize;

use crate::catalog;
use crate::classes::DiscGrid;
use crate::error::{QdiscError, Result};
use crate::qcalc::{QParam, ZetaParam};

use super::registry;

/// Smallest truncation order accepted from the command line.
pub const MIN_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// `a+bi`, `a-bi`, `bi`, `i` or a plain real number.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    Complex64::from_str(text.trim())
        .map_err(|_| QdiscError::ConfigInvalid(format!("cannot parse complex number {text:?}")))
}

/// Grid overrides; unset fields fall back to the check's own default grid.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub r_max: Option<f64>,
    /// Number of equally spaced radii; unset keeps the standard radii.
    pub radii: Option<usize>,
    pub angles: Option<usize>,
}

impl GridSpec {
    pub fn is_default(&self) -> bool {
        *self == GridSpec::default()
    }

    pub fn resolve(&self, default: &DiscGrid) -> Result<DiscGrid> {
        if self.is_default() {
            return Ok(default.clone());
        }
        let r_max = self.r_max.unwrap_or(default.r_max());
        let angles = self.angles.unwrap_or(default.angles());
        match self.radii {
            Some(count) => DiscGrid::uniform(r_max, count, angles),
            None => DiscGrid::standard_up_to(r_max, angles),
        }
    }
}

/// Keys accepted in a TOML config file; every key is optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub checks: Option<Vec<String>>,
    pub suite: Option<String>,
    pub functions: Option<Vec<String>>,
    pub zeta: Option<Vec<String>>,
    pub q: Option<Vec<f64>>,
    pub radius: Option<Vec<f64>>,
    pub order: Option<usize>,
    #[serde(default)]
    pub grid: GridSpec,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub timings: Option<bool>,
    pub zeta_moduli: Option<Vec<f64>>,
    pub zeta_args: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| QdiscError::ConfigInvalid(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| QdiscError::ConfigInvalid(format!("{}: {e}", path.display())))
    }

    /// Fills every unset field of `self` from `base`.
    pub fn or(self, base: FileConfig) -> FileConfig {
        FileConfig {
            checks: self.checks.or(base.checks),
            suite: self.suite.or(base.suite),
            functions: self.functions.or(base.functions),
            zeta: self.zeta.or(base.zeta),
            q: self.q.or(base.q),
            radius: self.radius.or(base.radius),
            order: self.order.or(base.order),
            grid: GridSpec {
                r_max: self.grid.r_max.or(base.grid.r_max),
                radii: self.grid.radii.or(base.grid.radii),
                angles: self.grid.angles.or(base.grid.angles),
            },
            tol: self.tol.or(base.tol),
            out: self.out.or(base.out),
            format: self.format.or(base.format),
            timings: self.timings.or(base.timings),
            zeta_moduli: self.zeta_moduli.or(base.zeta_moduli),
            zeta_args: self.zeta_args.or(base.zeta_args),
            samples: self.samples.or(base.samples),
            seed: self.seed.or(base.seed),
        }
    }
}

/// A validated run description. `None` means "use the check's defaults".
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Canonical check ids, in registry order when `all` was requested.
    pub checks: Vec<&'static str>,
    pub functions: Option<Vec<String>>,
    pub zetas: Option<Vec<ZetaParam>>,
    pub qs: Option<Vec<QParam>>,
    pub radii: Option<Vec<f64>>,
    pub order: usize,
    pub grid: GridSpec,
    pub tolerance: Option<f64>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub timings: bool,
    pub zeta_moduli: Vec<f64>,
    pub zeta_args: usize,
    pub samples: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn from_file_config(c: FileConfig) -> Result<Self> {
        let invalid = |m: String| QdiscError::ConfigInvalid(m);
        let requested = match (&c.checks, &c.suite) {
            (Some(ids), _) => ids.clone(),
            (None, Some(suite)) if suite == "paper" => vec!["all".to_string()],
            (None, Some(suite)) => return Err(invalid(format!("unknown suite {suite:?}"))),
            (None, None) => vec!["all".to_string()],
        };
        if let Some(suite) = &c.suite {
            if suite != "paper" {
                return Err(invalid(format!("unknown suite {suite:?}")));
            }
        }
        let mut checks = Vec::new();
        for id in &requested {
            if id == "all" {
                checks.extend(registry::verify_ids());
            } else {
                checks.push(registry::lookup(id)?.id);
            }
        }
        if let Some(fs) = &c.functions {
            for f in fs {
                if !catalog::ENTRY_IDS.contains(&f.as_str()) {
                    return Err(invalid(format!("unknown catalog entry {f:?}")));
                }
            }
        }
        let zetas = c
            .zeta
            .as_ref()
            .map(|zs| {
                zs.iter()
                    .map(|z| ZetaParam::new(parse_complex(z)?).map_err(|e| invalid(e.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        let qs = c
            .q
            .as_ref()
            .map(|qs| {
                qs.iter()
                    .map(|&q| QParam::new(q).map_err(|e| invalid(e.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        if let Some(rs) = &c.radius {
            if let Some(r) = rs.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
                return Err(invalid(format!("circle radius {r} outside (0, 1)")));
            }
        }
        let order = c.order.unwrap_or(crate::theorems::DEFAULT_ORDER);
        if order < MIN_ORDER {
            return Err(invalid(format!("order {order} below the minimum {MIN_ORDER}")));
        }
        if let Some(r) = c.grid.r_max {
            if !(r > 0.0 && r < 1.0) {
                return Err(invalid(format!("r_max {r} outside (0, 1)")));
            }
        }
        if let Some(a) = c.grid.angles {
            if a < 8 {
                return Err(invalid(format!("need at least 8 angles, got {a}")));
            }
        }
        if c.grid.radii == Some(0) {
            return Err(invalid("radii count must be positive".into()));
        }
        if let Some(t) = c.tol {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(invalid(format!("tolerance {t} must be finite and nonnegative")));
            }
        }
        let zeta_moduli = c.zeta_moduli.unwrap_or_else(|| vec![0.3, 0.6, 0.9]);
        if let Some(m) = zeta_moduli.iter().find(|m| !(**m >= 0.0 && **m <= 1.0)) {
            return Err(invalid(format!("zeta modulus {m} outside [0, 1]")));
        }
        let zeta_args = c.zeta_args.unwrap_or(64);
        let samples = c.samples.unwrap_or(1000);
        if zeta_args == 0 || samples == 0 || zeta_moduli.is_empty() {
            return Err(invalid("sample counts must be positive".into()));
        }
        Ok(Self {
            checks,
            functions: c.functions,
            zetas,
            qs,
            radii: c.radius,
            order,
            grid: c.grid,
            tolerance: c.tol,
            out: c.out,
            format: c.format.unwrap_or_default(),
            timings: c.timings.unwrap_or(true),
            zeta_moduli,
            zeta_args,
            samples,
            seed: c.seed.unwrap_or(crate::theorems::ANGLE_SAMPLE_SEED),
        })
    }
}
