use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{QdiscError, Result};

/// Radii of the standard sampling lattice.
pub const STANDARD_RADII: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95];

/// Angles per circle on the standard lattice.
pub const STANDARD_ANGLES: usize = 256;

/// Polar sampling lattice of the open unit disc.
///
/// Points are enumerated radius-major, then by angle `2 pi k / angles`
/// ascending from 0. The order is part of the contract: sweeps break ties in
/// favour of the first point in this order.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscGrid {
    radii: Vec<f64>,
    angles: usize,
}

impl DiscGrid {
    pub fn new(radii: Vec<f64>, angles: usize) -> Result<Self> {
        if radii.is_empty() {
            return Err(QdiscError::EmptyGrid);
        }
        if angles < 8 {
            return Err(QdiscError::InvalidGrid(format!(
                "need at least 8 angles per circle, got {angles}"
            )));
        }
        if let Some(r) = radii.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
            return Err(QdiscError::InvalidGrid(format!(
                "radius {r} is outside (0, 1)"
            )));
        }
        if radii.windows(2).any(|w| w[1] <= w[0]) {
            return Err(QdiscError::InvalidGrid(
                "radii must be strictly increasing".into(),
            ));
        }
        Ok(Self { radii, angles })
    }

    /// Radii {0.1, ..., 0.9, 0.95} with 256 angles each.
    pub fn standard() -> Self {
        Self {
            radii: STANDARD_RADII.to_vec(),
            angles: STANDARD_ANGLES,
        }
    }

    /// The standard radii below `r_max`, closed off by `r_max` itself.
    pub fn standard_up_to(r_max: f64, angles: usize) -> Result<Self> {
        let mut radii: Vec<f64> = STANDARD_RADII
            .iter()
            .copied()
            .filter(|r| *r < r_max)
            .collect();
        radii.push(r_max);
        Self::new(radii, angles)
    }

    /// `count` equally spaced radii `r_max k / count`, `k = 1..=count`.
    pub fn uniform(r_max: f64, count: usize, angles: usize) -> Result<Self> {
        if count == 0 {
            return Err(QdiscError::EmptyGrid);
        }
        let radii = (1..=count)
            .map(|k| r_max * k as f64 / count as f64)
            .collect();
        Self::new(radii, angles)
    }

    /// A single circle `|z| = r`.
    pub fn circle(r: f64, angles: usize) -> Result<Self> {
        if !(r > 0.0 && r < 1.0) {
            return Err(QdiscError::RadiusOutOfRange(r));
        }
        Self::new(vec![r], angles)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> usize {
        self.angles
    }

    pub fn r_max(&self) -> f64 {
        *self.radii.last().expect("grid has at least one radius")
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All points in enumeration order.
    pub fn points(&self) -> Vec<Complex64> {
        let step = 2.0 * PI / self.angles as f64;
        self.radii
            .iter()
            .flat_map(|&r| (0..self.angles).map(move |k| Complex64::from_polar(r, step * k as f64)))
            .collect()
    }

    /// Compact description used in report parameters.
    pub fn describe(&self) -> String {
        format!(
            "radii={} r_min={} r_max={} angles={}",
            self.radii.len(),
            self.radii[0],
            self.r_max(),
            self.angles
        )
    }
}

impl Default for DiscGrid {
    fn default() -> Self {
        Self::standard()
    }
}
