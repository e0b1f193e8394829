//! Riemann-sphere sample grids.

use std::f64::consts::TAU;
use std::str::FromStr;

use linespace_core::{Chart, Complex64};

use crate::parse::parse_f64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridKind {
    /// Concentric rings filling a chart-one disk of the given modulus.
    Disk { max_modulus: f64 },
    /// Rings between two moduli in chart one.
    Annulus { min_modulus: f64, max_modulus: f64 },
    /// The disk grid repeated in both charts; together the two disks cover
    /// the whole sphere once max_modulus >= 1.
    TwoChart { max_modulus: f64 },
}

/// A polar grid specification: `disk:R:A:MAX`, `annulus:R:A:MIN:MAX` or
/// `two-chart:R:A:MAX` with R radial rings and A angular samples per ring.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub kind: GridKind,
    pub radial_count: usize,
    pub angular_count: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct GridSample {
    pub chart: Chart,
    pub xi: Complex64,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let usage = "expected disk:R:A:MAX, annulus:R:A:MIN:MAX or two-chart:R:A:MAX";
        if parts.len() < 4 {
            return Err(format!("grid '{s}' too short; {usage}"));
        }

        let radial_count: usize = parts[1]
            .parse()
            .map_err(|_| format!("malformed radial count '{}'", parts[1]))?;
        let angular_count: usize = parts[2]
            .parse()
            .map_err(|_| format!("malformed angular count '{}'", parts[2]))?;
        if radial_count == 0 || angular_count == 0 {
            return Err("grid counts must be at least 1".into());
        }

        let kind = match (parts[0], parts.len()) {
            ("disk", 4) => GridKind::Disk {
                max_modulus: positive(parts[3], "max modulus")?,
            },
            ("annulus", 5) => {
                let min_modulus = positive(parts[3], "inner radius")?;
                let max_modulus = positive(parts[4], "outer radius")?;
                if min_modulus >= max_modulus {
                    return Err(format!(
                        "annulus inner radius {min_modulus} must be below outer radius {max_modulus}"
                    ));
                }
                GridKind::Annulus {
                    min_modulus,
                    max_modulus,
                }
            }
            ("two-chart", 4) => GridKind::TwoChart {
                max_modulus: positive(parts[3], "max modulus")?,
            },
            _ => return Err(format!("unknown grid '{s}'; {usage}")),
        };

        Ok(GridSpec {
            kind,
            radial_count,
            angular_count,
        })
    }
}

fn positive(s: &str, what: &str) -> Result<f64, String> {
    let v = parse_f64(s, what)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("{what} must be positive, got {v}"))
    }
}

impl GridSpec {
    /// Grid points in a fixed deterministic order: ring by ring from the
    /// inside out, each ring swept counterclockwise from angle zero; for
    /// two-chart grids the whole chart-one disk precedes the chart-two disk.
    pub fn samples(&self) -> Vec<GridSample> {
        let mut out = Vec::new();
        match self.kind {
            GridKind::Disk { max_modulus } => {
                self.rings(&mut out, Chart::One, |i, n| {
                    max_modulus * (i + 1) as f64 / n as f64
                });
            }
            GridKind::Annulus {
                min_modulus,
                max_modulus,
            } => {
                self.rings(&mut out, Chart::One, |i, n| {
                    if n == 1 {
                        min_modulus
                    } else {
                        min_modulus + (max_modulus - min_modulus) * i as f64 / (n - 1) as f64
                    }
                });
            }
            GridKind::TwoChart { max_modulus } => {
                let radius = |i: usize, n: usize| max_modulus * (i + 1) as f64 / n as f64;
                self.rings(&mut out, Chart::One, radius);
                self.rings(&mut out, Chart::Two, radius);
            }
        }
        out
    }

    fn rings(
        &self,
        out: &mut Vec<GridSample>,
        chart: Chart,
        radius: impl Fn(usize, usize) -> f64,
    ) {
        for i in 0..self.radial_count {
            let rad = radius(i, self.radial_count);
            for j in 0..self.angular_count {
                let theta = TAU * j as f64 / self.angular_count as f64;
                out.push(GridSample {
                    chart,
                    xi: Complex64::from_polar(rad, theta),
                });
            }
        }
    }
}
