//! Oriented lines and the line-to-point map.

use num_complex::Complex64;

use crate::error::Error;
use crate::euclidean::{EuclideanPoint, Vector3};
use crate::ext_complex::ExtComplex;
use crate::projection::{chart1_direction, mirror_point, mirror_vector};

/// Which stereographic chart a line's coordinates live in. Chart two carries
/// the direction coordinate ξ̃ = 1/ξ, so the south pole is its origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    One,
    Two,
}

impl Chart {
    pub fn other(self) -> Chart {
        match self {
            Chart::One => Chart::Two,
            Chart::Two => Chart::One,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Chart::One => 1,
            Chart::Two => 2,
        }
    }
}

/// An oriented affine line, stored as a direction coordinate and fiber
/// coordinate in an explicit chart. Both coordinates are always finite; the
/// south-pole direction is representable only in chart two (at its origin).
#[derive(Debug, Clone, Copy)]
pub struct OrientedLine {
    chart: Chart,
    xi: Complex64,
    eta: Complex64,
}

impl OrientedLine {
    /// A line from chart-one coordinates (ξ, η).
    pub fn chart1(xi: Complex64, eta: Complex64) -> Self {
        OrientedLine {
            chart: Chart::One,
            xi,
            eta,
        }
    }

    /// A line from chart-two coordinates (ξ̃, η̃).
    pub fn chart2(xi: Complex64, eta: Complex64) -> Self {
        OrientedLine {
            chart: Chart::Two,
            xi,
            eta,
        }
    }

    /// A line from an extended direction coordinate. Finite ξ is stored in
    /// chart one; ξ = ∞ is stored in chart two at its origin, with `eta`
    /// read as the chart-two fiber coordinate.
    pub fn new(xi: ExtComplex, eta: Complex64) -> Self {
        match xi {
            ExtComplex::Finite(value) => OrientedLine::chart1(value, eta),
            ExtComplex::Infinity => OrientedLine::chart2(Complex64::new(0.0, 0.0), eta),
        }
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    /// The direction coordinate in this line's own chart.
    pub fn xi_chart(&self) -> Complex64 {
        self.xi
    }

    /// The fiber coordinate in this line's own chart.
    pub fn eta_chart(&self) -> Complex64 {
        self.eta
    }

    /// The chart-one direction coordinate on the extended plane.
    pub fn xi(&self) -> ExtComplex {
        match self.chart {
            Chart::One => ExtComplex::Finite(self.xi),
            Chart::Two => ExtComplex::finite(self.xi).recip(),
        }
    }

    /// The line's unit direction vector.
    pub fn direction(&self) -> Vector3 {
        match self.chart {
            Chart::One => chart1_direction(self.xi),
            Chart::Two => mirror_vector(chart1_direction(self.xi)),
        }
    }

    /// The fixed vector determining the line: the displacement from the
    /// origin to the line's foot point. Orthogonal to [`direction`].
    ///
    /// In chart one this is
    /// v_z = 2(η − η̄ξ²)/(1 + ξξ̄)²,  v_t = −2(ηξ̄ + η̄ξ)/(1 + ξξ̄)².
    ///
    /// [`direction`]: OrientedLine::direction
    pub fn perp_displacement(&self) -> Vector3 {
        let v = perp_kernel(self.xi, self.eta);
        match self.chart {
            Chart::One => v,
            Chart::Two => mirror_vector(v),
        }
    }

    /// The point on the line closest to the origin (affine parameter 0).
    pub fn foot_point(&self) -> EuclideanPoint {
        LinePoint::new(*self, 0.0).point()
    }

    /// The same line expressed in the opposite chart:
    /// ξ̃ = 1/ξ, η̃ = −η/ξ². Applying the transition twice is the identity.
    ///
    /// Fails at ξ = 0, which the opposite chart has no finite coordinates
    /// for.
    pub fn to_other_chart(&self) -> Result<OrientedLine, Error> {
        if self.xi.norm_sqr() == 0.0 {
            return Err(Error::TransitionAtOrigin);
        }
        let xi = 1.0 / self.xi;
        let eta = -self.eta / (self.xi * self.xi);
        Ok(OrientedLine {
            chart: self.chart.other(),
            xi,
            eta,
        })
    }
}

/// A point on an oriented line, addressed by the signed affine parameter r
/// measured along the orientation from the foot point.
#[derive(Debug, Clone, Copy)]
pub struct LinePoint {
    pub line: OrientedLine,
    pub r: f64,
}

impl LinePoint {
    pub fn new(line: OrientedLine, r: f64) -> Self {
        LinePoint { line, r }
    }

    /// The Euclidean point at parameter r along the line:
    ///
    /// z = [2(η − η̄ξ²) + 2ξ(1 + ξξ̄)r] / (1 + ξξ̄)²,
    /// t = [−2(ηξ̄ + η̄ξ) + (1 − ξ²ξ̄²)r] / (1 + ξξ̄)².
    ///
    /// For chart-two lines the same formulas are evaluated on (ξ̃, η̃) and the
    /// result mirrored through (z, t) ↦ (z̄, −t); at ξ̃ = 0 this reduces to
    /// direction (0, 0, −1) with the foot read off the chart-two fiber.
    pub fn point(&self) -> EuclideanPoint {
        let p = point_kernel(self.line.xi, self.line.eta, self.r);
        match self.line.chart {
            Chart::One => p,
            Chart::Two => mirror_point(p),
        }
    }
}

fn perp_kernel(xi: Complex64, eta: Complex64) -> Vector3 {
    let d = 1.0 + xi.norm_sqr();
    let d2 = d * d;
    let vz = 2.0 * (eta - eta.conj() * xi * xi) / d2;
    let vt = -2.0 * (eta * xi.conj() + eta.conj() * xi).re / d2;
    Vector3::new(vz, vt)
}

fn point_kernel(xi: Complex64, eta: Complex64, r: f64) -> EuclideanPoint {
    let m = xi.norm_sqr();
    let d = 1.0 + m;
    let d2 = d * d;
    let z = (2.0 * (eta - eta.conj() * xi * xi) + 2.0 * xi * d * r) / d2;
    let t = (-2.0 * (eta * xi.conj() + eta.conj() * xi).re + (1.0 - m * m) * r) / d2;
    EuclideanPoint::new(z, t)
}
