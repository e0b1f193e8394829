use linespace_core::{
    lines_through_point, lines_through_point_chart2, Complex64, EuclideanPoint, ExtComplex,
    LinePoint,
};

use crate::section::{Domain, LineSection, SectionError};

/// The holomorphic sphere of lines through a fixed point, pushed out along
/// each line by a fixed radius.
///
/// With radius 0 this is the point sphere of `center`: every direction's
/// line passes through the point itself and reconstruction returns `center`
/// identically. With radius s the reconstruction is the round sphere of
/// radius s about `center`, whose normal congruence these lines are. The
/// radius is a signed offset along the orientation.
#[derive(Debug, Clone, Copy)]
pub struct SphereSection {
    center: EuclideanPoint,
    radius: f64,
}

impl SphereSection {
    pub fn new(center: EuclideanPoint, radius: f64) -> Self {
        SphereSection { center, radius }
    }

    /// The degenerate radius-zero sphere: all oriented lines through `p`.
    pub fn point_sphere(p: EuclideanPoint) -> Self {
        SphereSection::new(p, 0.0)
    }

    pub fn center(&self) -> EuclideanPoint {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

impl LineSection for SphereSection {
    fn eval(&self, xi: ExtComplex) -> Result<LinePoint, SectionError> {
        let lp = lines_through_point(self.center, xi);
        Ok(LinePoint::new(lp.line, lp.r + self.radius))
    }

    fn eval_chart2(&self, xi: Complex64) -> Result<LinePoint, SectionError> {
        let lp = lines_through_point_chart2(self.center, xi);
        Ok(LinePoint::new(lp.line, lp.r + self.radius))
    }

    fn domain(&self) -> Domain {
        Domain::FullSphere
    }
}
