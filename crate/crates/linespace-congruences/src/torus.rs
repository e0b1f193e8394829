use std::fmt;
use std::str::FromStr;

use linespace_core::{Complex64, EuclideanPoint, ExtComplex, LinePoint, OrientedLine};

use crate::section::{Domain, LineSection, SectionError};

/// Pole guard: the phase factor ξ/|ξ| is ill-conditioned near the branch
/// points, so chart-one evaluation rejects |ξ| below this bound (and, by
/// symmetry, above its reciprocal).
pub const TORUS_POLE_GUARD: f64 = 1e-12;

/// Which sheet of the direction double cover a torus section follows.
/// `Plus` carries the outer half of the tube (r = b + a at the equator),
/// `Minus` the inner half (r = b − a).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Plus => write!(f, "plus"),
            Branch::Minus => write!(f, "minus"),
        }
    }
}

impl FromStr for Branch {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(Branch::Plus),
            "-" | "minus" => Ok(Branch::Minus),
            other => Err(format!("unknown branch '{other}' (expected plus or minus)")),
        }
    }
}

/// Radii of the rotationally symmetric torus, in the roles the section
/// formulas give them: `a` is the radius of the center circle (the circle of
/// revolution in the t = 0 plane) and `b` is the tube radius, so the surface
/// is (√(x² + y²) − a)² + t² = b². The torus is embedded when a > b;
/// otherwise it self-intersects, which callers may want to warn about but is
/// not an error.
#[derive(Debug, Clone, Copy)]
pub struct TorusParams {
    a: f64,
    b: f64,
    branch: Branch,
}

impl TorusParams {
    pub fn new(a: f64, b: f64, branch: Branch) -> Result<Self, SectionError> {
        for (name, value) in [("a", a), ("b", b)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(SectionError::NonPositiveParameter { name, value });
            }
        }
        Ok(TorusParams { a, b, branch })
    }

    /// Center-circle radius.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Tube radius.
    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn is_embedded(&self) -> bool {
        self.a > self.b
    }
}

/// One branch of the torus normal-line congruence:
///
/// η = ±(a/2) √(ξ/ξ̄) (1 − ξξ̄),   r = b ± 2a√(ξξ̄) / (1 + ξξ̄),
///
/// with √(ξ/ξ̄) read as the single-valued phase ξ/|ξ|. The two branches make
/// the direction cover of the torus a double cover of the sphere, branched
/// at the poles, where the phase has no limit and evaluation fails. The same
/// expressions evaluated on the chart-two coordinate give the chart-two
/// fiber of the same branch, the torus being carried to itself by the
/// rotation that swaps the charts.
#[derive(Debug, Clone, Copy)]
pub struct TorusSection {
    params: TorusParams,
}

impl TorusSection {
    pub fn new(params: TorusParams) -> Self {
        TorusSection { params }
    }

    pub fn params(&self) -> TorusParams {
        self.params
    }

    fn fiber(&self, xi: Complex64) -> Result<(Complex64, f64), SectionError> {
        let modulus = xi.norm();
        if !(TORUS_POLE_GUARD..=1.0 / TORUS_POLE_GUARD).contains(&modulus) {
            return Err(SectionError::BranchPoint { xi });
        }
        let sign = self.params.branch.sign();
        let m = xi.norm_sqr();
        let phase = xi / modulus;
        let eta = sign * (self.params.a / 2.0) * phase * (1.0 - m);
        let r = self.params.b + sign * 2.0 * self.params.a * modulus / (1.0 + m);
        Ok((eta, r))
    }
}

impl LineSection for TorusSection {
    fn eval(&self, xi: ExtComplex) -> Result<LinePoint, SectionError> {
        match xi {
            ExtComplex::Finite(value) => {
                let (eta, r) = self.fiber(value)?;
                Ok(LinePoint::new(OrientedLine::chart1(value, eta), r))
            }
            ExtComplex::Infinity => self.eval_chart2(Complex64::new(0.0, 0.0)),
        }
    }

    fn eval_chart2(&self, xi: Complex64) -> Result<LinePoint, SectionError> {
        let (eta, r) = self.fiber(xi)?;
        Ok(LinePoint::new(OrientedLine::chart2(xi, eta), r))
    }

    fn domain(&self) -> Domain {
        Domain::SphereMinusPoles
    }

    fn branch(&self) -> Option<Branch> {
        Some(self.params.branch)
    }
}

/// Independent on-surface check: (√(x² + y²) − a)² + t² − b², zero on the
/// torus with center-circle radius a and tube radius b. Evaluated straight
/// from the implicit equation.
pub fn implicit_residual_torus(params: &TorusParams, p: EuclideanPoint) -> f64 {
    let radial = p.x().hypot(p.y());
    (radial - params.a) * (radial - params.a) + p.t * p.t - params.b * params.b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn section(a: f64, b: f64, branch: Branch) -> TorusSection {
        TorusSection::new(TorusParams::new(a, b, branch).unwrap())
    }

    #[test]
    fn parameters_must_be_positive() {
        assert!(TorusParams::new(0.0, 1.0, Branch::Plus).is_err());
        assert!(TorusParams::new(1.0, -1.0, Branch::Plus).is_err());
        assert!(TorusParams::new(3.0, 1.0, Branch::Plus).is_ok());
    }

    #[test]
    fn embeddedness_requires_wide_center_circle() {
        assert!(TorusParams::new(3.0, 1.0, Branch::Plus)
            .unwrap()
            .is_embedded());
        assert!(!TorusParams::new(1.0, 3.0, Branch::Plus)
            .unwrap()
            .is_embedded());
    }

    #[test]
    fn equator_values() {
        // (1 − ξξ̄) kills η on |ξ| = 1 and r = b ± a there: with the formula
        // inputs a = 1, b = 3 that is r = 3 + 2·1/2 = 4 on the plus branch
        // and r = 2 on the minus branch.
        let plus = section(1.0, 3.0, Branch::Plus);
        let lp = plus.eval(ExtComplex::Finite(c(1.0, 0.0))).unwrap();
        assert_eq!(lp.line.eta_chart().norm(), 0.0);
        assert_eq!(lp.r, 4.0);
        assert!(lp
            .point()
            .approx_eq(&EuclideanPoint::from_xyz(4.0, 0.0, 0.0), 1e-15));

        let minus = section(1.0, 3.0, Branch::Minus);
        let lp = minus.eval(ExtComplex::Finite(c(1.0, 0.0))).unwrap();
        assert_eq!(lp.line.eta_chart().norm(), 0.0);
        assert_eq!(lp.r, 2.0);
        assert!(lp
            .point()
            .approx_eq(&EuclideanPoint::from_xyz(2.0, 0.0, 0.0), 1e-15));
    }

    #[test]
    fn equator_points_lie_on_the_embedded_torus() {
        // Embedded donut: center circle 3, tube 1. Outer equator at radius
        // 4, inner at radius 2 (the minus branch reaches it with r = −2, on
        // the far side of the axis).
        let params = TorusParams::new(3.0, 1.0, Branch::Plus).unwrap();
        let p = section(3.0, 1.0, Branch::Plus)
            .eval(ExtComplex::Finite(c(1.0, 0.0)))
            .unwrap()
            .point();
        assert!(p.approx_eq(&EuclideanPoint::from_xyz(4.0, 0.0, 0.0), 1e-15));
        assert!(implicit_residual_torus(&params, p).abs() < 1e-12);

        let q = section(3.0, 1.0, Branch::Minus)
            .eval(ExtComplex::Finite(c(1.0, 0.0)))
            .unwrap()
            .point();
        assert!(q.approx_eq(&EuclideanPoint::from_xyz(-2.0, 0.0, 0.0), 1e-15));
        assert!(implicit_residual_torus(&params, q).abs() < 1e-12);
    }

    #[test]
    fn residual_examples() {
        let params = TorusParams::new(3.0, 1.0, Branch::Plus).unwrap();
        assert_eq!(
            implicit_residual_torus(&params, EuclideanPoint::from_xyz(4.0, 0.0, 0.0)),
            0.0
        );
        assert_eq!(
            implicit_residual_torus(&params, EuclideanPoint::from_xyz(2.0, 0.0, 0.0)),
            0.0
        );
        // The core circle sits at tube-depth 0, so the residual is −b².
        assert_eq!(
            implicit_residual_torus(&params, EuclideanPoint::from_xyz(3.0, 0.0, 0.0)),
            -1.0
        );
    }

    #[test]
    fn off_equator_points_stay_on_the_surface() {
        let params = TorusParams::new(3.0, 1.0, Branch::Plus).unwrap();
        for branch in [Branch::Plus, Branch::Minus] {
            let s = section(3.0, 1.0, branch);
            for xi in [c(0.4, 0.3), c(-2.0, 1.0), c(0.05, 0.0), c(8.0, -3.0)] {
                let p = s.eval(ExtComplex::Finite(xi)).unwrap().point();
                assert!(
                    implicit_residual_torus(&params, p).abs() < 1e-12,
                    "branch {branch} at {xi}"
                );
            }
        }
    }

    #[test]
    fn poles_are_branch_points() {
        let s = section(3.0, 1.0, Branch::Plus);
        assert!(matches!(
            s.eval(ExtComplex::Finite(c(0.0, 0.0))),
            Err(SectionError::BranchPoint { .. })
        ));
        assert!(matches!(
            s.eval(ExtComplex::Finite(c(1e-13, 0.0))),
            Err(SectionError::BranchPoint { .. })
        ));
        assert!(matches!(
            s.eval(ExtComplex::Infinity),
            Err(SectionError::BranchPoint { .. })
        ));
        assert!(matches!(
            s.eval(ExtComplex::Finite(c(1e13, 0.0))),
            Err(SectionError::BranchPoint { .. })
        ));
    }

    #[test]
    fn both_charts_agree_on_the_surface_point() {
        let s = section(3.0, 1.0, Branch::Minus);
        let xi = c(1.3, -0.6);
        let p1 = s.eval(ExtComplex::Finite(xi)).unwrap().point();
        let p2 = s.eval_chart2(1.0 / xi).unwrap().point();
        assert!(p1.approx_eq(&p2, 1e-12));
    }
}
