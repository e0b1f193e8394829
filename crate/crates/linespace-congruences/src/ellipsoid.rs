use linespace_core::{dir_from_xi, Complex64, EuclideanPoint, ExtComplex, LinePoint, OrientedLine};

use crate::section::{Domain, LineSection, SectionError};

/// Coefficients of the triaxial ellipsoid x²/a₁ + y²/a₂ + t²/a₃ = 1.
///
/// The aᵢ act as squared semi-axes: equal parameters a₁ = a₂ = a₃ = a give
/// the round sphere of radius √a (the section then degenerates to η = 0,
/// r = √a identically).
#[derive(Debug, Clone, Copy)]
pub struct EllipsoidParams {
    a1: f64,
    a2: f64,
    a3: f64,
}

impl EllipsoidParams {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Result<Self, SectionError> {
        for (name, value) in [("a1", a1), ("a2", a2), ("a3", a3)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(SectionError::NonPositiveParameter { name, value });
            }
        }
        Ok(EllipsoidParams { a1, a2, a3 })
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn a2(&self) -> f64 {
        self.a2
    }

    pub fn a3(&self) -> f64 {
        self.a3
    }

    pub fn max_param(&self) -> f64 {
        self.a1.max(self.a2).max(self.a3)
    }
}

/// The normal-line congruence of a triaxial ellipsoid:
///
/// η = [a₁(ξ+ξ̄)(1−ξ²) + a₂(ξ−ξ̄)(1+ξ²) − 2a₃ξ(1−ξξ̄)]
///       / 2√(a₁(ξ+ξ̄)² − a₂(ξ−ξ̄)² + a₃(1−ξξ̄)²),
/// r = √(a₁n₁² + a₂n₂² + a₃n₃²)   with n the unit direction of ξ.
///
/// A global section: the same expressions evaluated on the chart-two
/// coordinate give the chart-two fiber, because the ellipsoid is carried to
/// itself by the rotation that swaps the charts. In particular the
/// coordinates extend across ξ → ∞, where the section takes the value
/// (η̃, r) = (0, √a₃) at the chart-two origin.
#[derive(Debug, Clone, Copy)]
pub struct EllipsoidSection {
    params: EllipsoidParams,
}

impl EllipsoidSection {
    pub fn new(params: EllipsoidParams) -> Self {
        EllipsoidSection { params }
    }

    pub fn params(&self) -> EllipsoidParams {
        self.params
    }

    fn fiber(&self, xi: Complex64) -> Result<(Complex64, f64), SectionError> {
        let EllipsoidParams { a1, a2, a3 } = self.params;
        let m = xi.norm_sqr();
        let sum = 2.0 * xi.re; // ξ + ξ̄
        let diff = Complex64::new(0.0, 2.0 * xi.im); // ξ − ξ̄

        // −a₂(ξ−ξ̄)² = +a₂(2 Im ξ)², so the radicand is a positive
        // combination for positive parameters.
        let radicand = a1 * sum * sum + a2 * (2.0 * xi.im) * (2.0 * xi.im)
            + a3 * (1.0 - m) * (1.0 - m);
        if !(radicand > 0.0) {
            return Err(SectionError::NonPositiveRadicand { value: radicand });
        }

        let numerator = a1 * sum * (1.0 - xi * xi) + a2 * diff * (1.0 + xi * xi)
            - 2.0 * a3 * xi * (1.0 - m);
        let eta = numerator / (2.0 * radicand.sqrt());

        let n = dir_from_xi(ExtComplex::Finite(xi));
        let r = (a1 * n.x() * n.x() + a2 * n.y() * n.y() + a3 * n.vt * n.vt).sqrt();
        Ok((eta, r))
    }
}

impl LineSection for EllipsoidSection {
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
        Domain::FullSphere
    }
}

/// Independent on-surface check: x²/a₁ + y²/a₂ + t²/a₃ − 1, zero on the
/// ellipsoid. Evaluated straight from the implicit equation, off any path
/// through the section formulas.
pub fn implicit_residual_ellipsoid(params: &EllipsoidParams, p: EuclideanPoint) -> f64 {
    p.x() * p.x() / params.a1 + p.y() * p.y() / params.a2 + p.t * p.t / params.a3 - 1.0
}
