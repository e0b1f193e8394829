//! Stereographic projection between unit directions and the extended plane.
//!
//! Projection is from the south pole onto the equatorial plane, so ξ = 0 is
//! the north pole (0, 0, 1) and ξ = ∞ the south pole (0, 0, −1). The second
//! chart uses ξ̃ = 1/ξ; on Euclidean data the chart swap acts as the rotation
//! by π about the x¹-axis, (z, t) ↦ (z̄, −t), which is how the chart-two
//! kernels below are produced from the chart-one formulas.

use num_complex::Complex64;

use crate::error::Error;
use crate::euclidean::{inner, EuclideanPoint, Vector3};
use crate::ext_complex::ExtComplex;

/// Unit direction for a finite chart-one coordinate:
/// (z, t) = (2ξ, 1 − ξξ̄) / (1 + ξξ̄).
pub(crate) fn chart1_direction(xi: Complex64) -> Vector3 {
    let d = 1.0 + xi.norm_sqr();
    Vector3::new(2.0 * xi / d, (1.0 - xi.norm_sqr()) / d)
}

/// The rotation by π about the x¹-axis, (z, t) ↦ (z̄, −t). Re-expressing a
/// line in the opposite chart composes the chart-one formulas with this map.
pub(crate) fn mirror_vector(v: Vector3) -> Vector3 {
    Vector3::new(v.vz.conj(), -v.vt)
}

pub(crate) fn mirror_point(p: EuclideanPoint) -> EuclideanPoint {
    EuclideanPoint::new(p.z.conj(), -p.t)
}

/// The unit direction vector encoded by a direction coordinate.
///
/// Total on the extended plane: ξ = ∞ returns the south pole (0, 0, −1).
pub fn dir_from_xi(xi: ExtComplex) -> Vector3 {
    match xi {
        ExtComplex::Finite(value) => chart1_direction(value),
        ExtComplex::Infinity => Vector3::from_xyz(0.0, 0.0, -1.0),
    }
}

/// Inverse stereographic projection of a unit vector.
///
/// The unit precondition is checked as |inner(v, v) − 1| ≤ `unit_tol`;
/// non-unit input reports the measured norm. The south pole (and any
/// direction whose quotient overflows) maps to `Infinity`.
///
/// Near the south pole the textbook quotient ξ = v_z / (1 + v_t) loses all
/// precision to cancellation, so the southern hemisphere uses the equivalent
/// form ξ = (1 − v_t) / v̄_z, which stays accurate to a few ulps for
/// arbitrarily large |ξ|.
pub fn xi_from_dir(v: Vector3, unit_tol: f64) -> Result<ExtComplex, Error> {
    let norm_sqr = inner(v, v);
    if (norm_sqr - 1.0).abs() > unit_tol {
        return Err(Error::NotUnit {
            norm: norm_sqr.sqrt(),
        });
    }

    if v.vt >= 0.0 {
        return Ok(ExtComplex::finite(v.vz / (1.0 + v.vt)));
    }
    if v.vz.norm_sqr() == 0.0 {
        return Ok(ExtComplex::Infinity);
    }
    Ok(ExtComplex::finite((1.0 - v.vt) / v.vz.conj()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn north_pole_is_xi_zero() {
        let v = dir_from_xi(ExtComplex::Finite(Complex64::new(0.0, 0.0)));
        assert!(v.approx_eq(&Vector3::from_xyz(0.0, 0.0, 1.0), 0.0));
    }

    #[test]
    fn xi_one_is_on_the_equator() {
        let v = dir_from_xi(ExtComplex::Finite(Complex64::new(1.0, 0.0)));
        assert!(v.approx_eq(&Vector3::from_xyz(1.0, 0.0, 0.0), TOL));
    }

    #[test]
    fn infinity_is_the_south_pole() {
        let v = dir_from_xi(ExtComplex::Infinity);
        assert!(v.approx_eq(&Vector3::from_xyz(0.0, 0.0, -1.0), 0.0));
    }

    #[test]
    fn inverse_examples() {
        let xi = xi_from_dir(Vector3::from_xyz(0.0, 0.0, 1.0), TOL).unwrap();
        assert!(xi.approx_eq(&ExtComplex::Finite(Complex64::new(0.0, 0.0)), TOL));

        let xi = xi_from_dir(Vector3::from_xyz(0.0, 1.0, 0.0), TOL).unwrap();
        assert!(xi.approx_eq(&ExtComplex::Finite(Complex64::new(0.0, 1.0)), TOL));

        let xi = xi_from_dir(Vector3::from_xyz(0.0, 0.0, -1.0), TOL).unwrap();
        assert!(!xi.is_finite());
    }

    #[test]
    fn non_unit_input_reports_measured_norm() {
        let err = xi_from_dir(Vector3::from_xyz(0.0, 0.0, 2.0), TOL).unwrap_err();
        match err {
            Error::NotUnit { norm } => assert!((norm - 2.0).abs() < 1e-12),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn round_trip_is_stable_near_the_south_pole() {
        // |xi| = 1e6 leaves 1 + v_t ~ 2e-12; the naive quotient would lose
        // four digits here, the split inverse keeps relative error at ulps.
        let xi = Complex64::new(-7.2e5, 6.9e5);
        let back = xi_from_dir(chart1_direction(xi), 1e-9).unwrap();
        let back = back.as_finite().unwrap();
        assert!((back - xi).norm() / xi.norm() < 1e-13);
    }
}
