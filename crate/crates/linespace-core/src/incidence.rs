//! Lines through a given point: the inverse of the line-to-point map.

use num_complex::Complex64;

use crate::euclidean::EuclideanPoint;
use crate::ext_complex::ExtComplex;
use crate::line::{LinePoint, OrientedLine};
use crate::projection::mirror_point;

/// The unique oriented line through `p` with direction coordinate `xi`,
/// together with the affine parameter at which it meets `p`:
///
/// η = ½(z − 2tξ − z̄ξ²),   r = (ξ̄z + ξz̄ + (1 − ξξ̄)t) / (1 + ξξ̄).
///
/// Evaluating [`LinePoint::point`] on the result recovers `p`. Varying ξ over
/// the whole sphere yields all oriented lines containing the point; ξ = ∞ is
/// served in chart two via [`lines_through_point_chart2`].
pub fn lines_through_point(p: EuclideanPoint, xi: ExtComplex) -> LinePoint {
    match xi {
        ExtComplex::Finite(value) => chart1_incidence(p, value),
        ExtComplex::Infinity => lines_through_point_chart2(p, Complex64::new(0.0, 0.0)),
    }
}

/// Chart-two variant of [`lines_through_point`]: the line through `p` whose
/// chart-two direction coordinate is `xi` (so its chart-one coordinate is
/// 1/ξ, with ξ = 0 the south pole). Exact for every ξ, including 0.
pub fn lines_through_point_chart2(p: EuclideanPoint, xi: Complex64) -> LinePoint {
    let mirrored = chart1_incidence(mirror_point(p), xi);
    LinePoint::new(
        OrientedLine::chart2(xi, mirrored.line.eta_chart()),
        mirrored.r,
    )
}

/// The signed affine parameter at which the line through `p` in direction
/// `xi` meets `p`; satisfies r² = |p|² − |foot|² for that line's foot point.
pub fn incidence_r(p: EuclideanPoint, xi: ExtComplex) -> f64 {
    lines_through_point(p, xi).r
}

fn chart1_incidence(p: EuclideanPoint, xi: Complex64) -> LinePoint {
    let m = xi.norm_sqr();
    let eta = 0.5 * (p.z - 2.0 * p.t * xi - p.z.conj() * xi * xi);
    let r = ((xi.conj() * p.z + xi * p.z.conj()).re + (1.0 - m) * p.t) / (1.0 + m);
    LinePoint::new(OrientedLine::chart1(xi, eta), r)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn all_lines_through_the_origin_have_zero_coordinates() {
        for xi in [c(0.0, 0.0), c(1.0, 0.0), c(-0.3, 2.7)] {
            let lp = lines_through_point(EuclideanPoint::origin(), ExtComplex::Finite(xi));
            assert_eq!(lp.line.eta_chart().norm(), 0.0);
            assert_eq!(lp.r, 0.0);
        }
    }

    #[test]
    fn vertical_line_through_unit_height() {
        let p = EuclideanPoint::from_xyz(0.0, 0.0, 1.0);
        let lp = lines_through_point(p, ExtComplex::Finite(c(0.0, 0.0)));
        assert!(lp.line.eta_chart().norm() < TOL);
        assert!((lp.r - 1.0).abs() < TOL);
    }

    #[test]
    fn equatorial_line_through_unit_height() {
        let p = EuclideanPoint::from_xyz(0.0, 0.0, 1.0);
        let lp = lines_through_point(p, ExtComplex::Finite(c(1.0, 0.0)));
        assert!((lp.line.eta_chart() - c(-1.0, 0.0)).norm() < TOL);
        assert!(lp.r.abs() < TOL);
        // Cross-check r^2 = |p|^2 - |foot|^2 with |foot| = 1.
        let foot = lp.line.foot_point();
        assert!((lp.r * lp.r + foot.norm().powi(2) - p.norm().powi(2)).abs() < TOL);
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(
            incidence_r(EuclideanPoint::origin(), ExtComplex::Finite(c(0.0, 1.0))),
            0.0
        );
        assert!(
            (incidence_r(
                EuclideanPoint::from_xyz(0.0, 0.0, 1.0),
                ExtComplex::Finite(c(0.0, 0.0))
            ) - 1.0)
                .abs()
                < TOL
        );
        // A vertical line through (2, 0, 0) has its foot at the point itself.
        assert!(
            incidence_r(
                EuclideanPoint::from_xyz(2.0, 0.0, 0.0),
                ExtComplex::Finite(c(0.0, 0.0))
            )
            .abs()
                < TOL
        );
    }

    #[test]
    fn round_trip_recovers_the_point() {
        let p = EuclideanPoint::new(c(1.0, -1.0), 2.0);
        let lp = lines_through_point(p, ExtComplex::Finite(c(0.3, 0.7)));
        assert!(lp.point().approx_eq(&p, 1e-12));
    }

    #[test]
    fn south_pole_direction_works_in_chart_two() {
        let p = EuclideanPoint::new(c(1.0, 2.0), 3.0);
        let lp = lines_through_point(p, ExtComplex::Infinity);
        assert!(!lp.line.xi().is_finite());
        assert!(lp.point().approx_eq(&p, TOL));
        // The line points south, so r decreases along +t: r = -t here.
        assert!((lp.r + 3.0).abs() < TOL);
    }

    #[test]
    fn chart2_incidence_matches_chart1_through_the_transition() {
        let p = EuclideanPoint::new(c(0.4, -2.0), 1.5);
        let xi = c(0.8, -0.6);
        let direct = lines_through_point(p, ExtComplex::Finite(xi));
        let via_chart2 = lines_through_point_chart2(p, 1.0 / xi);
        let back = via_chart2.line.to_other_chart().unwrap();
        assert!((back.xi_chart() - xi).norm() < 1e-12);
        assert!((back.eta_chart() - direct.line.eta_chart()).norm() < 1e-12);
        assert!((via_chart2.r - direct.r).abs() < 1e-12);
    }
}
