//! Property tests for the coordinate maps.
//!
//! Sampling ranges follow the library's conditioning: the (1 + ξξ̄)²
//! denominators lose precision for large coordinates, so chart-one samples
//! keep |ξ| ≤ 1e3 and identities quoted at tighter tolerances use smaller
//! boxes. The projection round trip is checked relative to max(1, |ξ|), the
//! scale at which f64 can represent ξ at all.

use linespace_core::{
    dir_from_xi, incidence_r, inner, lines_through_point, xi_from_dir, Complex64, EuclideanPoint,
    ExtComplex, LinePoint, OrientedLine, Vector3,
};
use proptest::prelude::*;

fn complex_box(limit: f64) -> impl Strategy<Value = Complex64> {
    (-limit..limit, -limit..limit).prop_map(|(re, im)| Complex64::new(re, im))
}

fn point_box(limit: f64) -> impl Strategy<Value = EuclideanPoint> {
    (-limit..limit, -limit..limit, -limit..limit)
        .prop_map(|(x, y, t)| EuclideanPoint::from_xyz(x, y, t))
}

/// Log-uniform modulus so both tiny and huge |ξ| get exercised.
fn complex_log_modulus(min_exp: f64, max_exp: f64) -> impl Strategy<Value = Complex64> {
    (min_exp..max_exp, 0.0..std::f64::consts::TAU)
        .prop_map(|(e, th)| Complex64::from_polar(10f64.powf(e), th))
}

proptest! {
    /// Encoded directions are unit vectors.
    #[test]
    fn unit_direction(xi in complex_box(1e3)) {
        let v = dir_from_xi(ExtComplex::Finite(xi));
        prop_assert!((inner(v, v) - 1.0).abs() < 1e-12);
    }

    /// The inverse projection undoes the projection, up to relative rounding.
    #[test]
    fn projection_round_trip(xi in complex_log_modulus(-6.0, 6.0)) {
        let back = xi_from_dir(dir_from_xi(ExtComplex::Finite(xi)), 1e-9).unwrap();
        let back = back.as_finite().unwrap();
        prop_assert!((back - xi).norm() <= 1e-10 * xi.norm().max(1.0));
    }

    /// r is an affine parameter: moving by Δr moves by Δr times the
    /// direction, componentwise.
    #[test]
    fn line_parametrization(
        xi in complex_box(1e3),
        eta in complex_box(1e2),
        r1 in -1e3..1e3f64,
        r2 in -1e3..1e3f64,
    ) {
        let line = OrientedLine::chart1(xi, eta);
        let p1 = LinePoint::new(line, r1).point();
        let p2 = LinePoint::new(line, r2).point();
        let expected = line.direction() * (r1 - r2);
        prop_assert!((p1 - p2).approx_eq(&expected, 1e-10));
    }

    /// The fixed vector determining the line is orthogonal to the line.
    #[test]
    fn perp_is_orthogonal(xi in complex_box(1e3), eta in complex_box(1e3)) {
        let line = OrientedLine::chart1(xi, eta);
        prop_assert!(inner(line.perp_displacement(), line.direction()).abs() < 1e-12);
    }

    /// Solving for (η, r) and mapping back recovers the point.
    #[test]
    fn inverse_correctness(p in point_box(1e3), xi in complex_box(1e3)) {
        let lp = lines_through_point(p, ExtComplex::Finite(xi));
        prop_assert!(lp.point().approx_eq(&p, 1e-10));
    }

    /// r² + |foot|² = |p|²: r measures the leg of the right triangle with
    /// hypotenuse |p| and the foot point at the right angle.
    #[test]
    fn minimal_distance_identity(p in point_box(50.0), xi in complex_box(1e3)) {
        let lp = lines_through_point(p, ExtComplex::Finite(xi));
        let foot = lp.line.foot_point();
        let identity = lp.r * lp.r + foot.to_vector().norm_squared()
            - p.to_vector().norm_squared();
        prop_assert!(identity.abs() < 1e-10);
    }

    /// No point of a line is closer to the origin than the foot point, and
    /// the distance grows exactly as |X(r)|² = |foot|² + r².
    #[test]
    fn foot_minimality(
        xi in complex_box(1e2),
        eta in complex_box(1e2),
        offsets in prop::collection::vec(-1e2..1e2f64, 20),
    ) {
        let line = OrientedLine::chart1(xi, eta);
        let foot_sq = line.foot_point().to_vector().norm_squared();
        for r in offsets {
            let dist_sq = LinePoint::new(line, r).point().to_vector().norm_squared();
            prop_assert!(dist_sq >= foot_sq - 1e-9);
            prop_assert!((dist_sq - foot_sq - r * r).abs() < 1e-8);
        }
    }

    /// Both charts agree on the Euclidean foot point.
    #[test]
    fn chart_coherence(xi in complex_log_modulus(-3.0, 3.0), eta in complex_box(1e2)) {
        let line = OrientedLine::chart1(xi, eta);
        let other = line.to_other_chart().unwrap();
        prop_assert!(other.foot_point().approx_eq(&line.foot_point(), 1e-9));
        prop_assert!(other.direction().approx_eq(&line.direction(), 1e-12));
    }

    /// The chart transition is an involution on the coordinates.
    #[test]
    fn chart_transition_involution(xi in complex_log_modulus(-3.0, 3.0), eta in complex_box(1e2)) {
        let line = OrientedLine::chart1(xi, eta);
        let back = line.to_other_chart().unwrap().to_other_chart().unwrap();
        prop_assert!((back.xi_chart() - xi).norm() < 1e-9 * xi.norm().max(1.0));
        prop_assert!((back.eta_chart() - eta).norm() < 1e-9 * eta.norm().max(1.0));
    }

    /// The incidence parameter never exceeds the distance to the origin.
    #[test]
    fn incidence_bounded_by_distance(p in point_box(1e2), xi in complex_box(1e2)) {
        let r = incidence_r(p, ExtComplex::Finite(xi));
        prop_assert!(r.abs() <= p.norm() + 1e-9);
    }
}

#[test]
fn unit_direction_at_the_south_pole() {
    let v = dir_from_xi(ExtComplex::Infinity);
    assert_eq!(inner(v, v), 1.0);
}

#[test]
fn round_trip_tags_the_south_pole() {
    let back = xi_from_dir(Vector3::from_xyz(0.0, 0.0, -1.0), 1e-12).unwrap();
    assert!(!back.is_finite());
}

#[test]
fn near_south_directions_map_to_large_moduli_consistently() {
    // Walking the direction toward the south pole must push |ξ| up
    // monotonically, not jump between huge values and Infinity.
    let mut last = 0.0;
    for k in 1..=12 {
        let xi = Complex64::from_polar(10f64.powi(k), 0.4);
        let back = xi_from_dir(dir_from_xi(ExtComplex::Finite(xi)), 1e-9).unwrap();
        let modulus = back.modulus();
        assert!(modulus > last, "modulus should grow toward the pole");
        last = modulus;
    }
}
