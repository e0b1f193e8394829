use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// A vector in ℝ³ = ℂ ⊕ ℝ, stored as a complex z-part and a real t-part.
///
/// The basis inner products are (∂z, ∂z̄) = 1/2, (∂t, ∂t) = 1 and all other
/// pairs zero, so the induced real product is [`inner`] below and agrees with
/// the ordinary Euclidean product on (x¹, x², x³).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector3 {
    pub vz: Complex64,
    pub vt: f64,
}

impl Vector3 {
    pub fn new(vz: Complex64, vt: f64) -> Self {
        Vector3 { vz, vt }
    }

    pub fn from_xyz(x: f64, y: f64, t: f64) -> Self {
        Vector3 {
            vz: Complex64::new(x, y),
            vt: t,
        }
    }

    pub fn x(&self) -> f64 {
        self.vz.re
    }

    pub fn y(&self) -> f64 {
        self.vz.im
    }

    pub fn norm_squared(&self) -> f64 {
        inner(*self, *self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.vz.re.is_finite() && self.vz.im.is_finite() && self.vt.is_finite()
    }

    /// Componentwise comparison with an explicit absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.vz.re - other.vz.re).abs() <= tol
            && (self.vz.im - other.vz.im).abs() <= tol
            && (self.vt - other.vt).abs() <= tol
    }
}

/// The Euclidean inner product in (z, t) components:
/// Re(u_z · v̄_z) + u_t · v_t.
pub fn inner(u: Vector3, v: Vector3) -> f64 {
    (u.vz * v.vz.conj()).re + u.vt * v.vt
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, rhs: Vector3) -> Vector3 {
        Vector3::new(self.vz + rhs.vz, self.vt + rhs.vt)
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, rhs: Vector3) -> Vector3 {
        Vector3::new(self.vz - rhs.vz, self.vt - rhs.vt)
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3::new(-self.vz, -self.vt)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Vector3;
    fn mul(self, rhs: f64) -> Vector3 {
        Vector3::new(self.vz * rhs, self.vt * rhs)
    }
}

/// A point of Euclidean ℝ³ in (z, t) coordinates, z = x¹ + ix², t = x³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanPoint {
    pub z: Complex64,
    pub t: f64,
}

impl EuclideanPoint {
    pub fn new(z: Complex64, t: f64) -> Self {
        EuclideanPoint { z, t }
    }

    pub fn from_xyz(x: f64, y: f64, t: f64) -> Self {
        EuclideanPoint {
            z: Complex64::new(x, y),
            t,
        }
    }

    pub fn origin() -> Self {
        EuclideanPoint::from_xyz(0.0, 0.0, 0.0)
    }

    pub fn x(&self) -> f64 {
        self.z.re
    }

    pub fn y(&self) -> f64 {
        self.z.im
    }

    /// The displacement vector from the origin to this point.
    pub fn to_vector(&self) -> Vector3 {
        Vector3::new(self.z, self.t)
    }

    /// Distance from the origin.
    pub fn norm(&self) -> f64 {
        self.to_vector().norm()
    }

    pub fn is_finite(&self) -> bool {
        self.z.re.is_finite() && self.z.im.is_finite() && self.t.is_finite()
    }

    /// Componentwise comparison with an explicit absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.to_vector().approx_eq(&other.to_vector(), tol)
    }
}

impl Add<Vector3> for EuclideanPoint {
    type Output = EuclideanPoint;
    fn add(self, rhs: Vector3) -> EuclideanPoint {
        EuclideanPoint::new(self.z + rhs.vz, self.t + rhs.vt)
    }
}

impl Sub for EuclideanPoint {
    type Output = Vector3;
    fn sub(self, rhs: EuclideanPoint) -> Vector3 {
        Vector3::new(self.z - rhs.z, self.t - rhs.t)
    }
}
