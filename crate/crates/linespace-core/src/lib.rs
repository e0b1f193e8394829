//! Coordinates on the space of oriented affine lines in Euclidean ℝ³.
//!
//! An oriented line is encoded by a pair of complex numbers (ξ, η): ξ is the
//! stereographic coordinate (projected from the south pole) of the line's unit
//! direction on S², and η is the tangent-vector coordinate at ξ encoding the
//! line's perpendicular displacement from the origin. Together with a signed
//! affine parameter r along the line (r = 0 at the point closest to the
//! origin), this identifies lines-with-incidence with TS² × ℝ and gives
//! closed-form maps in both directions:
//!
//! * [`LinePoint::point`] — (ξ, η, r) to a Euclidean point,
//! * [`lines_through_point`] — a Euclidean point and a direction ξ back to
//!   (η, r).
//!
//! Euclidean ℝ³ is split as ℂ ⊕ ℝ: a point is (z, t) with z = x¹ + ix² and
//! t = x³. The south-pole direction has no finite ξ, so the sphere carries a
//! two-chart atlas with transition ξ̃ = 1/ξ, η̃ = −η/ξ²; every line stores the
//! chart its coordinates live in, and all maps are exact in either chart.
//!
//! All operations are pure functions of plain `Copy` data; nothing here holds
//! shared mutable state.

mod error;
mod ext_complex;
mod euclidean;
mod incidence;
mod line;
mod projection;

pub use error::Error;
pub use ext_complex::ExtComplex;
pub use euclidean::{inner, EuclideanPoint, Vector3};
pub use incidence::{incidence_r, lines_through_point, lines_through_point_chart2};
pub use line::{Chart, LinePoint, OrientedLine};
pub use projection::{dir_from_xi, xi_from_dir};

pub use num_complex::Complex64;
