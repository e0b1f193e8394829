//! Surfaces in ℝ³ represented through their normal-line congruences.
//!
//! A surface's oriented normals form a 2-parameter family of lines; indexing
//! each normal by its direction coordinate ξ turns the family into a section
//! ξ ↦ (η(ξ), r(ξ)) over (part of) the sphere, where η fixes the line and r
//! says where along it the surface sits. Reconstructing the surface is then
//! just the line-to-point map applied pointwise, and "the congruence really
//! is normal" becomes a numerically checkable statement
//! ([`verify_normality`]).
//!
//! Three closed-form section families are provided:
//!
//! * [`SphereSection`] — the lines through a fixed point, offset by a radius;
//!   normal to the round spheres about that point.
//! * [`EllipsoidSection`] — the triaxial ellipsoid
//!   x²/a₁ + y²/a₂ + t²/a₃ = 1, a global section defined on the whole
//!   sphere including ξ = ∞ via the second chart.
//! * [`TorusSection`] — the rotationally symmetric torus, one section per
//!   branch of the 2:1 direction cover, defined away from the poles.
//!
//! Sections are immutable values and every evaluation is pure.

mod ellipsoid;
mod normality;
mod section;
mod sphere;
mod torus;

pub use ellipsoid::{implicit_residual_ellipsoid, EllipsoidParams, EllipsoidSection};
pub use normality::verify_normality;
pub use section::{reconstruct, Domain, LineSection, SectionError};
pub use sphere::SphereSection;
pub use torus::{implicit_residual_torus, Branch, TorusParams, TorusSection};
