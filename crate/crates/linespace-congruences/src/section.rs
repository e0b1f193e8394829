use linespace_core::{Complex64, EuclideanPoint, ExtComplex, LinePoint};
use thiserror::Error;

use crate::torus::Branch;

/// Where on the sphere a section is defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    FullSphere,
    SphereMinusPoles,
    /// Defined only on the given chart's coordinate disk.
    ChartRestriction(linespace_core::Chart),
}

/// Errors from evaluating or probing a section.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SectionError {
    /// The sample hits a branch point of the section (or its numerical
    /// guard band around one).
    #[error("direction coordinate {xi} is at or too close to a branch point")]
    BranchPoint { xi: Complex64 },

    /// The sample lies outside the section's declared domain.
    #[error("sample lies outside the section's domain")]
    OutsideDomain,

    /// A surface parameter that must be positive was not.
    #[error("parameter {name} must be positive (got {value})")]
    NonPositiveParameter { name: &'static str, value: f64 },

    /// The ellipsoid radicand came out non-positive. Cannot happen for
    /// positive parameters; guarded anyway.
    #[error("ellipsoid radicand is not positive ({value})")]
    NonPositiveRadicand { value: f64 },

    /// The reconstructed surface map has a (numerically) vanishing tangent
    /// at the requested point, so a normal direction cannot be certified.
    #[error("degenerate surface parametrization (tangent norm {norm})")]
    DegenerateTangent { norm: f64 },
}

/// A section of the line space over the direction sphere: for each admissible
/// direction coordinate, the line of the congruence with that direction and
/// the affine parameter at which the surface meets it.
pub trait LineSection {
    /// Evaluate the section. Finite ξ is evaluated in chart one; `Infinity`
    /// in chart two at its origin.
    fn eval(&self, xi: ExtComplex) -> Result<LinePoint, SectionError>;

    /// Evaluate in the second chart, where the direction coordinate is 1/ξ.
    /// This is how a section's behaviour "at infinity" is reached with
    /// finite arithmetic.
    fn eval_chart2(&self, xi: Complex64) -> Result<LinePoint, SectionError>;

    fn domain(&self) -> Domain;

    fn branch(&self) -> Option<Branch> {
        None
    }
}

/// Reconstruct surface points at the given direction samples, in order.
/// Samples outside the domain produce a per-sample error and do not affect
/// their neighbours.
pub fn reconstruct(
    section: &dyn LineSection,
    samples: &[ExtComplex],
) -> Vec<Result<EuclideanPoint, SectionError>> {
    samples
        .iter()
        .map(|xi| section.eval(*xi).map(|lp| lp.point()))
        .collect()
}
