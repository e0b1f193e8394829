use linespace_core::{dir_from_xi, inner, Complex64, EuclideanPoint, ExtComplex};

use crate::section::{LineSection, SectionError};

/// Numerically certify that a section's reconstructed surface is orthogonal
/// to the congruence at `xi`.
///
/// The surface map X(ξ) is sampled by central finite differences with step
/// `h` in the two real coordinate directions of ξ (in chart two when `xi` is
/// `Infinity`), the two tangent vectors are normalized, and the largest
/// absolute inner product with the line direction is returned. Small values
/// certify normality; the caller owns the threshold.
///
/// Tangents with norm below h² cannot be normalized meaningfully and report
/// a degenerate parametrization — the radius-zero point sphere everywhere,
/// and the torus at its branch points.
///
/// Panics if `h` is not strictly positive.
pub fn verify_normality(
    section: &dyn LineSection,
    xi: ExtComplex,
    h: f64,
) -> Result<f64, SectionError> {
    assert!(h > 0.0, "finite-difference step must be positive");

    let (center, chart2) = match xi {
        ExtComplex::Finite(value) => (value, false),
        ExtComplex::Infinity => (Complex64::new(0.0, 0.0), true),
    };
    let at = |z: Complex64| -> Result<EuclideanPoint, SectionError> {
        let lp = if chart2 {
            section.eval_chart2(z)?
        } else {
            section.eval(ExtComplex::Finite(z))?
        };
        Ok(lp.point())
    };

    let step_re = Complex64::new(h, 0.0);
    let step_im = Complex64::new(0.0, h);
    let tangent_re = (at(center + step_re)? - at(center - step_re)?) * (0.5 / h);
    let tangent_im = (at(center + step_im)? - at(center - step_im)?) * (0.5 / h);

    let norm_re = tangent_re.norm();
    let norm_im = tangent_im.norm();
    let smallest = norm_re.min(norm_im);
    if smallest < h * h {
        return Err(SectionError::DegenerateTangent { norm: smallest });
    }

    let direction = if chart2 {
        // Direction at the stencil center; for finite chart-two coordinates
        // away from the origin this equals dir_from_xi(1/ξ̃).
        section.eval_chart2(center)?.line.direction()
    } else {
        dir_from_xi(ExtComplex::Finite(center))
    };

    let res_re = inner(direction, tangent_re * (1.0 / norm_re)).abs();
    let res_im = inner(direction, tangent_im * (1.0 / norm_im)).abs();
    Ok(res_re.max(res_im))
}
