use num_complex::Complex64;

/// A point of the extended complex plane ℂ ∪ {∞}.
///
/// Finite values are direction coordinates obtained by stereographic
/// projection from the south pole; `Infinity` is the south pole itself.
/// The two cases are mutually exclusive and total: a `Finite` value produced
/// by this crate never carries a non-finite component.
///
/// There is deliberately no `PartialEq` impl. Comparison is exact on the tag
/// and tolerance-based on finite values, and the tolerance must always come
/// from the caller — see [`ExtComplex::approx_eq`].
#[derive(Debug, Clone, Copy)]
pub enum ExtComplex {
    Finite(Complex64),
    Infinity,
}

impl ExtComplex {
    /// Wraps a complex value, normalising non-finite components to `Infinity`.
    pub fn finite(value: Complex64) -> Self {
        if value.re.is_finite() && value.im.is_finite() {
            ExtComplex::Finite(value)
        } else {
            ExtComplex::Infinity
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtComplex::Finite(_))
    }

    pub fn as_finite(&self) -> Option<Complex64> {
        match self {
            ExtComplex::Finite(value) => Some(*value),
            ExtComplex::Infinity => None,
        }
    }

    /// Modulus on the Riemann sphere; `Infinity` maps to `f64::INFINITY`.
    pub fn modulus(&self) -> f64 {
        match self {
            ExtComplex::Finite(value) => value.norm(),
            ExtComplex::Infinity => f64::INFINITY,
        }
    }

    /// 1/ξ on the Riemann sphere, exchanging 0 and ∞.
    pub fn recip(&self) -> Self {
        match self {
            ExtComplex::Finite(value) if value.norm_sqr() == 0.0 => ExtComplex::Infinity,
            ExtComplex::Finite(value) => ExtComplex::finite(1.0 / value),
            ExtComplex::Infinity => ExtComplex::Finite(Complex64::new(0.0, 0.0)),
        }
    }

    /// Equality up to an explicit absolute tolerance on finite values.
    ///
    /// `Infinity` equals only `Infinity`; mixed tags never compare equal.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        match (self, other) {
            (ExtComplex::Finite(a), ExtComplex::Finite(b)) => (a - b).norm() <= tol,
            (ExtComplex::Infinity, ExtComplex::Infinity) => true,
            _ => false,
        }
    }
}

impl From<Complex64> for ExtComplex {
    fn from(value: Complex64) -> Self {
        ExtComplex::finite(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_rejects_non_finite_components() {
        assert!(!ExtComplex::finite(Complex64::new(f64::INFINITY, 0.0)).is_finite());
        assert!(!ExtComplex::finite(Complex64::new(0.0, f64::NAN)).is_finite());
        assert!(ExtComplex::finite(Complex64::new(1.0, -2.0)).is_finite());
    }

    #[test]
    fn approx_eq_is_exact_on_the_tag() {
        let near_pole = ExtComplex::Finite(Complex64::new(1e300, 0.0));
        assert!(!near_pole.approx_eq(&ExtComplex::Infinity, f64::MAX));
        assert!(ExtComplex::Infinity.approx_eq(&ExtComplex::Infinity, 0.0));
    }

    #[test]
    fn approx_eq_uses_caller_tolerance() {
        let a = ExtComplex::Finite(Complex64::new(1.0, 0.0));
        let b = ExtComplex::Finite(Complex64::new(1.0 + 1e-12, 0.0));
        assert!(a.approx_eq(&b, 1e-10));
        assert!(!a.approx_eq(&b, 1e-14));
    }

    #[test]
    fn recip_swaps_zero_and_infinity() {
        let zero = ExtComplex::Finite(Complex64::new(0.0, 0.0));
        assert!(!zero.recip().is_finite());
        assert!(ExtComplex::Infinity.recip().approx_eq(&zero, 0.0));

        let two = ExtComplex::Finite(Complex64::new(2.0, 0.0));
        let half = ExtComplex::Finite(Complex64::new(0.5, 0.0));
        assert!(two.recip().approx_eq(&half, 1e-15));
    }
}
