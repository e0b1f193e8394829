//! Flag value parsers and the CSV number format.

use linespace_core::{Complex64, EuclideanPoint, ExtComplex};

pub fn parse_f64(s: &str, what: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("malformed {what} '{s}'"))
        .and_then(|v| {
            if v.is_finite() {
                Ok(v)
            } else {
                Err(format!("{what} must be finite, got '{s}'"))
            }
        })
}

/// 're,im' or a bare real part.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(Complex64::new(parse_f64(re, "complex value")?, 0.0)),
        [re, im] => Ok(Complex64::new(
            parse_f64(re, "complex value")?,
            parse_f64(im, "complex value")?,
        )),
        _ => Err(format!("expected 're' or 're,im', got '{s}'")),
    }
}

/// A complex value or the point at infinity ('inf' / 'infinity').
pub fn parse_ext_complex(s: &str) -> Result<ExtComplex, String> {
    match s.trim() {
        "inf" | "infinity" => Ok(ExtComplex::Infinity),
        other => parse_complex(other).map(ExtComplex::Finite),
    }
}

/// 'x,y,t'.
pub fn parse_point(s: &str) -> Result<EuclideanPoint, String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [x, y, t] => Ok(EuclideanPoint::from_xyz(
            parse_f64(x, "point coordinate")?,
            parse_f64(y, "point coordinate")?,
            parse_f64(t, "point coordinate")?,
        )),
        _ => Err(format!("expected 'x,y,t', got '{s}'")),
    }
}

/// Fixed 17-significant-digit decimal, enough to round-trip any f64 exactly,
/// so repeated runs and re-parses of the CSV are bit-faithful.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("1,-2").unwrap(), Complex64::new(1.0, -2.0));
        assert!(parse_complex("a,b").is_err());
        assert!(parse_complex("1,2,3").is_err());
    }

    #[test]
    fn extended_forms() {
        assert!(!parse_ext_complex("inf").unwrap().is_finite());
        assert!(parse_ext_complex("0,1").unwrap().is_finite());
        assert!(parse_ext_complex("nan").is_err());
    }

    #[test]
    fn format_round_trips_exactly() {
        for v in [0.0, 1.0, -1.0 / 3.0, 6.02e23, -2.2e-308, std::f64::consts::PI] {
            let s = fmt_f64(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }
}
