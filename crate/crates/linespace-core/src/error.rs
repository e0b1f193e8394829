use thiserror::Error;

/// Errors raised by the coordinate maps.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    /// Input to the inverse stereographic projection was not a unit vector.
    #[error("direction is not a unit vector (measured norm {norm})")]
    NotUnit { norm: f64 },

    /// Chart transition requested at ξ = 0, which the opposite chart cannot
    /// represent with finite coordinates.
    #[error("chart transition is undefined at the chart origin (xi = 0)")]
    TransitionAtOrigin,
}
