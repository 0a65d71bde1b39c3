use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Expression text violated the grammar.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A mixed partial of order above 5 was requested.
    #[error("derivative order {order} exceeds the supported maximum of 5")]
    OrderExceeded { order: usize },

    /// Evaluation left the domain of a function (ln, sqrt, division, ...).
    #[error("domain error: {message}")]
    Domain { message: String },

    /// The first partials of a surface are (numerically) linearly dependent.
    #[error("surface '{surface}' is not regular at the evaluated point (margin {margin:.3e})")]
    NotRegular { surface: String, margin: f64 },

    /// A linear system had no usable pivot.
    #[error("singular linear system: {context}")]
    SingularSystem { context: &'static str },

    /// Gram-Schmidt input was linearly dependent.
    #[error("rank-deficient input at position {position} (residual norm {residual:.3e})")]
    RankDeficient { position: usize, residual: f64 },

    /// The four surface normals do not span a 4-dimensional space.
    #[error("normals are not transversal (quadruple-product norm {norm:.3e})")]
    NonTransversal { norm: f64 },

    /// The Frenet construction collapsed: level 1 = kappa1, 2 = kappa2, 3 = kappa3.
    #[error("Frenet frame degenerates at level {level}")]
    DegenerateFrenet { level: u8 },

    /// Corrector failed to reach tolerance.
    #[error("Newton corrector diverged after {iterations} iterations (residual {residual:.3e})")]
    NewtonDivergence { iterations: usize, residual: f64 },

    /// A trace was too short for the requested stencil.
    #[error("trace has {got} points but at least {needed} are required")]
    InsufficientTrace { needed: usize, got: usize },

    /// The four parameter tuples do not map to the same ambient point.
    #[error("surfaces disagree at the starting point (max pairwise distance {residual:.3e})")]
    PointMismatch { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
