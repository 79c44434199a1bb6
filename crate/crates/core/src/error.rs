use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the optics, attack, raster and defense layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Object sits on the focal point; the image forms at infinity.
    #[error("degenerate focus: object distance {object_distance} m is within epsilon of focal length {focal_length} m")]
    DegenerateFocus {
        focal_length: f64,
        object_distance: f64,
    },

    #[error("optical system forms no image: {0}")]
    NoImage(String),

    #[error("rays leave the system collimated; image at infinity")]
    Collimated,

    #[error("singular denominator in {0}")]
    SingularDenominator(&'static str),

    #[error("target depth {target} m unreachable; achievable ranges: {}", format_ranges(.ranges))]
    Unreachable {
        target: f64,
        ranges: Vec<AchievableRange>,
    },

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("invalid magnification {0}; must be finite and > 0")]
    InvalidMagnification(f64),

    #[error("image too small: {width}x{height}, need at least 3x3")]
    TooSmall { width: usize, height: usize },

    #[error("image i/o: {0}")]
    Io(String),
}

impl Error {
    /// Stable variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::DegenerateFocus { .. } => "DegenerateFocus",
            Error::NoImage(_) => "NoImage",
            Error::Collimated => "Collimated",
            Error::SingularDenominator(_) => "SingularDenominator",
            Error::Unreachable { .. } => "Unreachable",
            Error::InvalidRegion(_) => "InvalidRegion",
            Error::InvalidMagnification(_) => "InvalidMagnification",
            Error::TooSmall { .. } => "TooSmall",
            Error::Io(_) => "Io",
        }
    }
}

/// Depth range one planner candidate can reach over the searched gap interval.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct AchievableRange {
    pub focal_length: f64,
    /// `None` when no sampled gap produced a feasible configuration.
    pub min_depth: Option<f64>,
    pub max_depth: Option<f64>,
}

fn format_ranges(ranges: &[AchievableRange]) -> String {
    ranges
        .iter()
        .map(|r| match (r.min_depth, r.max_depth) {
            (Some(lo), Some(hi)) => format!("f={} m: [{lo:.4}, {hi:.4}] m", r.focal_length),
            _ => format!("f={} m: no feasible gap", r.focal_length),
        })
        .collect::<Vec<_>>()
        .join("; ")
}
