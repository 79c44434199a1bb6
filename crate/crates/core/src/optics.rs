//! Single thin-lens relations in the attack model's sign convention, plus the
//! pinhole size/depth relation.
//!
//! Convention (per lens stage):
//! * focal length: negative for concave, positive for convex;
//! * image distance: positive for a virtual image, negative for a real one;
//! * magnification: positive for an upright image, negative for an inverted one.
//!
//! The image distance and magnification are evaluated exactly as the closed
//! forms `d_i = -d_o f / (d_o - f)` and `m = -f / (d_o - f)`. These two do not
//! satisfy `m = -d_i / d_o` simultaneously; the two-lens formulas built on
//! them are what reproduce the published attack tables, so they are kept
//! verbatim. Physical orientation is cross-checked by [`crate::ray`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Guard band around singular denominators, in meters.
pub const EPSILON: f64 = 1e-9;

/// Tolerance used when deciding whether |m| equals 1.
const UNIT_MAGNIFICATION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LensKind {
    Concave,
    Convex,
}

/// An ideal thin lens described by its signed focal length in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ThinLens {
    focal_length: f64,
}

impl ThinLens {
    pub fn new(focal_length: f64) -> Result<Self> {
        if !focal_length.is_finite() || focal_length == 0.0 {
            return Err(Error::InvalidInput(format!(
                "focal length must be finite and non-zero, got {focal_length}"
            )));
        }
        Ok(Self { focal_length })
    }

    pub fn focal_length(&self) -> f64 {
        self.focal_length
    }

    pub fn kind(&self) -> LensKind {
        if self.focal_length < 0.0 {
            LensKind::Concave
        } else {
            LensKind::Convex
        }
    }

    pub fn is_concave(&self) -> bool {
        self.kind() == LensKind::Concave
    }

    /// Image distance for an object `object_distance` meters in front of the lens.
    pub fn image_distance(&self, object_distance: f64) -> Result<f64> {
        let denom = self.checked_denominator(object_distance)?;
        Ok(-object_distance * self.focal_length / denom)
    }

    /// Lateral magnification for an object `object_distance` meters in front of the lens.
    pub fn magnification(&self, object_distance: f64) -> Result<f64> {
        let denom = self.checked_denominator(object_distance)?;
        Ok(-self.focal_length / denom)
    }

    pub fn form(&self, object_distance: f64) -> Result<SingleFormation> {
        let image_distance = self.image_distance(object_distance)?;
        let magnification = self.magnification(object_distance)?;
        Ok(SingleFormation::new(image_distance, magnification))
    }

    fn checked_denominator(&self, object_distance: f64) -> Result<f64> {
        if !(object_distance.is_finite() && object_distance > 0.0) {
            return Err(Error::InvalidInput(format!(
                "object distance must be positive, got {object_distance}"
            )));
        }
        let denom = object_distance - self.focal_length;
        if denom.abs() < EPSILON {
            return Err(Error::DegenerateFocus {
                focal_length: self.focal_length,
                object_distance,
            });
        }
        Ok(denom)
    }
}

impl TryFrom<f64> for ThinLens {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        ThinLens::new(value)
    }
}

impl From<ThinLens> for f64 {
    fn from(lens: ThinLens) -> f64 {
        lens.focal_length
    }
}

/// Free function form of [`ThinLens::image_distance`].
pub fn image_distance(lens: &ThinLens, object_distance: f64) -> Result<f64> {
    lens.image_distance(object_distance)
}

/// Free function form of [`ThinLens::magnification`].
pub fn lens_magnification(lens: &ThinLens, object_distance: f64) -> Result<f64> {
    lens.magnification(object_distance)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Virtuality {
    Virtual,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Upright,
    Inverted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SizeClass {
    Smaller,
    Equal,
    Larger,
}

/// Image formed by one lens stage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingleFormation {
    pub image_distance: f64,
    pub magnification: f64,
    pub virtuality: Virtuality,
    pub orientation: Orientation,
}

impl SingleFormation {
    fn new(image_distance: f64, magnification: f64) -> Self {
        let virtuality = if image_distance > 0.0 {
            Virtuality::Virtual
        } else {
            Virtuality::Real
        };
        let orientation = if magnification > 0.0 {
            Orientation::Upright
        } else {
            Orientation::Inverted
        };
        Self {
            image_distance,
            magnification,
            virtuality,
            orientation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ImageClass {
    pub virtuality: Virtuality,
    pub orientation: Orientation,
    pub size: SizeClass,
}

pub fn classify_image(formation: &SingleFormation) -> ImageClass {
    let m = formation.magnification.abs();
    let size = if (m - 1.0).abs() <= UNIT_MAGNIFICATION_TOL {
        SizeClass::Equal
    } else if m < 1.0 {
        SizeClass::Smaller
    } else {
        SizeClass::Larger
    };
    ImageClass {
        virtuality: formation.virtuality,
        orientation: formation.orientation,
        size,
    }
}

/// Pinhole projection of an object of height `object_size` at `object_distance`
/// onto a sensor `pinhole_to_sensor` behind the pinhole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PinholeProjection {
    pub object_size: f64,
    pub pinhole_to_sensor: f64,
    pub object_distance: f64,
    pub image_size: f64,
}

impl PinholeProjection {
    pub fn new(object_size: f64, pinhole_to_sensor: f64, object_distance: f64) -> Result<Self> {
        for (name, v) in [
            ("object_size", object_size),
            ("pinhole_to_sensor", pinhole_to_sensor),
            ("object_distance", object_distance),
        ] {
            require_positive(name, v)?;
        }
        Ok(Self {
            object_size,
            pinhole_to_sensor,
            object_distance,
            image_size: object_size * pinhole_to_sensor / object_distance,
        })
    }
}

/// Ratio of image sizes `a_1 / a_2` of the same object seen at `distance_a`
/// and `distance_b`.
pub fn pinhole_size_ratio(distance_a: f64, distance_b: f64) -> Result<f64> {
    require_positive("distance_a", distance_a)?;
    require_positive("distance_b", distance_b)?;
    Ok(distance_b / distance_a)
}

pub(crate) fn require_positive(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidInput(format!(
            "{name} must be finite and > 0, got {value}"
        )))
    }
}
