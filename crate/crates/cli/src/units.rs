//! Length parsing at the command-line boundary. Everything past this module
//! works in meters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LengthError {
    #[error("'{0}' has no unit; append m, cm or mm")]
    MissingUnit(String),
    #[error("'{0}' is not a finite number with a unit")]
    Malformed(String),
}

/// A length in meters, written with an explicit m, cm or mm suffix.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Length(f64);

impl Length {
    pub fn meters(self) -> f64 {
        self.0
    }

    pub fn from_meters(value: f64) -> Self {
        Self(value)
    }
}

impl FromStr for Length {
    type Err = LengthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        // Dividing keeps "-20cm", "-0.2m" and "-200mm" bit-identical.
        let (number, divisor) = if let Some(n) = text.strip_suffix("mm") {
            (n, 1000.0)
        } else if let Some(n) = text.strip_suffix("cm") {
            (n, 100.0)
        } else if let Some(n) = text.strip_suffix('m') {
            (n, 1.0)
        } else if text.parse::<f64>().is_ok() {
            return Err(LengthError::MissingUnit(s.to_string()));
        } else {
            return Err(LengthError::Malformed(s.to_string()));
        };
        match number.trim_end().parse::<f64>() {
            Ok(v) if v.is_finite() && !number.is_empty() => Ok(Self(v / divisor)),
            _ => Err(LengthError::Malformed(s.to_string())),
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}m", self.0)
    }
}

impl Serialize for Length {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Length {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Attack-lens focal length, or `none` for the benign camera.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FocalSpec {
    None,
    Lens(Length),
}

impl FocalSpec {
    pub fn meters(self) -> Option<f64> {
        match self {
            FocalSpec::None => None,
            FocalSpec::Lens(l) => Some(l.meters()),
        }
    }
}

impl FromStr for FocalSpec {
    type Err = LengthError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("none") {
            Ok(FocalSpec::None)
        } else {
            s.parse().map(FocalSpec::Lens)
        }
    }
}

impl fmt::Display for FocalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FocalSpec::None => f.write_str("none"),
            FocalSpec::Lens(l) => l.fmt(f),
        }
    }
}

impl Serialize for FocalSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FocalSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
