//! Optical-lens attacks on monocular depth estimation.
//!
//! * [`optics`]: single thin-lens relations and the pinhole size/depth rule.
//! * [`ray`]: paraxial ABCD tracer, used as an independent check.
//! * [`attack`]: two-lens attack model, scenarios, metrics, planner and sweeps.
//! * [`image_sim`]: renders the geometric and defocus effect on frames.
//! * [`defense`]: variance-of-Laplacian blur detection.

pub mod attack;
pub mod defense;
mod error;
pub mod image_sim;
pub mod optics;
pub mod raster;
pub mod ray;

pub use error::{AchievableRange, Error, Result};
pub use raster::{RasterImage, RegionSpec};
