//! Paraxial ray-transfer-matrix tracer for stacks of thin lenses.
//!
//! Rays are `(height, angle)` pairs propagating left to right. Sign convention
//! is the usual textbook one: an image distance measured after the last
//! element is positive when the image is real (to the right), and a negative
//! magnification means the image is inverted. This is independent from the
//! closed-form attack model and is used to audit it.

use serde::{Deserialize, Serialize};

use crate::attack::OpticalStack;
use crate::error::{Error, Result};

/// `d` entries smaller than this are treated as zero (output collimated).
const COLLIMATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RayState {
    pub height: f64,
    pub angle: f64,
}

impl RayState {
    pub fn new(height: f64, angle: f64) -> Result<Self> {
        if !(height.is_finite() && angle.is_finite()) {
            return Err(Error::InvalidInput(
                "ray height and angle must be finite".into(),
            ));
        }
        Ok(Self { height, angle })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum OpticalElement {
    FreeSpace(f64),
    ThinLens(f64),
}

impl OpticalElement {
    pub fn free_space(length: f64) -> Result<Self> {
        if !(length.is_finite() && length >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "free-space length must be >= 0, got {length}"
            )));
        }
        Ok(Self::FreeSpace(length))
    }

    pub fn thin_lens(focal_length: f64) -> Result<Self> {
        if !focal_length.is_finite() || focal_length == 0.0 {
            return Err(Error::InvalidInput(format!(
                "focal length must be finite and non-zero, got {focal_length}"
            )));
        }
        Ok(Self::ThinLens(focal_length))
    }

    pub fn matrix(&self) -> TransferMatrix {
        match *self {
            OpticalElement::FreeSpace(d) => TransferMatrix::new(1.0, d, 0.0, 1.0),
            OpticalElement::ThinLens(f) => TransferMatrix::new(1.0, 0.0, -1.0 / f, 1.0),
        }
    }
}

/// 2x2 ABCD matrix acting on `(height, angle)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransferMatrix {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl TransferMatrix {
    pub const IDENTITY: TransferMatrix = TransferMatrix {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// `next · self`: apply `self` first, then `next`.
    pub fn then(&self, next: &TransferMatrix) -> TransferMatrix {
        TransferMatrix {
            a: next.a * self.a + next.b * self.c,
            b: next.a * self.b + next.b * self.d,
            c: next.c * self.a + next.d * self.c,
            d: next.c * self.b + next.d * self.d,
        }
    }

    pub fn apply(&self, ray: RayState) -> RayState {
        RayState {
            height: self.a * ray.height + self.b * ray.angle,
            angle: self.c * ray.height + self.d * ray.angle,
        }
    }
}

/// Product of the element matrices in propagation order.
pub fn compose(elements: &[OpticalElement]) -> TransferMatrix {
    elements
        .iter()
        .fold(TransferMatrix::IDENTITY, |acc, e| acc.then(&e.matrix()))
}

pub fn trace(elements: &[OpticalElement], ray: RayState) -> RayState {
    compose(elements).apply(ray)
}

/// Image of an axial object point, in standard sign convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImagePoint {
    /// Distance from the last element to the image plane; negative means virtual.
    pub distance: f64,
    pub magnification: f64,
}

impl ImagePoint {
    /// Image distance expressed in the attack model's convention
    /// (virtual positive, real negative).
    pub fn attack_convention_distance(&self) -> f64 {
        -self.distance
    }
}

/// Locates the image of an object placed `object_distance` in front of the
/// first element.
pub fn image_of(elements: &[OpticalElement], object_distance: f64) -> Result<ImagePoint> {
    if !(object_distance.is_finite() && object_distance > 0.0) {
        return Err(Error::InvalidInput(format!(
            "object distance must be positive, got {object_distance}"
        )));
    }
    let m = TransferMatrix::new(1.0, object_distance, 0.0, 1.0).then(&compose(elements));
    image_from_matrix(&m)
}

fn image_from_matrix(m: &TransferMatrix) -> Result<ImagePoint> {
    // After a further free-space v, b' = b + v d must vanish for imaging.
    if m.d.abs() < COLLIMATION_TOL {
        return Err(Error::Collimated);
    }
    let distance = -m.b / m.d;
    let magnification = m.a + distance * m.c;
    if !(distance.is_finite() && magnification.is_finite()) {
        return Err(Error::NoImage("non-finite image plane".into()));
    }
    Ok(ImagePoint {
        distance,
        magnification,
    })
}

/// Back focal distance: where rays entering parallel to the axis cross it.
pub fn image_of_collimated(elements: &[OpticalElement]) -> Result<f64> {
    let m = compose(elements);
    // Parallel input (y, 0) leaves as (a y, c y); it crosses the axis after -a/c.
    if m.c.abs() < COLLIMATION_TOL {
        return Err(Error::NoImage("afocal system".into()));
    }
    Ok(-m.a / m.c)
}

pub fn stack_elements(stack: &OpticalStack) -> Vec<OpticalElement> {
    let mut elements = Vec::with_capacity(3);
    match stack.attack_lens {
        Some(lens) => {
            elements.push(OpticalElement::ThinLens(lens.focal_length()));
            elements.push(OpticalElement::FreeSpace(stack.gap));
        }
        // Without an attack lens the camera still sits gap behind the lens plane.
        None => elements.push(OpticalElement::FreeSpace(stack.gap)),
    }
    elements.push(OpticalElement::ThinLens(stack.camera_focal_length));
    elements
}

/// Image formed by the full stack, object to sensor-side image.
pub fn stack_image(stack: &OpticalStack) -> Result<ImagePoint> {
    image_of(&stack_elements(stack), stack.object_distance)
}

/// Image formed by the camera alone for the same object (no attack lens).
pub fn benign_image(stack: &OpticalStack) -> Result<ImagePoint> {
    image_of(
        &[OpticalElement::ThinLens(stack.camera_focal_length)],
        stack.object_distance + stack.gap,
    )
}

pub fn stack_magnification(stack: &OpticalStack) -> Result<f64> {
    stack_image(stack).map(|p| p.magnification)
}
