//! Digital simulation of an attack lens on a camera frame: radial resampling
//! about the lens center (full-frame crop/enlarge, partial enlarge/shrink)
//! and Gaussian defocus confined to the covered region.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::attack::{evaluate, AttackOutcome, OpticalStack, ScenarioKind};
use crate::error::{Error, Result};
use crate::raster::{to_u8, RasterImage, RegionSpec};
use crate::ray;

/// Default blur per meter of focal-plane shift, in pixels per meter. Typical
/// attack stacks shift the image plane by 1 to 6 mm, which maps to sigma 1.6 to 9.4 px.
pub const DEFAULT_BLUR_PER_METER: f64 = 1500.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformSpec {
    pub magnification: f64,
    pub blur_sigma: f64,
}

impl TransformSpec {
    pub fn new(magnification: f64, blur_sigma: f64) -> Result<Self> {
        check_magnification(magnification)?;
        check_sigma(blur_sigma)?;
        Ok(Self {
            magnification,
            blur_sigma,
        })
    }

    /// Full-frame crop keeping `ratio` of the field of view (0.8x crop => m = 1.25).
    pub fn from_crop_ratio(ratio: f64) -> Result<Self> {
        check_magnification(ratio)?;
        Self::new(1.0 / ratio, 0.0)
    }
}

fn check_magnification(m: f64) -> Result<()> {
    if m.is_finite() && m > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidMagnification(m))
    }
}

fn check_sigma(sigma: f64) -> Result<()> {
    if sigma.is_finite() && sigma >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "blur sigma must be >= 0, got {sigma}"
        )))
    }
}

/// Depth change implied by an apparent size change: depth scales as 1/m.
pub fn predicted_depth_scale(magnification: f64) -> Result<f64> {
    check_magnification(magnification)?;
    Ok(1.0 / magnification)
}

fn bilinear(image: &RasterImage, x: f64, y: f64, channel: usize) -> f64 {
    let x0 = x.floor();
    let y0 = y.floor();
    let (tx, ty) = (x - x0, y - y0);
    let (xi, yi) = (x0 as isize, y0 as isize);
    let p00 = image.get_clamped(xi, yi, channel);
    let p10 = image.get_clamped(xi + 1, yi, channel);
    let p01 = image.get_clamped(xi, yi + 1, channel);
    let p11 = image.get_clamped(xi + 1, yi + 1, channel);
    let top = p00 + (p10 - p00) * tx;
    let bottom = p01 + (p11 - p01) * tx;
    top + (bottom - top) * ty
}

/// Magnifies the region about its center by `magnification`: each covered
/// pixel `p` takes the bilinear sample at `c + (p - c) / m`. Pixels outside
/// the region are copied untouched; samples off the frame clamp to the edge.
pub fn radial_resample(
    image: &RasterImage,
    region: &RegionSpec,
    magnification: f64,
) -> Result<RasterImage> {
    check_magnification(magnification)?;
    region.validate(image)?;
    let (cx, cy) = region.center(image);
    let (w, ch) = (image.width(), image.channels());
    let mut out = image.pixels().to_vec();

    out.par_chunks_mut(w * ch).enumerate().for_each(|(y, row)| {
        let yf = y as f64;
        for x in 0..w {
            let xf = x as f64;
            if !region.contains(xf, yf) {
                continue;
            }
            let sx = cx + (xf - cx) / magnification;
            let sy = cy + (yf - cy) / magnification;
            for c in 0..ch {
                row[x * ch + c] = to_u8(bilinear(image, sx, sy, c));
            }
        }
    });
    RasterImage::new(image.width(), image.height(), ch, out)
}

/// Normalized 1-D Gaussian taps, radius `ceil(3 sigma)`.
pub fn gaussian_kernel(sigma: f64) -> Vec<f64> {
    if sigma <= 0.0 {
        return vec![1.0];
    }
    let radius = (3.0 * sigma).ceil() as isize;
    let denom = 2.0 * sigma * sigma;
    let taps: Vec<f64> = (-radius..=radius)
        .map(|i| (-((i * i) as f64) / denom).exp())
        .collect();
    let sum: f64 = taps.iter().sum();
    taps.into_iter().map(|t| t / sum).collect()
}

/// Separable, edge-clamped Gaussian blur of a row-major `width x height`
/// floating-point plane.
pub fn gaussian_blur_plane(plane: &[f64], width: usize, height: usize, sigma: f64) -> Vec<f64> {
    assert_eq!(plane.len(), width * height, "plane size mismatch");
    let kernel = gaussian_kernel(sigma);
    let r = (kernel.len() / 2) as isize;
    let clamp = |v: isize, n: usize| v.clamp(0, n as isize - 1) as usize;
    let mut horiz = vec![0.0; width * height];
    horiz
        .par_chunks_mut(width)
        .enumerate()
        .for_each(|(y, row)| {
            let src = &plane[y * width..(y + 1) * width];
            for (x, out) in row.iter_mut().enumerate() {
                *out = kernel
                    .iter()
                    .enumerate()
                    .map(|(k, wgt)| wgt * src[clamp(x as isize + k as isize - r, width)])
                    .sum();
            }
        });
    let mut vert = vec![0.0; width * height];
    vert.par_chunks_mut(width).enumerate().for_each(|(y, row)| {
        for (x, out) in row.iter_mut().enumerate() {
            *out = kernel
                .iter()
                .enumerate()
                .map(|(k, wgt)| wgt * horiz[clamp(y as isize + k as isize - r, height) * width + x])
                .sum();
        }
    });
    vert
}

/// Gaussian defocus applied only inside `region`. `sigma = 0` is the identity.
pub fn defocus_blur(image: &RasterImage, region: &RegionSpec, sigma: f64) -> Result<RasterImage> {
    check_sigma(sigma)?;
    region.validate(image)?;
    if sigma == 0.0 {
        return Ok(image.clone());
    }
    let (w, h, ch) = (image.width(), image.height(), image.channels());
    let planes: Vec<Vec<f64>> = (0..ch)
        .map(|c| {
            let plane: Vec<f64> = image
                .pixels()
                .iter()
                .skip(c)
                .step_by(ch)
                .map(|&v| v as f64)
                .collect();
            gaussian_blur_plane(&plane, w, h, sigma)
        })
        .collect();
    let mut out = image.pixels().to_vec();
    for y in 0..h {
        for x in 0..w {
            if region.contains(x as f64, y as f64) {
                for (c, plane) in planes.iter().enumerate() {
                    out[(y * w + x) * ch + c] = to_u8(plane[y * w + x]);
                }
            }
        }
    }
    RasterImage::new(w, h, ch, out)
}

/// Linear defocus model: `sigma = k * |focal-plane shift|`.
pub fn sigma_from_focus_shift(shift: f64, blur_per_meter: f64) -> f64 {
    blur_per_meter * shift.abs()
}

/// Blur sigma for a stack under the linear defocus model. The focal-plane
/// shift is the traced image position with the attack lens minus the benign
/// sensor position.
pub fn stack_blur_sigma(stack: &OpticalStack, blur_per_meter: f64) -> Result<f64> {
    let shift = ray::stack_image(stack)?.distance - ray::benign_image(stack)?.distance;
    Ok(sigma_from_focus_shift(shift, blur_per_meter))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulatedView {
    pub image: RasterImage,
    /// Factor by which depth estimates should change (1/m).
    pub depth_scale: f64,
    pub magnification: f64,
    pub blur_sigma: f64,
    pub outcome: AttackOutcome,
}

/// Renders what the camera would see through the attack stack: the covered
/// region is magnified by `|m_total / m_ori|` and then defocused.
pub fn simulate_attack_view(
    image: &RasterImage,
    stack: &OpticalStack,
    region: &RegionSpec,
    blur_sigma: f64,
) -> Result<SimulatedView> {
    check_sigma(blur_sigma)?;
    region.validate(image)?;
    let outcome = evaluate(stack)?;
    if outcome.scenario == ScenarioKind::NoLens {
        return Ok(SimulatedView {
            image: image.clone(),
            depth_scale: 1.0,
            magnification: 1.0,
            blur_sigma: 0.0,
            outcome,
        });
    }
    let magnification = outcome.image_magnification();
    let resampled = radial_resample(image, region, magnification)?;
    let blurred = defocus_blur(&resampled, region, blur_sigma)?;
    Ok(SimulatedView {
        image: blurred,
        depth_scale: predicted_depth_scale(magnification)?,
        magnification,
        blur_sigma,
        outcome,
    })
}
