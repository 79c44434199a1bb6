#![allow(dead_code)]

pub mod tables;

use lensspoof_core::image_sim::defocus_blur;
use lensspoof_core::{RasterImage, RegionSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn checkerboard(width: usize, height: usize, square: usize) -> RasterImage {
    RasterImage::from_fn_gray(width, height, |x, y| {
        if (x / square + y / square).is_multiple_of(2) {
            255
        } else {
            0
        }
    })
    .unwrap()
}

pub fn gradient(width: usize, height: usize, dx: f64, dy: f64) -> RasterImage {
    RasterImage::from_fn_gray(width, height, |x, y| {
        (x as f64 * dx + y as f64 * dy).rem_euclid(256.0) as u8
    })
    .unwrap()
}

pub fn noise(width: usize, height: usize, seed: u64) -> RasterImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pixels = (0..width * height).map(|_| rng.gen::<u8>()).collect();
    RasterImage::new(width, height, 1, pixels).unwrap()
}

pub fn gaussian_blob(size: usize, sigma: f64) -> RasterImage {
    let c = (size as f64 - 1.0) / 2.0;
    RasterImage::from_fn_gray(size, size, |x, y| {
        let r2 = (x as f64 - c).powi(2) + (y as f64 - c).powi(2);
        (20.0 + 220.0 * (-r2 / (2.0 * sigma * sigma)).exp()).round() as u8
    })
    .unwrap()
}

pub fn disk(size: usize, radius: f64) -> RasterImage {
    let c = (size as f64 - 1.0) / 2.0;
    RasterImage::from_fn_gray(size, size, |x, y| {
        let (dx, dy) = (x as f64 - c, y as f64 - c);
        if dx * dx + dy * dy <= radius * radius {
            255
        } else {
            0
        }
    })
    .unwrap()
}

/// Radius of the bright blob, solved from its pixel area.
pub fn measured_radius(image: &RasterImage) -> f64 {
    let n = image.pixels().iter().filter(|&&v| v >= 128).count();
    (n as f64 / std::f64::consts::PI).sqrt()
}

/// 128x128 checkerboard, left half sharp, right half blurred with sigma 2.
pub fn half_blurred() -> RasterImage {
    let sharp = checkerboard(128, 128, 8);
    let blurred = defocus_blur(&sharp, &RegionSpec::Full, 2.0).unwrap();
    RasterImage::from_fn_gray(128, 128, |x, y| {
        if x < 64 {
            sharp.get(x, y, 0)
        } else {
            blurred.get(x, y, 0)
        }
    })
    .unwrap()
}

/// 50 non-constant fixtures: checkerboards, gradients and seeded noise.
/// Every gradient wraps at least once across the frame. A shallow ramp that
/// never wraps carries only rounding noise, which blur can raise.
pub fn synthetic_corpus() -> Vec<RasterImage> {
    let mut corpus = Vec::new();
    for square in [2, 3, 4, 5, 6, 8, 10, 12, 16, 20] {
        corpus.push(checkerboard(64, 64, square));
        corpus.push(checkerboard(80, 48, square + 1));
    }
    for i in 0..15 {
        let k = i as f64;
        corpus.push(gradient(64, 64, 4.5 + k * 0.7, 0.5 + k * 1.3));
    }
    for seed in 0..15 {
        corpus.push(noise(64, 64, 1000 + seed));
    }
    corpus
}
