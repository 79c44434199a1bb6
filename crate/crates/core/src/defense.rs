//! Blur-based attack detection.
//!
//! An attack lens shifts the focal plane of the area it covers, so that area
//! comes out defocused. The detector scores sharpness with the variance of the
//! Laplacian, per tile, and raises an alert when enough tiles are blurry.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::raster::RasterImage;

pub const DEFAULT_TILE_SIZE: usize = 16;
/// Tiles scoring below this are blurry. Sharp 8 px checkerboard tiles score
/// about 1.8e4; attack views defocused through the default sigma mapping
/// score below 750 inside the lens.
pub const DEFAULT_SCORE_THRESHOLD: f64 = 1500.0;
/// Fraction of blurry tiles that triggers an alert.
pub const DEFAULT_MIN_FRACTION: f64 = 0.05;

const LUMA_WEIGHTS: [f64; 3] = [0.299, 0.587, 0.114];

/// Single-channel floating-point image.
#[derive(Debug, Clone, PartialEq)]
pub struct LumaPlane {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl LumaPlane {
    pub fn new(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::InvalidInput(format!(
                "plane holds {} samples, expected {}",
                data.len(),
                width * height
            )));
        }
        Ok(Self {
            width,
            height,
            data,
        })
    }

    /// Gray images pass through; RGB is converted with BT.601 weights.
    pub fn from_image(image: &RasterImage) -> Self {
        let data = match image.channels() {
            1 => image.pixels().iter().map(|&v| v as f64).collect(),
            _ => image
                .pixels()
                .chunks_exact(3)
                .map(|p| {
                    LUMA_WEIGHTS[0] * p[0] as f64
                        + LUMA_WEIGHTS[1] * p[1] as f64
                        + LUMA_WEIGHTS[2] * p[2] as f64
                })
                .collect(),
        };
        Self {
            width: image.width(),
            height: image.height(),
            data,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            width: self.width,
            height: self.height,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    fn at(&self, x: isize, y: isize) -> f64 {
        let x = x.clamp(0, self.width as isize - 1) as usize;
        let y = y.clamp(0, self.height as isize - 1) as usize;
        self.data[y * self.width + x]
    }

    /// Rectangular crop; the window is clipped to the plane.
    fn crop(&self, x0: usize, y0: usize, w: usize, h: usize) -> Self {
        let w = w.min(self.width - x0);
        let h = h.min(self.height - y0);
        let mut data = Vec::with_capacity(w * h);
        for y in y0..y0 + h {
            data.extend_from_slice(&self.data[y * self.width + x0..y * self.width + x0 + w]);
        }
        Self {
            width: w,
            height: h,
            data,
        }
    }

    /// 4-neighbour Laplacian response with edge clamping.
    pub fn laplacian(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.data.len());
        for y in 0..self.height as isize {
            for x in 0..self.width as isize {
                out.push(
                    self.at(x - 1, y) + self.at(x + 1, y) + self.at(x, y - 1) + self.at(x, y + 1)
                        - 4.0 * self.at(x, y),
                );
            }
        }
        out
    }

    /// Population variance of the Laplacian response.
    pub fn variance_of_laplacian(&self) -> Result<f64> {
        if self.width < 3 || self.height < 3 {
            return Err(Error::TooSmall {
                width: self.width,
                height: self.height,
            });
        }
        Ok(self.unchecked_varlap())
    }

    fn unchecked_varlap(&self) -> f64 {
        let response = self.laplacian();
        let n = response.len() as f64;
        let mean = response.iter().sum::<f64>() / n;
        response
            .iter()
            .map(|r| (r - mean) * (r - mean))
            .sum::<f64>()
            / n
    }
}

/// Sharpness score of the whole image (luma for RGB).
pub fn variance_of_laplacian(image: &RasterImage) -> Result<f64> {
    LumaPlane::from_image(image).variance_of_laplacian()
}

/// Per-tile sharpness scores, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlurMap {
    pub tile_size: usize,
    pub rows: usize,
    pub cols: usize,
    pub scores: Vec<f64>,
}

impl BlurMap {
    pub fn score(&self, row: usize, col: usize) -> f64 {
        self.scores[row * self.cols + col]
    }
}

/// Scores each `tile_size` square tile independently, clamping at tile edges.
/// Edge tiles are clipped to the image.
pub fn tiled_blur_map(image: &RasterImage, tile_size: usize) -> Result<BlurMap> {
    if tile_size < 3 {
        return Err(Error::TooSmall {
            width: tile_size,
            height: tile_size,
        });
    }
    if image.width() < 3 || image.height() < 3 {
        return Err(Error::TooSmall {
            width: image.width(),
            height: image.height(),
        });
    }
    let plane = LumaPlane::from_image(image);
    let rows = image.height().div_ceil(tile_size);
    let cols = image.width().div_ceil(tile_size);
    let scores = (0..rows * cols)
        .into_par_iter()
        .map(|i| {
            let (r, c) = (i / cols, i % cols);
            plane
                .crop(c * tile_size, r * tile_size, tile_size, tile_size)
                .unchecked_varlap()
        })
        .collect();
    Ok(BlurMap {
        tile_size,
        rows,
        cols,
        scores,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileCoord {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectionVerdict {
    pub attacked: bool,
    pub blurry_fraction: f64,
    pub blurry_tiles: Vec<TileCoord>,
}

/// Flags tiles scoring below `score_threshold`; the frame counts as attacked
/// when the blurry fraction reaches `min_fraction`.
pub fn detect(map: &BlurMap, score_threshold: f64, min_fraction: f64) -> Result<DetectionVerdict> {
    if !(score_threshold.is_finite() && score_threshold >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "score threshold must be finite and >= 0, got {score_threshold}"
        )));
    }
    if !(0.0..=1.0).contains(&min_fraction) {
        return Err(Error::InvalidInput(format!(
            "min fraction must lie in [0, 1], got {min_fraction}"
        )));
    }
    let blurry_tiles: Vec<TileCoord> = map
        .scores
        .iter()
        .enumerate()
        .filter(|(_, &s)| s < score_threshold)
        .map(|(i, _)| TileCoord {
            row: i / map.cols,
            col: i % map.cols,
        })
        .collect();
    let total = map.scores.len();
    let blurry_fraction = if total == 0 {
        0.0
    } else {
        blurry_tiles.len() as f64 / total as f64
    };
    // With min_fraction = 0 a single blurry tile is still required.
    let attacked = !blurry_tiles.is_empty() && blurry_fraction >= min_fraction;
    Ok(DetectionVerdict {
        attacked,
        blurry_fraction,
        blurry_tiles,
    })
}
