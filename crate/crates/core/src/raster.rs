//! 8-bit grayscale/RGB raster buffers and image file I/O.

use std::path::Path;

use image::{DynamicImage, GrayImage, ImageFormat, RgbImage};

use crate::error::{Error, Result};

/// Row-major 8-bit image with 1 (gray) or 3 (RGB) interleaved channels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterImage {
    width: usize,
    height: usize,
    channels: usize,
    pixels: Vec<u8>,
}

impl RasterImage {
    pub fn new(width: usize, height: usize, channels: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidInput(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if channels != 1 && channels != 3 {
            return Err(Error::InvalidInput(format!(
                "channels must be 1 or 3, got {channels}"
            )));
        }
        if pixels.len() != width * height * channels {
            return Err(Error::InvalidInput(format!(
                "pixel buffer holds {} samples, expected {}",
                pixels.len(),
                width * height * channels
            )));
        }
        Ok(Self {
            width,
            height,
            channels,
            pixels,
        })
    }

    pub fn filled(width: usize, height: usize, channels: usize, value: u8) -> Result<Self> {
        Self::new(
            width,
            height,
            channels,
            vec![value; width * height * channels],
        )
    }

    /// Grayscale image from a per-pixel function.
    pub fn from_fn_gray(
        width: usize,
        height: usize,
        f: impl Fn(usize, usize) -> u8,
    ) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self::new(width, height, 1, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    pub fn get(&self, x: usize, y: usize, channel: usize) -> u8 {
        self.pixels[(y * self.width + x) * self.channels + channel]
    }

    /// Sample at clamped integer coordinates.
    pub(crate) fn get_clamped(&self, x: isize, y: isize, channel: usize) -> f64 {
        let x = x.clamp(0, self.width as isize - 1) as usize;
        let y = y.clamp(0, self.height as isize - 1) as usize;
        self.get(x, y, channel) as f64
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let img = image::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Ok(Self::from_dynamic(img))
    }

    /// Writes PNG, or binary PGM/PPM for `.pgm`/`.ppm`/`.pnm` extensions.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let format = ImageFormat::from_path(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        if !matches!(format, ImageFormat::Png | ImageFormat::Pnm) {
            return Err(Error::Io(format!(
                "{}: unsupported output format (use .png, .pgm or .ppm)",
                path.display()
            )));
        }
        self.to_dynamic()
            .save_with_format(path, format)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    fn from_dynamic(img: DynamicImage) -> Self {
        let has_color = img.color().has_color();
        let (w, h) = (img.width() as usize, img.height() as usize);
        if has_color {
            Self {
                width: w,
                height: h,
                channels: 3,
                pixels: img.into_rgb8().into_raw(),
            }
        } else {
            Self {
                width: w,
                height: h,
                channels: 1,
                pixels: img.into_luma8().into_raw(),
            }
        }
    }

    fn to_dynamic(&self) -> DynamicImage {
        let (w, h) = (self.width as u32, self.height as u32);
        if self.channels == 1 {
            DynamicImage::ImageLuma8(
                GrayImage::from_raw(w, h, self.pixels.clone()).expect("buffer length checked"),
            )
        } else {
            DynamicImage::ImageRgb8(
                RgbImage::from_raw(w, h, self.pixels.clone()).expect("buffer length checked"),
            )
        }
    }
}

/// Where the attack lens covers the image.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegionSpec {
    Full,
    Circle {
        center_x: f64,
        center_y: f64,
        radius: f64,
    },
}

impl RegionSpec {
    pub fn validate(&self, image: &RasterImage) -> Result<()> {
        match *self {
            RegionSpec::Full => Ok(()),
            RegionSpec::Circle {
                center_x,
                center_y,
                radius,
            } => {
                if !(radius.is_finite() && radius > 0.0) {
                    return Err(Error::InvalidRegion(format!(
                        "radius must be > 0, got {radius}"
                    )));
                }
                let inside = center_x.is_finite()
                    && center_y.is_finite()
                    && (0.0..=(image.width() - 1) as f64).contains(&center_x)
                    && (0.0..=(image.height() - 1) as f64).contains(&center_y);
                if !inside {
                    return Err(Error::InvalidRegion(format!(
                        "center ({center_x}, {center_y}) outside {}x{} image",
                        image.width(),
                        image.height()
                    )));
                }
                Ok(())
            }
        }
    }

    /// Center of the region in pixel coordinates.
    pub fn center(&self, image: &RasterImage) -> (f64, f64) {
        match *self {
            RegionSpec::Full => (
                (image.width() as f64 - 1.0) / 2.0,
                (image.height() as f64 - 1.0) / 2.0,
            ),
            RegionSpec::Circle {
                center_x, center_y, ..
            } => (center_x, center_y),
        }
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        match *self {
            RegionSpec::Full => true,
            RegionSpec::Circle {
                center_x,
                center_y,
                radius,
            } => {
                let (dx, dy) = (x - center_x, y - center_y);
                dx * dx + dy * dy <= radius * radius
            }
        }
    }
}

/// Rounds half away from zero and saturates to the 8-bit range.
pub(crate) fn to_u8(v: f64) -> u8 {
    v.round().clamp(0.0, 255.0) as u8
}
