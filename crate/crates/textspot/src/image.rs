//! Minimal grayscale image container used throughout the pipeline.
//!
//! Pixels are `f64` intensities in `[0, 1]`, row-major. Conversion to and
//! from 8-bit PNG happens only at the I/O boundary so that every numeric
//! stage operates on the same representation.

use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    data: Vec<f64>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize) -> Self {
        GrayImage {
            width,
            height,
            data: vec![0.0; width * height],
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut img = GrayImage::new(width, height);
        for y in 0..height {
            for x in 0..width {
                img.data[y * width + x] = f(x, y);
            }
        }
        img
    }

    pub fn from_vec(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != width * height {
            return Err(Error::DimensionMismatch {
                expected: width * height,
                got: data.len(),
            });
        }
        Ok(GrayImage {
            width,
            height,
            data,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn min_side(&self) -> usize {
        self.width.min(self.height)
    }

    pub fn is_empty(&self) -> bool {
        self.width == 0 || self.height == 0
    }

    pub fn pixels(&self) -> &[f64] {
        &self.data
    }

    pub fn pixels_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: f64) {
        self.data[y * self.width + x] = v;
    }

    /// Clamped lookup; out-of-range coordinates replicate the border pixel.
    #[inline]
    pub fn get_replicate(&self, x: isize, y: isize) -> f64 {
        let xc = x.clamp(0, self.width as isize - 1) as usize;
        let yc = y.clamp(0, self.height as isize - 1) as usize;
        self.data[yc * self.width + xc]
    }

    /// Bilinear sample at fractional coordinates, border-replicated.
    pub fn sample_bilinear(&self, x: f64, y: f64) -> f64 {
        let x0 = x.floor();
        let y0 = y.floor();
        let fx = x - x0;
        let fy = y - y0;
        let x0 = x0 as isize;
        let y0 = y0 as isize;
        let p00 = self.get_replicate(x0, y0);
        let p10 = self.get_replicate(x0 + 1, y0);
        let p01 = self.get_replicate(x0, y0 + 1);
        let p11 = self.get_replicate(x0 + 1, y0 + 1);
        p00 * (1.0 - fx) * (1.0 - fy)
            + p10 * fx * (1.0 - fy)
            + p01 * (1.0 - fx) * fy
            + p11 * fx * fy
    }

    /// Bilinear resize. Pixel centers are aligned so that resizing to the
    /// same dimensions is the identity.
    pub fn resize(&self, new_width: usize, new_height: usize) -> GrayImage {
        assert!(new_width > 0 && new_height > 0, "resize to empty image");
        if new_width == self.width && new_height == self.height {
            return self.clone();
        }
        let sx = self.width as f64 / new_width as f64;
        let sy = self.height as f64 / new_height as f64;
        GrayImage::from_fn(new_width, new_height, |x, y| {
            let src_x = (x as f64 + 0.5) * sx - 0.5;
            let src_y = (y as f64 + 0.5) * sy - 0.5;
            self.sample_bilinear(src_x, src_y)
        })
    }

    /// Copy the `side x side` window whose top-left corner is `(x, y)`.
    pub fn crop(&self, x: usize, y: usize, w: usize, h: usize) -> GrayImage {
        assert!(x + w <= self.width && y + h <= self.height, "crop out of bounds");
        GrayImage::from_fn(w, h, |cx, cy| self.get(x + cx, y + cy))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<GrayImage> {
        let path = path.as_ref();
        let img = image::open(path)
            .map_err(|e| Error::Format {
                path: path.display().to_string(),
                reason: e.to_string(),
            })?
            .into_luma8();
        let (w, h) = (img.width() as usize, img.height() as usize);
        let data = img.into_raw().into_iter().map(|p| p as f64 / 255.0).collect();
        GrayImage::from_vec(w, h, data)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let buf: Vec<u8> = self
            .data
            .iter()
            .map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8)
            .collect();
        let img = image::GrayImage::from_raw(self.width as u32, self.height as u32, buf)
            .expect("buffer length matches dimensions");
        img.save(path.as_ref()).map_err(|e| Error::Format {
            path: path.as_ref().display().to_string(),
            reason: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resize_identity() {
        let img = GrayImage::from_fn(13, 7, |x, y| (x * 31 + y * 17) as f64 / 255.0);
        let same = img.resize(13, 7);
        assert_eq!(img, same);
    }

    #[test]
    fn resize_constant_stays_constant() {
        let img = GrayImage::from_fn(20, 30, |_, _| 0.37);
        let small = img.resize(9, 9);
        for &v in small.pixels() {
            assert!((v - 0.37).abs() < 1e-12);
        }
    }

    #[test]
    fn replicate_border() {
        let img = GrayImage::from_fn(3, 3, |x, y| (x + 3 * y) as f64);
        assert_eq!(img.get_replicate(-5, 0), 0.0);
        assert_eq!(img.get_replicate(10, 10), 8.0);
    }

    #[test]
    fn crop_matches_source() {
        let img = GrayImage::from_fn(10, 10, |x, y| (x * 10 + y) as f64);
        let c = img.crop(2, 3, 4, 5);
        assert_eq!(c.width(), 4);
        assert_eq!(c.height(), 5);
        assert_eq!(c.get(0, 0), img.get(2, 3));
        assert_eq!(c.get(3, 4), img.get(5, 7));
    }
}
