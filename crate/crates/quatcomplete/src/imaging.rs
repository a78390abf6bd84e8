//! Color-image ↔ quaternion encoding, observation masks, quality metrics,
//! and image/mask file I/O.
//!
//! A color image maps to a pure quaternion matrix: pixel `(R, G, B)` becomes
//! `0 + R·i + G·j + B·k`, so one quaternion entry carries one whole pixel and
//! a completion mask removes pixels, never individual channels. Samples live
//! in `[0, 1]`; PSNR uses that unit peak and SSIM the standard `11×11`
//! Gaussian window with `σ = 1.5` and stability constants `(0.01)²`,
//! `(0.03)²`.

use crate::error::{Error, Result};
use crate::qmat::{ObservationMask, QMatrix};
use crate::quat::Quaternion;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fs;
use std::path::Path;

/// An RGB image with samples in `[0, 1]`, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ColorImage {
    height: usize,
    width: usize,
    data: Vec<[f64; 3]>,
}

impl ColorImage {
    /// All-black image.
    pub fn zeros(height: usize, width: usize) -> Self {
        Self {
            height,
            width,
            data: vec![[0.0; 3]; height * width],
        }
    }

    /// Builds an image pixel by pixel, clamping every sample to `[0, 1]`.
    ///
    /// Errors if any produced sample is not finite.
    pub fn from_fn(
        height: usize,
        width: usize,
        mut f: impl FnMut(usize, usize) -> [f64; 3],
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(height * width);
        for r in 0..height {
            for c in 0..width {
                let px = f(r, c);
                if px.iter().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidArgument(format!(
                        "non-finite sample at pixel ({r}, {c})"
                    )));
                }
                data.push(px.map(|v| v.clamp(0.0, 1.0)));
            }
        }
        Ok(Self {
            height,
            width,
            data,
        })
    }

    /// Image height in pixels.
    pub fn height(&self) -> usize {
        self.height
    }

    /// Image width in pixels.
    pub fn width(&self) -> usize {
        self.width
    }

    /// `(height, width)` pair.
    pub fn shape(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    /// The `(R, G, B)` sample at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> [f64; 3] {
        self.data[row * self.width + col]
    }

    /// Row-major pixel slice.
    pub fn pixels(&self) -> &[[f64; 3]] {
        &self.data
    }

    /// One channel (`0` = R, `1` = G, `2` = B) as a row-major vector.
    pub fn channel(&self, idx: usize) -> Vec<f64> {
        assert!(idx < 3, "channel index must be 0, 1, or 2");
        self.data.iter().map(|px| px[idx]).collect()
    }
}

/// Encodes an image as the pure quaternion matrix `0 + R·i + G·j + B·k`.
pub fn image_to_qmatrix(img: &ColorImage) -> QMatrix {
    QMatrix::from_fn(img.height(), img.width(), |r, c| {
        let [red, green, blue] = img.get(r, c);
        Quaternion::new(0.0, red, green, blue)
    })
}

/// Decodes a quaternion matrix back to an image.
///
/// Channels come from the `i`, `j`, `k` components clamped to `[0, 1]`; the
/// real component is discarded.
pub fn qmatrix_to_image(x: &QMatrix) -> ColorImage {
    ColorImage::from_fn(x.rows(), x.cols(), |r, c| {
        let q = x.get(r, c);
        [q.x, q.y, q.z]
    })
    .expect("finite clamped samples")
}

/// How many pixels to hide and with what seed.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct MaskSpec {
    /// Fraction of pixels to remove, in `[0, 1]`.
    pub missing_ratio: f64,
    /// Seed for the pixel selection.
    pub seed: u64,
}

/// Uniformly random observation mask with exactly
/// `round(missing_ratio · H · W)` missing pixels.
///
/// Deterministic per seed. Errors if the ratio is outside `[0, 1]`.
pub fn random_mask(height: usize, width: usize, spec: &MaskSpec) -> Result<ObservationMask> {
    if !(0.0..=1.0).contains(&spec.missing_ratio) {
        return Err(Error::InvalidArgument(format!(
            "missing ratio must be in [0, 1], got {}",
            spec.missing_ratio
        )));
    }
    let total = height * width;
    let missing = (spec.missing_ratio * total as f64).round() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    // Partial Fisher–Yates: after k swaps the prefix holds a uniform
    // k-subset drawn without replacement.
    let mut indices: Vec<usize> = (0..total).collect();
    for i in 0..missing.min(total) {
        let j = rng.random_range(i..total);
        indices.swap(i, j);
    }
    let mut observed = vec![true; total];
    for &idx in &indices[..missing.min(total)] {
        observed[idx] = false;
    }
    ObservationMask::from_grid(height, width, observed)
}

/// Peak signal-to-noise ratio in dB, with unit peak and the mean squared
/// error taken jointly over all `3·H·W` samples.
///
/// Identical images give `+∞`. Errors on a dimension mismatch.
pub fn psnr(reference: &ColorImage, test: &ColorImage) -> Result<f64> {
    if reference.shape() != test.shape() {
        return Err(Error::DimensionMismatch(format!(
            "image shapes differ: {:?} vs {:?}",
            reference.shape(),
            test.shape()
        )));
    }
    let mut sum = 0.0;
    for (a, b) in reference.pixels().iter().zip(test.pixels()) {
        for c in 0..3 {
            let diff = a[c] - b[c];
            sum += diff * diff;
        }
    }
    let mse = sum / (3 * reference.height() * reference.width()) as f64;
    if mse == 0.0 {
        Ok(f64::INFINITY)
    } else {
        Ok(-10.0 * mse.log10())
    }
}

/// Window half-width, full size, smoothing σ, and stability constants of the
/// standard SSIM configuration.
const SSIM_RADIUS: usize = 5;
const SSIM_WINDOW: usize = 2 * SSIM_RADIUS + 1;
const SSIM_SIGMA: f64 = 1.5;
const SSIM_C1: f64 = 0.01 * 0.01;
const SSIM_C2: f64 = 0.03 * 0.03;

/// Mean structural similarity over an `11×11` Gaussian window (`σ = 1.5`),
/// computed per channel and averaged.
///
/// The window is applied only where it fits entirely inside the image, so
/// both sides must measure at least 11 pixels. Errors on a dimension
/// mismatch or an undersized image.
pub fn ssim(reference: &ColorImage, test: &ColorImage) -> Result<f64> {
    if reference.shape() != test.shape() {
        return Err(Error::DimensionMismatch(format!(
            "image shapes differ: {:?} vs {:?}",
            reference.shape(),
            test.shape()
        )));
    }
    let (h, w) = reference.shape();
    if h < SSIM_WINDOW || w < SSIM_WINDOW {
        return Err(Error::InvalidArgument(format!(
            "SSIM needs at least {SSIM_WINDOW}x{SSIM_WINDOW} pixels, got {h}x{w}"
        )));
    }
    let kernel = gaussian_kernel();
    let mut total = 0.0;
    for idx in 0..3 {
        let a = reference.channel(idx);
        let b = test.channel(idx);
        let prod: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        let sq_a: Vec<f64> = a.iter().map(|x| x * x).collect();
        let sq_b: Vec<f64> = b.iter().map(|x| x * x).collect();
        let mu_a = blur_valid(&a, h, w, &kernel);
        let mu_b = blur_valid(&b, h, w, &kernel);
        let e_aa = blur_valid(&sq_a, h, w, &kernel);
        let e_bb = blur_valid(&sq_b, h, w, &kernel);
        let e_ab = blur_valid(&prod, h, w, &kernel);
        let mut sum = 0.0;
        for i in 0..mu_a.len() {
            let (ma, mb) = (mu_a[i], mu_b[i]);
            let var_a = e_aa[i] - ma * ma;
            let var_b = e_bb[i] - mb * mb;
            let cov = e_ab[i] - ma * mb;
            sum += ((2.0 * ma * mb + SSIM_C1) * (2.0 * cov + SSIM_C2))
                / ((ma * ma + mb * mb + SSIM_C1) * (var_a + var_b + SSIM_C2));
        }
        total += sum / mu_a.len() as f64;
    }
    Ok(total / 3.0)
}

/// Normalized 1-D Gaussian tap weights for the SSIM window.
fn gaussian_kernel() -> [f64; SSIM_WINDOW] {
    let mut kernel = [0.0; SSIM_WINDOW];
    let mut sum = 0.0;
    for (i, k) in kernel.iter_mut().enumerate() {
        let t = i as f64 - SSIM_RADIUS as f64;
        *k = (-t * t / (2.0 * SSIM_SIGMA * SSIM_SIGMA)).exp();
        sum += *k;
    }
    for k in &mut kernel {
        *k /= sum;
    }
    kernel
}

/// Separable Gaussian blur keeping only positions where the window fits;
/// the result is `(h − 10) × (w − 10)`, row-major.
fn blur_valid(field: &[f64], h: usize, w: usize, kernel: &[f64; SSIM_WINDOW]) -> Vec<f64> {
    let w_out = w - 2 * SSIM_RADIUS;
    let h_out = h - 2 * SSIM_RADIUS;
    let mut rows = vec![0.0; h * w_out];
    for r in 0..h {
        for c in 0..w_out {
            let mut acc = 0.0;
            for (t, &k) in kernel.iter().enumerate() {
                acc += k * field[r * w + c + t];
            }
            rows[r * w_out + c] = acc;
        }
    }
    let mut out = vec![0.0; h_out * w_out];
    for r in 0..h_out {
        for c in 0..w_out {
            let mut acc = 0.0;
            for (t, &k) in kernel.iter().enumerate() {
                acc += k * rows[(r + t) * w_out + c];
            }
            out[r * w_out + c] = acc;
        }
    }
    out
}

/// Loads an 8-bit RGB PNG, mapping samples linearly to `[0, 1]`.
pub fn load_png(path: &Path) -> Result<ColorImage> {
    let rgb = image::open(path)?.to_rgb8();
    let (w, h) = rgb.dimensions();
    ColorImage::from_fn(h as usize, w as usize, |r, c| {
        let px = rgb.get_pixel(c as u32, r as u32);
        [
            px.0[0] as f64 / 255.0,
            px.0[1] as f64 / 255.0,
            px.0[2] as f64 / 255.0,
        ]
    })
}

/// Writes an 8-bit RGB PNG, mapping `[0, 1]` samples to `{0..255}` with
/// round-half-up.
pub fn save_png(img: &ColorImage, path: &Path) -> Result<()> {
    let (h, w) = img.shape();
    let mut bytes = Vec::with_capacity(3 * h * w);
    for px in img.pixels() {
        for &v in px {
            bytes.push((v.clamp(0.0, 1.0) * 255.0).round() as u8);
        }
    }
    let buffer = image::RgbImage::from_raw(w as u32, h as u32, bytes)
        .expect("buffer length matches dimensions");
    buffer.save(path)?;
    Ok(())
}

/// Writes a mask as a text grid: a `"H W"` header line, then `H` rows of
/// space-separated `0`/`1` flags where `1` marks an observed pixel.
pub fn write_mask_text(mask: &ObservationMask, path: &Path) -> Result<()> {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", mask.rows(), mask.cols()));
    for r in 0..mask.rows() {
        let row: Vec<&str> = (0..mask.cols())
            .map(|c| if mask.is_observed(r, c) { "1" } else { "0" })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    fs::write(path, out)?;
    Ok(())
}

/// Reads a mask written by [`write_mask_text`].
pub fn read_mask_text(path: &Path) -> Result<ObservationMask> {
    let content = fs::read_to_string(path)?;
    let mut tokens = content.split_whitespace();
    let mut dim = |name: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::InvalidArgument(format!("mask file is missing {name}")))?
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("mask {name} is not an integer")))
    };
    let rows = dim("height")?;
    let cols = dim("width")?;
    let mut observed = Vec::with_capacity(rows * cols);
    for token in tokens {
        match token {
            "1" => observed.push(true),
            "0" => observed.push(false),
            other => {
                return Err(Error::InvalidArgument(format!(
                    "mask entries must be 0 or 1, got {other:?}"
                )))
            }
        }
    }
    if observed.len() != rows * cols {
        return Err(Error::InvalidArgument(format!(
            "mask grid has {} entries, expected {rows}x{cols}",
            observed.len()
        )));
    }
    ObservationMask::from_grid(rows, cols, observed)
}

/// Deterministic smooth low-rank test image.
///
/// Sums a handful of separable sinusoidal modes shared by the three
/// channels, then maps the result affinely into `[0.02, 0.98]`. The shared
/// separable structure keeps the quaternion rank of the encoding at most
/// one above the mode count, so the image is genuinely completable by a
/// low-rank model.
pub fn synthetic_test_image(height: usize, width: usize, seed: u64) -> ColorImage {
    const MODES: usize = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut profile = |len: usize| -> Vec<f64> {
        let cycles = rng.random_range(0.4..3.2);
        let phase = rng.random_range(0.0..std::f64::consts::TAU);
        (0..len)
            .map(|t| (std::f64::consts::TAU * cycles * t as f64 / len as f64 + phase).sin())
            .collect()
    };
    let rows: Vec<Vec<f64>> = (0..MODES).map(|_| profile(height)).collect();
    let cols: Vec<Vec<f64>> = (0..MODES).map(|_| profile(width)).collect();
    let weights: Vec<[f64; 3]> = (0..MODES)
        .map(|_| {
            [
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            ]
        })
        .collect();

    let mut raw = vec![[0.0f64; 3]; height * width];
    for k in 0..MODES {
        for r in 0..height {
            let fr = rows[k][r];
            for c in 0..width {
                let value = fr * cols[k][c];
                let px = &mut raw[r * width + c];
                for ch in 0..3 {
                    px[ch] += weights[k][ch] * value;
                }
            }
        }
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for px in &raw {
        for &v in px {
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    let span = if hi > lo { hi - lo } else { 1.0 };
    ColorImage::from_fn(height, width, |r, c| {
        raw[r * width + c].map(|v| 0.02 + 0.96 * (v - lo) / span)
    })
    .expect("finite affine transform")
}
