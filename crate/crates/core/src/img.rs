//! In-memory image buffers shared by the renderers, losses and metrics.
//! All color is display-space RGB in [0,1]; depth maps store camera-space z
//! with `+inf` marking background.

use crate::math::Vec3;
use crate::real::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct ImageRgb<R> {
    pub width: usize,
    pub height: usize,
    /// Row-major pixels.
    pub pixels: Vec<Vec3<R>>,
}

impl<R: Real> ImageRgb<R> {
    pub fn new(width: usize, height: usize, fill: Vec3<R>) -> Self {
        Self {
            width,
            height,
            pixels: vec![fill; width * height],
        }
    }

    #[inline(always)]
    pub fn idx(&self, x: usize, y: usize) -> usize {
        y * self.width + x
    }

    #[inline(always)]
    pub fn get(&self, x: usize, y: usize) -> Vec3<R> {
        self.pixels[self.idx(x, y)]
    }

    #[inline(always)]
    pub fn set(&mut self, x: usize, y: usize, c: Vec3<R>) {
        let i = self.idx(x, y);
        self.pixels[i] = c;
    }

    /// Quantize every channel to the 8-bit grid (round(c*255)/255).
    pub fn quantized(&self) -> Self {
        let q = |v: R| {
            let b = (v.as_f64().clamp(0.0, 1.0) * 255.0).round();
            R::of(b / 255.0)
        };
        Self {
            width: self.width,
            height: self.height,
            pixels: self
                .pixels
                .iter()
                .map(|p| Vec3::new(q(p.x), q(p.y), q(p.z)))
                .collect(),
        }
    }

    /// Bilinear sample at continuous pixel coordinates (pixel (i,j) has its
    /// center at (i+0.5, j+0.5)). Coordinates are clamped to the image.
    pub fn sample_bilinear(&self, x: R, y: R) -> Vec3<R> {
        let half = R::of(0.5);
        let fx = x - half;
        let fy = y - half;
        let x0f = fx.floor();
        let y0f = fy.floor();
        let tx = fx - x0f;
        let ty = fy - y0f;
        let clampi = |v: f64, hi: usize| -> usize { (v.max(0.0) as usize).min(hi - 1) };
        let x0 = clampi(x0f.as_f64(), self.width);
        let y0 = clampi(y0f.as_f64(), self.height);
        let x1 = (x0 + 1).min(self.width - 1);
        let y1 = (y0 + 1).min(self.height - 1);
        let c00 = self.get(x0, y0);
        let c10 = self.get(x1, y0);
        let c01 = self.get(x0, y1);
        let c11 = self.get(x1, y1);
        let one = R::one();
        let top = c00 * (one - tx) + c10 * tx;
        let bot = c01 * (one - tx) + c11 * tx;
        top * (one - ty) + bot * ty
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mask {
    pub width: usize,
    pub height: usize,
    pub data: Vec<bool>,
}

impl Mask {
    pub fn new(width: usize, height: usize, fill: bool) -> Self {
        Self {
            width,
            height,
            data: vec![fill; width * height],
        }
    }

    #[inline(always)]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.data[y * self.width + x]
    }

    #[inline(always)]
    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        self.data[y * self.width + x] = v;
    }

    pub fn count(&self) -> usize {
        self.data.iter().filter(|&&b| b).count()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DepthMap<R> {
    pub width: usize,
    pub height: usize,
    /// Camera-space z per pixel; `+inf` where nothing was hit.
    pub data: Vec<R>,
}

impl<R: Real> DepthMap<R> {
    pub fn new_background(width: usize, height: usize) -> Self {
        Self {
            width,
            height,
            data: vec![R::infinity(); width * height],
        }
    }

    #[inline(always)]
    pub fn get(&self, x: usize, y: usize) -> R {
        self.data[y * self.width + x]
    }

    #[inline(always)]
    pub fn set(&mut self, x: usize, y: usize, v: R) {
        self.data[y * self.width + x] = v;
    }

    /// Bilinear depth sample; returns `+inf` if any contributing texel is
    /// background (depth across a silhouette is not interpolable).
    pub fn sample_bilinear(&self, x: R, y: R) -> R {
        let half = R::of(0.5);
        let fx = x - half;
        let fy = y - half;
        let x0f = fx.floor();
        let y0f = fy.floor();
        let tx = fx - x0f;
        let ty = fy - y0f;
        let clampi = |v: f64, hi: usize| -> usize { (v.max(0.0) as usize).min(hi - 1) };
        let x0 = clampi(x0f.as_f64(), self.width);
        let y0 = clampi(y0f.as_f64(), self.height);
        let x1 = (x0 + 1).min(self.width - 1);
        let y1 = (y0 + 1).min(self.height - 1);
        let d = [
            self.get(x0, y0),
            self.get(x1, y0),
            self.get(x0, y1),
            self.get(x1, y1),
        ];
        if d.iter().any(|v| !v.is_finite()) {
            return R::infinity();
        }
        let one = R::one();
        let top = d[0] * (one - tx) + d[1] * tx;
        let bot = d[2] * (one - tx) + d[3] * tx;
        top * (one - ty) + bot * ty
    }

    pub fn median_finite(&self) -> Option<R> {
        let mut v: Vec<R> = self.data.iter().copied().filter(|d| d.is_finite()).collect();
        if v.is_empty() {
            return None;
        }
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Some(v[v.len() / 2])
    }
}

/// Masked PSNR in dB between two images, over pixels where `mask` is set.
pub fn masked_psnr<R: Real>(a: &ImageRgb<R>, b: &ImageRgb<R>, mask: &Mask) -> f64 {
    assert_eq!(a.width, b.width);
    assert_eq!(a.height, b.height);
    let mut se = 0.0f64;
    let mut n = 0usize;
    for i in 0..a.pixels.len() {
        if mask.data[i] {
            let d = a.pixels[i] - b.pixels[i];
            se += d.norm_sq().as_f64();
            n += 3;
        }
    }
    if n == 0 {
        return f64::INFINITY;
    }
    let mse = se / n as f64;
    if mse <= 0.0 {
        f64::INFINITY
    } else {
        -10.0 * mse.log10()
    }
}

/// Masked mean absolute error over pixels where `mask` is set.
pub fn masked_l1<R: Real>(a: &ImageRgb<R>, b: &ImageRgb<R>, mask: &Mask) -> f64 {
    assert_eq!(a.width, b.width);
    assert_eq!(a.height, b.height);
    let mut acc = 0.0f64;
    let mut n = 0usize;
    for i in 0..a.pixels.len() {
        if mask.data[i] {
            let d = (a.pixels[i] - b.pixels[i]).abs();
            acc += (d.x + d.y + d.z).as_f64();
            n += 3;
        }
    }
    if n == 0 {
        0.0
    } else {
        acc / n as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bilinear_at_pixel_center_is_exact() {
        let mut img = ImageRgb::<f64>::new(4, 4, Vec3::zero());
        img.set(2, 1, Vec3::of(0.25, 0.5, 0.75));
        let c = img.sample_bilinear(2.5, 1.5);
        assert!((c - Vec3::of(0.25, 0.5, 0.75)).norm() < 1e-12);
    }

    #[test]
    fn psnr_of_identical_images_is_infinite() {
        let img = ImageRgb::<f64>::new(3, 3, Vec3::splat(0.3));
        let mask = Mask::new(3, 3, true);
        assert!(masked_psnr(&img, &img, &mask).is_infinite());
    }
}
