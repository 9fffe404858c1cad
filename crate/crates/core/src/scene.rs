//! A deterministic synthetic test picture.
//!
//! Smooth shaded backgrounds, a few soft-edged shapes and a little texture:
//! enough spatial structure that neighbouring pixels are strongly
//! correlated, the way photographs are. Every channel value stays in
//! `16..=240`, so no pixel is black.

use crate::image::RgbImage;

fn texture(x: u32, y: u32) -> f64 {
    let mut h = u64::from(x) << 32 | u64::from(y);
    h ^= h >> 33;
    h = h.wrapping_mul(0xff51afd7ed558ccd);
    h ^= h >> 33;
    (h % 13) as f64 - 6.0
}

pub fn synthetic_scene(width: u32, height: u32) -> RgbImage {
    let (w, h) = (f64::from(width), f64::from(height));
    let blobs = [
        // centre x, centre y, radius (all relative), colour
        (0.38, 0.45, 0.22, [225.0, 150.0, 130.0]),
        (0.72, 0.30, 0.15, [90.0, 140.0, 200.0]),
        (0.62, 0.78, 0.18, [200.0, 190.0, 80.0]),
    ];
    RgbImage::from_fn(width, height, |x, y| {
        let u = f64::from(x) / w;
        let v = f64::from(y) / h;
        let mut px = [
            170.0 + 50.0 * (3.1 * u + 1.7 * v).sin(),
            90.0 + 45.0 * (2.3 * v - 1.1 * u).cos(),
            110.0 + 40.0 * (4.0 * u * v + 0.5).sin(),
        ];
        for (cx, cy, r, colour) in blobs {
            let d = ((u - cx).powi(2) + (v - cy).powi(2)).sqrt() / r;
            let weight = (1.0 - d * d).clamp(0.0, 1.0).powf(0.6);
            for c in 0..3 {
                px[c] = px[c] * (1.0 - weight) + colour[c] * weight;
            }
        }
        let t = texture(x, y);
        px.map(|c| (c + t).round().clamp(16.0, 240.0) as u8)
    })
    .expect("non-empty dimensions")
}
