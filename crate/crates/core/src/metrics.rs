//! Statistical metrics for judging cipher images: histograms, mean gray
//! level, chi-square uniformity, adjacent-pixel correlation, Shannon entropy,
//! NPCR and UACI.
//!
//! Per-channel results are returned as `[R, G, B]`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::image::RgbImage;

pub type Histogram = [u64; 256];

pub fn channel_histogram(values: impl IntoIterator<Item = u8>) -> Histogram {
    let mut h = [0u64; 256];
    for v in values {
        h[usize::from(v)] += 1;
    }
    h
}

pub fn histogram(img: &RgbImage) -> [Histogram; 3] {
    let mut h = [[0u64; 256]; 3];
    for px in img.pixels() {
        for c in 0..3 {
            h[c][usize::from(px[c])] += 1;
        }
    }
    h
}

pub fn mean_gray(img: &RgbImage) -> [f64; 3] {
    let mut sums = [0u64; 3];
    for px in img.pixels() {
        for c in 0..3 {
            sums[c] += u64::from(px[c]);
        }
    }
    let n = img.len() as f64;
    sums.map(|s| s as f64 / n)
}

/// `Σ (observed − expected)² / expected` with `expected = count / 256`.
pub fn chi_square_of(h: &Histogram) -> f64 {
    let total: u64 = h.iter().sum();
    let expected = total as f64 / 256.0;
    h.iter()
        .map(|&observed| {
            let d = observed as f64 - expected;
            d * d / expected
        })
        .sum()
}

pub fn chi_square(img: &RgbImage) -> [f64; 3] {
    histogram(img).map(|h| chi_square_of(&h))
}

/// Shannon entropy in bits; empty bins contribute nothing.
pub fn entropy_of(h: &Histogram) -> f64 {
    let total: u64 = h.iter().sum();
    let n = total as f64;
    h.iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum()
}

pub fn entropy(img: &RgbImage) -> [f64; 3] {
    histogram(img).map(|h| entropy_of(&h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
    Diagonal,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::Horizontal, Direction::Vertical, Direction::Diagonal];

    pub fn name(self) -> &'static str {
        match self {
            Direction::Horizontal => "horizontal",
            Direction::Vertical => "vertical",
            Direction::Diagonal => "diagonal",
        }
    }

    fn offset(self) -> (u32, u32) {
        match self {
            Direction::Horizontal => (1, 0),
            Direction::Vertical => (0, 1),
            Direction::Diagonal => (1, 1),
        }
    }
}

/// Pearson coefficient of paired samples.
pub fn pearson(pairs: impl IntoIterator<Item = (f64, f64)>) -> Result<f64> {
    let (mut n, mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for (x, y) in pairs {
        n += 1.0;
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    let vx = n * sxx - sx * sx;
    let vy = n * syy - sy * sy;
    if n < 2.0 || vx <= 0.0 || vy <= 0.0 {
        return Err(Error::DegenerateCorrelation);
    }
    Ok(((n * sxy - sx * sy) / (vx * vy).sqrt()).clamp(-1.0, 1.0))
}

/// Correlation of every adjacent pixel pair in `dir`, one value per channel.
pub fn channel_correlation(img: &RgbImage, dir: Direction) -> Result<[f64; 3]> {
    let (dx, dy) = dir.offset();
    if img.width() <= dx || img.height() <= dy {
        return Err(Error::Dimension(format!(
            "{}x{} image has no {} neighbours",
            img.width(),
            img.height(),
            dir.name()
        )));
    }
    let mut out = [0.0; 3];
    for (c, slot) in out.iter_mut().enumerate() {
        let pairs = (0..img.height() - dy).flat_map(|y| {
            (0..img.width() - dx).map(move |x| {
                (
                    f64::from(img.pixel(x, y)[c]),
                    f64::from(img.pixel(x + dx, y + dy)[c]),
                )
            })
        });
        *slot = pearson(pairs)?;
    }
    Ok(out)
}

/// Mean of the three per-channel coefficients.
pub fn correlation(img: &RgbImage, dir: Direction) -> Result<f64> {
    let c = channel_correlation(img, dir)?;
    Ok((c[0] + c[1] + c[2]) / 3.0)
}

fn check_pair(a: &RgbImage, b: &RgbImage) -> Result<()> {
    if !a.same_dimensions(b) {
        return Err(Error::Dimension(format!(
            "{}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )));
    }
    Ok(())
}

/// Percentage of positions whose values differ, per channel.
pub fn npcr(a: &RgbImage, b: &RgbImage) -> Result<[f64; 3]> {
    check_pair(a, b)?;
    let mut diff = [0u64; 3];
    for (p, q) in a.pixels().zip(b.pixels()) {
        for c in 0..3 {
            diff[c] += u64::from(p[c] != q[c]);
        }
    }
    let n = a.len() as f64;
    Ok(diff.map(|d| d as f64 / n * 100.0))
}

/// Mean absolute difference as a percentage of 255, per channel.
pub fn uaci(a: &RgbImage, b: &RgbImage) -> Result<[f64; 3]> {
    check_pair(a, b)?;
    let mut sum = [0u64; 3];
    for (p, q) in a.pixels().zip(b.pixels()) {
        for c in 0..3 {
            sum[c] += u64::from(p[c].abs_diff(q[c]));
        }
    }
    let n = a.len() as f64;
    Ok(sum.map(|s| s as f64 / (255.0 * n) * 100.0))
}

/// Pairwise metrics between two images.
#[derive(Debug, Clone, PartialEq)]
pub struct PairReport {
    pub npcr: [f64; 3],
    pub uaci: [f64; 3],
}

impl PairReport {
    pub fn compute(a: &RgbImage, b: &RgbImage) -> Result<Self> {
        Ok(PairReport {
            npcr: npcr(a, b)?,
            uaci: uaci(a, b)?,
        })
    }
}

/// Single-image metrics, plus optional pairwise metrics against a reference.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub width: u32,
    pub height: u32,
    pub histograms: [Histogram; 3],
    pub mean: [f64; 3],
    pub chi_square: [f64; 3],
    pub entropy: [f64; 3],
    /// Per direction: per-channel coefficients, or `None` when undefined.
    pub correlation: [Option<[f64; 3]>; 3],
    pub pair: Option<PairReport>,
}

impl MetricsReport {
    pub fn compute(img: &RgbImage, reference: Option<&RgbImage>) -> Result<Self> {
        let histograms = histogram(img);
        Ok(MetricsReport {
            width: img.width(),
            height: img.height(),
            histograms,
            mean: mean_gray(img),
            chi_square: histograms.map(|h| chi_square_of(&h)),
            entropy: histograms.map(|h| entropy_of(&h)),
            correlation: Direction::ALL.map(|d| channel_correlation(img, d).ok()),
            pair: reference.map(|r| PairReport::compute(img, r)).transpose()?,
        })
    }

    /// One metric per line, fields in fixed order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let triple = |v: [f64; 3], digits: usize| {
            format!("{:.d$} {:.d$} {:.d$}", v[0], v[1], v[2], d = digits)
        };
        writeln!(out, "size {}x{}", self.width, self.height).unwrap();
        for (c, name) in ["r", "g", "b"].iter().enumerate() {
            let h = &self.histograms[c];
            let occupied = h.iter().filter(|&&n| n > 0).count();
            let min = h.iter().min().unwrap();
            let max = h.iter().max().unwrap();
            writeln!(out, "histogram.{name} occupied={occupied} min={min} max={max}").unwrap();
        }
        writeln!(out, "mean {}", triple(self.mean, 4)).unwrap();
        writeln!(out, "chi_square {}", triple(self.chi_square, 2)).unwrap();
        writeln!(out, "entropy {}", triple(self.entropy, 4)).unwrap();
        for (dir, value) in Direction::ALL.iter().zip(&self.correlation) {
            match value {
                Some(c) => writeln!(
                    out,
                    "correlation.{} {} mean={:.5}",
                    dir.name(),
                    triple(*c, 5),
                    (c[0] + c[1] + c[2]) / 3.0
                )
                .unwrap(),
                None => writeln!(out, "correlation.{} undefined", dir.name()).unwrap(),
            }
        }
        if let Some(p) = &self.pair {
            writeln!(out, "npcr {}", triple(p.npcr, 3)).unwrap();
            writeln!(out, "uaci {}", triple(p.uaci, 3)).unwrap();
        }
        out
    }
}
