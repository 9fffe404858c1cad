//! Browser bindings: encrypt a picture, probe plaintext sensitivity at a
//! clicked pixel, and look at the keystream bits with the randomness battery.
//!
//! Pixels cross the boundary as canvas RGBA; alpha is dropped on the way in
//! and set opaque on the way out. Keys are named by a `u32`: 0 is the
//! built-in default key, anything else seeds a generated key.

use mpcs_core::metrics::{MetricsReport, PairReport};
use mpcs_core::randomness::BatteryReport;
use mpcs_core::scene::synthetic_scene;
use mpcs_core::{decrypt, encrypt, keystream_bits, KeyConfig, RgbImage};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wasm_bindgen::prelude::*;

/// Largest image the demo accepts, to keep the page responsive.
pub const MAX_SIDE: u32 = 1024;

pub fn key_for(seed: u32) -> KeyConfig {
    if seed == 0 {
        KeyConfig::default()
    } else {
        KeyConfig::random(&mut ChaCha8Rng::seed_from_u64(u64::from(seed)))
    }
}

pub fn from_rgba(width: u32, height: u32, rgba: &[u8]) -> Result<RgbImage, String> {
    if width == 0 || height == 0 || width > MAX_SIDE || height > MAX_SIDE {
        return Err(format!("image must be 1..={MAX_SIDE} pixels per side, got {width}x{height}"));
    }
    if rgba.len() != 4 * (width * height) as usize {
        return Err(format!("expected {} RGBA bytes, got {}", 4 * width * height, rgba.len()));
    }
    let rgb = rgba.chunks_exact(4).flat_map(|p| [p[0], p[1], p[2]]).collect();
    RgbImage::new(width, height, rgb).map_err(|e| e.to_string())
}

pub fn to_rgba(img: &RgbImage) -> Vec<u8> {
    img.pixels().flat_map(|[r, g, b]| [r, g, b, 255]).collect()
}

/// Result of [`encrypt_image`].
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct Encryption {
    pub cipher_rgba: Vec<u8>,
    pub delta: u64,
    pub round_trip_ok: bool,
    pub plain_report: String,
    pub cipher_report: String,
}

pub fn run_encryption(width: u32, height: u32, rgba: &[u8], key_seed: u32) -> Result<Encryption, String> {
    let plain = from_rgba(width, height, rgba)?;
    let key = key_for(key_seed);
    let ct = encrypt(&plain, &key).map_err(|e| e.to_string())?;
    let cipher = ct.to_image().map_err(|e| e.to_string())?;
    let back = decrypt(&ct, &key).map_err(|e| e.to_string())?;
    let report = |img: &RgbImage| MetricsReport::compute(img, None).map(|r| r.to_text()).map_err(|e| e.to_string());
    Ok(Encryption {
        cipher_rgba: to_rgba(&cipher),
        delta: ct.delta,
        round_trip_ok: back == plain,
        plain_report: report(&plain)?,
        cipher_report: report(&cipher)?,
    })
}

/// Result of [`avalanche`].
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct Avalanche {
    /// `|C1 − C2|` per channel, as an image.
    pub difference_rgba: Vec<u8>,
    pub npcr: Vec<f64>,
    pub uaci: Vec<f64>,
}

pub fn run_avalanche(
    width: u32,
    height: u32,
    rgba: &[u8],
    x: u32,
    y: u32,
    key_seed: u32,
) -> Result<Avalanche, String> {
    let p1 = from_rgba(width, height, rgba)?;
    if x >= width || y >= height {
        return Err(format!("pixel {x},{y} outside {width}x{height} image"));
    }
    let key = key_for(key_seed);
    let mut p2 = p1.clone();
    p2.set_pixel(x, y, [0, 0, 0]);
    let cipher = |img: &RgbImage| {
        encrypt(img, &key)
            .and_then(|c| c.to_image())
            .map_err(|e| e.to_string())
    };
    let c1 = cipher(&p1)?;
    let c2 = cipher(&p2)?;
    let pair = PairReport::compute(&c1, &c2).map_err(|e| e.to_string())?;
    let diff: Vec<u8> = c1
        .as_bytes()
        .iter()
        .zip(c2.as_bytes())
        .map(|(a, b)| a.abs_diff(*b))
        .collect();
    let diff = RgbImage::new(width, height, diff).map_err(|e| e.to_string())?;
    Ok(Avalanche {
        difference_rgba: to_rgba(&diff),
        npcr: pair.npcr.to_vec(),
        uaci: pair.uaci.to_vec(),
    })
}

/// Result of [`explore_keystream`].
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone)]
pub struct KeystreamView {
    pub label: String,
    /// The chosen sequence's bits laid out row by row, `bits_width` wide.
    pub bits_rgba: Vec<u8>,
    pub bits_width: u32,
    pub bits_height: u32,
    pub battery: String,
}

pub fn run_explorer(
    width: u32,
    height: u32,
    rgba: &[u8],
    key_seed: u32,
    sequence: usize,
) -> Result<KeystreamView, String> {
    let img = from_rgba(width, height, rgba)?;
    let seqs = keystream_bits(&img, &key_for(key_seed)).map_err(|e| e.to_string())?;
    let (label, bits) = seqs
        .get(sequence)
        .ok_or_else(|| format!("sequence index {sequence} (must be 0..=11)"))?;
    let side = (bits.len() as f64).sqrt().ceil().max(1.0) as u32;
    let rows = (bits.len() as u32).div_ceil(side);
    let mut pixels = vec![[128u8, 0, 0, 255]; (side * rows) as usize];
    for (p, &b) in pixels.iter_mut().zip(bits) {
        let v = if b == 1 { 255 } else { 0 };
        *p = [v, v, v, 255];
    }
    Ok(KeystreamView {
        label: label.clone(),
        bits_rgba: pixels.concat(),
        bits_width: side,
        bits_height: rows,
        battery: BatteryReport::run(&seqs).to_text(),
    })
}

/// Built-in smooth test picture, as RGBA.
#[wasm_bindgen]
pub fn scene_rgba(width: u32, height: u32) -> Vec<u8> {
    to_rgba(&synthetic_scene(width.clamp(1, MAX_SIDE), height.clamp(1, MAX_SIDE)))
}

/// Encrypts, decrypts again and reports metrics for both images.
#[wasm_bindgen]
pub fn encrypt_image(width: u32, height: u32, rgba: &[u8], key_seed: u32) -> Result<Encryption, JsError> {
    run_encryption(width, height, rgba, key_seed).map_err(|e| JsError::new(&e))
}

/// Zeroes pixel `(x, y)` and compares the two ciphertexts.
#[wasm_bindgen]
pub fn avalanche(width: u32, height: u32, rgba: &[u8], x: u32, y: u32, key_seed: u32) -> Result<Avalanche, JsError> {
    run_avalanche(width, height, rgba, x, y, key_seed).map_err(|e| JsError::new(&e))
}

/// One of the twelve keystream sequences as a bitmap, plus the battery over all twelve.
#[wasm_bindgen]
pub fn explore_keystream(
    width: u32,
    height: u32,
    rgba: &[u8],
    key_seed: u32,
    sequence: usize,
) -> Result<KeystreamView, JsError> {
    run_explorer(width, height, rgba, key_seed, sequence).map_err(|e| JsError::new(&e))
}
