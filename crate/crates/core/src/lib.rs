//! Color image cipher built from four chaotic systems.
//!
//! Encryption runs in two stages. The shuffle stage expands every pixel into
//! 24 bits, interleaves the R, G and B bits, and permutes bit positions with
//! sort-index permutations of chaotic sequences, first down each column pair,
//! then across each row in bit pairs. The diffusion stage chains the shuffled
//! bytes through XOR and modular addition with key bytes drawn from the same
//! sequences. The number of set bits in the plaintext (Δ) selects how long
//! each chaotic system is iterated before sampling, so every plaintext gets
//! its own keystream.
//!
//! ```
//! use mpcs_core::{decrypt, encrypt, KeyConfig, RgbImage};
//!
//! let img = RgbImage::from_fn(8, 8, |x, y| [x as u8 * 30, y as u8 * 30, 7]).unwrap();
//! let key = KeyConfig::default();
//! let ct = encrypt(&img, &key).unwrap();
//! assert_eq!(decrypt(&ct, &key).unwrap(), img);
//! ```

pub mod bitplane;
pub mod chaos;
pub mod diffusion;
pub mod error;
pub mod image;
pub mod key;
pub mod metrics;
pub mod pipeline;
pub mod ppm;
pub mod randomness;
pub mod scene;
pub mod shuffle;
pub mod special;

pub use bitplane::{BitMatrix, TransientCounts};
pub use chaos::{Component, SequenceBundle, SystemId, SystemParams, SystemState};
pub use diffusion::{ChannelStreams, DiffusionKeys, SeedBytes};
pub use error::{Error, Result};
pub use image::RgbImage;
pub use key::KeyConfig;
pub use pipeline::{decrypt, encrypt, CipherContainer, Keystream};
pub use shuffle::{IndexPermutation, PermutationSet};

/// The twelve binarised keystream sequences for `img` under `key`, labelled
/// `X1..X4, Y1..Y4, Z1..Z4`.
pub fn keystream_bits(img: &RgbImage, key: &KeyConfig) -> Result<Vec<(String, Vec<u8>)>> {
    let ks = Keystream::for_image(img, key)?;
    Ok(SequenceBundle::grouped_labels()
        .into_iter()
        .zip(ks.bundle.grouped())
        .map(|(label, seq)| (label, chaos::binarize(seq, key.theta)))
        .collect())
}
