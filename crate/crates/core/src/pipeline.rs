//! End-to-end encryption and decryption, and the ciphertext container.

use crate::bitplane::{
    arrange, bitmatrix_to_image, image_to_bitmatrix, inverse_arrange, popcount_delta,
    TransientCounts,
};
use crate::chaos::{generate_bundle, SequenceBundle};
use crate::diffusion::{diffuse, extract_keys, inverse_diffuse, ChannelStreams, DiffusionKeys};
use crate::error::{Error, Result};
use crate::image::RgbImage;
use crate::key::KeyConfig;
use crate::shuffle::{
    column_shuffle, inverse_column_shuffle, inverse_row_pair_shuffle, row_pair_shuffle,
    PermutationSet,
};

pub const MAGIC: [u8; 4] = *b"MPCS";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 21;

/// Largest supported pixel count.
pub const MAX_PIXELS: u64 = 1 << 32;

/// Everything derived from the key and Δ: the chaotic sequences, the twelve
/// column permutations and the diffusion key bytes.
#[derive(Debug, Clone)]
pub struct Keystream {
    pub delta: u64,
    pub transients: TransientCounts,
    pub bundle: SequenceBundle,
    pub permutations: PermutationSet,
    pub keys: DiffusionKeys,
}

impl Keystream {
    pub fn derive(key: &KeyConfig, delta: u64, pixels: usize) -> Result<Self> {
        key.validate()?;
        let transients = TransientCounts::from_delta(delta);
        let bundle = generate_bundle(key, transients, pixels)?;
        let permutations = PermutationSet::from_bundle(&bundle)?;
        let keys = extract_keys(&bundle);
        Ok(Keystream {
            delta,
            transients,
            bundle,
            permutations,
            keys,
        })
    }

    /// Keystream for a plaintext image (Δ taken from its bits).
    pub fn for_image(img: &RgbImage, key: &KeyConfig) -> Result<Self> {
        check_size(img.width(), img.height())?;
        let delta = popcount_delta(&image_to_bitmatrix(img));
        Self::derive(key, delta, img.len())
    }
}

fn check_size(width: u32, height: u32) -> Result<()> {
    let n = u64::from(width) * u64::from(height);
    if n > MAX_PIXELS {
        return Err(Error::TooLarge(n));
    }
    Ok(())
}

/// Serialized ciphertext.
///
/// Layout (big-endian): `"MPCS"`, version byte, `u32` width, `u32` height,
/// `u64` Δ, then `3·width·height` payload bytes holding the red cipher
/// sequence, then green, then blue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CipherContainer {
    pub width: u32,
    pub height: u32,
    pub delta: u64,
    pub payload: Vec<u8>,
}

impl CipherContainer {
    pub fn pixel_count(&self) -> usize {
        self.width as usize * self.height as usize
    }

    fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 {
            return Err(Error::MalformedContainer(format!(
                "empty {}x{} image",
                self.width, self.height
            )));
        }
        check_size(self.width, self.height)?;
        let n = self.pixel_count();
        if self.payload.len() != 3 * n {
            return Err(Error::MalformedContainer(format!(
                "payload holds {} bytes, a {}x{} image needs {}",
                self.payload.len(),
                self.width,
                self.height,
                3 * n
            )));
        }
        if self.delta > 24 * n as u64 {
            return Err(Error::MalformedContainer(format!(
                "delta {} exceeds the {} bits of the image",
                self.delta,
                24 * n
            )));
        }
        Ok(())
    }

    pub fn channels(&self) -> Result<ChannelStreams> {
        ChannelStreams::from_planar(&self.payload)
    }

    /// The cipher image as ordinary interleaved RGB.
    pub fn to_image(&self) -> Result<RgbImage> {
        self.validate()?;
        let c = self.channels()?;
        RgbImage::from_channels(self.width, self.height, [&c.r, &c.g, &c.b])
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + self.payload.len());
        out.extend_from_slice(&MAGIC);
        out.push(VERSION);
        out.extend_from_slice(&self.width.to_be_bytes());
        out.extend_from_slice(&self.height.to_be_bytes());
        out.extend_from_slice(&self.delta.to_be_bytes());
        out.extend_from_slice(&self.payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN {
            return Err(Error::MalformedContainer(format!(
                "{} bytes is shorter than the {HEADER_LEN}-byte header",
                bytes.len()
            )));
        }
        if bytes[..4] != MAGIC {
            return Err(Error::MalformedContainer("bad magic".into()));
        }
        if bytes[4] != VERSION {
            return Err(Error::UnsupportedVersion(bytes[4]));
        }
        let u32_at = |i: usize| u32::from_be_bytes(bytes[i..i + 4].try_into().unwrap());
        let ct = CipherContainer {
            width: u32_at(5),
            height: u32_at(9),
            delta: u64::from_be_bytes(bytes[13..21].try_into().unwrap()),
            payload: bytes[HEADER_LEN..].to_vec(),
        };
        ct.validate()?;
        Ok(ct)
    }
}

pub fn serialize(ct: &CipherContainer) -> Vec<u8> {
    ct.to_bytes()
}

pub fn parse(bytes: &[u8]) -> Result<CipherContainer> {
    CipherContainer::from_bytes(bytes)
}

/// Shuffle stage alone: bit expansion, interleave, column and row shuffles.
pub fn shuffle_image(img: &RgbImage, ks: &Keystream) -> Result<RgbImage> {
    let psi = arrange(&image_to_bitmatrix(img));
    let columns = column_shuffle(&psi, &ks.permutations)?;
    let rows = row_pair_shuffle(&columns, &ks.bundle)?;
    bitmatrix_to_image(&rows, img.width(), img.height())
}

pub fn unshuffle_image(img: &RgbImage, ks: &Keystream) -> Result<RgbImage> {
    let rows = inverse_row_pair_shuffle(&image_to_bitmatrix(img), &ks.bundle)?;
    let columns = inverse_column_shuffle(&rows, &ks.permutations)?;
    bitmatrix_to_image(&inverse_arrange(&columns), img.width(), img.height())
}

pub fn encrypt(img: &RgbImage, key: &KeyConfig) -> Result<CipherContainer> {
    let ks = Keystream::for_image(img, key)?;
    encrypt_with(img, key, &ks)
}

/// Encrypts with a precomputed keystream (which must belong to `img`).
pub fn encrypt_with(img: &RgbImage, key: &KeyConfig, ks: &Keystream) -> Result<CipherContainer> {
    let shuffled = shuffle_image(img, ks)?;
    let s = ChannelStreams::new(shuffled.channel(0), shuffled.channel(1), shuffled.channel(2))?;
    let c = diffuse(&s, &ks.keys, key.seeds)?;
    Ok(CipherContainer {
        width: img.width(),
        height: img.height(),
        delta: ks.delta,
        payload: c.to_planar(),
    })
}

pub fn decrypt(ct: &CipherContainer, key: &KeyConfig) -> Result<RgbImage> {
    ct.validate()?;
    let ks = Keystream::derive(key, ct.delta, ct.pixel_count())?;
    let s = inverse_diffuse(&ct.channels()?, &ks.keys, key.seeds)?;
    let shuffled = RgbImage::from_channels(ct.width, ct.height, [&s.r, &s.g, &s.b])?;
    unshuffle_image(&shuffled, &ks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gradient(w: u32, h: u32) -> RgbImage {
        RgbImage::from_fn(w, h, |x, y| [(x * 7 + y) as u8, (y * 5) as u8, (x ^ y) as u8 | 1]).unwrap()
    }

    #[test]
    fn round_trip_small() {
        let key = KeyConfig::default();
        for (w, h) in [(1, 1), (3, 5), (17, 1), (8, 8)] {
            let img = gradient(w, h);
            let ct = encrypt(&img, &key).unwrap();
            assert_eq!(decrypt(&ct, &key).unwrap(), img);
        }
    }

    #[test]
    fn header_layout() {
        let ct = CipherContainer {
            width: 2,
            height: 2,
            delta: 96,
            payload: (0..12).collect(),
        };
        let bytes = serialize(&ct);
        assert_eq!(bytes.len(), 21 + 12);
        assert_eq!(&bytes[..5], b"MPCS\x01");
        assert_eq!(&bytes[5..13], &[0, 0, 0, 2, 0, 0, 0, 2]);
        assert_eq!(&bytes[13..21], &96u64.to_be_bytes());
        assert_eq!(parse(&bytes).unwrap(), ct);
    }

    #[test]
    fn malformed_containers() {
        let img = gradient(4, 3);
        let bytes = encrypt(&img, &KeyConfig::default()).unwrap().to_bytes();
        assert!(matches!(parse(&[]), Err(Error::MalformedContainer(_))));
        assert!(matches!(parse(&bytes[..bytes.len() - 1]), Err(Error::MalformedContainer(_))));
        let mut bad = bytes.clone();
        bad[0] = b'X';
        assert!(matches!(parse(&bad), Err(Error::MalformedContainer(_))));
        let mut bad = bytes.clone();
        bad[4] = 2;
        assert!(matches!(parse(&bad), Err(Error::UnsupportedVersion(2))));
        let mut bad = bytes.clone();
        bad[13..21].copy_from_slice(&(24 * 12 + 1u64).to_be_bytes());
        assert!(matches!(parse(&bad), Err(Error::MalformedContainer(_))));
    }

    #[test]
    fn oversized_image_rejected() {
        let ct = CipherContainer {
            width: u32::MAX,
            height: 2,
            delta: 0,
            payload: vec![],
        };
        assert!(matches!(decrypt(&ct, &KeyConfig::default()), Err(Error::TooLarge(_))));
    }

    #[test]
    fn header_delta_is_plaintext_popcount() {
        let img = gradient(16, 16);
        let ct = encrypt(&img, &KeyConfig::default()).unwrap();
        assert_eq!(ct.delta, popcount_delta(&image_to_bitmatrix(&img)));
        let cipher_ones: u64 = ct.payload.iter().map(|b| u64::from(b.count_ones())).sum();
        assert_ne!(cipher_ones, ct.delta);
    }
}
