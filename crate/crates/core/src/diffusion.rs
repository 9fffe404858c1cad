//! Cross-channel chained diffusion.
//!
//! Every cipher byte is the shuffled byte XORed with the previous cipher byte
//! of the same channel plus a key byte. Which of the twelve key sequences is
//! used for a channel is chosen by the previous cipher byte of another
//! channel, so the three channels feed each other.

use crate::chaos::SequenceBundle;
use crate::error::{Error, Result};

/// Byte key of one preprocessed value: `floor(x̂ · 10¹⁴) mod 256`.
///
/// `x̂ < 1`, so the scaled value stays below 2⁵³ and the conversion is exact.
pub fn key_byte(pre: f64) -> u8 {
    ((pre * 1e14).floor() as u64 % 256) as u8
}

/// Twelve byte sequences in lookup order: `t = 0..11` selects
/// `keyX1, keyY1, keyZ1, keyX2, …, keyZ4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffusionKeys(pub [Vec<u8>; 12]);

impl DiffusionKeys {
    pub fn len(&self) -> usize {
        self.0[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Key(j, t)` with `j` counted from zero.
    pub fn lookup(&self, j: usize, t: usize) -> Result<u8> {
        let seq = self
            .0
            .get(t)
            .ok_or_else(|| Error::OutOfRange(format!("key selector {t} (must be 0..=11)")))?;
        seq.get(j)
            .copied()
            .ok_or_else(|| Error::OutOfRange(format!("key position {j} of {}", seq.len())))
    }

    fn check(&self, len: usize) -> Result<()> {
        for seq in &self.0 {
            if seq.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    actual: seq.len(),
                });
            }
        }
        Ok(())
    }
}

pub fn extract_keys(bundle: &SequenceBundle) -> DiffusionKeys {
    DiffusionKeys(bundle.interleaved().map(|seq| seq.iter().map(|&v| key_byte(v)).collect()))
}

pub fn key_lookup(keys: &DiffusionKeys, j: usize, t: usize) -> Result<u8> {
    keys.lookup(j, t)
}

/// Initial cipher bytes `C_R(0), C_G(0), C_B(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedBytes {
    pub r: u8,
    pub g: u8,
    pub b: u8,
}

impl Default for SeedBytes {
    fn default() -> Self {
        SeedBytes { r: 111, g: 222, b: 77 }
    }
}

/// Three equal-length byte sequences, one per channel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChannelStreams {
    pub r: Vec<u8>,
    pub g: Vec<u8>,
    pub b: Vec<u8>,
}

impl ChannelStreams {
    pub fn new(r: Vec<u8>, g: Vec<u8>, b: Vec<u8>) -> Result<Self> {
        for other in [&g, &b] {
            if other.len() != r.len() {
                return Err(Error::LengthMismatch {
                    expected: r.len(),
                    actual: other.len(),
                });
            }
        }
        Ok(ChannelStreams { r, g, b })
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    /// Planar concatenation `R ‖ G ‖ B`.
    pub fn to_planar(&self) -> Vec<u8> {
        [self.r.as_slice(), &self.g, &self.b].concat()
    }

    pub fn from_planar(bytes: &[u8]) -> Result<Self> {
        if !bytes.len().is_multiple_of(3) {
            return Err(Error::Dimension(format!(
                "{} bytes do not split into three channels",
                bytes.len()
            )));
        }
        let n = bytes.len() / 3;
        Ok(ChannelStreams {
            r: bytes[..n].to_vec(),
            g: bytes[n..2 * n].to_vec(),
            b: bytes[2 * n..].to_vec(),
        })
    }
}

#[inline]
fn selectors(prev: (u8, u8, u8)) -> (usize, usize, usize) {
    let (r, g, b) = prev;
    (usize::from(b % 12), usize::from(r % 12), usize::from(g % 12))
}

/// Forward diffusion. The three selectors for step `j` are all taken from
/// step `j - 1` before any channel is updated.
pub fn diffuse(s: &ChannelStreams, keys: &DiffusionKeys, seeds: SeedBytes) -> Result<ChannelStreams> {
    let n = s.len();
    keys.check(n)?;
    let mut out = ChannelStreams {
        r: Vec::with_capacity(n),
        g: Vec::with_capacity(n),
        b: Vec::with_capacity(n),
    };
    let mut prev = (seeds.r, seeds.g, seeds.b);
    for j in 0..n {
        let (t1, t2, t3) = selectors(prev);
        let r = s.r[j] ^ prev.0.wrapping_add(keys.0[t1][j]);
        let g = s.g[j] ^ prev.1.wrapping_add(keys.0[t2][j]);
        let b = s.b[j] ^ prev.2.wrapping_add(keys.0[t3][j]);
        out.r.push(r);
        out.g.push(g);
        out.b.push(b);
        prev = (r, g, b);
    }
    Ok(out)
}

/// Inverse diffusion. Each output byte depends only on ciphertext, so the
/// positions are independent of each other.
pub fn inverse_diffuse(c: &ChannelStreams, keys: &DiffusionKeys, seeds: SeedBytes) -> Result<ChannelStreams> {
    let n = c.len();
    keys.check(n)?;
    let mut out = ChannelStreams {
        r: Vec::with_capacity(n),
        g: Vec::with_capacity(n),
        b: Vec::with_capacity(n),
    };
    for j in 0..n {
        let prev = if j == 0 {
            (seeds.r, seeds.g, seeds.b)
        } else {
            (c.r[j - 1], c.g[j - 1], c.b[j - 1])
        };
        let (t1, t2, t3) = selectors(prev);
        out.r.push(c.r[j] ^ prev.0.wrapping_add(keys.0[t1][j]));
        out.g.push(c.g[j] ^ prev.1.wrapping_add(keys.0[t2][j]));
        out.b.push(c.b[j] ^ prev.2.wrapping_add(keys.0[t3][j]));
    }
    Ok(out)
}
