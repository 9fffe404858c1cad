//! Binary expansion of an RGB image into an `mn × 24` bit matrix, the
//! plaintext popcount Δ, and the RGB bit interleave.

use crate::error::{Error, Result};
use crate::image::RgbImage;

pub const COLS: usize = 24;
const ROW_MASK: u32 = (1 << COLS) - 1;

/// An `mn × 24` binary matrix.
///
/// Each row is packed into the low 24 bits of a `u32`; column 0 (the
/// leftmost) is bit 23. In the plain layout a row is `R << 16 | G << 8 | B`,
/// so columns 0–7 are the red bits MSB first, 8–15 green, 16–23 blue.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<u32>,
}

impl BitMatrix {
    pub fn zeros(rows: usize) -> Self {
        BitMatrix { rows: vec![0; rows] }
    }

    /// Rows are masked to 24 bits.
    pub fn from_rows(rows: Vec<u32>) -> Self {
        BitMatrix {
            rows: rows.into_iter().map(|r| r & ROW_MASK).collect(),
        }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row] >> col_shift(col) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, bit: bool) {
        let mask = 1 << col_shift(col);
        if bit {
            self.rows[row] |= mask;
        } else {
            self.rows[row] &= !mask;
        }
    }

    /// A row rendered as 24 `0`/`1` characters.
    pub fn row_string(&self, row: usize) -> String {
        (0..COLS).map(|c| if self.get(row, c) { '1' } else { '0' }).collect()
    }

    pub fn count_ones(&self) -> u64 {
        self.rows.iter().map(|r| u64::from(r.count_ones())).sum()
    }
}

#[inline]
pub(crate) fn col_shift(col: usize) -> usize {
    debug_assert!(col < COLS);
    COLS - 1 - col
}

pub fn image_to_bitmatrix(img: &RgbImage) -> BitMatrix {
    BitMatrix {
        rows: img
            .pixels()
            .map(|[r, g, b]| u32::from(r) << 16 | u32::from(g) << 8 | u32::from(b))
            .collect(),
    }
}

/// Inverse of [`image_to_bitmatrix`] for an image `width` wide and `height` tall.
pub fn bitmatrix_to_image(bm: &BitMatrix, width: u32, height: u32) -> Result<RgbImage> {
    let expected = width as usize * height as usize;
    if bm.row_count() != expected {
        return Err(Error::Dimension(format!(
            "bit matrix has {} rows, a {width}x{height} image needs {expected}",
            bm.row_count()
        )));
    }
    let data = bm
        .rows
        .iter()
        .flat_map(|&r| [(r >> 16) as u8, (r >> 8) as u8, r as u8])
        .collect();
    RgbImage::new(width, height, data)
}

/// Δ, the number of set bits in the matrix.
pub fn popcount_delta(bm: &BitMatrix) -> u64 {
    bm.count_ones()
}

/// Burn-in iteration counts for the four systems, derived from Δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransientCounts {
    pub henon: u64,
    pub lorenz: u64,
    pub chua: u64,
    pub rossler: u64,
}

impl TransientCounts {
    pub fn from_delta(delta: u64) -> Self {
        TransientCounts {
            henon: delta % 997 + 829,
            lorenz: delta % 937 + 529,
            chua: delta % 1097 + 719,
            rossler: delta % 397 + 1123,
        }
    }

    /// Counts in system order (Hénon, Lorenz, Chua, Rössler).
    pub fn as_array(&self) -> [u64; 4] {
        [self.henon, self.lorenz, self.chua, self.rossler]
    }
}

pub fn transient_counts(delta: u64) -> TransientCounts {
    TransientCounts::from_delta(delta)
}

/// Output column `3k + c` takes input column `8c + k`: bit `k` of R, G, B in turn.
const ARRANGE_SOURCE: [usize; COLS] = {
    let mut table = [0; COLS];
    let mut out = 0;
    while out < COLS {
        table[out] = 8 * (out % 3) + out / 3;
        out += 1;
    }
    table
};

fn permute_columns(bm: &BitMatrix, source_of: impl Fn(usize) -> usize) -> BitMatrix {
    let rows = bm
        .rows
        .iter()
        .map(|&row| {
            (0..COLS).fold(0u32, |acc, out| {
                let bit = row >> col_shift(source_of(out)) & 1;
                acc | bit << col_shift(out)
            })
        })
        .collect();
    BitMatrix { rows }
}

/// Interleaves the channel bits of every row: `R1 G1 B1 R2 G2 B2 … R8 G8 B8`.
pub fn arrange(bm: &BitMatrix) -> BitMatrix {
    permute_columns(bm, |out| ARRANGE_SOURCE[out])
}

pub fn inverse_arrange(bm: &BitMatrix) -> BitMatrix {
    // input column 8c + k came from output column 3k + c
    permute_columns(bm, |out| 3 * (out % 8) + out / 8)
}
