//! Sort-index permutations and the two bit-shuffle stages.
//!
//! Forward shuffles gather (`out[k] = in[F(k)]`); inverses scatter
//! (`out[F(k)] = in[k]`). Neither stage looks at bit values, only positions.

use crate::bitplane::{BitMatrix, COLS};
use crate::chaos::SequenceBundle;
use crate::error::{Error, Result};

/// A permutation of `0..len`, stored 0-based: `F[k]` is the original
/// position of the k-th smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexPermutation(Vec<usize>);

impl IndexPermutation {
    pub fn identity(len: usize) -> Self {
        IndexPermutation((0..len).collect())
    }

    /// Validates that `indices` is a permutation of `0..len`.
    pub fn from_indices(indices: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; indices.len()];
        for &i in &indices {
            if i >= seen.len() || seen[i] {
                return Err(Error::OutOfRange(format!(
                    "{i} is not a valid position or repeats in a permutation of length {}",
                    seen.len()
                )));
            }
            seen[i] = true;
        }
        Ok(IndexPermutation(indices))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// 1-based view, as the indices are usually written.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn inverse(&self) -> IndexPermutation {
        let mut inv = vec![0; self.0.len()];
        for (k, &src) in self.0.iter().enumerate() {
            inv[src] = k;
        }
        IndexPermutation(inv)
    }
}

/// Ascending sort index with ties broken by original position.
pub fn sort_index(seq: &[f64]) -> Result<IndexPermutation> {
    if let Some(bad) = seq.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(bad));
    }
    let mut idx: Vec<usize> = (0..seq.len()).collect();
    // stable, so equal values keep their original order
    idx.sort_by(|&a, &b| seq[a].total_cmp(&seq[b]));
    Ok(IndexPermutation(idx))
}

/// Twelve column permutations: `F_X1..F_X4, F_Y1..F_Y4, F_Z1..F_Z4`.
/// Entry `p` drives column pair `p` (columns `2p` and `2p + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSet(pub [IndexPermutation; 12]);

impl PermutationSet {
    pub fn from_bundle(bundle: &SequenceBundle) -> Result<Self> {
        let grouped = bundle.grouped();
        let mut perms = Vec::with_capacity(12);
        for seq in grouped {
            perms.push(sort_index(seq)?);
        }
        Ok(PermutationSet(perms.try_into().expect("twelve sequences")))
    }

    pub fn identity(len: usize) -> Self {
        PermutationSet(std::array::from_fn(|_| IndexPermutation::identity(len)))
    }

    pub fn len(&self) -> usize {
        self.0[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check(&self, rows: usize) -> Result<()> {
        for p in &self.0 {
            if p.len() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    actual: p.len(),
                });
            }
        }
        Ok(())
    }
}

#[inline]
fn pair_shift(pair: usize) -> usize {
    COLS - 2 - 2 * pair
}

/// Column-wise shuffle: each column pair is permuted down the rows by its own
/// permutation.
pub fn column_shuffle(bm: &BitMatrix, perms: &PermutationSet) -> Result<BitMatrix> {
    perms.check(bm.row_count())?;
    let input = bm.rows();
    let mut out = vec![0u32; input.len()];
    for (pair, perm) in perms.0.iter().enumerate() {
        let mask = 0b11 << pair_shift(pair);
        for (dst, &src) in out.iter_mut().zip(perm.as_slice()) {
            *dst |= input[src] & mask;
        }
    }
    Ok(BitMatrix::from_rows(out))
}

pub fn inverse_column_shuffle(bm: &BitMatrix, perms: &PermutationSet) -> Result<BitMatrix> {
    perms.check(bm.row_count())?;
    let input = bm.rows();
    let mut out = vec![0u32; input.len()];
    for (pair, perm) in perms.0.iter().enumerate() {
        let mask = 0b11 << pair_shift(pair);
        for (&word, &dst) in input.iter().zip(perm.as_slice()) {
            out[dst] |= word & mask;
        }
    }
    Ok(BitMatrix::from_rows(out))
}

/// Per-row permutation of the twelve bit pairs, from the sort index of the
/// row's twelve preprocessed values (`x̂1, ŷ1, ẑ1, …, ẑ4`).
pub fn row_permutation(bundle: &SequenceBundle, row: usize) -> [usize; 12] {
    let v = bundle.row_vector(row);
    let mut idx: [usize; 12] = std::array::from_fn(|i| i);
    idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
    idx
}

/// Moves whole pairs: output pair `s` takes input pair `pi[s]`.
pub fn gather_pairs(row: u32, pi: &[usize; 12]) -> u32 {
    pi.iter().enumerate().fold(0, |acc, (s, &src)| {
        acc | (row >> pair_shift(src) & 0b11) << pair_shift(s)
    })
}

pub fn scatter_pairs(row: u32, pi: &[usize; 12]) -> u32 {
    pi.iter().enumerate().fold(0, |acc, (s, &dst)| {
        acc | (row >> pair_shift(s) & 0b11) << pair_shift(dst)
    })
}

fn check_rows(bm: &BitMatrix, bundle: &SequenceBundle) -> Result<()> {
    if bm.row_count() != bundle.len() {
        return Err(Error::LengthMismatch {
            expected: bundle.len(),
            actual: bm.row_count(),
        });
    }
    if let Some(row) = (0..bundle.len()).find(|&r| bundle.row_vector(r).iter().any(|v| !v.is_finite())) {
        return Err(Error::NonFinite(row));
    }
    Ok(())
}

pub fn row_pair_shuffle(bm: &BitMatrix, bundle: &SequenceBundle) -> Result<BitMatrix> {
    check_rows(bm, bundle)?;
    let rows = bm
        .rows()
        .iter()
        .enumerate()
        .map(|(mu, &row)| gather_pairs(row, &row_permutation(bundle, mu)))
        .collect();
    Ok(BitMatrix::from_rows(rows))
}

pub fn inverse_row_pair_shuffle(bm: &BitMatrix, bundle: &SequenceBundle) -> Result<BitMatrix> {
    check_rows(bm, bundle)?;
    let rows = bm
        .rows()
        .iter()
        .enumerate()
        .map(|(mu, &row)| scatter_pairs(row, &row_permutation(bundle, mu)))
        .collect();
    Ok(BitMatrix::from_rows(rows))
}
