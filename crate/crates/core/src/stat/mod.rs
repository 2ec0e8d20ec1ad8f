//! Binary graph models and group-based models on split systems, and their
//! identification with cut ideals.

mod fourier;
mod graph_model;
mod splits;

use std::fmt;

use crate::error::{Error, Result};

pub use fourier::{fourier, fourier_inv, parse_rational_vector, rational_vector_json, split_model_point};
pub use graph_model::{gamma, gamma_inv, gamma_table, psi_matrix, verify_covariance, CovarianceCheck};
pub use splits::{
    even_indices, graph_of_splits, jc_matrix, mapping_table, split_report, split_to_edge, splits_of_tree, tau, tau_inv,
    verify_cutsplit, LeafTree, Split, SplitSystem,
};

/// Largest string length for which full index sets are enumerated.
pub const MAX_INDEX_LEN: usize = 20;

/// A binary string `i_1 i_2 … i_n`. Its integer value reads `i_1` as the
/// most significant bit, so value order is lexicographic string order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryIndex {
    n: u8,
    value: u64,
}

impl BinaryIndex {
    pub fn new(n: usize, value: u64) -> Result<Self> {
        if n > 63 || value >> n != 0 {
            return Err(Error::InvalidArgument(format!("{value} is not a binary string of length {n}")));
        }
        Ok(BinaryIndex { n: n as u8, value })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut value = 0u64;
        for (pos, c) in s.chars().enumerate() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::parse(pos, format!("`{c}` is not a binary digit"))),
            };
            value = value << 1 | bit;
        }
        BinaryIndex::new(s.len(), value)
    }

    /// All `2^n` strings in value order.
    pub fn all(n: usize) -> impl Iterator<Item = BinaryIndex> {
        (0..1u64 << n).map(move |v| BinaryIndex { n: n as u8, value: v })
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `i_k`, for `k` in `1..=n`.
    pub fn bit(&self, k: usize) -> u8 {
        (self.value >> (self.len() - k) & 1) as u8
    }

    /// The positions holding a 1, as a mask with bit `k-1` for position `k`.
    pub fn support(&self) -> u64 {
        (1..=self.len()).filter(|&k| self.bit(k) == 1).fold(0, |m, k| m | 1 << (k - 1))
    }

    pub fn from_support(n: usize, mask: u64) -> Self {
        let value = (1..=n).filter(|&k| mask >> (k - 1) & 1 == 1).fold(0u64, |v, k| v | 1 << (n - k));
        BinaryIndex { n: n as u8, value }
    }

    pub fn parity(&self) -> u32 {
        self.value.count_ones() % 2
    }
}

impl fmt::Display for BinaryIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.len() {
            write!(f, "{}", self.bit(k))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trips() {
        let i = BinaryIndex::parse("0110").unwrap();
        assert_eq!(i.value(), 6);
        assert_eq!((i.bit(1), i.bit(2), i.bit(4)), (0, 1, 0));
        assert_eq!(i.support(), 0b0110);
        assert_eq!(i.to_string(), "0110");
        assert_eq!(BinaryIndex::from_support(4, i.support()), i);
        let j = BinaryIndex::parse("1000").unwrap();
        assert_eq!(j.support(), 1);
        assert!(BinaryIndex::parse("012").is_err());
        assert!(BinaryIndex::new(2, 4).is_err());
    }
}
