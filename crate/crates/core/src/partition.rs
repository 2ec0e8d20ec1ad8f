//! Unordered bipartitions `A|B` of the vertex set `1..=n`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Partition`] can hold (one bit per vertex).
pub const MAX_VERTICES: usize = 63;

/// An unordered partition `A|B` of `{1..n}`, stored canonically with vertex
/// `n` in block B. The canonical key is the bitmask of block A (bit `i-1`
/// for vertex `i`), so keys run over `0..2^(n-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: u8,
    a: u64,
}

impl Partition {
    /// Builds the partition with the given block (either block may be given).
    pub fn new(n: usize, block: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut mask = 0u64;
        for &v in block {
            if v == 0 || v > n {
                return Err(Error::InvalidArgument(format!("vertex {v} outside 1..={n}")));
            }
            mask |= 1 << (v - 1);
        }
        Ok(Self::from_mask(n, mask))
    }

    /// Canonicalizes an arbitrary subset mask of `{1..n}` (either block).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        let full = full_mask(n);
        let mut a = mask & full;
        if a & (1 << (n - 1)) != 0 {
            a = full & !a;
        }
        Partition { n: n as u8, a }
    }

    /// Partition with canonical key `key` (must be `< 2^(n-1)`).
    pub fn from_key(n: usize, key: u64) -> Self {
        debug_assert!(key < (1u64 << (n - 1)));
        Partition { n: n as u8, a: key }
    }

    /// All `2^(n-1)` partitions of `{1..n}`, in canonical key order.
    pub fn all(n: usize) -> impl Iterator<Item = Partition> {
        (0..1u64 << (n - 1)).map(move |k| Partition::from_key(n, k))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn key(&self) -> u64 {
        self.a
    }

    pub fn mask_a(&self) -> u64 {
        self.a
    }

    pub fn mask_b(&self) -> u64 {
        full_mask(self.n()) & !self.a
    }

    pub fn block_a(&self) -> Vec<usize> {
        mask_to_vertices(self.a)
    }

    pub fn block_b(&self) -> Vec<usize> {
        mask_to_vertices(self.mask_b())
    }

    /// True iff `i` and `j` lie in different blocks.
    pub fn separates(&self, i: usize, j: usize) -> bool {
        ((self.a >> (i - 1)) & 1) != ((self.a >> (j - 1)) & 1)
    }

    /// True iff vertex `v` is in block A.
    pub fn in_a(&self, v: usize) -> bool {
        (self.a >> (v - 1)) & 1 == 1
    }

    /// Parses `A|B` with blocks written as digit strings (n ≤ 9) or comma
    /// lists, e.g. `13|24`, `|1234`, `1,10|2,3,4,5,6,7,8,9`. The vertex count
    /// is the size of the union, which must be exactly `1..=n`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bar = s.find('|').ok_or_else(|| Error::parse(0, "missing `|` in partition"))?;
        let left = parse_block(&s[..bar], 0)?;
        let right = parse_block(&s[bar + 1..], bar + 1)?;
        let n = left.len() + right.len();
        check_n(n)?;
        let mut seen = 0u64;
        for &v in left.iter().chain(&right) {
            if v == 0 || v > n || seen & (1 << (v - 1)) != 0 {
                return Err(Error::parse(0, format!("`{s}` is not a partition of 1..={n}")));
            }
            seen |= 1 << (v - 1);
        }
        Partition::new(n, &left)
    }

    /// The blocks in display order: smaller block first, ties broken by
    /// putting the block that contains vertex 1 first.
    pub fn display_blocks(&self) -> (Vec<usize>, Vec<usize>) {
        let a = self.block_a();
        let b = self.block_b();
        if a.len() < b.len() || (a.len() == b.len() && self.in_a(1)) {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Restricts to a vertex subset `verts` (ascending labels), relabeling
    /// the i-th listed vertex to `i+1`.
    pub fn restrict(&self, verts: &[usize]) -> Partition {
        let mut mask = 0u64;
        for (i, &v) in verts.iter().enumerate() {
            if self.in_a(v) {
                mask |= 1 << i;
            }
        }
        Partition::from_mask(verts.len(), mask)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.display_blocks();
        let n = self.n();
        write!(f, "{}|{}", format_block(&x, n), format_block(&y, n))
    }
}

pub(crate) fn format_block(block: &[usize], n: usize) -> String {
    let sep = if n <= 9 { "" } else { "," };
    block.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

fn parse_block(s: &str, offset: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::parse(offset, format!("bad vertex `{t}`")))
            })
            .collect()
    } else {
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::parse(offset + i, format!("bad vertex `{c}`")))
            })
            .collect()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!("vertex count {n} outside 1..={MAX_VERTICES}")));
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_to_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_puts_n_in_b() {
        let p = Partition::new(4, &[4]).unwrap();
        assert_eq!(p.block_a(), vec![1, 2, 3]);
        assert_eq!(p, Partition::new(4, &[1, 2, 3]).unwrap());
        assert_eq!(p.to_string(), "4|123");
    }

    #[test]
    fn display_order_matches_text_conventions() {
        let show = |s: &str| Partition::parse(s).unwrap().to_string();
        assert_eq!(show("1234|"), "|1234");
        assert_eq!(show("34|12"), "12|34");
        assert_eq!(show("23|14"), "14|23");
        assert_eq!(show("134|2"), "2|134");
        assert_eq!(show("15|234"), "15|234");
    }

    #[test]
    fn keys_enumerate_all() {
        let keys: Vec<u64> = Partition::all(4).map(|p| p.key()).collect();
        assert_eq!(keys, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn parse_rejects_non_partitions() {
        assert!(Partition::parse("12|23").is_err());
        assert!(Partition::parse("12 34").is_err());
        assert!(Partition::parse("1|3").is_err());
    }

    #[test]
    fn comma_blocks_for_large_n() {
        let p = Partition::new(10, &[1, 10]).unwrap();
        assert_eq!(p.to_string(), "1,10|2,3,4,5,6,7,8,9");
        assert_eq!(Partition::parse("1,10|2,3,4,5,6,7,8,9").unwrap(), p);
    }
}
