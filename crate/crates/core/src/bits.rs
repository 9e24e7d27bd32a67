//! Fixed-length bit vectors packed into `u64` words.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A bit vector of fixed length. Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut row = BitRow::zeros(len);
        for i in indices {
            row.set(i);
        }
        row
    }

    /// Builds a row of length `len <= 64` from the low bits of `mask`.
    pub fn from_u64(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_u64 needs len <= 64");
        let mut row = BitRow::zeros(len);
        if len > 0 {
            row.words[0] = mask & low_mask(len);
        }
        row
    }

    /// The row as an integer, if it fits in a `u64`.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ if self.words[1..].iter().all(|&w| w == 0) => Some(self.words[0]),
            _ => None,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Index of the highest set bit.
    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * WORD + t)
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        self.check_len(other);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a ^= b);
    }

    pub fn or_assign(&mut self, other: &BitRow) {
        self.check_len(other);
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a |= b);
    }

    pub fn xor(&self, other: &BitRow) -> BitRow {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn or(&self, other: &BitRow) -> BitRow {
        let mut out = self.clone();
        out.or_assign(other);
        out
    }

    pub fn and(&self, other: &BitRow) -> BitRow {
        self.check_len(other);
        BitRow {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Number of positions set in both rows.
    pub fn and_count(&self, other: &BitRow) -> usize {
        self.check_len(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn check_len(&self, other: &BitRow) {
        assert_eq!(self.len, other.len, "bit row length mismatch");
    }
}

fn low_mask(len: usize) -> u64 {
    if len >= WORD {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Orders rows of equal length by their value as an integer (bit `i` has weight `2^i`).
impl Ord for BitRow {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitRow {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints bit 0 first, e.g. `"0110"`.
impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_ops_across_word_boundary() {
        let mut r = BitRow::zeros(130);
        r.set(0);
        r.set(63);
        r.set(64);
        r.set(129);
        assert_eq!(r.count_ones(), 4);
        assert_eq!(r.iter_ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(r.first_one(), Some(0));
        assert_eq!(r.last_one(), Some(129));
        r.flip(63);
        r.clear(0);
        assert_eq!(r.iter_ones().collect::<Vec<_>>(), vec![64, 129]);
        assert_eq!(r.to_u64(), None);
        assert!(BitRow::zeros(5).is_zero());
        assert_eq!(BitRow::zeros(0).first_one(), None);
    }

    #[test]
    fn display_is_bit_zero_first() {
        assert_eq!(BitRow::from_u64(4, 0b0110).to_string(), "0110");
        assert_eq!(BitRow::from_u64(3, 0b001).to_string(), "100");
    }

    proptest! {
        #[test]
        fn order_matches_integer_order(a in any::<u64>(), b in any::<u64>()) {
            let (ra, rb) = (BitRow::from_u64(64, a), BitRow::from_u64(64, b));
            prop_assert_eq!(ra.cmp(&rb), a.cmp(&b));
            prop_assert_eq!(ra.xor(&rb).to_u64(), Some(a ^ b));
            prop_assert_eq!(ra.and_count(&rb), (a & b).count_ones() as usize);
        }
    }
}
