//! Dense membership sets over `Z_n`.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Mask selecting bits strictly above `index` within its word.
#[inline]
fn mask_above(index: usize) -> u64 {
    let b = index % WORD_BITS;
    if b == WORD_BITS - 1 {
        0
    } else {
        u64::MAX << (b + 1)
    }
}

/// Mask selecting bits strictly below `index` within its word.
#[inline]
fn mask_below(index: usize) -> u64 {
    (1u64 << (index % WORD_BITS)) - 1
}

/// A subset of `{0, ..., len - 1}` stored one bit per residue.
///
/// Bits at positions `>= len` in the last word are always clear, so word-wise
/// popcounts never need a tail mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueBitset {
    len: usize,
    words: Vec<u64>,
}

impl ResidueBitset {
    pub fn new(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn from_residues<I: IntoIterator<Item = usize>>(len: usize, residues: I) -> Self {
        let mut set = Self::new(len);
        for r in residues {
            set.insert(r);
        }
        set
    }

    /// Size of the universe, i.e. the modulus.
    #[inline]
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.len && (self.words[x / WORD_BITS] >> (x % WORD_BITS)) & 1 == 1
    }

    /// Panics if `x` is outside the universe.
    #[inline]
    pub fn insert(&mut self, x: usize) {
        assert!(x < self.len, "residue {x} out of range for modulus {}", self.len);
        self.words[x / WORD_BITS] |= 1 << (x % WORD_BITS);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    /// Elements strictly greater than `x`, ascending.
    pub fn iter_above(&self, x: usize) -> Iter<'_> {
        let start = x + 1;
        if start >= self.len {
            return Iter { words: &self.words, index: self.words.len(), current: 0 };
        }
        let index = start / WORD_BITS;
        Iter { words: &self.words, index, current: self.words[index] & (u64::MAX << (start % WORD_BITS)) }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// `|self ∩ other ∩ {x : x > above}|`.
    pub fn intersection_count_above(&self, other: &Self, above: usize) -> u64 {
        and_count_above(&self.words, &other.words, above)
    }

    /// `|self ∩ other ∩ {x : x < below}|`.
    pub fn intersection_count_below(&self, other: &Self, below: usize) -> u64 {
        and_count_below(&self.words, &other.words, below)
    }

    /// The set `{(x + shift) mod len : x in self}`.
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.len;
        let mut out = Self::new(n);
        if n == 0 {
            return out;
        }
        let shift = shift % n;
        if shift == 0 {
            out.words.copy_from_slice(&self.words);
            return out;
        }
        // Bits [0, n - shift) move up by `shift`; bits [n - shift, n) wrap to 0.
        copy_bits(&self.words, 0, &mut out.words, shift, n - shift);
        copy_bits(&self.words, n - shift, &mut out.words, 0, shift);
        out
    }

    /// The set `{(n - x) mod n : x in self}`.
    pub fn negated(&self) -> Self {
        let n = self.len;
        Self::from_residues(n, self.iter().map(|x| (n - x) % n))
    }
}

/// ORs `count` bits of `src` starting at `src_start` into `dst` at `dst_start`.
fn copy_bits(src: &[u64], src_start: usize, dst: &mut [u64], dst_start: usize, count: usize) {
    let mut done = 0;
    while done < count {
        let s = src_start + done;
        let d = dst_start + done;
        let s_off = s % WORD_BITS;
        let d_off = d % WORD_BITS;
        let take = (count - done).min(WORD_BITS - s_off).min(WORD_BITS - d_off);
        let chunk = src[s / WORD_BITS] >> s_off;
        let chunk = if take == WORD_BITS { chunk } else { chunk & ((1u64 << take) - 1) };
        dst[d / WORD_BITS] |= chunk << d_off;
        done += take;
    }
}

#[inline]
pub(crate) fn and_count_above(a: &[u64], b: &[u64], above: usize) -> u64 {
    let first = above / WORD_BITS;
    if first >= a.len() {
        return 0;
    }
    let mut total = ((a[first] & b[first]) & mask_above(above)).count_ones() as u64;
    for (x, y) in a[first + 1..].iter().zip(&b[first + 1..]) {
        total += (x & y).count_ones() as u64;
    }
    total
}

#[inline]
pub(crate) fn and_count_below(a: &[u64], b: &[u64], below: usize) -> u64 {
    let last = below / WORD_BITS;
    let mut total: u64 = a[..last.min(a.len())]
        .iter()
        .zip(&b[..last.min(b.len())])
        .map(|(x, y)| (x & y).count_ones() as u64)
        .sum();
    if last < a.len() {
        total += ((a[last] & b[last]) & mask_below(below)).count_ones() as u64;
    }
    total
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a ResidueBitset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for ResidueBitset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResidueBitset(mod {}) ", self.len)?;
        f.debug_set().entries(self.iter()).finish()
    }
}
