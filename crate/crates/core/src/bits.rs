//! Fixed-width bitset helpers over `&[u64]` slices. Rows of graph adjacency
//! and candidate sets in the searches all share this layout.

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Mask for the last word so stray high bits never leak into counts.
pub(crate) fn tail_mask(n: usize) -> u64 {
    if n % 64 == 0 {
        !0
    } else {
        (1u64 << (n % 64)) - 1
    }
}

pub(crate) fn set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1u64 << (i % 64);
}

pub(crate) fn clear(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1u64 << (i % 64));
}

pub(crate) fn get(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn and_popcount(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

pub(crate) fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

pub(crate) fn is_zero(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// Iterator over set bit positions, ascending.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    cur: u64,
}

pub(crate) fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        word_idx: 0,
        cur: if words.is_empty() { 0 } else { words[0] },
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word_idx];
        }
        let bit = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word_idx * 64 + bit)
    }
}
