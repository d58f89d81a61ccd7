use alloc::vec::Vec;

/// A growable bit array over `u64` words.
///
/// Bits outside the allocated words read as zero; `set` grows the word array
/// on demand, so callers never have to size it up front.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    pub fn new() -> Self {
        Self { words: Vec::new() }
    }

    /// A bitset pre-sized to hold `bits` bits.
    pub fn with_bits(bits: usize) -> Self {
        Self {
            words: alloc::vec![0; bits.div_ceil(64)],
        }
    }

    #[inline]
    pub fn get(&self, bit: u32) -> bool {
        let w = (bit / 64) as usize;
        match self.words.get(w) {
            Some(word) => word & (1u64 << (bit % 64)) != 0,
            None => false,
        }
    }

    #[inline]
    pub fn set(&mut self, bit: u32) {
        let w = (bit / 64) as usize;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (bit % 64);
    }

    #[inline]
    pub fn clear(&mut self, bit: u32) {
        let w = (bit / 64) as usize;
        if let Some(word) = self.words.get_mut(w) {
            *word &= !(1u64 << (bit % 64));
        }
    }

    pub fn clear_all(&mut self) {
        self.words.fill(0);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Number of `u64` words currently allocated.
    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            (0..64u32)
                .filter(move |b| word & (1u64 << b) != 0)
                .map(move |b| wi as u32 * 64 + b)
        })
    }
}

impl FromIterator<u32> for Bitset {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        let mut bs = Bitset::new();
        for bit in iter {
            bs.set(bit);
        }
        bs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_clear() {
        let mut bs = Bitset::new();
        assert!(!bs.get(0));
        assert!(!bs.get(1000));
        bs.set(0);
        bs.set(63);
        bs.set(64);
        bs.set(999);
        assert!(bs.get(0) && bs.get(63) && bs.get(64) && bs.get(999));
        assert!(!bs.get(65));
        assert_eq!(bs.count_ones(), 4);
        bs.clear(64);
        assert!(!bs.get(64));
        bs.clear(123_456); // out of range is a no-op
        assert_eq!(bs.count_ones(), 3);
        assert_eq!(bs.ones().collect::<Vec<_>>(), alloc::vec![0, 63, 999]);
    }

    #[test]
    fn with_bits_rounds_up_to_words() {
        assert_eq!(Bitset::with_bits(0).word_count(), 0);
        assert_eq!(Bitset::with_bits(1).word_count(), 1);
        assert_eq!(Bitset::with_bits(64).word_count(), 1);
        assert_eq!(Bitset::with_bits(65).word_count(), 2);
    }
}
