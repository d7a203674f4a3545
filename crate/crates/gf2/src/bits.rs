use serde::{Deserialize, Serialize};
use std::fmt;

/// Fixed-length bit vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::zeros(len);
        for i in idx {
            b.flip(i);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let m = 1u64 << (i & 63);
        if v {
            self.words[i >> 6] |= m;
        } else {
            self.words[i >> 6] &= !m;
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, o: &Bits) {
        debug_assert_eq!(self.len, o.len);
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a ^= *b;
        }
    }

    pub fn or_assign(&mut self, o: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&o.words) {
            *a |= *b;
        }
    }

    pub fn and(&self, o: &Bits) -> Bits {
        let words = self.words.iter().zip(&o.words).map(|(a, b)| a & b).collect();
        Bits { len: self.len, words }
    }

    pub fn xor(&self, o: &Bits) -> Bits {
        let mut r = self.clone();
        r.xor_assign(o);
        r
    }

    /// Parity of the overlap `|self ∩ o| mod 2`.
    pub fn dot(&self, o: &Bits) -> bool {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&o.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    pub fn intersects(&self, o: &Bits) -> bool {
        self.words.iter().zip(&o.words).any(|(a, b)| a & b != 0)
    }

    /// True when every set bit of `self` is also set in `o`.
    pub fn is_subset(&self, o: &Bits) -> bool {
        self.words.iter().zip(&o.words).all(|(a, b)| a & !b == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the highest set bit.
    pub fn leading(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(k * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }

    /// Concatenation `self ‖ o` with `self` occupying the low indices.
    pub fn concat(&self, o: &Bits) -> Bits {
        let mut r = Bits::zeros(self.len + o.len);
        for i in self.ones() {
            r.set(i, true);
        }
        for i in o.ones() {
            r.set(self.len + i, true);
        }
        r
    }

    /// Bits `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> Bits {
        Bits::from_indices(len, self.ones().filter(|&i| i >= start && i < start + len).map(|i| i - start))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_and_ones() {
        let b = Bits::from_indices(130, [3, 64, 129]);
        assert_eq!(b.leading(), Some(129));
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(b.weight(), 3);
        assert_eq!(Bits::zeros(7).leading(), None);
    }

    #[test]
    fn dot_counts_overlap_parity() {
        let a = Bits::from_indices(70, [0, 1, 65]);
        let b = Bits::from_indices(70, [1, 65, 66]);
        assert!(!a.dot(&b));
        let c = Bits::from_indices(70, [1]);
        assert!(a.dot(&c));
    }

    #[test]
    fn concat_slice_round_trip() {
        let a = Bits::from_indices(5, [0, 4]);
        let b = Bits::from_indices(3, [1]);
        let c = a.concat(&b);
        assert_eq!(c.ones().collect::<Vec<_>>(), vec![0, 4, 6]);
        assert_eq!(c.slice(0, 5), a);
        assert_eq!(c.slice(5, 3), b);
    }
}
