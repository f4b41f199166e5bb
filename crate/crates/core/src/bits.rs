//! Small helpers for `u64` vertex sets.
//!
//! Graphs in this crate hold at most 64 vertices, so a vertex set is a
//! single machine word: bit `v` set means vertex `v` is in the set.

/// Iterator over the set bits of a word, ascending.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// The set bits of `mask`, ascending.
#[inline]
pub fn vertices_of(mask: u64) -> BitIter {
    BitIter(mask)
}

/// Collects a mask into a sorted `Vec` of vertex ids.
pub fn to_vec(mask: u64) -> Vec<usize> {
    vertices_of(mask).collect()
}

/// Builds a mask from vertex ids.
pub fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> u64 {
    vs.into_iter().fold(0u64, |m, v| m | (1u64 << v))
}

/// Mask with the low `n` bits set (all vertices of an `n`-vertex graph).
#[inline]
pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_iter_ascending() {
        assert_eq!(to_vec(0b1011), vec![0, 1, 3]);
        assert_eq!(to_vec(0), Vec::<usize>::new());
        assert_eq!(from_iter([0, 1, 3]), 0b1011);
    }

    #[test]
    fn full_mask_boundaries() {
        assert_eq!(full_mask(0), 0);
        assert_eq!(full_mask(3), 0b111);
        assert_eq!(full_mask(64), u64::MAX);
    }
}
