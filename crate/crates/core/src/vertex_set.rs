use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::GraphError;

/// A subset of the vertices `0..n` of a fixed host graph.
///
/// Sets compare lexicographically by their sorted member lists, which is the
/// order the exact solvers use to pick a canonical witness.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self, GraphError> {
        let mut s = Self::empty(n);
        for &v in vertices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from vertices known to be in range.
    pub(crate) fn from_iter_unchecked(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Interprets the low `n` bits of `mask` as a set (`n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = if n == 64 { mask } else { mask & ((1 << n) - 1) };
        }
        s
    }

    /// The set as a 64-bit mask, if the host graph is small enough.
    pub fn to_mask(&self) -> Option<u64> {
        (self.n <= 64).then(|| self.words.first().copied().unwrap_or(0))
    }

    /// Size of the host vertex set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.n,
            "vertex {v} out of range for universe {}",
            self.n
        );
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "vertex sets belong to different graphs");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Vertices of the host graph not in the set.
    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(&a, &b)| a & !b == 0)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_algebra() {
        let a = VertexSet::from_vertices(70, &[1, 5, 65]).unwrap();
        let b = VertexSet::from_vertices(70, &[5, 69]).unwrap();
        assert_eq!(a.union(&b).to_vec(), vec![1, 5, 65, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![5]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 65]);
        assert_eq!(a.complement().len(), 67);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(VertexSet::from_vertices(3, &[3]).is_err());
        assert_eq!(format!("{a}"), "{1,5,65}");
    }

    #[test]
    fn lexicographic_order() {
        let s = |v: &[usize]| VertexSet::from_vertices(6, v).unwrap();
        assert!(s(&[0, 1, 5]) < s(&[0, 2, 3]));
        assert!(s(&[0, 5]) < s(&[1, 2]));
    }

    proptest! {
        #[test]
        fn mask_round_trip(mask in any::<u64>()) {
            let s = VertexSet::from_mask(64, mask);
            prop_assert_eq!(s.to_mask(), Some(mask));
            prop_assert_eq!(s.len(), mask.count_ones() as usize);
            prop_assert!(s.iter().all(|v| mask >> v & 1 == 1));
        }

        #[test]
        fn de_morgan(a in any::<u64>(), b in any::<u64>()) {
            let (a, b) = (VertexSet::from_mask(64, a), VertexSet::from_mask(64, b));
            prop_assert_eq!(a.union(&b).complement(), a.complement().intersection(&b.complement()));
        }
    }
}
