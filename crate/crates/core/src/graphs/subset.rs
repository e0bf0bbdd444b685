use std::fmt;

/// Largest edge count supported by subset enumeration.
pub const MAX_ENUM_EDGES: usize = 30;

/// A set of internal edges of a host graph, stored as a bitmask over edge indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= 64);
        if n == 64 {
            EdgeSubset(u64::MAX)
        } else {
            EdgeSubset((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = EdgeSubset(0);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: EdgeSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: EdgeSubset) -> Self {
        EdgeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSubset) -> Self {
        EdgeSubset(self.0 & other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        EdgeSubset(!self.0 & Self::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Re-indexes the subset after edge `removed` has been dropped from the host.
    pub fn without_index(self, removed: usize) -> Self {
        let low = self.0 & ((1u64 << removed) - 1);
        let high = (self.0 >> (removed + 1)) << removed;
        EdgeSubset(low | high)
    }

    /// All subsets of `n` edges.
    pub fn all(n: usize) -> impl Iterator<Item = EdgeSubset> {
        assert!(n <= MAX_ENUM_EDGES);
        (0..1u64 << n).map(EdgeSubset)
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
