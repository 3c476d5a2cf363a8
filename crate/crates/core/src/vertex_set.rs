//! Vertex subsets as 64-bit masks.

use core::fmt;

use alloc::vec::Vec;

/// Largest number of vertices a complex may carry.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, .., 63}`, bit `i` standing for vertex `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mask(pub u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    /// The first `count` vertices.
    pub fn full(count: usize) -> Mask {
        debug_assert!(count <= MAX_VERTICES);
        if count == MAX_VERTICES {
            Mask(u64::MAX)
        } else {
            Mask((1u64 << count) - 1)
        }
    }

    pub fn singleton(v: usize) -> Mask {
        Mask(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Mask) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn intersection(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn difference(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> Mask {
        Mask(self.0 | 1u64 << v)
    }

    pub fn remove(self, v: usize) -> Mask {
        Mask(self.0 & !(1u64 << v))
    }

    pub fn shift_up(self, by: usize) -> Mask {
        if self.0 == 0 {
            self
        } else {
            Mask(self.0 << by)
        }
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            of: self.0,
            next: Some(0),
        }
    }

    /// Squeezes the bits selected by `domain` into the low positions,
    /// preserving order: vertex `domain[k]` becomes vertex `k`.
    pub fn compress(self, domain: Mask) -> Mask {
        let mut out = 0u64;
        for (k, v) in domain.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << k;
            }
        }
        Mask(out)
    }

    /// Sends vertex `v` to `map[v]`.
    pub fn relabel(self, map: &[usize]) -> Mask {
        self.iter().fold(Mask::EMPTY, |acc, v| acc.insert(map[v]))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Mask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Mask::EMPTY, |acc, v| acc.insert(v))
    }
}

/// Renders 1-based labels, `{1,3,4}`.
impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Walks every subset of a fixed mask in increasing numeric order.
pub struct Subsets {
    of: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            Some(cur.wrapping_sub(self.of) & self.of)
        };
        Some(Mask(cur))
    }
}
