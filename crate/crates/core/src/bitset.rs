//! Fixed-capacity vertex sets backed by 64-bit words.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// Vertex index. Graphs are capped at 255 vertices, so a byte always suffices.
pub type Vertex = u8;

const WORDS: usize = 4;

/// A set of vertices 0..=255.
///
/// All set algebra is word-parallel: on graphs with at most 64 vertices only
/// the first word carries bits and the remaining words cost a few unrolled
/// no-op instructions, so membership tests, unions and popcounts stay cheap
/// enough to sit in the innermost search loops.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    pub fn new() -> VertexSet {
        Self::EMPTY
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= 256);
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = !0;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        VertexSet { words }
    }

    pub fn singleton(v: Vertex) -> VertexSet {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    pub fn from_slice(vs: &[Vertex]) -> VertexSet {
        let mut s = Self::EMPTY;
        for &v in vs {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: Vertex) {
        self.words[v as usize / 64] |= 1u64 << (v as usize % 64);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.words[v as usize / 64] &= !(1u64 << (v as usize % 64));
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.words[v as usize / 64] >> (v as usize % 64) & 1 != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words == [0; WORDS]
    }

    /// Smallest vertex in the set, if any.
    pub fn first(&self) -> Option<Vertex> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some((i * 64 + w.trailing_zeros() as usize) as Vertex);
            }
        }
        None
    }

    pub fn intersects(&self, other: VertexSet) -> bool {
        (0..WORDS).any(|i| self.words[i] & other.words[i] != 0)
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        (0..WORDS).all(|i| self.words[i] & !other.words[i] == 0)
    }

    /// Iterate the members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { set: *self, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(mut self, rhs: VertexSet) -> VertexSet {
        self |= rhs;
        self
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        for i in 0..WORDS {
            self.words[i] |= rhs.words[i];
        }
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(mut self, rhs: VertexSet) -> VertexSet {
        self &= rhs;
        self
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        for i in 0..WORDS {
            self.words[i] &= rhs.words[i];
        }
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(mut self, rhs: VertexSet) -> VertexSet {
        self -= rhs;
        self
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        for i in 0..WORDS {
            self.words[i] &= !rhs.words[i];
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

pub struct Iter {
    set: VertexSet,
    word: usize,
}

impl Iterator for Iter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        while self.word < WORDS {
            let w = self.set.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.set.words[self.word] &= w - 1;
                return Some((self.word * 64 + bit) as Vertex);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = Vertex;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
