//! Subsets of `[n+1] = {1, ..., n+1}` packed into a bitmask.
//!
//! The same type doubles as a strictly increasing tuple, since every tuple
//! is stored in canonical (sorted) form. Ordering is lexicographic on the
//! sorted element lists, which fixes every basis layout in the crate.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported index (`n + 1`).
pub const MAX_INDEX: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Panics if an index is 0 or exceeds [`MAX_INDEX`].
    pub fn from_slice(items: &[usize]) -> Self {
        items.iter().fold(IndexSet::EMPTY, |s, &i| s.with(i))
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet::EMPTY.with(i)
    }

    /// `{1, ..., m}`.
    pub fn range(m: usize) -> Self {
        assert!(m <= MAX_INDEX);
        if m == 0 {
            IndexSet::EMPTY
        } else {
            IndexSet(u64::MAX >> (64 - m))
        }
    }

    pub fn with(self, i: usize) -> Self {
        assert!((1..=MAX_INDEX).contains(&i), "index {i} out of range");
        IndexSet(self.0 | (1 << (i - 1)))
    }

    pub fn without(self, i: usize) -> Self {
        assert!((1..=MAX_INDEX).contains(&i), "index {i} out of range");
        IndexSet(self.0 & !(1 << (i - 1)))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_INDEX).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: IndexSet) -> Self {
        IndexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: IndexSet) -> Self {
        IndexSet(self.0 & o.0)
    }

    pub fn difference(self, o: IndexSet) -> Self {
        IndexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: IndexSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: IndexSet) -> bool {
        self.0 & o.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of elements of `self` strictly smaller than `i`.
    pub fn rank_of(self, i: usize) -> usize {
        let mask = if i <= 1 { 0 } else { u64::MAX >> (65 - i) };
        (self.0 & mask).count_ones() as usize
    }

    /// Subsets obtained by deleting one element, in increasing order of the
    /// deleted element: `(k, self \ {i_k})` with `k` 1-based.
    pub fn facets(self) -> impl Iterator<Item = (usize, IndexSet)> {
        self.iter()
            .enumerate()
            .map(move |(k, i)| (k + 1, self.without(i)))
    }

    /// All subsets of `universe` with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(universe: IndexSet, k: usize) -> Vec<IndexSet> {
        let elems = universe.to_vec();
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(k);
        fn rec(elems: &[usize], k: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if pick.len() == k {
                out.push(IndexSet::from_slice(pick));
                return;
            }
            for idx in start..elems.len() {
                if elems.len() - idx < k - pick.len() {
                    break;
                }
                pick.push(elems[idx]);
                rec(elems, k, idx + 1, pick, out);
                pick.pop();
            }
        }
        if k <= elems.len() {
            rec(&elems, k, 0, &mut pick, &mut out);
        }
        out
    }

    /// All subsets of `universe`, in increasing bitmask order.
    pub fn all_subsets(universe: IndexSet) -> impl Iterator<Item = IndexSet> {
        let u = universe.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == u { None } else { Some(s.wrapping_sub(u) & u) };
            Some(IndexSet(s))
        })
    }

    /// Tuple label `a[1,3]` style contents: `1,3`.
    pub fn comma_list(self) -> String {
        self.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Compact label `13`, `124`, or `1,10` when an index exceeds 9.
    pub fn label(self) -> String {
        if self.last().is_some_and(|m| m > 9) {
            self.comma_list()
        } else {
            self.iter().map(|i| i.to_string()).collect()
        }
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.comma_list())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.comma_list())
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(IndexSet::EMPTY, |s, i| s.with(i))
    }
}
