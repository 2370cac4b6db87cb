//! Finite multisets with deterministic iteration order.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

/// A finite multiset; every stored multiplicity is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiSet<T: Ord> {
    counts: BTreeMap<T, usize>,
}

impl<T: Ord> Default for MultiSet<T> {
    fn default() -> Self {
        MultiSet {
            counts: BTreeMap::new(),
        }
    }
}

impl<T: Ord> MultiSet<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(value: T) -> Self {
        let mut m = Self::new();
        m.insert(value);
        m
    }

    pub fn insert(&mut self, value: T) {
        self.insert_n(value, 1);
    }

    pub fn insert_n(&mut self, value: T, times: usize) {
        if times > 0 {
            *self.counts.entry(value).or_insert(0) += times;
        }
    }

    pub fn multiplicity(&self, value: &T) -> usize {
        self.counts.get(value).copied().unwrap_or(0)
    }

    /// Total number of elements counted with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of distinct elements.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// Multiset union: multiplicities add.
    pub fn union_with(&mut self, other: MultiSet<T>) {
        for (v, c) in other.counts {
            self.insert_n(v, c);
        }
    }

    pub fn union(mut self, other: MultiSet<T>) -> Self {
        self.union_with(other);
        self
    }

    /// Multiset difference; multiplicities are clamped at zero.
    pub fn difference(&self, other: &MultiSet<T>) -> Self
    where
        T: Clone,
    {
        let mut out = Self::new();
        for (v, &c) in &self.counts {
            let rest = c.saturating_sub(other.multiplicity(v));
            out.insert_n(v.clone(), rest);
        }
        out
    }

    /// `(value, multiplicity)` pairs in increasing value order.
    pub fn iter(&self) -> btree_map::Iter<'_, T, usize> {
        self.counts.iter()
    }

    /// Elements repeated according to multiplicity.
    pub fn elements(&self) -> impl Iterator<Item = &T> {
        self.counts
            .iter()
            .flat_map(|(v, &c)| std::iter::repeat(v).take(c))
    }

    /// Image multiset `{f(x) : x in self}`.
    pub fn map<U: Ord>(&self, mut f: impl FnMut(&T) -> U) -> MultiSet<U> {
        let mut out = MultiSet::new();
        for (v, &c) in &self.counts {
            out.insert_n(f(v), c);
        }
        out
    }

    /// Extension of a multiset-valued map: union of `f(x)` over all elements.
    pub fn flat_map<U: Ord>(&self, mut f: impl FnMut(&T) -> MultiSet<U>) -> MultiSet<U> {
        let mut out = MultiSet::new();
        for (v, &c) in &self.counts {
            for (u, d) in f(v).counts {
                out.insert_n(u, d * c);
            }
        }
        out
    }
}

impl<T: Ord> FromIterator<T> for MultiSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut m = Self::new();
        m.extend(iter);
        m
    }
}

impl<T: Ord> Extend<T> for MultiSet<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl<T: Ord> IntoIterator for MultiSet<T> {
    type Item = (T, usize);
    type IntoIter = btree_map::IntoIter<T, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.counts.into_iter()
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for MultiSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.counts.iter()).finish()
    }
}
