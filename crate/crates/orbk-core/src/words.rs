//! Permutation words, inversion sets, and the Duflo order.
//!
//! A [`Word`] is a sequence of pairwise distinct positive integers in
//! one-line form `[a_1, ..., a_m]`. When the entry set is exactly
//! `{1, ..., n}` the word is an element of the symmetric group `S_n`, with
//! `a_i = w(i)`. Words over other ground sets arise as restrictions of
//! permutations and as the blocks of colligations.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Largest rank `n` for which inversion sets are representable: the backing
/// bitset stores one bit per positive root pair, `C(n, 2)` of them in total,
/// and `C(16, 2) = 120` fits in a `u128`.
pub const MAX_RANK: usize = 16;

/// A positive root `α_{i,j}` of `sl_n`, labelled by the pair `1 ≤ i < j`.
///
/// The simple roots `α_i` are the adjacent pairs `(i, i + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootPair {
    i: u32,
    j: u32,
}

impl RootPair {
    pub fn new(i: u32, j: u32) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidRootPair { i, j });
        }
        Ok(RootPair { i, j })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// Whether this is a simple root, i.e. `j = i + 1`.
    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }
}

impl core::fmt::Display for RootPair {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Bit position of the pair `(i, j)` in the root-pair index space.
fn pair_bit(i: u32, j: u32) -> u32 {
    debug_assert!(0 < i && i < j);
    (j - 1) * (j - 2) / 2 + (i - 1)
}

/// The inversion set `S(w)` of a permutation of `{1..n}`: all pairs `(i, j)`
/// with `i < j` whose positions in the word are out of order.
///
/// Stored as a bitset over the `C(n, 2)` root pairs so that the subset test
/// behind the Duflo order is a single mask comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InversionSet {
    n: usize,
    bits: u128,
}

impl InversionSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Raw bitset, exposed for bulk scans over precomputed tables.
    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn contains(&self, pair: RootPair) -> bool {
        pair.j as usize <= self.n && self.bits >> pair_bit(pair.i, pair.j) & 1 == 1
    }

    /// Subset test against another inversion set over the same rank.
    pub fn is_subset_of(&self, other: &InversionSet) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.bits & !other.bits == 0)
    }

    /// The simple roots contained in the set, `S(w) ∩ Π`, as indices `i`.
    pub fn simple_roots(&self) -> BTreeSet<u32> {
        (1..self.n as u32)
            .filter(|&i| self.bits >> pair_bit(i, i + 1) & 1 == 1)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = RootPair> + '_ {
        let n = self.n as u32;
        (2..=n).flat_map(move |j| {
            (1..j).filter_map(move |i| {
                (self.bits >> pair_bit(i, j) & 1 == 1).then_some(RootPair { i, j })
            })
        })
    }
}

/// A word of pairwise distinct positive integers in one-line form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    entries: Vec<u32>,
}

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &a in &entries {
            if a == 0 {
                return Err(Error::ZeroEntry);
            }
            if !seen.insert(a) {
                return Err(Error::DuplicateEntry { entry: a });
            }
        }
        Ok(Word { entries })
    }

    /// The identity permutation `[1, 2, ..., n]`.
    pub fn identity(n: usize) -> Self {
        Word {
            entries: (1..=n as u32).collect(),
        }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The set of entries `<w>`, sorted.
    pub fn ground_set(&self) -> BTreeSet<u32> {
        self.entries.iter().copied().collect()
    }

    /// `Some(n)` when the entry set is exactly `{1..n}`.
    pub fn permutation_rank(&self) -> Option<usize> {
        let n = self.entries.len();
        self.entries.iter().all(|&a| (a as usize) <= n).then_some(n)
    }

    fn require_rank(&self) -> Result<usize> {
        self.permutation_rank().ok_or(Error::NotPermutation)
    }

    /// `p_w(i)`: the 1-based position of entry `i` in the word.
    pub fn position(&self, entry: u32) -> Option<usize> {
        self.entries.iter().position(|&a| a == entry).map(|p| p + 1)
    }

    /// 0-based position table indexed by `entry - 1`; entries must be `{1..n}`.
    fn places(&self) -> Result<Vec<usize>> {
        let n = self.require_rank()?;
        let mut place = vec![0usize; n];
        for (p, &a) in self.entries.iter().enumerate() {
            place[a as usize - 1] = p;
        }
        Ok(place)
    }

    /// The inversion set `S(w) = { (i, j) : i < j, p_w(i) > p_w(j) }`.
    pub fn inversion_set(&self) -> Result<InversionSet> {
        let n = self.require_rank()?;
        if n > MAX_RANK {
            return Err(Error::RankTooLarge { n });
        }
        let place = self.places()?;
        let mut bits = 0u128;
        for j in 2..=n as u32 {
            for i in 1..j {
                if place[i as usize - 1] > place[j as usize - 1] {
                    bits |= 1 << pair_bit(i, j);
                }
            }
        }
        Ok(InversionSet { n, bits })
    }

    /// The Duflo order: `self ≤ other` iff `S(self) ⊆ S(other)`.
    pub fn duflo_leq(&self, other: &Word) -> Result<bool> {
        let left = self.inversion_set()?;
        let right = other.inversion_set()?;
        left.is_subset_of(&right)
    }

    /// `τ(w) = S(w) ∩ Π`: the indices `i` with `p_w(i) > p_w(i + 1)`.
    pub fn tau(&self) -> Result<BTreeSet<u32>> {
        let place = self.places()?;
        Ok((1..place.len())
            .filter(|&i| place[i - 1] > place[i])
            .map(|i| i as u32)
            .collect())
    }

    /// The reversed word `[a_m, ..., a_1]`.
    pub fn reversed(&self) -> Word {
        Word {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// The colligation `[self, right]`: concatenation of one-line forms over
    /// disjoint ground sets.
    pub fn colligate(&self, right: &Word) -> Result<Word> {
        let mine = self.ground_set();
        if let Some(&entry) = right.entries.iter().find(|e| mine.contains(e)) {
            return Err(Error::OverlappingEntries { entry });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&right.entries);
        Ok(Word { entries })
    }

    /// The involution ψ with ambient rank `n`: reverse the word and replace
    /// every entry `a` by `n + 1 - a`. Defined for any word whose entries lie
    /// in `{1..n}`, not only full permutations.
    pub fn psi(&self, n: usize) -> Result<Word> {
        if let Some(&entry) = self.entries.iter().find(|&&a| a as usize > n) {
            return Err(Error::EntryOutOfRange { entry, n });
        }
        Ok(Word {
            entries: self
                .entries
                .iter()
                .rev()
                .map(|&a| n as u32 + 1 - a)
                .collect(),
        })
    }

    /// The subword of entries lying in `[lo, hi]`, order preserved.
    pub fn restrict(&self, lo: u32, hi: u32) -> Word {
        assert!(lo <= hi, "restrict requires lo <= hi");
        Word {
            entries: self
                .entries
                .iter()
                .copied()
                .filter(|&a| lo <= a && a <= hi)
                .collect(),
        }
    }
}

impl core::fmt::Display for Word {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}
