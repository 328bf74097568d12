//! Richardson orbital varieties through their tableau calculus: chain
//! forms, the minimal tableau `T_I` and word `w_I` of a simple-root subset
//! `I`, tail moves, the geometric descendants of `T_I`, and the explicit
//! formulas for the Dynkin involution ψ on all of these.
//!
//! A subset `I` of the simple roots of `sl_n` partitions `{1..n}` into
//! maximal runs of consecutive integers (`α_i ∈ I` iff `i` and `i + 1`
//! share a run). Viewing the runs as columns and concatenating them yields
//! the tableau `T_I` whose orbital variety closure is the nilradical
//! `m_I`; every other member of that closure is reachable from `T_I` by
//! moving tails of chains downward, and the descendants, the maximal
//! proper closure steps, are picked out by inequalities between chain
//! lengths.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::partitions;
use crate::tableaux::{all_standard_tableaux, StandardTableau};
use crate::words::Word;
use crate::{Error, Result};

/// A subset `I ⊆ {α_1, ..., α_{n-1}}` of simple roots of `sl_n`, stored by
/// index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleRootSubset {
    n: usize,
    indices: BTreeSet<u32>,
}

impl SimpleRootSubset {
    pub fn new(n: usize, indices: impl IntoIterator<Item = u32>) -> Result<Self> {
        let indices: BTreeSet<u32> = indices.into_iter().collect();
        for &index in &indices {
            if index == 0 || index as usize >= n {
                return Err(Error::InvalidRootIndex { index, n });
            }
        }
        Ok(SimpleRootSubset { n, indices })
    }

    pub fn empty(n: usize) -> Self {
        SimpleRootSubset {
            n,
            indices: BTreeSet::new(),
        }
    }

    /// The full set Π of simple roots.
    pub fn full(n: usize) -> Self {
        SimpleRootSubset {
            n,
            indices: (1..n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &BTreeSet<u32> {
        &self.indices
    }

    pub fn contains(&self, index: u32) -> bool {
        self.indices.contains(&index)
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.indices.len() + 1 == self.n.max(1)
    }

    /// The image under the Dynkin-diagram involution: `{ n − i : i ∈ I }`.
    pub fn psi(&self) -> SimpleRootSubset {
        SimpleRootSubset {
            n: self.n,
            indices: self.indices.iter().map(|&i| self.n as u32 - i).collect(),
        }
    }

    /// Every subset of Π for rank `n`, in mask order.
    pub fn all(n: usize) -> Vec<SimpleRootSubset> {
        assert!(
            (1..=24).contains(&n),
            "subset enumeration rank out of range"
        );
        (0u32..1 << (n - 1))
            .map(|mask| SimpleRootSubset {
                n,
                indices: (1..n as u32).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
            })
            .collect()
    }
}

impl core::fmt::Display for SimpleRootSubset {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The chain decomposition `(C_1, ..., C_l)` of `{1..n}` induced by a
/// simple-root subset: maximal runs of consecutive integers, `α_i ∈ I` iff
/// `i` and `i + 1` lie in the same run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainForm {
    n: usize,
    chains: Vec<Vec<u32>>,
}

impl ChainForm {
    pub fn from_subset(subset: &SimpleRootSubset) -> ChainForm {
        let mut chains: Vec<Vec<u32>> = Vec::new();
        for entry in 1..=subset.n as u32 {
            if entry > 1 && subset.contains(entry - 1) {
                chains.last_mut().expect("run in progress").push(entry);
            } else {
                chains.push(vec![entry]);
            }
        }
        ChainForm {
            n: subset.n,
            chains,
        }
    }

    /// The inverse of [`ChainForm::from_subset`].
    pub fn subset(&self) -> SimpleRootSubset {
        let indices = self
            .chains
            .iter()
            .flat_map(|chain| chain.iter().take(chain.len().saturating_sub(1)).copied())
            .collect();
        SimpleRootSubset { n: self.n, indices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The number of chains `l`.
    pub fn num_chains(&self) -> usize {
        self.chains.len()
    }

    pub fn chains(&self) -> &[Vec<u32>] {
        &self.chains
    }

    /// The chain `C_i`, 1-based.
    pub fn chain(&self, i: usize) -> &[u32] {
        &self.chains[i - 1]
    }

    /// The length `c_i`, 1-based.
    pub fn length(&self, i: usize) -> usize {
        self.chains[i - 1].len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    /// The largest entry `σ_i` of chain `i`, 1-based.
    pub fn sigma(&self, i: usize) -> u32 {
        *self.chains[i - 1].last().expect("chains are nonempty")
    }

    /// 1-based index of the chain containing `entry`.
    pub fn chain_containing(&self, entry: u32) -> usize {
        self.chains
            .iter()
            .position(|chain| chain.contains(&entry))
            .expect("chains partition 1..n")
            + 1
    }

    /// Dimension of the nilradical `m_I`: the number of root pairs not
    /// inside a single chain.
    pub fn nilradical_dim(&self) -> usize {
        partitions::nilradical_dim(self.n, &self.lengths())
    }
}

/// The five chain-length statistics governing tail moves, plus the two
/// auxiliary ones used by the ψ-duality of the descendant conditions.
/// Sentinels: `0` when a minimum over an empty range is taken with the
/// "next" statistics on the left (or "next" on the right for `next_r`),
/// `n` for the "prev"/strict ones, exactly as the case definitions demand.
#[derive(Debug, Clone)]
pub struct ChainStats {
    n: usize,
    lengths: Vec<usize>,
}

impl ChainStats {
    pub fn new(chains: &ChainForm) -> ChainStats {
        ChainStats {
            n: chains.n,
            lengths: chains.lengths(),
        }
    }

    fn left(&self, i: usize) -> &[usize] {
        &self.lengths[..i - 1]
    }

    fn right(&self, i: usize) -> &[usize] {
        &self.lengths[i..]
    }

    /// `min { c_j : j < i, c_j ≥ c_i }`, else `0`.
    pub fn next_l(&self, i: usize) -> usize {
        let c = self.lengths[i - 1];
        self.left(i)
            .iter()
            .filter(|&&x| x >= c)
            .min()
            .copied()
            .unwrap_or(0)
    }

    /// `max { c_j : j < i, c_j ≤ c_i }`, else `n`.
    pub fn prev_l(&self, i: usize) -> usize {
        let c = self.lengths[i - 1];
        self.left(i)
            .iter()
            .filter(|&&x| x <= c)
            .max()
            .copied()
            .unwrap_or(self.n)
    }

    /// `max { c_j : j < i, c_j < c_i }`, else `n`.
    pub fn sprev_l(&self, i: usize) -> usize {
        let c = self.lengths[i - 1];
        self.left(i)
            .iter()
            .filter(|&&x| x < c)
            .max()
            .copied()
            .unwrap_or(self.n)
    }

    /// `min { c_j : j > i, c_j > c_i }`, else `n`.
    pub fn snext_r(&self, i: usize) -> usize {
        let c = self.lengths[i - 1];
        self.right(i)
            .iter()
            .filter(|&&x| x > c)
            .min()
            .copied()
            .unwrap_or(self.n)
    }

    /// `max { c_j : j > i, c_j < c_i }`, else `0`.
    pub fn sprev_r(&self, i: usize) -> usize {
        let c = self.lengths[i - 1];
        self.right(i)
            .iter()
            .filter(|&&x| x < c)
            .max()
            .copied()
            .unwrap_or(0)
    }

    /// `min { c_j : j < i, c_j > c_i }`, else `n`.
    pub fn snext_l(&self, i: usize) -> usize {
        let c = self.lengths[i - 1];
        self.left(i)
            .iter()
            .filter(|&&x| x > c)
            .min()
            .copied()
            .unwrap_or(self.n)
    }

    /// `min { c_j : j > i, c_j ≥ c_i }`, else `0`.
    pub fn next_r(&self, i: usize) -> usize {
        let c = self.lengths[i - 1];
        self.right(i)
            .iter()
            .filter(|&&x| x >= c)
            .min()
            .copied()
            .unwrap_or(0)
    }
}

/// Append a column of entries to consecutive rows starting at `start_row`
/// (0-based), creating rows as needed.
fn append_column(rows: &mut Vec<Vec<u32>>, entries: &[u32], start_row: usize) {
    for (offset, &entry) in entries.iter().enumerate() {
        let r = start_row + offset;
        while rows.len() <= r {
            rows.push(Vec::new());
        }
        rows[r].push(entry);
    }
}

/// The minimal tableau `T_I` with τ-invariant `I`: chains appended in
/// order, chain `C_k` filling the ends of rows `1..c_k`.
pub fn richardson_tableau(subset: &SimpleRootSubset) -> StandardTableau {
    let chains = ChainForm::from_subset(subset);
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for chain in chains.chains() {
        append_column(&mut rows, chain, 0);
    }
    StandardTableau::new(rows).expect("chain concatenation is standard")
}

/// The longest element `w_I` of the parabolic subgroup generated by `I`:
/// the colligation of the reversed chains.
pub fn richardson_word(subset: &SimpleRootSubset) -> Word {
    let chains = ChainForm::from_subset(subset);
    let entries: Vec<u32> = chains
        .chains()
        .iter()
        .flat_map(|chain| chain.iter().rev().copied())
        .collect();
    Word::new(entries).expect("chains partition 1..n")
}

/// The tail move `T_I(d ↙ C_i(j))`: rebuild `T_I` but append the tail
/// `C_i^j, ..., C_i^{c_i}` of chain `i` below row `d` instead of in place.
///
/// Requires `2 ≤ i ≤ l`, `1 ≤ j ≤ c_i`, `d ≥ j`, and an earlier chain of
/// length exactly `d`.
pub fn tail_move(
    subset: &SimpleRootSubset,
    depth: usize,
    chain: usize,
    tail_start: usize,
) -> Result<StandardTableau> {
    let chains = ChainForm::from_subset(subset);
    let l = chains.num_chains();
    if chain < 2 || chain > l {
        return Err(Error::InvalidTailMove("chain index out of range"));
    }
    let c = chains.length(chain);
    if tail_start < 1 || tail_start > c {
        return Err(Error::InvalidTailMove("tail start out of range"));
    }
    if depth < tail_start {
        return Err(Error::InvalidTailMove("depth smaller than tail start"));
    }
    if !(1..chain).any(|s| chains.length(s) == depth) {
        return Err(Error::InvalidTailMove("no earlier chain of length `depth`"));
    }

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for k in 1..chain {
        append_column(&mut rows, chains.chain(k), 0);
    }
    let moving = chains.chain(chain);
    append_column(&mut rows, &moving[..tail_start - 1], 0);
    append_column(&mut rows, &moving[tail_start - 1..], depth);
    for k in chain + 1..=l {
        append_column(&mut rows, chains.chain(k), 0);
    }
    StandardTableau::new(rows)
}

/// `T_I(i, next)`: drop the box holding `σ_i` to the first possible lower
/// row, or `None` when no earlier chain is at least as long.
pub fn t_next(subset: &SimpleRootSubset, i: usize) -> Option<StandardTableau> {
    let chains = ChainForm::from_subset(subset);
    assert!(
        i >= 1 && i <= chains.num_chains(),
        "chain index out of range"
    );
    let stats = ChainStats::new(&chains);
    let next_l = stats.next_l(i);
    if next_l == 0 {
        return None;
    }
    Some(
        tail_move(subset, next_l, i, chains.length(i))
            .expect("next_l attained by an earlier chain"),
    )
}

/// `T_I(i, prev)`: drop the smallest possible tail of chain `i` one row
/// down, or `None` when an earlier chain ties the length of chain `i` (or
/// nothing shorter precedes it).
pub fn t_prev(subset: &SimpleRootSubset, i: usize) -> Option<StandardTableau> {
    let chains = ChainForm::from_subset(subset);
    assert!(
        i >= 1 && i <= chains.num_chains(),
        "chain index out of range"
    );
    let stats = ChainStats::new(&chains);
    let sprev_l = stats.sprev_l(i);
    if stats.prev_l(i) != sprev_l || sprev_l == chains.n() {
        return None;
    }
    Some(tail_move(subset, sprev_l, i, sprev_l).expect("sprev_l attained by an earlier chain"))
}

/// The set `T_I(i) = { T_I(i, next), T_I(i, prev) }`, empties dropped.
pub fn t_set(subset: &SimpleRootSubset, i: usize) -> Vec<StandardTableau> {
    let mut out: Vec<StandardTableau> = [t_next(subset, i), t_prev(subset, i)]
        .into_iter()
        .flatten()
        .collect();
    out.dedup();
    out
}

/// Deterministic display order for tableau lists: shape first, then rows.
pub fn shape_then_rows(a: &StandardTableau, b: &StandardTableau) -> core::cmp::Ordering {
    a.shape()
        .parts()
        .cmp(b.shape().parts())
        .then_with(|| a.rows().cmp(b.rows()))
}

/// The geometric descendants of `T_I`: the maximal proper closure steps
/// below the Richardson orbital variety of `I`.
///
/// `T_I(i, next)` qualifies when `next_l(i) = c_i`, or when
/// `next_l(i) > c_i` and `snext_r(i) > next_l(i)`; `T_I(i, prev)`
/// qualifies when `sprev_l(i) < n` and `sprev_r(i) < sprev_l(i)`.
/// For `I = Π` the closure is a point and the set is empty.
pub fn descendants(subset: &SimpleRootSubset) -> Vec<StandardTableau> {
    let chains = ChainForm::from_subset(subset);
    let stats = ChainStats::new(&chains);
    let n = subset.n();
    let mut out: BTreeSet<StandardTableau> = BTreeSet::new();
    for i in 2..=chains.num_chains() {
        let c = chains.length(i);
        let next_l = stats.next_l(i);
        if next_l != 0 && (next_l == c || (next_l > c && stats.snext_r(i) > next_l)) {
            out.insert(t_next(subset, i).expect("next_l is nonzero"));
        }
        if stats.sprev_l(i) < n && stats.sprev_r(i) < stats.sprev_l(i) {
            if let Some(t) = t_prev(subset, i) {
                out.insert(t);
            }
        }
    }
    let mut out: Vec<StandardTableau> = out.into_iter().collect();
    out.sort_by(shape_then_rows);
    out
}

/// Whether `V_T` lies in the closure of the Richardson variety of `I`,
/// i.e. `τ(T) ⊇ I`.
pub fn closure_contains(subset: &SimpleRootSubset, t: &StandardTableau) -> Result<bool> {
    if t.size() != subset.n() {
        return Err(Error::RankMismatch {
            left: t.size(),
            right: subset.n(),
        });
    }
    Ok(t.tau()?.is_superset(subset.indices()))
}

/// Every tableau in the closure of the Richardson variety of `I`, by
/// exhaustive enumeration; guarded by `bound`.
pub fn closure_members(subset: &SimpleRootSubset, bound: usize) -> Result<Vec<StandardTableau>> {
    let n = subset.n();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut out: Vec<StandardTableau> = all_standard_tableaux(n)
        .into_iter()
        .filter(|t| {
            t.tau()
                .map(|tau| tau.is_superset(subset.indices()))
                .unwrap_or(false)
        })
        .collect();
    out.sort_by(shape_then_rows);
    Ok(out)
}

/// `T_I[m]` for a closure member `T ≠ T_I`: take the minimal entry `m`
/// sitting strictly lower in `T` than in `T_I`, locate its chain `i`, and
/// pick the element of `T_I(i)` that still dominates `T`: `T_I(i, prev)`
/// when `m ≤ C_i^{sprev_l(i)}`, else `T_I(i, next)`.
pub fn t_bracket_m(subset: &SimpleRootSubset, t: &StandardTableau) -> Result<StandardTableau> {
    let reference = richardson_tableau(subset);
    if *t == reference {
        return Err(Error::IsRichardsonTableau);
    }
    if !closure_contains(subset, t)? {
        return Err(Error::NotInClosure);
    }
    let n = subset.n();
    let m = (1..=n as u32)
        .find(|&u| {
            t.row_of(u).expect("entry present") > reference.row_of(u).expect("entry present")
        })
        .expect("distinct closure members place some entry lower");
    let chains = ChainForm::from_subset(subset);
    let i = chains.chain_containing(m);
    match (t_next(subset, i), t_prev(subset, i)) {
        (Some(next), None) => Ok(next),
        (None, Some(prev)) => Ok(prev),
        (Some(next), Some(prev)) => {
            let stats = ChainStats::new(&chains);
            let pivot = chains.chain(i)[stats.sprev_l(i) - 1];
            Ok(if m <= pivot { prev } else { next })
        }
        (None, None) => unreachable!("chains after the first always admit a move"),
    }
}

/// The box-move descendant of an arbitrary tableau: with `i` the row of the
/// largest entry `n` and `j = min { m : λ_m < λ_i − 1 }`, move `n` from row
/// `i` to row `j`. `None` when no such `j` exists (the row of `n` has
/// length 1).
pub fn box_move_descendant(t: &StandardTableau) -> Option<StandardTableau> {
    if t.is_empty() {
        return None;
    }
    let top = *t.entries().last().expect("nonempty");
    let i = t.row_of(top).expect("entry present");
    let shape = t.shape();
    let row_len = shape.part(i);
    if row_len < 2 {
        return None;
    }
    let j = (1..)
        .find(|&m| shape.part(m) < row_len - 1)
        .expect("zero-padded shape terminates the search");
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    rows[i - 1].pop();
    if j > rows.len() {
        rows.push(Vec::new());
    }
    rows[j - 1].push(top);
    Some(StandardTableau::new(rows).expect("box move preserves standardness"))
}

/// ψ of `T_I(i, next)` in closed form: a tail move over `ψ(I)` of the
/// mirrored chain, `T_{ψ(I)}(c_i ↙ ψ(C_{p(i,next)})(c_i))` with
/// `p(i, next) = max { s < i : c_s = next_l(i) }`.
pub fn psi_next_formula(subset: &SimpleRootSubset, i: usize) -> Result<StandardTableau> {
    let chains = ChainForm::from_subset(subset);
    let stats = ChainStats::new(&chains);
    let next_l = stats.next_l(i);
    if next_l == 0 {
        return Err(Error::EmptyTailMove);
    }
    let p = (1..i)
        .rev()
        .find(|&s| chains.length(s) == next_l)
        .expect("next_l is attained");
    let c = chains.length(i);
    tail_move(&subset.psi(), c, chains.num_chains() + 1 - p, c)
}

/// ψ of `T_I(i, prev)` in closed form:
/// `T_{ψ(I)}(c_i ↙ ψ(C_{p(i,prev)})(c_{p(i,prev)}))` with
/// `p(i, prev) = max { s < i : c_s = sprev_l(i) }`.
pub fn psi_prev_formula(subset: &SimpleRootSubset, i: usize) -> Result<StandardTableau> {
    let chains = ChainForm::from_subset(subset);
    let stats = ChainStats::new(&chains);
    let sprev_l = stats.sprev_l(i);
    if stats.prev_l(i) != sprev_l || sprev_l == chains.n() {
        return Err(Error::EmptyTailMove);
    }
    let p = (1..i)
        .rev()
        .find(|&s| chains.length(s) == sprev_l)
        .expect("sprev_l is attained");
    let c = chains.length(i);
    tail_move(
        &subset.psi(),
        c,
        chains.num_chains() + 1 - p,
        chains.length(p),
    )
}

/// Codimension of the orbital variety of `T` inside the nilradical of the
/// chain form: `dim m_I − dim O_{sh(T)} / 2`. Requires `τ(T) ⊇ I`.
pub fn codim_in_nilradical(t: &StandardTableau, chains: &ChainForm) -> Result<usize> {
    let subset = chains.subset();
    if !closure_contains(&subset, t)? {
        return Err(Error::NotInClosure);
    }
    Ok(chains.nilradical_dim() - t.shape().orbit_dim() / 2)
}
