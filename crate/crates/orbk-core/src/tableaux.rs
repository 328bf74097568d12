//! Standard Young tableaux and the Robinson–Schensted correspondence.
//!
//! Tableaux here carry their entries verbatim: the entry set is any finite
//! set of distinct positive integers, not necessarily `{1..n}`. That is what
//! makes restrictions and concatenations compose without renumbering.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::partitions::Partition;
use crate::words::Word;
use crate::{Error, Result};

/// A standard Young tableau: rows strictly increase left to right, columns
/// strictly increase top to bottom, row lengths weakly decrease.
///
/// The empty tableau (no rows) is a valid value; it shows up as the result
/// of projections onto intervals missing every entry.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::MalformedTableau("empty row"));
            }
            if r > 0 && rows[r - 1].len() < row.len() {
                return Err(Error::MalformedTableau("row lengths must weakly decrease"));
            }
            for (c, &entry) in row.iter().enumerate() {
                if entry == 0 {
                    return Err(Error::ZeroEntry);
                }
                if !seen.insert(entry) {
                    return Err(Error::DuplicateEntry { entry });
                }
                if c > 0 && row[c - 1] >= entry {
                    return Err(Error::MalformedTableau("rows must strictly increase"));
                }
                if r > 0 && rows[r - 1][c] >= entry {
                    return Err(Error::MalformedTableau("columns must strictly increase"));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau::default()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// All entries `<T>`, sorted ascending.
    pub fn entries(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.rows.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    /// `Some(n)` when the entry set is exactly `{1..n}`.
    pub fn contiguous_rank(&self) -> Option<usize> {
        let n = self.size();
        self.rows
            .iter()
            .flatten()
            .all(|&a| (a as usize) <= n)
            .then_some(n)
    }

    /// `r_T(u)`: the 1-based row index of entry `u`.
    pub fn row_of(&self, entry: u32) -> Result<usize> {
        self.rows
            .iter()
            .position(|row| row.contains(&entry))
            .map(|r| r + 1)
            .ok_or(Error::AbsentEntry { entry })
    }

    /// The shape `sh(T)`: row lengths as a partition.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("row lengths of a tableau form a partition")
    }

    /// `τ(T) = { i : r_T(i + 1) > r_T(i) }`; requires entry set `{1..n}`.
    pub fn tau(&self) -> Result<BTreeSet<u32>> {
        let n = self.contiguous_rank().ok_or(Error::NonContiguousEntries)?;
        let mut row = vec![0usize; n];
        for (r, tableau_row) in self.rows.iter().enumerate() {
            for &entry in tableau_row {
                row[entry as usize - 1] = r + 1;
            }
        }
        Ok((1..n)
            .filter(|&i| row[i] > row[i - 1])
            .map(|i| i as u32)
            .collect())
    }

    /// The transposed tableau: rows become columns.
    pub fn transpose(&self) -> StandardTableau {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        if let Some(first) = self.rows.first() {
            rows = vec![Vec::new(); first.len()];
            for row in &self.rows {
                for (c, &entry) in row.iter().enumerate() {
                    rows[c].push(entry);
                }
            }
        }
        StandardTableau { rows }
    }

    /// The canonical cell representative `w_r(T)`: rows read bottom to top,
    /// each row left to right. Satisfies `rs_tableau(w_r(T)) = T`.
    pub fn reading_word(&self) -> Word {
        let entries: Vec<u32> = self.rows.iter().rev().flatten().copied().collect();
        Word::new(entries).expect("tableau entries are distinct")
    }

    /// The projection `π_{lo,hi}(T)`: restrict the reading word to entries
    /// in `[lo, hi]` and re-insert. Entries are kept verbatim.
    pub fn project(&self, lo: u32, hi: u32) -> StandardTableau {
        rs_tableau(&self.reading_word().restrict(lo, hi))
    }

    /// The involution ψ on tableaux over `{1..n}`, via any cell
    /// representative: `ψ(T(w)) = T(ψ(w))`.
    pub fn psi(&self) -> Result<StandardTableau> {
        let n = self.contiguous_rank().ok_or(Error::NonContiguousEntries)?;
        Ok(rs_tableau(&self.reading_word().psi(n)?))
    }

    /// ψ with an explicit ambient rank, for tableaux whose entries are a
    /// proper subset of `{1..n}`; the result lives on the complemented set.
    pub fn psi_ambient(&self, n: usize) -> Result<StandardTableau> {
        Ok(rs_tableau(&self.reading_word().psi(n)?))
    }
}

impl core::fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        for row in &self.rows {
            write!(f, "(")?;
            for (c, entry) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{entry}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Row-bump `x` into `rows`, returning the (0-based) cell that was created.
fn bump(rows: &mut Vec<Vec<u32>>, mut x: u32) -> (usize, usize) {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(c) => {
                core::mem::swap(&mut row[c], &mut x);
            }
            None => {
                row.push(x);
                return (r, row.len() - 1);
            }
        }
    }
    rows.push(vec![x]);
    (rows.len() - 1, 0)
}

/// The Robinson–Schensted insertion tableau `T(w)`; entries are preserved,
/// not renumbered.
pub fn rs_tableau(w: &Word) -> StandardTableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &a in w.entries() {
        bump(&mut rows, a);
    }
    StandardTableau { rows }
}

/// The Robinson–Schensted pair `(P, Q)`: insertion tableau plus the
/// recording tableau tracking cell-creation order by insertion rank.
pub fn rs_pair(w: &Word) -> (StandardTableau, StandardTableau) {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut record: Vec<Vec<u32>> = Vec::new();
    for (k, &a) in w.entries().iter().enumerate() {
        let (r, _) = bump(&mut rows, a);
        if r == record.len() {
            record.push(Vec::new());
        }
        record[r].push(k as u32 + 1);
    }
    (StandardTableau { rows }, StandardTableau { rows: record })
}

/// The concatenation `(P, Q)` for `max <P> < min <Q>`, realized through
/// Robinson–Schensted on the colligation of reading words.
pub fn concat_horizontal(p: &StandardTableau, q: &StandardTableau) -> Result<StandardTableau> {
    check_separated(p, q)?;
    let w = p.reading_word().colligate(&q.reading_word())?;
    Ok(rs_tableau(&w))
}

/// The vertical stack of `P` on top of `Q`, i.e. the transpose of the
/// concatenation of transposes; requires `max <P> < min <Q>`.
pub fn stack_vertical(p: &StandardTableau, q: &StandardTableau) -> Result<StandardTableau> {
    check_separated(p, q)?;
    Ok(concat_horizontal(&p.transpose(), &q.transpose())?.transpose())
}

fn check_separated(p: &StandardTableau, q: &StandardTableau) -> Result<()> {
    let p_max = p.rows.iter().flatten().max();
    let q_min = q.rows.iter().flatten().min();
    match (p_max, q_min) {
        (Some(a), Some(b)) if a >= b => Err(Error::InterleavedEntries),
        _ => Ok(()),
    }
}

/// All standard Young tableaux with entry set `{1..n}`.
pub fn all_standard_tableaux(n: usize) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    fill(1, n, &mut rows, &mut out);
    out
}

fn fill(next: usize, n: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<StandardTableau>) {
    if next > n {
        out.push(StandardTableau { rows: rows.clone() });
        return;
    }
    for r in 0..=rows.len() {
        let fits = r == rows.len() || r == 0 || rows[r].len() < rows[r - 1].len();
        if !fits {
            continue;
        }
        if r == rows.len() {
            rows.push(vec![next as u32]);
            fill(next + 1, n, rows, out);
            rows.pop();
            // a fresh bottom row is the last legal placement for `next`
            break;
        } else {
            rows[r].push(next as u32);
            fill(next + 1, n, rows, out);
            rows[r].pop();
        }
    }
}
