//! Integer partitions, the closure order on nilpotent orbits, and orbit
//! dimension arithmetic.
//!
//! Nilpotent orbits of `sl_n` are labelled by partitions of `n` through
//! Jordan block sizes. The order used throughout is the one under which the
//! closure of the orbit labelled `λ` is the union of the orbits labelled
//! `μ ≥ λ`: larger elements have smaller orbits. Concretely `λ ≤ μ` iff
//! every prefix sum of `λ` is at least the matching prefix sum of `μ`
//! (partitions are zero-padded to a common length), which is dominance
//! order read in reverse.

use alloc::vec::Vec;

use crate::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers. The
/// empty partition (of 0) is allowed; it is the shape of the empty tableau.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (k, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::MalformedPartition("parts must be positive"));
            }
            if k > 0 && parts[k - 1] < p {
                return Err(Error::MalformedPartition("parts must weakly decrease"));
            }
        }
        Ok(Partition { parts })
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            return Partition::default();
        }
        Partition {
            parts: alloc::vec![n as u32],
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition {
            parts: alloc::vec![1; n],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight `n = Σ λ_i`.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// 1-based part access, zero-padded beyond the last part.
    pub fn part(&self, k: usize) -> u32 {
        assert!(k >= 1, "parts are 1-indexed");
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// The conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// The closure order: `self ≤ other` iff every prefix sum of `self` is
    /// `≥` the matching prefix sum of `other`.
    pub fn closure_leq(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::WeightMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let len = self.parts.len().max(other.parts.len());
        let mut sum_left = 0u64;
        let mut sum_right = 0u64;
        for k in 1..=len {
            sum_left += self.part(k) as u64;
            sum_right += other.part(k) as u64;
            if sum_left < sum_right {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of the nilpotent orbit with Jordan type `λ`:
    /// `n² − Σ (λ*_k)²` where `λ*` is the conjugate partition.
    pub fn orbit_dim(&self) -> usize {
        let n = self.n();
        let sq: usize = self
            .conjugate()
            .parts
            .iter()
            .map(|&p| (p as usize) * (p as usize))
            .sum();
        n * n - sq
    }
}

impl core::fmt::Display for Partition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    descend(n as u32, n as u32, &mut parts, &mut out);
    out
}

fn descend(remaining: u32, max: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: parts.clone(),
        });
        return;
    }
    let mut p = max.min(remaining);
    while p >= 1 {
        parts.push(p);
        descend(remaining - p, p, parts, out);
        parts.pop();
        p -= 1;
    }
}

/// All `μ` with `λ ≤ μ`: the orbit labels appearing in the closure of the
/// orbit labelled `λ`.
pub fn closure_partitions(lam: &Partition) -> Vec<Partition> {
    partitions_of(lam.n())
        .into_iter()
        .filter(|mu| lam.closure_leq(mu).expect("equal weight by construction"))
        .collect()
}

/// The covers of `λ`: minimal elements among the partitions strictly above
/// it, i.e. the labels of the orbit descendants.
pub fn orbit_covers(lam: &Partition) -> Vec<Partition> {
    let above: Vec<Partition> = closure_partitions(lam)
        .into_iter()
        .filter(|mu| mu != lam)
        .collect();
    above
        .iter()
        .filter(|mu| {
            !above
                .iter()
                .any(|nu| nu != *mu && nu.closure_leq(mu).expect("equal weight"))
        })
        .cloned()
        .collect()
}

/// Dimension of the nilradical determined by a chain decomposition of
/// `{1..n}` into runs of the given lengths: `C(n, 2) − Σ C(c_i, 2)`.
pub fn nilradical_dim(n: usize, chain_lengths: &[usize]) -> usize {
    let choose2 = |m: usize| m * (m.saturating_sub(1)) / 2;
    choose2(n) - chain_lengths.iter().map(|&c| choose2(c)).sum::<usize>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert!(Partition::new(vec![3, 2, 1]).is_ok());
        assert!(Partition::new(vec![]).is_ok());
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(Error::MalformedPartition("parts must weakly decrease"))
        );
        assert_eq!(
            Partition::new(vec![2, 0]),
            Err(Error::MalformedPartition("parts must be positive"))
        );
    }

    #[test]
    fn order_examples() {
        let a = part(&[2, 2]);
        let b = part(&[2, 1, 1]);
        assert!(a.closure_leq(&a).unwrap());
        assert!(a.closure_leq(&b).unwrap());
        assert!(!b.closure_leq(&a).unwrap());
        assert_eq!(
            a.closure_leq(&part(&[3])),
            Err(Error::WeightMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn closure_sets() {
        let all: Vec<Partition> = closure_partitions(&Partition::row(4));
        assert_eq!(all.len(), 5);

        assert_eq!(
            closure_partitions(&Partition::column(4)),
            vec![Partition::column(4)]
        );

        let from22 = closure_partitions(&part(&[2, 2]));
        assert_eq!(
            from22,
            vec![part(&[2, 2]), part(&[2, 1, 1]), part(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn covers() {
        assert!(orbit_covers(&Partition::column(5)).is_empty());
        assert_eq!(orbit_covers(&Partition::row(4)), vec![part(&[3, 1])]);
        let covers = orbit_covers(&part(&[3, 2, 1]));
        assert_eq!(covers.len(), 2);
        assert!(covers.contains(&part(&[3, 1, 1, 1])));
        assert!(covers.contains(&part(&[2, 2, 2])));
    }

    #[test]
    fn dimensions() {
        assert_eq!(Partition::column(5).orbit_dim(), 0);
        assert_eq!(part(&[2, 2]).orbit_dim(), 8);
        assert_eq!(part(&[3, 1, 1, 1]).orbit_dim(), 18);
        assert_eq!(Partition::row(4).orbit_dim(), 12);

        // no chains merged: the full strictly-upper-triangular algebra
        assert_eq!(nilradical_dim(4, &[1, 1, 1, 1]), 6);
        // a single chain: the zero nilradical
        assert_eq!(nilradical_dim(6, &[6]), 0);
        assert_eq!(nilradical_dim(6, &[3, 1, 2]), 11);
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[3, 1, 1, 1]).conjugate(), part(&[4, 1, 1]));
        assert_eq!(part(&[3, 2, 1]).conjugate(), part(&[3, 2, 1]));
        assert_eq!(Partition::default().conjugate(), Partition::default());
    }
}
