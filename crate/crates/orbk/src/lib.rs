//! IO companion to `orbk-core`: JSON documents, ASCII tableau rendering,
//! DOT export of closure diagrams, and the verification driver behind
//! `orbk verify`.

pub mod format;
pub mod hasse;

use orbk_core::oracle::{run_suite, suite_fixed_rank, CheckReport, SUITE_NAMES};
use rayon::prelude::*;

/// Expand suite names (all of them when empty) into `(name, rank)` tasks
/// and run them, fanning out over a thread pool when `jobs > 1`.
pub fn run_verify(bound: usize, names: &[String], jobs: usize) -> Result<Vec<CheckReport>, String> {
    if bound > orbk_core::words::MAX_RANK {
        return Err(format!(
            "bound {bound} exceeds the inversion-set limit {}",
            orbk_core::words::MAX_RANK
        ));
    }
    let selected: Vec<&'static str> = if names.is_empty() {
        SUITE_NAMES.to_vec()
    } else {
        let mut out = Vec::new();
        for name in names {
            match SUITE_NAMES.iter().find(|s| *s == name) {
                Some(s) => out.push(*s),
                None => {
                    return Err(format!(
                        "unknown suite {name:?}; available: {}",
                        SUITE_NAMES.join(", ")
                    ))
                }
            }
        }
        out
    };
    let mut tasks: Vec<(&str, usize)> = Vec::new();
    for name in selected {
        match suite_fixed_rank(name) {
            Some(rank) => {
                if rank <= bound {
                    tasks.push((name, rank));
                }
            }
            None => tasks.extend((2..=bound).map(|n| (name, n))),
        }
    }
    let run = |&(name, n): &(&str, usize)| run_suite(name, n).expect("validated suite name");
    let reports = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| format!("cannot build thread pool: {e}"))?;
        pool.install(|| tasks.par_iter().map(run).collect())
    } else {
        tasks.iter().map(run).collect()
    };
    Ok(reports)
}
