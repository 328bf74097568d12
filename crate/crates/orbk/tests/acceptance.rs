//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `--nocapture`). Every expected value is exact; the
//! exhaustive checks run the brute-force oracle up to the stated rank.

use orbk_core::oracle::{permutations_of, run_suite};
use orbk_core::richardson::{
    descendants, richardson_tableau, richardson_word, t_next, t_prev, t_set, ChainForm,
    SimpleRootSubset,
};
use orbk_core::{StandardTableau, Word};

fn sub(n: usize, indices: &[u32]) -> SimpleRootSubset {
    SimpleRootSubset::new(n, indices.iter().copied()).unwrap()
}

fn tab(rows: &[&[u32]]) -> StandardTableau {
    StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// The running rank-10 subset with chain lengths (2, 4, 3, 1).
fn example10() -> SimpleRootSubset {
    sub(10, &[1, 3, 4, 5, 7, 8])
}

fn assert_suite(name: &str, n: usize) {
    let report = run_suite(name, n).unwrap();
    assert!(
        report.passed(),
        "suite {name} at n = {n}: {} violations, first: {:?}",
        report.violation_count,
        report.violations.first()
    );
}

#[test]
fn criterion_01_chain_form_and_minimal_tableau() {
    let subset = sub(10, &[1, 4, 5, 6, 9]);
    let chains = ChainForm::from_subset(&subset);
    assert_eq!(
        chains.chains(),
        &[vec![1, 2], vec![3], vec![4, 5, 6, 7], vec![8], vec![9, 10]]
    );
    assert_eq!(chains.lengths(), vec![2, 1, 4, 1, 2]);
    assert_eq!(
        (1..=5).map(|i| chains.sigma(i)).collect::<Vec<_>>(),
        vec![2, 3, 7, 8, 10]
    );
    assert_eq!(
        richardson_tableau(&subset),
        tab(&[&[1, 3, 4, 8, 9], &[2, 5, 10], &[6], &[7]])
    );
    println!("acceptance 01 (rank-10 chain form and minimal tableau): PASS");
}

#[test]
fn criterion_02_tail_moves_and_move_sets() {
    let subset = example10();
    let moved_22 = tab(&[&[1, 3, 7, 10], &[2, 8], &[4, 9], &[5], &[6]]);
    let moved_32 = tab(&[&[1, 3, 7, 10], &[2, 4], &[5, 8], &[6, 9]]);
    let moved_41 = tab(&[&[1, 3, 7], &[2, 4, 8], &[5, 9], &[6, 10]]);
    assert_eq!(
        orbk_core::richardson::tail_move(&subset, 2, 2, 2).unwrap(),
        moved_22
    );
    assert_eq!(
        orbk_core::richardson::tail_move(&subset, 2, 3, 2).unwrap(),
        moved_32
    );
    assert_eq!(
        orbk_core::richardson::tail_move(&subset, 3, 4, 1).unwrap(),
        moved_41
    );

    assert_eq!(t_set(&subset, 2), vec![moved_22]);
    let set3 = t_set(&subset, 3);
    assert_eq!(
        set3,
        vec![
            tab(&[&[1, 3, 7, 10], &[2, 4, 8], &[5], &[6], &[9]]),
            moved_32.clone(),
        ]
    );
    assert_eq!(
        t_set(&subset, 4),
        vec![tab(&[&[1, 3, 7], &[2, 4, 8], &[5, 9, 10], &[6]])]
    );
    println!("acceptance 02 (rank-10 tail moves and move sets): PASS");
}

#[test]
fn criterion_03_descendants_rank10() {
    let subset = example10();
    let expected = [
        t_next(&subset, 3).unwrap(),
        t_prev(&subset, 3).unwrap(),
        t_next(&subset, 4).unwrap(),
    ];
    let got = descendants(&subset);
    assert_eq!(got.len(), 3);
    for t in &expected {
        assert!(got.contains(t), "missing descendant {t}");
    }
    let excluded = t_prev(&subset, 2).unwrap();
    assert!(
        !got.contains(&excluded),
        "the chain-2 move must be excluded"
    );
    println!("acceptance 03 (rank-10 descendant set): PASS");
}

#[test]
fn criterion_04_closure_law_word_level() {
    for n in 1..=6 {
        let perms: Vec<(Word, u128)> = permutations_of(n)
            .into_iter()
            .map(|w| {
                let bits = w.inversion_set().unwrap().bits();
                (w, bits)
            })
            .collect();
        for subset in SimpleRootSubset::all(n) {
            let word_mask = richardson_word(&subset).inversion_set().unwrap().bits();
            for (w, mask) in &perms {
                let duflo = word_mask & !mask == 0;
                let contains = w.tau().unwrap().is_superset(subset.indices());
                assert_eq!(duflo, contains, "I = {subset}, w = {w}");
            }
        }
    }
    println!("acceptance 04 (closure law over all words, n <= 6): PASS");
}

#[test]
fn criterion_05_psi_machinery() {
    for n in 2..=6 {
        assert_suite("psi-cells", n);
        assert_suite("psi-chain", n);
        assert_suite("psi-moves", n);
    }
    println!("acceptance 05 (psi on cells, chain tableaux, and moves, n <= 6): PASS");
}

#[test]
fn criterion_06_reversal_transposes() {
    for n in 2..=6 {
        assert_suite("ss", n);
    }
    println!("acceptance 06 (reversal transposes insertion, n <= 6): PASS");
}

#[test]
fn criterion_07_witness_domination() {
    for n in 2..=6 {
        assert_suite("witness", n);
    }
    println!("acceptance 07 (every closure member dominates its bracket, n <= 6): PASS");
}

#[test]
fn criterion_08_rank4_boundary_example() {
    assert_suite("sl4", 4);
    let subset = sub(4, &[1]);
    let got = descendants(&subset);
    assert_eq!(got.len(), 2);
    assert!(got.contains(&tab(&[&[1, 3], &[2, 4]])));
    assert!(got.contains(&tab(&[&[1, 4], &[2], &[3]])));
    println!("acceptance 08 (rank-4 closure-intersection counterexample): PASS");
}

#[test]
fn criterion_09_rank6_codim2_descendant() {
    assert_suite("sl6", 6);
    println!("acceptance 09 (rank-6 codimension-2 descendant census): PASS");
}

#[test]
fn criterion_10_descendant_suite_with_reported_checks() {
    for n in 2..=5 {
        let report = run_suite("descendants", n).unwrap();
        assert!(
            report.passed(),
            "descendants at n = {n}: {:?}",
            report.violations.first()
        );
        assert!(
            report
                .notes
                .iter()
                .any(|m| m.starts_with("excluded moves with a certified intermediate:")),
            "the certified-intermediate census must be reported"
        );
        assert!(
            report
                .notes
                .iter()
                .any(|m| m.starts_with("move-union collisions")),
            "the collision census must be reported"
        );
    }
    println!("acceptance 10 (descendant consistency checks, n <= 5, reports attached): PASS");
}
