//! Fixed inputs shared by the benchmarks.

use qknot_core::BraidWord;

/// `(label, braid, colour)` cases for the pairing benchmarks, smallest first.
pub fn pairing_cases() -> Vec<(&'static str, BraidWord, u32)> {
    let trefoil = BraidWord::new(2, vec![1, 1, 1]).expect("valid braid");
    let figure_eight = BraidWord::new(3, vec![1, -2, 1, -2]).expect("valid braid");
    let six_letter = BraidWord::new(3, vec![1, 1, 1, 2, -1, 2]).expect("valid braid");
    vec![
        ("trefoil", trefoil.clone(), 2),
        ("trefoil", trefoil.clone(), 3),
        ("trefoil", trefoil, 4),
        ("figure-eight", figure_eight.clone(), 2),
        ("figure-eight", figure_eight, 3),
        ("six-letter", six_letter, 3),
    ]
}
