mod common;

use common::{battery_columns, reference_deviation, splitmix_bits, REFERENCE, SEQUENCES};

#[test]
fn bit_source_matches_oracle_generator() {
    let want = [0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0];
    assert_eq!(splitmix_bits(1, 24, 128), want);
}

#[test]
fn battery_agrees_with_reference_within_1e_6() {
    let worst = reference_deviation().unwrap();
    assert!(worst <= 1e-6, "largest deviation {worst:e}");
}

#[test]
fn every_cell_reported() {
    for (s, &(seed, n, ones)) in SEQUENCES.iter().enumerate() {
        let got = battery_columns(&splitmix_bits(seed, n, ones));
        for (col, want) in REFERENCE[s].iter().enumerate() {
            let ok = match got[col] {
                Some(p) => (p - want).abs() <= 1e-6,
                None => want.is_nan(),
            };
            assert!(ok, "sequence {s} column {col}: {:?} vs {want}", got[col]);
        }
    }
}
