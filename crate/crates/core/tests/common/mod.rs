#![allow(dead_code)]

use mpcs_core::randomness::TestKind;

/// splitmix64 bit source shared with `oracle/nist_reference.py`: a bit is 1
/// when the low byte of the output is below `ones_per_256`.
pub fn splitmix_bits(seed: u64, n: usize, ones_per_256: u64) -> Vec<u8> {
    let mut state = seed;
    (0..n)
        .map(|_| {
            state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            z ^= z >> 31;
            u8::from((z & 0xFF) < ones_per_256)
        })
        .collect()
}

/// (seed, length, ones per 256) for each reference sequence.
pub const SEQUENCES: [(u64, usize, u64); 5] = [
    (1, 65536, 128),
    (2, 65536, 128),
    (3, 40000, 128),
    (4, 65536, 129),
    (5, 20000, 127),
];

/// Reference p-values printed by `oracle/nist_reference.py`, per sequence:
/// frequency, block frequency, cusum forward, cusum reverse, runs, longest
/// run, rank (NaN when too short), spectral, linear complexity, serial p1,
/// serial p2.
#[allow(clippy::excessive_precision)]
pub const REFERENCE: [[f64; 11]; 5] = [
    [
        3.098079952094136e-01, 1.197342535369535e-01, 4.602436056250818e-01,
        4.222454263475237e-01, 7.338775200287165e-01, 6.636689622407829e-01,
        4.006627259941357e-01, 4.220007050375622e-01, 8.806438220808838e-01,
        5.657629650698851e-01, 7.428171522234015e-01,
    ],
    [
        3.815739057050214e-01, 7.364663042466102e-01, 4.816170600149423e-01,
        2.692440927607039e-01, 1.138473577465952e-01, 8.190601917601528e-01,
        5.676926573669853e-01, 7.039678261281859e-01, 9.641654097363179e-01,
        1.963116644704090e-01, 1.145368958912596e-01,
    ],
    [
        6.527104405758400e-01, 6.252154321875307e-01, 1.782611717272093e-01,
        4.222454263475237e-01, 5.035012913233288e-01, 8.439882418818883e-01,
        6.924497165105730e-01, 6.137592948377754e-01, 3.302088096808258e-01,
        7.171645261926356e-01, 4.965044609052872e-01,
    ],
    [
        8.086348803407305e-01, 2.708676249527606e-01, 1.890968897780661e-01,
        3.055775731441481e-01, 3.524138259985823e-01, 9.550241364676325e-01,
        2.680610330098663e-01, 1.021356329041124e-01, 9.571967941532109e-02,
        6.349213472302226e-01, 3.565937807845893e-01,
    ],
    [
        9.323784056066916e-01, 5.059752190413461e-02, 5.441263550512696e-01,
        6.190431048449264e-01, 1.884533884215852e-01, 3.043242627151685e-01,
        f64::NAN, 2.176194932467149e-01, 4.754342439702252e-01,
        4.118072001336834e-01, 1.837289810236796e-01,
    ],
];

/// Our p-values in the reference column order; `None` for a skipped test.
pub fn battery_columns(bits: &[u8]) -> [Option<f64>; 11] {
    let mut out = [None; 11];
    for (i, test) in TestKind::ALL.iter().enumerate() {
        let result = test.run(bits).ok();
        if *test == TestKind::Serial {
            out[9] = result.as_ref().and_then(|r| r.aux("p1"));
            out[10] = result.as_ref().and_then(|r| r.aux("p2"));
        } else {
            out[i] = result.map(|r| r.p_value);
        }
    }
    out
}

/// Largest absolute deviation from the reference table, or an error message
/// naming the first mismatch in kind (skipped versus computed).
pub fn reference_deviation() -> Result<f64, String> {
    let mut worst = 0.0f64;
    for (s, &(seed, n, ones)) in SEQUENCES.iter().enumerate() {
        let got = battery_columns(&splitmix_bits(seed, n, ones));
        for (col, (&want, have)) in REFERENCE[s].iter().zip(got).enumerate() {
            match (want.is_nan(), have) {
                (true, None) => {}
                (false, Some(p)) => worst = worst.max((p - want).abs()),
                _ => return Err(format!("sequence {s} column {col}: want {want}, have {have:?}")),
            }
        }
    }
    Ok(worst)
}
