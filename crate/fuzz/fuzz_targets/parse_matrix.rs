#![no_main]

use libfuzzer_sys::fuzz_target;
use qudit_x::io::{parse_matrix, parse_matrix_bytes, write_matrix};

fuzz_target!(|data: &[u8]| {
    let Ok(m) = parse_matrix_bytes(data) else {
        return;
    };
    // anything accepted must survive a write/parse round trip bit for bit
    let again = parse_matrix(&write_matrix(&m)).expect("written matrix parses");
    for i in 0..4 {
        for j in 0..4 {
            let (a, b) = (m.0 .0[i][j], again.0 .0[i][j]);
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }
});
