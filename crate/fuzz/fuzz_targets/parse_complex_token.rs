#![no_main]

use libfuzzer_sys::fuzz_target;
use qudit_x::io::parse_complex_token;

fuzz_target!(|token: &str| {
    if let Ok(z) = parse_complex_token(token) {
        assert!(z.re.is_finite() && z.im.is_finite(), "{token:?} -> {z}");
    }
});
