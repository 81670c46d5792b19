#![no_main]

use libfuzzer_sys::fuzz_target;
use qudit_x::io::parse_matrix_bytes;
use qudit_x::linalg::hermitian_eigenvalues;
use qudit_x::measures::{concurrence_spectrum_route, entanglement_report, entropy_report};
use qudit_x::qentropy::{diagonal_distribution, renyi_entropy, tsallis_entropy};
use qudit_x::state::validate;
use qudit_x::{tol, XState};

// Same path as `qudit-x analyze`: parse, validate, narrow to an X-state,
// then compute every report.
fuzz_target!(|data: &[u8]| {
    let Ok(m) = parse_matrix_bytes(data) else {
        return;
    };
    let report = validate(&m);
    if !report.passed() {
        return;
    }
    let Ok(x) = XState::from_matrix(&m, tol::X_SHAPE_FILE) else {
        return;
    };
    let _ = hermitian_eigenvalues(m.matrix());
    let e = entropy_report(&x);
    assert!(e.s12.is_finite() && e.info.is_finite());
    let g = entanglement_report(&x);
    assert!(g.concurrence.is_finite());
    let _ = concurrence_spectrum_route(&x);
    let probs = diagonal_distribution(&x);
    for q in [0.5, 2.0, 3.0] {
        let _ = tsallis_entropy(&probs, q);
        let _ = renyi_entropy(&probs, q);
    }
});
