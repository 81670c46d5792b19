#![no_main]

use libfuzzer_sys::fuzz_target;
use qudit_x::io::{parse_b_rule, parse_q_list, parse_sweep_range};
use qudit_x::werner::sweep_points;

fuzz_target!(|text: &str| {
    if let Ok(range) = parse_sweep_range(text) {
        // only walk ranges small enough to stay fast
        if (range.stop - range.start) / range.step < 1e4 {
            if let Ok(points) = sweep_points(range.start, range.stop, range.step) {
                assert!(points.iter().all(|p| p.is_finite()));
            }
        }
    }
    if let Ok(rule) = parse_b_rule(text) {
        if let Ok(rule) = rule.check() {
            assert!(rule.b_at(0.5).is_finite());
        }
    }
    if let Ok(qs) = parse_q_list(text) {
        assert!(qs.iter().all(|q| q.is_finite()));
    }
});
