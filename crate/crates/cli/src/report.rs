//! Human-readable and key/value renderings of analysis results.

use std::fmt::Write as _;

use qudit_x::io::write_matrix;
use qudit_x::measures::{self, EntanglementReport, EntropyReport};
use qudit_x::qentropy;
use qudit_x::{DensityMatrix4, Spectrum, SweepRow, ValidationReport, XState};

fn spectrum_text(s: &[f64; 4]) -> String {
    s.iter()
        .map(|v| format!("{v:+.15}"))
        .collect::<Vec<_>>()
        .join("  ")
}

pub fn validation_text(report: &ValidationReport) -> String {
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    let mut out = String::new();
    let _ = writeln!(out, "validation:");
    let _ = writeln!(
        out,
        "  hermitian      {}  residual {:.3e}",
        verdict(report.hermitian_ok),
        report.hermitian_residual
    );
    let _ = writeln!(
        out,
        "  unit trace     {}  residual {:.3e} (diagonal imaginary {:.3e})",
        verdict(report.trace_ok),
        report.trace_residual,
        report.diagonal_imag_residual
    );
    let min = report
        .min_eigenvalue
        .map_or_else(|| "n/a".to_string(), |v| format!("{v:+.3e}"));
    let _ = writeln!(
        out,
        "  psd            {}  min eigenvalue {min}",
        verdict(report.psd_ok)
    );
    out
}

/// Everything `analyze` computes for one X-state.
pub struct Analysis {
    pub matrix: DensityMatrix4,
    pub validation: ValidationReport,
    pub closed: Spectrum,
    pub oracle: Spectrum,
    pub entropy: EntropyReport,
    pub entanglement: EntanglementReport,
    pub concurrence_spectrum: f64,
    pub q_entropies: Vec<(f64, f64, f64)>,
}

impl Analysis {
    pub fn new(
        matrix: DensityMatrix4,
        validation: ValidationReport,
        x: &XState,
        oracle: Spectrum,
        qs: &[f64],
    ) -> Self {
        let probs = qentropy::diagonal_distribution(x);
        let q_entropies = qs
            .iter()
            .map(|&q| {
                // q was checked at flag parsing and the diagonal of a valid
                // state is a distribution, so both calls succeed
                let t = qentropy::tsallis_entropy(&probs, q).unwrap_or(f64::NAN);
                let r = qentropy::renyi_entropy(&probs, q).unwrap_or(f64::NAN);
                (q, t, r)
            })
            .collect();
        Self {
            matrix,
            validation,
            closed: measures::xstate_spectrum(x),
            oracle,
            entropy: measures::entropy_report(x),
            entanglement: measures::entanglement_report(x),
            concurrence_spectrum: measures::concurrence_spectrum_route(x),
            q_entropies,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "matrix:");
        for line in write_matrix(&self.matrix).lines() {
            let _ = writeln!(out, "  {line}");
        }
        out.push_str(&validation_text(&self.validation));
        let _ = writeln!(out, "spectrum:");
        let _ = writeln!(
            out,
            "  closed form    {}",
            spectrum_text(&self.closed.values())
        );
        let _ = writeln!(
            out,
            "  jacobi oracle  {}",
            spectrum_text(&self.oracle.values())
        );
        let _ = writeln!(
            out,
            "  max deviation  {:.3e}",
            self.closed.max_abs_diff(&self.oracle)
        );
        let e = &self.entropy;
        let _ = writeln!(out, "entropy (nats):");
        let _ = writeln!(out, "  S1   {:.15}", e.s1);
        let _ = writeln!(out, "  S2   {:.15}", e.s2);
        let _ = writeln!(out, "  S12  {:.15}", e.s12);
        let _ = writeln!(
            out,
            "  I    {:.15}  subadditive {}",
            e.info,
            e.subadditive()
        );
        let g = &self.entanglement;
        let _ = writeln!(out, "entanglement:");
        let _ = writeln!(
            out,
            "  ppt spectrum        {}",
            spectrum_text(&g.ppt_spectrum.values())
        );
        let _ = writeln!(out, "  negativity param    {:.15}", g.negativity_parameter);
        let _ = writeln!(out, "  negativity (std)    {:.15}", g.standard_negativity);
        let _ = writeln!(out, "  concurrence         {:.15}", g.concurrence);
        let _ = writeln!(
            out,
            "  concurrence (roots) {:.15}",
            self.concurrence_spectrum
        );
        let _ = writeln!(out, "  entangled           {}", g.entangled);
        let _ = writeln!(out, "  active condition    {}", g.active_condition.label());
        if !self.q_entropies.is_empty() {
            let _ = writeln!(out, "q-entropies of the diagonal:");
            for (q, t, r) in &self.q_entropies {
                let _ = writeln!(out, "  q = {q}  tsallis {t:.15}  renyi {r:.15}");
            }
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut rows: Vec<(String, f64)> = vec![
            (
                "hermitian_residual".into(),
                self.validation.hermitian_residual,
            ),
            ("trace_residual".into(), self.validation.trace_residual),
            (
                "min_eigenvalue".into(),
                self.validation.min_eigenvalue.unwrap_or(f64::NAN),
            ),
        ];
        for (i, v) in self.closed.values().iter().enumerate() {
            rows.push((format!("lam{}", i + 1), *v));
        }
        for (i, v) in self.oracle.values().iter().enumerate() {
            rows.push((format!("lam_oracle{}", i + 1), *v));
        }
        for (i, v) in self.entanglement.ppt_spectrum.values().iter().enumerate() {
            rows.push((format!("lamppt{}", i + 1), *v));
        }
        let e = &self.entropy;
        let g = &self.entanglement;
        rows.extend([
            ("S1".into(), e.s1),
            ("S2".into(), e.s2),
            ("S12".into(), e.s12),
            ("I".into(), e.info),
            ("neg_param".into(), g.negativity_parameter),
            ("neg_std".into(), g.standard_negativity),
            ("concurrence".into(), g.concurrence),
            ("concurrence_roots".into(), self.concurrence_spectrum),
            ("entangled".into(), if g.entangled { 1.0 } else { 0.0 }),
        ]);
        for (q, t, r) in &self.q_entropies {
            rows.push((format!("tsallis_q{q}"), *t));
            rows.push((format!("renyi_q{q}"), *r));
        }
        let mut out = String::from("quantity,value\n");
        for (k, v) in rows {
            let _ = writeln!(out, "{k},{v:.16e}");
        }
        out
    }
}

pub fn werner_point_text(row: &SweepRow) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "werner state p = {}, b = {}", row.p, row.b);
    let _ = writeln!(out, "  state valid         {}", row.state_valid);
    let _ = writeln!(out, "  ppt valid           {}", row.ppt_valid);
    let _ = writeln!(
        out,
        "  spectrum            {}",
        spectrum_text(&row.spectrum)
    );
    let _ = writeln!(
        out,
        "  ppt spectrum        {}",
        spectrum_text(&row.ppt_spectrum)
    );
    let _ = writeln!(
        out,
        "  negativity param    {:.15}",
        row.negativity_parameter
    );
    let _ = writeln!(out, "  negativity (std)    {:.15}", row.standard_negativity);
    let _ = writeln!(out, "  concurrence         {:.15}", row.concurrence);
    match row.entropy {
        Some(e) => {
            let _ = writeln!(out, "  S1                  {:.15}", e.s1);
            let _ = writeln!(out, "  S2                  {:.15}", e.s2);
            let _ = writeln!(out, "  S12                 {:.15}", e.s12);
            let _ = writeln!(out, "  I                   {:.15}", e.info);
        }
        None => {
            let _ = writeln!(
                out,
                "  (not a state: entropies omitted, values above are raw formulas)"
            );
        }
    }
    out
}
