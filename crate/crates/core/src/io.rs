//! Text formats: the matrix file, the CSV schemas, and the compact flag
//! values used by the command line.
//!
//! Matrix files hold four non-comment lines of four whitespace-separated
//! tokens. A token is `<float>`, `<float>+<float>i` or `<float>-<float>i`
//! with no internal whitespace; `#` starts a comment that runs to the end of
//! the line. Everything here treats its input as untrusted and reports errors
//! instead of panicking.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::ParseError;
use crate::linalg::Matrix4;
use crate::state::DensityMatrix4;
use crate::werner::{BRule, SweepRow, WernerPoint};

/// Header of the sweep CSV, in column order.
pub const SWEEP_HEADER: [&str; 19] = [
    "p",
    "b",
    "state_valid",
    "ppt_valid",
    "lam1",
    "lam2",
    "lam3",
    "lam4",
    "lamppt1",
    "lamppt2",
    "lamppt3",
    "lamppt4",
    "neg_param",
    "neg_std",
    "concurrence",
    "S1",
    "S2",
    "S12",
    "I",
];

/// Header of the region CSV.
pub const REGION_HEADER: [&str; 3] = ["p", "b", "class"];

fn is_float_char(c: char) -> bool {
    c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-')
}

/// Strict finite float: digits, `.`, exponent and signs only, so `nan` and
/// `inf` are refused.
pub fn parse_float(text: &str) -> Option<f64> {
    if text.is_empty() || !text.chars().all(is_float_char) {
        return None;
    }
    text.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Parses one matrix entry. On failure returns a message without position.
pub fn parse_complex_token(token: &str) -> Result<Complex64, String> {
    let Some(body) = token.strip_suffix('i') else {
        return parse_float(token)
            .map(|re| Complex64::new(re, 0.0))
            .ok_or_else(|| format!("`{token}` is not a finite number"));
    };
    // The real/imaginary split is the last sign that does not follow an
    // exponent marker and is not the leading sign.
    let split = body
        .char_indices()
        .rev()
        .find(|&(i, c)| i > 0 && (c == '+' || c == '-') && !body[..i].ends_with(['e', 'E']))
        .map(|(i, _)| i)
        .ok_or_else(|| format!("`{token}` has no real part before the imaginary part"))?;
    let (re_text, im_text) = body.split_at(split);
    let re = parse_float(re_text)
        .ok_or_else(|| format!("real part `{re_text}` of `{token}` is not a finite number"))?;
    // `im_text` keeps its sign; a bare sign is not a number
    let im = parse_float(im_text)
        .filter(|_| im_text.len() > 1)
        .ok_or_else(|| format!("imaginary part `{im_text}` of `{token}` is not a finite number"))?;
    Ok(Complex64::new(re, im))
}

/// Parses matrix-file text into a 4×4 matrix. No physical validation.
pub fn parse_matrix(text: &str) -> Result<DensityMatrix4, ParseError> {
    let mut m = Matrix4::zeros();
    let mut row = 0;
    let mut last_line = 0;
    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if row == 4 {
            let col = content.find(|c: char| !c.is_whitespace()).unwrap_or(0);
            return Err(ParseError::new(
                line_no,
                char_column(content, col),
                "more than 4 matrix rows",
            ));
        }
        let mut count = 0;
        for (offset, token) in tokens_with_offsets(content) {
            let column = char_column(content, offset);
            if count == 4 {
                return Err(ParseError::new(
                    line_no,
                    column,
                    "more than 4 entries in row",
                ));
            }
            let z =
                parse_complex_token(token).map_err(|msg| ParseError::new(line_no, column, msg))?;
            m.0[row][count] = z;
            count += 1;
        }
        if count < 4 {
            return Err(ParseError::new(
                line_no,
                content.chars().count() + 1,
                format!("expected 4 entries in row, found {count}"),
            ));
        }
        row += 1;
    }
    if row < 4 {
        return Err(ParseError::new(
            last_line.max(1),
            1,
            format!("expected 4 matrix rows, found {row}"),
        ));
    }
    Ok(DensityMatrix4(m))
}

/// Byte-level entry point: rejects invalid UTF-8 before parsing.
pub fn parse_matrix_bytes(bytes: &[u8]) -> Result<DensityMatrix4, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        ParseError::new(line, 1, "input is not valid UTF-8")
    })?;
    parse_matrix(text)
}

fn tokens_with_offsets(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = 0;
    std::iter::from_fn(move || {
        let tail = &line[rest..];
        let start = rest + tail.find(|c: char| !c.is_whitespace())?;
        let len = line[start..]
            .find(char::is_whitespace)
            .unwrap_or(line.len() - start);
        rest = start + len;
        Some((start, &line[start..start + len]))
    })
}

fn char_column(line: &str, byte_offset: usize) -> usize {
    line[..byte_offset].chars().count() + 1
}

fn fmt_num(v: f64) -> String {
    // 17 significant digits round-trip every finite f64
    format!("{v:.16e}")
}

fn fmt_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", fmt_num(z.re), sign, fmt_num(z.im.abs()))
}

/// Renders a matrix in the file format; [`parse_matrix`] reads it back
/// bit-for-bit.
pub fn write_matrix(m: &DensityMatrix4) -> String {
    let mut out = String::new();
    for row in &m.0 .0 {
        let line: Vec<String> = row.iter().map(|&z| fmt_complex(z)).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// A matrix file read from disk.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub path: PathBuf,
    pub parsed: DensityMatrix4,
}

#[derive(Debug, thiserror::Error)]
pub enum MatrixFileError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
}

impl MatrixFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self, MatrixFileError> {
        let path = path.as_ref().to_path_buf();
        let bytes = std::fs::read(&path).map_err(|source| MatrixFileError::Io {
            path: path.clone(),
            source,
        })?;
        let parsed = parse_matrix_bytes(&bytes).map_err(|source| MatrixFileError::Parse {
            path: path.clone(),
            source,
        })?;
        Ok(Self { path, parsed })
    }
}

fn flag(v: bool) -> &'static str {
    if v {
        "1"
    } else {
        "0"
    }
}

/// Writes the sweep schema. Entropy columns are left empty on rows that are
/// not states.
pub fn write_sweep_csv<W: Write>(mut out: W, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(out, "{}", SWEEP_HEADER.join(","))?;
    let mut line = String::new();
    for row in rows {
        line.clear();
        let mut fields: Vec<String> = vec![
            fmt_num(row.p),
            fmt_num(row.b),
            flag(row.state_valid).into(),
            flag(row.ppt_valid).into(),
        ];
        fields.extend(row.spectrum.iter().map(|&v| fmt_num(v)));
        fields.extend(row.ppt_spectrum.iter().map(|&v| fmt_num(v)));
        fields.push(fmt_num(row.negativity_parameter));
        fields.push(fmt_num(row.standard_negativity));
        fields.push(fmt_num(row.concurrence));
        match row.entropy {
            Some(e) => fields.extend([e.s1, e.s2, e.s12, e.info].map(fmt_num)),
            None => fields.extend(std::iter::repeat_n(String::new(), 4)),
        }
        line.push_str(&fields.join(","));
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

pub fn write_region_csv<W: Write>(mut out: W, points: &[WernerPoint]) -> io::Result<()> {
    writeln!(out, "{}", REGION_HEADER.join(","))?;
    for pt in points {
        writeln!(
            out,
            "{},{},{}",
            fmt_num(pt.p),
            fmt_num(pt.b),
            pt.classification.code()
        )?;
    }
    out.flush()
}

/// A `start:stop:step` sweep range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

fn flag_value(text: &str, offset: usize, what: &str) -> Result<f64, ParseError> {
    parse_float(text).ok_or_else(|| {
        ParseError::new(
            1,
            text_column(offset),
            format!("{what} `{text}` is not a finite number"),
        )
    })
}

fn text_column(offset: usize) -> usize {
    offset + 1
}

pub fn parse_sweep_range(text: &str) -> Result<SweepRange, ParseError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(ParseError::new(
            1,
            1,
            format!("sweep range `{text}` must look like start:stop:step"),
        ));
    }
    let start = flag_value(parts[0], 0, "start")?;
    let stop = flag_value(parts[1], parts[0].len() + 1, "stop")?;
    let step = flag_value(parts[2], parts[0].len() + parts[1].len() + 2, "step")?;
    Ok(SweepRange { start, stop, step })
}

/// `const:<v>` or `scaled:<k>`. The value is only checked for syntax here;
/// [`BRule::check`] enforces `k > 0`.
pub fn parse_b_rule(text: &str) -> Result<BRule, ParseError> {
    let (kind, value) = text.split_once(':').ok_or_else(|| {
        ParseError::new(
            1,
            1,
            format!("b-rule `{text}` must be const:<v> or scaled:<k>"),
        )
    })?;
    let offset = kind.len() + 1;
    match kind {
        "const" => Ok(BRule::Const(flag_value(value, offset, "constant")?)),
        "scaled" => Ok(BRule::Scaled(flag_value(value, offset, "scale")?)),
        _ => Err(ParseError::new(
            1,
            1,
            format!("unknown b-rule `{kind}`, expected const or scaled"),
        )),
    }
}

/// Comma-separated list of entropy indices.
pub fn parse_q_list(text: &str) -> Result<Vec<f64>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        out.push(flag_value(part.trim(), offset, "q")?);
        offset += part.len() + 1;
    }
    Ok(out)
}
