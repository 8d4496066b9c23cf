//! Frame files and JSON reports.
//!
//! Frame file schema (UTF-8 JSON):
//!
//! ```json
//! {"dim": 2, "field": "real", "vectors": [[1.0, 0.0], [0.0, 1.0]]}
//! {"dim": 1, "field": "complex", "vectors": [[[0.0, 1.0]]]}
//! ```
//!
//! Every float written by this module uses 17 significant digits, so a write
//! followed by a read reproduces each value bit for bit. Object keys are
//! emitted in a fixed order.

use std::io;

use serde::ser::Serialize;
use serde::Deserialize;
use serde_json::ser::Formatter;

use crate::error::{FrameError, Result};
use crate::frame::{Field, Frame};
use crate::linalg::CMat;
use crate::tolerance::ToleranceConfig;
use num_complex::Complex64;

/// `serde_json` formatter writing every `f64` with 17 significant digits.
#[derive(Debug, Clone, Copy, Default)]
pub struct SeventeenDigits;

impl Formatter for SeventeenDigits {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// Serializes to a compact JSON string with 17-significant-digit floats.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SeventeenDigits);
    value
        .serialize(&mut ser)
        .expect("serializing to memory cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Complex([f64; 2]),
}

/// On-disk representation of a frame.
#[derive(Debug, Clone, PartialEq, serde::Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub dim: usize,
    pub field: Field,
    pub vectors: Vec<Vec<Entry>>,
}

impl FrameFile {
    pub fn from_frame(frame: &Frame) -> Self {
        let vectors = frame
            .vectors()
            .map(|v| {
                v.iter()
                    .map(|z| match frame.field() {
                        Field::Real => Entry::Real(z.re),
                        Field::Complex => Entry::Complex([z.re, z.im]),
                    })
                    .collect()
            })
            .collect();
        Self {
            dim: frame.dim(),
            field: frame.field(),
            vectors,
        }
    }

    pub fn to_frame(&self) -> Result<Frame> {
        let mut rows = Vec::with_capacity(self.vectors.len());
        for (k, row) in self.vectors.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                let z = match (self.field, e) {
                    (Field::Real, Entry::Real(x)) => Complex64::new(*x, 0.0),
                    (Field::Complex, Entry::Complex([re, im])) => Complex64::new(*re, *im),
                    (Field::Real, Entry::Complex(_)) => {
                        return Err(FrameError::Malformed(format!(
                            "vector {}: real frames take plain numbers",
                            k + 1
                        )))
                    }
                    (Field::Complex, Entry::Real(_)) => {
                        return Err(FrameError::Malformed(format!(
                            "vector {}: complex frames take [re, im] pairs",
                            k + 1
                        )))
                    }
                };
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(FrameError::Malformed(format!(
                        "vector {}: non-finite entry",
                        k + 1
                    )));
                }
                out.push(z);
            }
            rows.push(out);
        }
        Frame::new(self.field, self.dim, &rows)
    }
}

pub fn parse_frame(text: &str) -> Result<Frame> {
    let file: FrameFile = serde_json::from_str(text)
        .map_err(|e| FrameError::Malformed(format!("frame file: {e}")))?;
    file.to_frame()
}

pub fn frame_to_json(frame: &Frame) -> String {
    to_json(&FrameFile::from_frame(frame))
}

pub fn read_frame(path: &std::path::Path) -> Result<Frame> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FrameError::Malformed(format!("{}: {e}", path.display())))?;
    parse_frame(&text)
}

pub fn write_frame(path: &std::path::Path, frame: &Frame) -> Result<()> {
    std::fs::write(path, frame_to_json(frame) + "\n")
        .map_err(|e| FrameError::Malformed(format!("{}: {e}", path.display())))
}

/// Rows of a matrix as JSON: numbers for real matrices, `[re, im]` pairs
/// otherwise.
pub fn matrix_to_value(m: &CMat, field: Field) -> serde_json::Value {
    let rows: Vec<Vec<Entry>> = m
        .row_iter()
        .map(|r| {
            r.iter()
                .map(|z| match field {
                    Field::Real => Entry::Real(z.re),
                    Field::Complex => Entry::Complex([z.re, z.im]),
                })
                .collect()
        })
        .collect();
    serde_json::to_value(rows).expect("matrix rows serialize")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass | Verdict::NotApplicable => 0,
            Verdict::Fail => 1,
        }
    }
}

/// Machine-readable result of one CLI command.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: serde_json::Value,
    pub verdict: Verdict,
    pub payload: serde_json::Value,
    pub tolerances: ToleranceConfig,
}

impl Report {
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}
