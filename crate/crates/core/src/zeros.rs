//! Embedded table of the first 30 nontrivial zero ordinates with their
//! expected winding integers, plus ingestion of external zero tables.
//!
//! Ordinates are kept as decimal text and parsed on demand, so a future
//! higher-precision build needs no data migration. File formats are
//! byte-level fixed: UTF-8, LF line endings, `.` decimal separator.

use crate::error::{Error, Result};
use crate::numerics::Real;
use std::path::Path;

/// One zero ordinate with its provenance text and expected winding integer.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroRecord {
    /// 1-based position in the table.
    pub index: u32,
    /// Decimal ordinate exactly as written in the source.
    pub ordinate_text: String,
    /// Binary64 rounding of `ordinate_text`.
    pub ordinate: Real,
    /// Expected winding integer, when known.
    pub expected_u: Option<i64>,
}

/// Supported on-disk table layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZerosFormat {
    /// One decimal ordinate per line; `#` starts a comment line.
    Plain,
    /// Header `index,ordinate,expected_u`; `expected_u` may be empty.
    Csv,
}

const BUILTIN: [(&str, i64); 30] = [
    ("14.1347251417346937904572519835624766", 8),
    ("21.0220396387715549926284795938969162", 14),
    ("25.0108575801456887632137909925627734", 18),
    ("30.4248761258595132103118975305839571", 24),
    ("32.9350615877391896906623689640747418", 28),
    ("37.5861781588256712572177634807052984", 32),
    ("40.9187190121474951873981269146334247", 38),
    ("43.3270732809149995194961221654068456", 40),
    ("48.0051508811671597279424727494276636", 46),
    ("49.7738324776723021819167846785638367", 48),
    ("52.9703214777144606441472966088808216", 52),
    ("56.4462476970633948043677594767060321", 56),
    ("59.3470440026023530796536486749921759", 60),
    ("60.8317785246098098442599018245240815", 64),
    ("65.1125440480816066608750542531836072", 68),
    ("67.0798105294941737144788288965220700", 72),
    ("69.5464017111739792529268575265546586", 76),
    ("72.0671576744819075825221079698261175", 78),
    ("75.7046906990839331683269167620305404", 84),
    ("77.1448400688748053726826648563046925", 88),
    ("79.3373750202493679227635928771160578", 90),
    ("82.9103808540860301831648374947705599", 94),
    ("84.7354929805170501057353112068275569", 96),
    ("87.4252746131252294065316678509191351", 100),
    ("88.8091112076344654236823480795095125", 104),
    ("92.4918992705584842962597252418104965", 108),
    ("94.6513440405198869665979258152079645", 110),
    ("95.8706342282453097587410292192466718", 114),
    ("98.8311942181936922333244201386223539", 118),
    ("101.317851005731391228785447940292361", 122),
];

/// The 30 embedded zero ordinates with their expected winding integers.
pub fn builtin_zeros() -> Vec<ZeroRecord> {
    BUILTIN
        .iter()
        .enumerate()
        .map(|(i, &(text, u))| ZeroRecord {
            index: i as u32 + 1,
            ordinate_text: text.to_string(),
            ordinate: text.parse().expect("builtin ordinate parses"),
            expected_u: Some(u),
        })
        .collect()
}

/// Loads a zeros table from disk.
pub fn load_zeros(path: &Path, format: ZerosFormat) -> Result<Vec<ZeroRecord>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_zeros(&text, format)
}

/// Parses a zeros table from text. Line numbers in errors are 1-based.
pub fn parse_zeros(text: &str, format: ZerosFormat) -> Result<Vec<ZeroRecord>> {
    match format {
        ZerosFormat::Plain => parse_plain(text),
        ZerosFormat::Csv => parse_csv(text),
    }
}

fn validate_ordinate(text: &str, line: usize) -> Result<Real> {
    let ordinate: Real = text.trim().parse().map_err(|_| Error::Parse {
        line,
        message: format!("not a decimal ordinate: {text:?}"),
    })?;
    if !ordinate.is_finite() || ordinate <= 0.0 {
        return Err(Error::Parse {
            line,
            message: format!("ordinate must be finite and positive, got {ordinate}"),
        });
    }
    Ok(ordinate)
}

fn check_monotone(records: &[ZeroRecord], next: Real, line: usize) -> Result<()> {
    if let Some(last) = records.last() {
        if next <= last.ordinate {
            return Err(Error::Monotonicity { line });
        }
    }
    Ok(())
}

fn parse_plain(text: &str) -> Result<Vec<ZeroRecord>> {
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let ordinate = validate_ordinate(trimmed, line)?;
        check_monotone(&records, ordinate, line)?;
        records.push(ZeroRecord {
            index: records.len() as u32 + 1,
            ordinate_text: trimmed.to_string(),
            ordinate,
            expected_u: None,
        });
    }
    Ok(records)
}

const CSV_HEADER: &str = "index,ordinate,expected_u";

fn parse_csv(text: &str) -> Result<Vec<ZeroRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == CSV_HEADER => {}
        Some((_, h)) => {
            return Err(Error::Parse {
                line: 1,
                message: format!("expected header {CSV_HEADER:?}, got {h:?}"),
            })
        }
        None => {
            return Err(Error::Parse {
                line: 1,
                message: "empty file".into(),
            })
        }
    }
    let mut records = Vec::new();
    for (i, raw) in lines {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected 3 fields, got {}", fields.len()),
            });
        }
        let index: u32 = fields[0].trim().parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad index: {:?}", fields[0]),
        })?;
        if index == 0 {
            return Err(Error::Parse {
                line,
                message: "index must be >= 1".into(),
            });
        }
        if let Some(last) = records.last() {
            let last: &ZeroRecord = last;
            if index <= last.index {
                return Err(Error::Parse {
                    line,
                    message: format!("indices must be strictly increasing, got {index}"),
                });
            }
        }
        let ordinate = validate_ordinate(fields[1], line)?;
        check_monotone(&records, ordinate, line)?;
        let expected_u = match fields[2].trim() {
            "" => None,
            s => Some(s.parse().map_err(|_| Error::Parse {
                line,
                message: format!("bad expected_u: {s:?}"),
            })?),
        };
        records.push(ZeroRecord {
            index,
            ordinate_text: fields[1].trim().to_string(),
            ordinate,
            expected_u,
        });
    }
    Ok(records)
}

/// Renders records in the csv layout, LF line endings.
pub fn to_csv(records: &[ZeroRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.index.to_string());
        out.push(',');
        out.push_str(&r.ordinate_text);
        out.push(',');
        if let Some(u) = r.expected_u {
            out.push_str(&u.to_string());
        }
        out.push('\n');
    }
    out
}

/// Renders records in the plain layout, LF line endings.
pub fn to_plain(records: &[ZeroRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.ordinate_text);
        out.push('\n');
    }
    out
}
