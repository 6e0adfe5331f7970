//! Deterministic report documents.
//!
//! Reports are JSON text rendered by hand so the bytes are reproducible:
//! keys keep their insertion order (callers insert in a fixed order or
//! from sorted maps), and every float is printed with exactly six decimal
//! places. Two identical runs therefore produce identical files.

use std::fmt::Write as _;
use std::path::Path;

/// A JSON-shaped value with ordered object keys.
#[derive(Clone, Debug, PartialEq)]
pub enum ReportValue {
    Bool(bool),
    Int(i64),
    UInt(u64),
    Num(f64),
    Str(String),
    List(Vec<ReportValue>),
    Map(Vec<(String, ReportValue)>),
}

impl ReportValue {
    pub fn map() -> ReportValue {
        ReportValue::Map(Vec::new())
    }

    /// Appends a field; only valid on `Map` values.
    pub fn field(mut self, key: impl Into<String>, value: impl Into<ReportValue>) -> ReportValue {
        match &mut self {
            ReportValue::Map(entries) => entries.push((key.into(), value.into())),
            _ => panic!("field() on a non-map report value"),
        }
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out.push('\n');
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        match self {
            ReportValue::Bool(b) => {
                let _ = write!(out, "{b}");
            }
            ReportValue::Int(i) => {
                let _ = write!(out, "{i}");
            }
            ReportValue::UInt(u) => {
                let _ = write!(out, "{u}");
            }
            ReportValue::Num(n) => {
                assert!(n.is_finite(), "reports only carry finite numbers");
                let _ = write!(out, "{n:.6}");
            }
            ReportValue::Str(s) => write_json_string(out, s),
            ReportValue::List(items) => {
                if items.is_empty() {
                    out.push_str("[]");
                    return;
                }
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    pad(out, indent + 1);
                    item.write(out, indent + 1);
                }
                out.push('\n');
                pad(out, indent);
                out.push(']');
            }
            ReportValue::Map(entries) => {
                if entries.is_empty() {
                    out.push_str("{}");
                    return;
                }
                out.push('{');
                for (i, (key, value)) in entries.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('\n');
                    pad(out, indent + 1);
                    write_json_string(out, key);
                    out.push_str(": ");
                    value.write(out, indent + 1);
                }
                out.push('\n');
                pad(out, indent);
                out.push('}');
            }
        }
    }
}

fn pad(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

fn write_json_string(out: &mut String, s: &str) {
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

impl From<bool> for ReportValue {
    fn from(v: bool) -> Self {
        ReportValue::Bool(v)
    }
}

impl From<i64> for ReportValue {
    fn from(v: i64) -> Self {
        ReportValue::Int(v)
    }
}

impl From<u64> for ReportValue {
    fn from(v: u64) -> Self {
        ReportValue::UInt(v)
    }
}

impl From<usize> for ReportValue {
    fn from(v: usize) -> Self {
        ReportValue::UInt(v as u64)
    }
}

impl From<f64> for ReportValue {
    fn from(v: f64) -> Self {
        ReportValue::Num(v)
    }
}

impl From<&str> for ReportValue {
    fn from(v: &str) -> Self {
        ReportValue::Str(v.to_string())
    }
}

impl From<String> for ReportValue {
    fn from(v: String) -> Self {
        ReportValue::Str(v)
    }
}

impl From<Vec<ReportValue>> for ReportValue {
    fn from(v: Vec<ReportValue>) -> Self {
        ReportValue::List(v)
    }
}

/// Writes via a temp file and rename, so readers never observe a partial
/// report.
pub fn write_report(value: &ReportValue, path: &Path) -> std::io::Result<()> {
    super::write_atomic(path, value.render().as_bytes())
}
