//! Pass/fail rows produced by the verification checks.

use std::fmt;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

/// A computed or reference value: exact integer or floating point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Integer(i64),
    Real(f64),
}

impl Quantity {
    pub fn as_f64(self) -> f64 {
        match self {
            Quantity::Integer(v) => v as f64,
            Quantity::Real(v) => v,
        }
    }
}

impl From<i64> for Quantity {
    fn from(v: i64) -> Self {
        Quantity::Integer(v)
    }
}

impl From<f64> for Quantity {
    fn from(v: f64) -> Self {
        Quantity::Real(v)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Integer(v) => write!(f, "{v}"),
            Quantity::Real(v) => write!(f, "{}", format_real(*v)),
        }
    }
}

/// 17 significant digits, scientific notation, `.` decimal separator.
pub fn format_real(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

/// One verification outcome. `passed` is always `residual <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    check_name: String,
    computed: Quantity,
    reference: Quantity,
    residual: f64,
    tolerance: f64,
    passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    detail: String,
}

pub const CSV_HEADER: &str = "check_name,computed,reference,residual,tolerance,passed,detail";

impl VerificationReport {
    pub fn new(
        check_name: impl Into<String>,
        computed: impl Into<Quantity>,
        reference: impl Into<Quantity>,
        residual: f64,
        tolerance: f64,
    ) -> Self {
        Self {
            check_name: check_name.into(),
            computed: computed.into(),
            reference: reference.into(),
            residual,
            tolerance,
            passed: residual <= tolerance,
            detail: String::new(),
        }
    }

    /// Absolute-difference check between two reals.
    pub fn absolute(name: impl Into<String>, computed: f64, reference: f64, tolerance: f64) -> Self {
        Self::new(name, computed, reference, (computed - reference).abs(), tolerance)
    }

    /// Exact integer comparison; the tolerance is zero.
    pub fn exact(name: impl Into<String>, computed: i64, reference: i64) -> Self {
        Self::new(name, computed, reference, computed.abs_diff(reference) as f64, 0.0)
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Multiplies the tolerance by `scale` and re-judges the row.
    pub fn scale_tolerance(mut self, scale: f64) -> Self {
        self.tolerance *= scale;
        self.passed = self.residual <= self.tolerance;
        self
    }

    pub fn check_name(&self) -> &str {
        &self.check_name
    }

    pub fn computed(&self) -> Quantity {
        self.computed
    }

    pub fn reference(&self) -> Quantity {
        self.reference
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn detail(&self) -> &str {
        &self.detail
    }

    pub fn to_csv_row(&self) -> String {
        [
            csv_field(&self.check_name),
            self.computed.to_string(),
            self.reference.to_string(),
            format_real(self.residual),
            format_real(self.tolerance),
            self.passed.to_string(),
            csv_field(&self.detail),
        ]
        .join(",")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Writes a header row followed by one row per report.
pub fn write_csv<W: Write>(mut w: W, reports: &[VerificationReport]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in reports {
        writeln!(w, "{}", r.to_csv_row())?;
    }
    Ok(())
}

/// Writes the reports as one JSON array.
pub fn write_json<W: Write>(mut w: W, reports: &[VerificationReport]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, reports)?;
    writeln!(w)
}
