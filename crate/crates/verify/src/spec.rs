//! Parser for function specifications such as `a1=1, b3=-0.5`.
//!
//! Each term is `a<n>=<value>` (coefficient of `cos(nx)`) or `b<n>=<value>`
//! (coefficient of `sin(nx)`), `n ≥ 1`. Terms are separated by commas or
//! whitespace; repeated terms add up.

use hilbert_strip::FourierSeries64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

const MAX_HARMONIC: usize = 4096;

pub fn parse_function(spec: &str) -> Result<FourierSeries64, ParseError> {
    let mut series = FourierSeries64::zero();
    let mut seen = 0;
    for term in spec.split(|c: char| c == ',' || c.is_whitespace()) {
        if term.is_empty() {
            continue;
        }
        let (lhs, rhs) = term
            .split_once('=')
            .ok_or_else(|| ParseError(format!("term {term:?} is missing '='")))?;
        let mut chars = lhs.chars();
        let kind = chars.next();
        let index = chars.as_str();
        let n: usize = index
            .parse()
            .map_err(|_| ParseError(format!("bad harmonic index in {term:?}")))?;
        if n == 0 || n > MAX_HARMONIC {
            return Err(ParseError(format!(
                "harmonic in {term:?} must lie in 1..={MAX_HARMONIC}"
            )));
        }
        let value: f64 = rhs
            .parse()
            .map_err(|_| ParseError(format!("bad coefficient in {term:?}")))?;
        if !value.is_finite() {
            return Err(ParseError(format!("non-finite coefficient in {term:?}")));
        }
        series = match kind {
            Some('a') => series.with_cos(n, value),
            Some('b') => series.with_sin(n, value),
            _ => {
                return Err(ParseError(format!(
                    "unknown term prefix in {term:?}; expected 'a' or 'b'"
                )))
            }
        };
        seen += 1;
    }
    if seen == 0 {
        return Err(ParseError("function specification is empty".into()));
    }
    Ok(series)
}
