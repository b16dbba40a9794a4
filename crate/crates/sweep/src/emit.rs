use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::run::{Cell, SweepTable};

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("no rows to emit")]
    Empty,
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected csv or json)")),
        }
    }
}

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `%.12g`: fixed notation for exponents in `[-5, 12)`, scientific
/// otherwise, trailing zeros removed.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!(
            "{}e{sign}{:02}",
            trim_zeros(mantissa.to_string()),
            exp.abs()
        )
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn csv_field(cell: &Cell) -> String {
    match cell {
        Cell::Number(x) => format_number(*x),
        Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
        Cell::Empty => String::new(),
    }
}

pub fn to_csv(table: &SweepTable) -> String {
    let mut out = table.columns.join(",");
    out.push('\n');
    for row in &table.rows {
        let fields: Vec<String> = row.cells.iter().map(csv_field).collect();
        let _ = writeln!(out, "{}", fields.join(","));
    }
    out
}

fn json_value(cell: &Cell) -> Value {
    match cell {
        // Non-finite numbers have no JSON form and become null.
        Cell::Number(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Empty => Value::Null,
    }
}

/// Array of flat objects keyed by column name, numbers at full precision.
pub fn to_json(table: &SweepTable) -> String {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let obj: Map<String, Value> = table
                .columns
                .iter()
                .cloned()
                .zip(row.cells.iter().map(json_value))
                .collect();
            Value::Object(obj)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(rows)).expect("serializable");
    s.push('\n');
    s
}

pub fn render(table: &SweepTable, format: Format) -> Result<String, EmitError> {
    if table.rows.is_empty() {
        return Err(EmitError::Empty);
    }
    Ok(match format {
        Format::Csv => to_csv(table),
        Format::Json => to_json(table),
    })
}

pub fn emit(table: &SweepTable, format: Format, destination: &Path) -> Result<(), EmitError> {
    let text = render(table, format)?;
    std::fs::write(destination, text).map_err(|source| EmitError::Io {
        path: destination.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(-2.5), "-2.5");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(2.0f64.sqrt() * 1e3), "1414.21356237");
        assert_eq!(format_number(1e-3), "0.001");
        assert_eq!(format_number(1.234e-7), "1.234e-07");
        assert_eq!(format_number(6.02214076e23), "6.02214076e+23");
        assert_eq!(format_number(123456789012.0), "123456789012");
        assert_eq!(format_number(1234567890123.0), "1.23456789012e+12");
        assert_eq!(format_number(0.999999999999999), "1");
        assert_eq!(format_number(f64::INFINITY), "inf");
    }
}
