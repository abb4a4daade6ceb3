//! Tables rendered as CSV with `#` comment headers or as JSON arrays of objects.

use std::io::Write;

use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const DEFAULT_PRECISION: usize = 12;
pub const MAX_PRECISION: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Exact(Rational),
    Real(f64),
    Bool(bool),
    Text(String),
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(i128::from(v))
    }
}

impl From<Rational> for Cell {
    fn from(v: Rational) -> Self {
        Cell::Exact(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// Round to `digits` significant digits, then print the shortest form of the result.
pub fn format_real(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let digits = digits.clamp(1, MAX_PRECISION);
    let rounded: f64 = format!("{:.*e}", digits - 1, v).parse().unwrap_or(v);
    rounded.to_string()
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub comments: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            comments: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn text(cell: &Cell, precision: usize) -> String {
        match cell {
            Cell::Int(v) => v.to_string(),
            Cell::Exact(r) => r.to_string(),
            Cell::Real(v) => format_real(*v, precision),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(cell: &Cell, precision: usize) -> Value {
        match cell {
            Cell::Int(v) => i64::try_from(*v)
                .map(Value::from)
                .unwrap_or_else(|_| Value::String(v.to_string())),
            Cell::Exact(r) => Value::String(r.to_string()),
            Cell::Real(v) => {
                let s = format_real(*v, precision);
                s.parse::<f64>()
                    .ok()
                    .and_then(Number::from_f64)
                    .map(Value::Number)
                    .unwrap_or(Value::String(s))
            }
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }

    pub fn write<W: Write + ?Sized>(
        &self,
        out: &mut W,
        format: Format,
        precision: usize,
    ) -> Result<()> {
        let err = |e: &dyn std::fmt::Display| Error::Output(e.to_string());
        match format {
            Format::Csv => {
                for c in &self.comments {
                    writeln!(out, "# {c}").map_err(|e| err(&e))?;
                }
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns).map_err(|e| err(&e))?;
                for row in &self.rows {
                    w.write_record(row.iter().map(|c| Self::text(c, precision)))
                        .map_err(|e| err(&e))?;
                }
                w.flush().map_err(|e| err(&e))?;
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .columns
                            .iter()
                            .cloned()
                            .zip(row.iter().map(|c| Self::json(c, precision)))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &rows).map_err(|e| err(&e))?;
                writeln!(out).map_err(|e| err(&e))?;
            }
        }
        Ok(())
    }

    pub fn render(&self, format: Format, precision: usize) -> Result<String> {
        let mut buf = Vec::new();
        self.write(&mut buf, format, precision)?;
        String::from_utf8(buf).map_err(|e| Error::Output(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn sample() -> Table {
        let mut t = Table::new(&["k", "x", "value", "mode"]);
        t.comment("sample");
        t.push(vec![
            3u64.into(),
            frac(2, 35).into(),
            (1.0f64 / 3.0).into(),
            "(1,1)".into(),
        ]);
        t
    }

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(8.0, 12), "8");
        assert_eq!(format_real(1.0 / 3.0, 4), "0.3333");
        assert_eq!(format_real(0.1 + 0.2, 30), "0.30000000000000004");
        assert_eq!(format_real(-1.5, 12), "-1.5");
        assert_eq!(format_real(6.02e23, 3), "602000000000000000000000");
    }

    #[test]
    fn csv_round_trip() {
        let text = sample().render(Format::Csv, 17).unwrap();
        assert!(text.starts_with("# sample\n"));
        let body: String = text
            .lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n");
        let mut rdr = csv::Reader::from_reader(body.as_bytes());
        let rec = rdr.records().next().unwrap().unwrap();
        assert_eq!(rec[1].parse::<Rational>().unwrap(), frac(2, 35));
        assert_eq!(rec[2].parse::<f64>().unwrap(), 1.0 / 3.0);
        assert_eq!(&rec[3], "(1,1)");
    }

    #[test]
    fn json_objects() {
        let text = sample().render(Format::Json, 12).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        let row = &v.as_array().unwrap()[0];
        assert_eq!(row["k"], Value::from(3));
        assert_eq!(row["x"], Value::from("2/35"));
        assert_eq!(row["value"].as_f64().unwrap(), 0.333333333333);
    }
}
