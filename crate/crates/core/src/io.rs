//! Reading and writing traces as CSV (`t,x1,…,xn`) or JSON
//! (`{"samples":[{"t":0.0,"x":[0.0]}, …]}`), and reading raw curves as CSV
//! (`x1,…,xn`) or JSON (`{"vertices":[[0.0,1.0], …]}`).

use std::fs::File;
use std::io::{BufReader, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{validate_trace, PolygonalCurve, SampledTrace};

#[derive(Serialize, Deserialize)]
struct JsonTrace {
    samples: Vec<JsonSample>,
}

#[derive(Serialize, Deserialize)]
struct JsonSample {
    t: f64,
    x: Vec<f64>,
}

#[derive(Deserialize)]
struct JsonCurve {
    vertices: Vec<Vec<f64>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Numeric CSV rows tagged with their 1-based line number.
type NumericRows = Vec<(usize, Vec<f64>)>;

/// Parses every record of a headed CSV file into numbers, returning the
/// header and the rows.
fn read_numeric_csv<R: Read>(reader: R) -> Result<(csv::StringRecord, NumericRows)> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| parse_err(1, e.to_string()))?.clone();
    let mut rows = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        let line = row + 2;
        let record = record.map_err(|e| {
            let line = e.position().map_or(line, |p| p.line() as usize);
            parse_err(line, e.to_string())
        })?;
        let fields = record
            .iter()
            .enumerate()
            .map(|(col, text)| {
                text.parse::<f64>().map_err(|_| {
                    parse_err(line, format!("field `{}`: cannot parse `{text}` as a number", &headers[col]))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        rows.push((line, fields));
    }
    Ok((headers, rows))
}

/// Parses a CSV trace with header `t,x1,…,xn`.
pub fn read_trace_csv<R: Read>(reader: R) -> Result<SampledTrace<f64>> {
    let (headers, rows) = read_numeric_csv(reader)?;
    if headers.len() < 2 || &headers[0] != "t" {
        return Err(parse_err(1, "header must be `t,x1,...,xn`"));
    }
    let raw = rows
        .into_iter()
        .map(|(_, mut fields)| {
            let x = fields.split_off(1);
            (fields[0], x)
        })
        .collect();
    validate_trace(raw)
}

/// Parses a CSV curve: a header naming the coordinates, then one vertex per
/// row. Every column is a coordinate.
pub fn read_curve_csv<R: Read>(reader: R) -> Result<PolygonalCurve<f64>> {
    let (_, rows) = read_numeric_csv(reader)?;
    PolygonalCurve::from_coords(rows.into_iter().map(|(_, fields)| fields).collect())
}

/// Parses a JSON curve `{"vertices":[[…], …]}`.
pub fn read_curve_json<R: Read>(reader: R) -> Result<PolygonalCurve<f64>> {
    let parsed: JsonCurve =
        serde_json::from_reader(reader).map_err(|e| parse_err(e.line(), e.to_string()))?;
    PolygonalCurve::from_coords(parsed.vertices)
}

/// Reads a curve file: JSON for a `.json` extension, CSV otherwise.
pub fn read_curve_path(path: &Path) -> Result<PolygonalCurve<f64>> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let reader = BufReader::new(file);
    if is_json(path) {
        read_curve_json(reader)
    } else {
        read_curve_csv(reader)
    }
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

/// Parses a JSON trace `{"samples":[{"t":…,"x":[…]}, …]}`.
pub fn read_trace_json<R: Read>(reader: R) -> Result<SampledTrace<f64>> {
    let parsed: JsonTrace =
        serde_json::from_reader(reader).map_err(|e| parse_err(e.line(), e.to_string()))?;
    validate_trace(parsed.samples.into_iter().map(|s| (s.t, s.x)).collect())
}

/// Reads a trace file: JSON for a `.json` extension, CSV otherwise.
pub fn read_trace_path(path: &Path) -> Result<SampledTrace<f64>> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let reader = BufReader::new(file);
    if is_json(path) {
        read_trace_json(reader)
    } else {
        read_trace_csv(reader)
    }
}

/// Writes a trace in the JSON format accepted by [`read_trace_json`].
pub fn write_trace_json<W: Write>(trace: &SampledTrace<f64>, writer: W) -> Result<()> {
    let doc = JsonTrace {
        samples: trace
            .samples()
            .iter()
            .map(|s| JsonSample { t: s.time, x: s.value.coords().to_vec() })
            .collect(),
    };
    serde_json::to_writer(writer, &doc).map_err(|e| Error::Io(e.to_string()))
}

/// Writes a trace in the CSV format accepted by [`read_trace_csv`].
pub fn write_trace_csv<W: Write>(trace: &SampledTrace<f64>, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut header = vec!["t".to_string()];
    header.extend((1..=trace.dim()).map(|k| format!("x{k}")));
    w.write_record(&header).map_err(io)?;
    for s in trace.samples() {
        let mut row = vec![s.time.to_string()];
        row.extend(s.value.coords().iter().map(f64::to_string));
        w.write_record(&row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Multiplies value coordinate `k` by `factors[k]` and time by the last
/// factor. `factors` must have `n + 1` strictly positive entries.
pub fn scale_trace(trace: &SampledTrace<f64>, factors: &[f64]) -> Result<SampledTrace<f64>> {
    let n = trace.dim();
    if factors.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, found: factors.len() });
    }
    if let Some(index) = factors.iter().position(|c| !(c.is_finite() && *c > 0.0)) {
        return Err(Error::NonFiniteValue { index });
    }
    let ct = factors[n];
    validate_trace(
        trace
            .samples()
            .iter()
            .map(|s| {
                let x = s.value.coords().iter().zip(factors).map(|(v, c)| v * c).collect();
                (s.time * ct, x)
            })
            .collect(),
    )
}

/// Multiplies coordinate `k` of every vertex by `factors[k]`. `factors`
/// must have one strictly positive entry per coordinate.
pub fn scale_curve(curve: &PolygonalCurve<f64>, factors: &[f64]) -> Result<PolygonalCurve<f64>> {
    if factors.len() != curve.dim() {
        return Err(Error::DimensionMismatch { expected: curve.dim(), found: factors.len() });
    }
    if let Some(index) = factors.iter().position(|c| !(c.is_finite() && *c > 0.0)) {
        return Err(Error::NonFiniteValue { index });
    }
    PolygonalCurve::from_coords(
        curve
            .vertices()
            .iter()
            .map(|v| v.coords().iter().zip(factors).map(|(x, c)| x * c).collect())
            .collect(),
    )
}
