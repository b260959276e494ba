//! Benchmark rows and their CSV form.
//!
//! Header: `ProcessType,VertexCount,EdgeCount,DeletedEdges,DeletedVertices,Duration`.
//! Durations are seconds with six fractional digits and a dot separator.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize, Serializer};

pub const CSV_HEADER: &str =
    "ProcessType,VertexCount,EdgeCount,DeletedEdges,DeletedVertices,Duration";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    #[serde(rename = "ProcessType")]
    pub process_type: String,
    #[serde(rename = "VertexCount")]
    pub vertex_count: usize,
    #[serde(rename = "EdgeCount")]
    pub edge_count: usize,
    #[serde(rename = "DeletedEdges")]
    pub deleted_edges: usize,
    #[serde(rename = "DeletedVertices")]
    pub deleted_vertices: usize,
    /// Wall-clock seconds, rounded to microseconds so the CSV round-trips.
    #[serde(rename = "Duration", serialize_with = "six_digits")]
    pub duration: f64,
}

impl BenchRecord {
    pub fn round_duration(secs: f64) -> f64 {
        (secs * 1e6).round() / 1e6
    }
}

fn six_digits<S: Serializer>(secs: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{secs:.6}"))
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if records.is_empty() {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> csv::Result<Vec<BenchRecord>> {
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers()?.iter().collect::<Vec<_>>().join(",");
    if header != CSV_HEADER {
        return Err(csv::Error::from(std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            format!("unexpected header {header:?}"),
        )));
    }
    reader.deserialize().collect()
}

/// Fixed-width console table in the same column order as the CSV.
pub fn write_table<W: Write>(records: &[BenchRecord], mut out: W) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<24} {:>11} {:>11} {:>12} {:>15} {:>14}",
        "Process-Type", "VertexCount", "EdgeCount", "DeletedEdges", "DeletedVertices", "Duration"
    )?;
    for r in records {
        writeln!(
            out,
            "{:<24} {:>11} {:>11} {:>12} {:>15} {:>14.6}",
            r.process_type,
            r.vertex_count,
            r.edge_count,
            r.deleted_edges,
            r.deleted_vertices,
            r.duration
        )?;
    }
    Ok(())
}
