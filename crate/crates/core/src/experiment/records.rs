use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::metrics::IterationRecord;

pub const RECORD_HEADER: [&str; 7] = [
    "iteration",
    "covered_R",
    "covered_P_next",
    "pareto_individuals_R",
    "pareto_individuals_P_next",
    "f1_size",
    "full_coverage",
];

pub const AGGREGATE_HEADER: [&str; 5] = [
    "iteration",
    "replicates",
    "median_covered_R",
    "median_covered_P_next",
    "median_f1_size",
];

fn writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

/// One row per record; integers in decimal, booleans as 0/1.
pub fn write_records<W: Write>(w: W, records: &[IterationRecord]) -> Result<()> {
    let mut out = writer(w);
    out.write_record(RECORD_HEADER)?;
    for r in records {
        out.write_record([
            r.iteration.to_string(),
            r.covered_r.to_string(),
            r.covered_p_next.to_string(),
            r.pareto_individuals_r.to_string(),
            r.pareto_individuals_p_next.to_string(),
            r.f1_size.to_string(),
            u8::from(r.full_coverage).to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(r: R) -> Result<Vec<IterationRecord>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(r);
    let header = reader.headers()?.clone();
    if header.iter().ne(RECORD_HEADER) {
        return Err(Error::MalformedRecords(format!(
            "expected header {:?}, found {:?}",
            RECORD_HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    reader
        .records()
        .enumerate()
        .map(|(row, rec)| {
            let rec = rec?;
            let field = |i: usize| -> Result<usize> {
                rec[i].parse().map_err(|_| {
                    Error::MalformedRecords(format!("row {}: bad {} value {:?}", row + 1, RECORD_HEADER[i], &rec[i]))
                })
            };
            let full_coverage = match &rec[6] {
                "0" => false,
                "1" => true,
                other => {
                    return Err(Error::MalformedRecords(format!(
                        "row {}: full_coverage must be 0 or 1, got {other:?}",
                        row + 1
                    )))
                }
            };
            Ok(IterationRecord {
                iteration: field(0)?,
                covered_r: field(1)?,
                covered_p_next: field(2)?,
                pareto_individuals_r: field(3)?,
                pareto_individuals_p_next: field(4)?,
                f1_size: field(5)?,
                full_coverage,
            })
        })
        .collect()
}

/// Median of `values`; the mean of the two middle values for even counts.
pub fn median(values: &mut [usize]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_unstable();
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid] as f64
    } else {
        (values[mid - 1] + values[mid]) as f64 / 2.0
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AggregateRow {
    pub iteration: usize,
    pub replicates: usize,
    pub median_covered_r: f64,
    pub median_covered_p_next: f64,
    pub median_f1_size: f64,
}

/// Per-iteration medians over all runs that reached that iteration.
pub fn aggregate_rows(runs: &[&[IterationRecord]]) -> Vec<AggregateRow> {
    let longest = runs.iter().map(|r| r.len()).max().unwrap_or(0);
    (0..longest)
        .map(|t| {
            let rows: Vec<&IterationRecord> = runs.iter().filter_map(|r| r.get(t)).collect();
            let column = |f: fn(&IterationRecord) -> usize| {
                let mut v: Vec<usize> = rows.iter().map(|r| f(r)).collect();
                median(&mut v).unwrap_or(0.0)
            };
            AggregateRow {
                iteration: t,
                replicates: rows.len(),
                median_covered_r: column(|r| r.covered_r),
                median_covered_p_next: column(|r| r.covered_p_next),
                median_f1_size: column(|r| r.f1_size),
            }
        })
        .collect()
}

pub fn write_aggregate<W: Write>(w: W, runs: &[&[IterationRecord]]) -> Result<()> {
    let mut out = writer(w);
    out.write_record(AGGREGATE_HEADER)?;
    for row in aggregate_rows(runs) {
        out.write_record([
            row.iteration.to_string(),
            row.replicates.to_string(),
            row.median_covered_r.to_string(),
            row.median_covered_p_next.to_string(),
            row.median_f1_size.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
