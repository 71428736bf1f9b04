//! Seeded replicate batches and their CSV logs.

mod batch;
mod records;

pub use batch::{run_batch, run_replicates, BatchReport, ExperimentBatch, ReplicateSummary};
pub use records::{
    aggregate_rows, median, read_records, write_aggregate, write_records, AggregateRow, AGGREGATE_HEADER, RECORD_HEADER,
};
