//! Library surface backing the `lglab` binary: job execution, report
//! structures, and the corpus runner.

pub mod corpus;
pub mod jobs;
pub mod report;
