//! File formats, reports and the `evolalg` command line.

pub mod app;
pub mod document;
pub mod dot;
pub mod report;

pub use app::run;
pub use document::{emit_document, parse_document, DocumentError};
pub use dot::export_dot;
pub use report::ReportDocument;
