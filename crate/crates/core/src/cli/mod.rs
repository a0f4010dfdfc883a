//! Document format, command-line driver and Graphviz output.

mod commands;
mod document;
mod dot;

pub use commands::{run, Cli, FAIL, PASS, RESOURCE, USAGE};
pub use document::{parse_document, parse_document_with, render_document, DocumentError, WorkbenchDocument, FORMAT_VERSION};
pub use dot::{algebra_dot, frame_dot, order_dot};
