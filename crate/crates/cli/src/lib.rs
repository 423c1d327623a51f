//! Command-line front end for `biderlab-core`: JSON file formats, reports
//! and the `biderlab` commands.
//!
//! [`run`] executes one invocation in process and returns the exit code with
//! the captured output, which is what the binary and the tests both use.

mod commands;
pub mod document;
mod error;
mod render;

pub use commands::{run, Outcome, VERSION};
pub use error::InputError;
