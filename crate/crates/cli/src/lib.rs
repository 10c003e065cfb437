//! Library side of the `chebdyn` command: argument types, the matrix file
//! codec, command execution and output rendering.

pub mod args;
pub mod commands;
pub mod error;
pub mod matrix_file;
pub mod render;

pub use args::{Cli, Command, Source};
pub use commands::run;
pub use error::CliError;
pub use matrix_file::{matrix_from_value, matrix_to_value, parse_matrix_file, write_matrix_file, ParseError};
pub use render::{flatten, Envelope, Format};
