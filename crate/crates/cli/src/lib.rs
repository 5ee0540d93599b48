//! Script language and runner for the `syzygy` command.

pub mod error;
pub mod render;
pub mod run;
pub mod script;

pub use error::{CliError, Result};
pub use render::papersuite_scripts;
pub use run::{run, Options, EXIT_CHECKS_FAILED, EXIT_ERROR, EXIT_OK};
pub use script::{parse_script, Script};
