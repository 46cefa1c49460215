//! File formats, update streams, random graphs and the subcommands of the
//! `incbc` binary.

pub mod commands;
pub mod format;
pub mod gen;
pub mod stream;

pub use commands::{bc_digest, bc_lines, run_static, run_stats, run_stream, Algo, CliError, StreamOptions};
pub use format::{parse_graph, write_graph, ParseError, ParseErrorKind};
pub use gen::{generate, GenError, GenParams, Model};
pub use stream::{parse_stream, Event, StepReport, StreamError, StreamRunner, VERIFY_TOLERANCE};
