//! Library surface of the command-line tool: the class-expression parser,
//! shared with integration tests.

pub mod parse;

pub use parse::{parse_class, ParseError};
