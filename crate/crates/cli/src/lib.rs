//! Front-end pieces of the `msetspace` command-line tool: the declaration
//! document reader/writer and the expression evaluator.  The binary wires
//! these to three subcommands — `render`, `eval`, and `audit` — while
//! everything mathematical lives in the `msetspace` library crate.

pub mod document;
pub mod expr;
