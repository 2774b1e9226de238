//! Library backing the `catzeta` binary: category file parsing, corpus
//! generation, report documents, and command implementations.

pub mod commands;
pub mod corpus;
pub mod format;
pub mod report;
