//! Command-line front end for `kgt-core` plus the built-in verification suite.

pub mod app;
pub mod json;
pub mod oracle;
pub mod suite;
