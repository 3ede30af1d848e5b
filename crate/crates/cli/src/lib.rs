//! Expression language of the `coxring` command line.

pub mod expr;
