//! Library side of the `tricomm` command: table rendering and the
//! verification suites.

pub mod render;
pub mod suites;
