//! IO companion to `patience-core`: JSON/SVG formats, parallel exhaustive
//! sweeps over symmetric groups, independent brute-force oracles, the
//! named verification suites, and the command-line front end.

pub mod cli;
pub mod formats;
pub mod oracle;
pub mod sweep;
pub mod verify;
