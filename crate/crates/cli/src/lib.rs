//! Command-line surface: period searches, condition systems, verification,
//! normalization and the reproduction checklist.

pub mod acceptance;
pub mod commands;
pub mod report;
pub mod search;
pub mod specfile;
