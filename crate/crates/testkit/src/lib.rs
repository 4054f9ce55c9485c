//! Shared fixtures for the ialex test suites.

pub mod gen;
pub mod oracle;
