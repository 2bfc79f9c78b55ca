//! Errors carrying their process exit code.

use std::fmt;

use cremona_core::AlgebraError;

/// Exit codes of `cremona-lab`.
pub mod code {
    pub const OK: i32 = 0;
    /// A verify criterion failed, a scan lost more than 10% of its samples,
    /// an analysis was internally inconsistent, or an I/O error occurred.
    pub const FAILURE: i32 = 1;
    /// A constructor could not produce a map.
    pub const CONSTRUCT: i32 = 2;
    /// The analysed map is not birational.
    pub const NOT_BIRATIONAL: i32 = 3;
    /// A computation hit its budget.
    pub const BUDGET: i32 = 4;
    /// The input document does not parse.
    pub const PARSE: i32 = 5;
    /// A deformation path missed an expected endpoint.
    pub const ENDPOINT: i32 = 6;
    /// Bad command-line usage.
    pub const USAGE: i32 = 64;
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(code::USAGE, message)
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(code::PARSE, message)
    }

    pub fn io(what: &str, e: std::io::Error) -> Self {
        Self::new(code::FAILURE, format!("{what}: {e}"))
    }

    /// Budget stops keep their own code; anything else gets `fallback`.
    pub fn algebra(fallback: i32, context: &str, e: AlgebraError) -> Self {
        let code = if matches!(e, AlgebraError::Budget(_)) { code::BUDGET } else { fallback };
        Self::new(code, format!("{context}: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub type CliResult<T> = Result<T, CliError>;
