use std::fmt;

use crate::parse::ParseError;

/// A rejected input: what went wrong, which input it was and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub message: String,
    pub input: Option<String>,
    pub column: Option<usize>,
}

impl InputError {
    pub fn new(message: impl Into<String>) -> Self {
        InputError { message: message.into(), input: None, column: None }
    }

    pub fn parse(input: &str, err: ParseError) -> Self {
        InputError { message: err.message, input: Some(input.to_string()), column: Some(err.column) }
    }

    pub fn in_input(mut self, input: &str) -> Self {
        self.input.get_or_insert_with(|| input.to_string());
        self
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(input) = &self.input {
            write!(f, "{input}: ")?;
        }
        f.write_str(&self.message)?;
        if let Some(col) = self.column {
            write!(f, " (column {col})")?;
        }
        Ok(())
    }
}

impl std::error::Error for InputError {}

impl From<qforms_core::Error> for InputError {
    fn from(e: qforms_core::Error) -> Self {
        InputError::new(e.to_string())
    }
}
