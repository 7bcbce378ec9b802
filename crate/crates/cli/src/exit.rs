use symtruss_core::Error;

pub const GROUP_AXIOM: u8 = 2;
pub const UNSUPPORTED: u8 = 3;
pub const PARSE: u8 = 4;
pub const MECHANISM: u8 = 5;
pub const MODEL: u8 = 6;

/// Error message plus process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::CrossTermsUnsupported | Error::NotQuadratic => UNSUPPORTED,
            Error::Mechanism => MECHANISM,
            Error::Model(_) | Error::MergeConflict { .. } => MODEL,
            Error::NotIsometry => GROUP_AXIOM,
            Error::Parse { .. }
            | Error::Degree { .. }
            | Error::ModelFormat { .. }
            | Error::NonFinite(_)
            | Error::InvalidGeometry(_)
            | Error::InvalidOrder { .. }
            | Error::DimensionMismatch { .. }
            | Error::SingularMatrix { .. }
            | Error::NoSamples => PARSE,
        };
        Self::new(code, e.to_string())
    }
}
