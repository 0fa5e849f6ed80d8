//! Library half of the `artin-braids` command: the verification suite and
//! the mapping from library errors to process exit codes.

pub mod verify;

use artin_braids::Error;

/// JSON schema for [`verify::VerificationReport`].
pub const REPORT_SCHEMA: &str = include_str!("../report.schema.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RANK: i32 = 3;
pub const EXIT_MISSING: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::RankMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::StrandMismatch { .. }
        | Error::BraidIndexOutOfRange { .. }
        | Error::EmbedDown { .. } => EXIT_RANK,
        Error::MissingOmega(_) => EXIT_MISSING,
        Error::NonCommuting { .. } => EXIT_CHECK_FAILED,
        Error::Parse(_)
        | Error::Shape(_)
        | Error::InvalidPureGenerator { .. }
        | Error::TooFewStrands { .. }
        | Error::NotPure => EXIT_PARSE,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_classes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_PARSE);
        assert_eq!(
            exit_code(&Error::RankMismatch { left: 2, right: 3 }),
            EXIT_RANK
        );
        assert_eq!(exit_code(&Error::MissingOmega("z".into())), EXIT_MISSING);
        assert_eq!(
            exit_code(&Error::NonCommuting { index: 0 }),
            EXIT_CHECK_FAILED
        );
        assert_ne!(EXIT_OK, EXIT_CHECK_FAILED);
    }
}
