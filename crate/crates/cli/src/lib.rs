//! Batch verification over the r-matrix catalog: per-entry checks, report
//! assembly and rendering. The `twistforge` binary is a thin front end.

pub mod checks;
pub mod report;

pub use checks::{run_check, run_checks, CheckKind, Settings};
pub use report::{CheckRecord, Report, Verdict};

use twistforge::Error;

/// Process exit code for a library error: 2 for unknown ids and other bad
/// input, 3 for specialization and valuation failures.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonPolynomialSpecialization(_)
        | Error::Valuation { .. }
        | Error::SeriesValuation(_)
        | Error::MissingSpecialization(_)
        | Error::InvalidSpecialization(_) => 3,
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let valuation = Error::Valuation { factor: "F'".into(), valuation: 0 };
        assert_eq!(exit_code(&valuation), 3);
        assert_eq!(exit_code(&Error::NonPolynomialSpecialization("beta/alpha^2".into())), 3);
        assert_eq!(exit_code(&Error::UnknownEntry("P22".into())), 2);
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
    }
}
