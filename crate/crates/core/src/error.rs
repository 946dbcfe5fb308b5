use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by an identically zero scalar")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("non-polynomial specialization: {0}")]
    NonPolynomialSpecialization(String),

    #[error("no specialization given for parameter `{0}`")]
    MissingSpecialization(String),

    #[error("invalid specialization map: {0}")]
    InvalidSpecialization(String),

    #[error("cannot conjugate parameter `{0}` with unrestricted reality")]
    UnrestrictedConjugate(String),

    #[error("elements belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("algebra `{0}` has no star structure")]
    NoStar(String),

    #[error("algebra `{0}` is not the Poincare algebra")]
    NotPoincare(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("entry `{0}` has no twist")]
    NoTwist(String),

    #[error("factor `{factor}` has deformation valuation {valuation}, expected at least 1")]
    Valuation { factor: String, valuation: i64 },

    #[error("series argument has valuation 0 in `{0}`")]
    SeriesValuation(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
