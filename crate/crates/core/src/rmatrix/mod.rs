//! Bivector and trivector calculus: Schouten brackets, CYBE classification,
//! the momentum/Lorentz decomposition conditions, subordination, type
//! recognition and reality checks.

mod bivector;
mod checks;
mod trivector;

pub use bivector::Bivector;
pub use checks::{
    check_decomposition_conditions, cybe_classify, decompose_abc, is_abelian_type,
    is_subordinated, star_reality_check, verify_jordanian_data, ConditionReport, CybeKind,
    CybeVerdict, Decomposition, JordanianData, JordanianReport, Lifting,
};
pub use trivector::{schouten, Trivector};
