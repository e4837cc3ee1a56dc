//! Exact scalar and polynomial arithmetic plus sign certificates.

mod poly;
mod quadratic;
mod ratfun;
mod rational;
mod sign;

pub use poly::{product, Polynomial};
pub use quadratic::{in_quadratic_root_interval, Membership, Quadratic, Root, RootPosition};
pub use ratfun::RationalFunction;
pub use rational::{rational_cmp, Rational};
pub use sign::{
    eventual_sign_bound, sign_for_all_n_geq, Justification, Sign, SignCertificate, SignVerdict, Strictness,
    MAX_SCAN,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("root bound too large to scan")]
    BoundTooLarge,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
