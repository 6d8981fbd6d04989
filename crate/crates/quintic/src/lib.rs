//! Exact q-series engine for the level-5 quintic theta functions `A, B, C, D`.
//!
//! Coefficients live in the cyclotomic field `Q(zeta_20)` ([`exactfield`]);
//! series are truncated expansions in `q^(1/D)` with an explicitly unknown
//! tail ([`qseries`]). On top of these sit the standard products, the quintic
//! functions, Eisenstein series of level 1 and 5, the pentamidiation
//! matrices and the verification registry, partition dissections,
//! differential systems, and complex evaluation.

pub mod dynamics;
pub mod eisenstein;
pub mod exactfield;
pub mod identities;
pub mod numeric;
pub mod partitions;
pub mod pentops;
pub mod products;
pub mod qseries;
pub mod quintic;
pub mod registry;
pub mod report;
pub mod tables;

pub use exactfield::{field_constant, nth_root_in_field, FieldElement, Rational};
pub use qseries::{Comparison, QSeries};
pub use report::IdentityReport;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("phase not representable in Q(zeta_20): {0}")]
    Phase(String),
    #[error("leading coefficient is zero or unknown")]
    ZeroLeading,
    #[error("no {n}-th root of the leading coefficient {coeff} in the field")]
    NoRoot { n: u32, coeff: String },
    #[error("valuation {val}/{grid} is not divisible by {n} on the grid")]
    Valuation { val: i64, grid: i64, n: i64 },
    #[error("operation requires an integer grid, found grid {0}")]
    FractionalGrid(i64),
    #[error("insufficient precision: need exponents below {needed}, known below {known}")]
    Precision { needed: String, known: String },
    #[error("formally divergent: {0}")]
    Divergent(String),
    #[error("parity condition chi(-1) = (-1)^k fails for k = {k}, {chi}")]
    Parity { k: u32, chi: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("constants cross-check failed: {0}")]
    Constants(String),
}

pub type Result<T> = std::result::Result<T, Error>;
