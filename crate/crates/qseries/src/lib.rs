//! Exact-arithmetic engine for truncated q-series.
//!
//! Everything here is exact: series coefficients are arbitrary-precision
//! rationals, exponents are rationals with explicit denominators, truncation
//! orders are tracked through every operation, and no floating point is used
//! anywhere, so an equality verified to order `T` is a proof that the first
//! `T` worth of coefficients agree.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: truncated Puiseux series and their ring operations.
//! * [`functions`]: named builders (Euler products, Jacobi and Ramanujan
//!   theta functions, Rogers-Ramanujan functions, Borwein cubic thetas,
//!   eta quotients, Eisenstein P).
//! * [`identities`]: a registry of classical q-series identities, each stored
//!   as a pair of independent builders and checked coefficient by coefficient.
//! * [`lattices`]: exact enumeration of lattice theta series and their closed
//!   forms for the E8, D4 and hexagonal lattices with glue cosets.
//! * [`roots`]: exact root-system data for E8, E6, D4, F4, G2, the two
//!   orthogonal projections E8 -> E6 and E8 -> D4, and the diagram foldings
//!   onto F4 and G2.
//! * [`characters`]: string functions, graded dimensions of the five level-1
//!   modules in the E8 -> F4 + G2 branching, the branching verification, and
//!   Virasoro character presentations of the string functions.

// Matrix elimination and lattice walks index rows and columns directly, and
// verification tables pair small labeled tuples; iterator or alias rewrites
// would hide the arithmetic.
#![allow(clippy::needless_range_loop)]
#![allow(clippy::type_complexity)]

pub mod characters;
pub mod functions;
pub mod identities;
pub mod lattices;
pub mod roots;
pub mod series;

pub use series::{Coeff, Divergence, Exp, PuiseuxSeries, VerificationReport};

use thiserror::Error as ThisError;

/// Everything that can go wrong across the crate.
///
/// Precondition violations that indicate a caller bug (negative scale,
/// out-of-range reflection index) panic instead; these variants are the
/// recoverable, data-dependent failures.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    /// Inverting a series with no stored terms below its order.
    #[error("series has no known leading term; cannot invert")]
    ZeroLeadingTerm,
    /// A coefficient or comparison was requested beyond the known order.
    #[error("requested order {requested} exceeds the available order {available}")]
    InsufficientOrder { requested: Exp, available: Exp },
    /// A theta-style sum whose exponent does not grow (the series would
    /// have infinitely many terms below any order).
    #[error("theta sum diverges: exponent is not eventually increasing")]
    DivergentSpec,
    /// A named series asked for in a mode it has no formula for.
    #[error("function {0} has no {1} form")]
    UnsupportedMode(String, String),
    /// A quadratic form that is not positive definite.
    #[error("quadratic form is not positive definite")]
    IndefiniteForm,
    /// Mixing vectors from different algebras.
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    /// Asking a folding map for a vector outside the projection image.
    #[error("vector is not in the image of the projection")]
    NotInImage,
    /// Out-of-range Virasoro character parameters.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    /// A graded dimension came out with a fractional exponent; the module
    /// data would be inconsistent.
    #[error("graded dimension has fractional exponent {0}")]
    FractionalExponentLeak(Exp),
    /// An operation that is well-defined only on a subset of inputs.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
