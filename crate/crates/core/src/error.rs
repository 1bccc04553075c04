//! Error types, one enum per layer.

use thiserror::Error;

/// Errors from the polynomial ring and the fraction layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("not divisible by {form}")]
    NotDivisible { form: String },
    /// A localization sum left a residual denominator. This signals wrong
    /// input data, e.g. a missing fixed point.
    #[error("sum is not a polynomial{}: residual denominator {residual}", match degree { Some(d) => format!(" in degree {d}"), None => String::new() })]
    NotPolynomial {
        degree: Option<usize>,
        residual: String,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Errors from the symmetric-function layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmError {
    #[error("partition of length {len} does not fit alphabet of size {alphabet}")]
    PartitionTooLong { len: usize, alphabet: usize },
    #[error("polynomial is not symmetric in the given alphabet{}", if *group > 0 { format!(" (group {group})") } else { String::new() })]
    NotSymmetric { group: usize },
    #[error("polynomial involves variables outside the given alphabets")]
    SupportOutsideAlphabet,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Errors from fixed-point geometry and integration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassError {
    #[error("invalid Grassmannian sizes: m={m}, n={n}")]
    BadSizes { m: usize, n: usize },
    #[error("invalid fixed point {0}")]
    BadPoint(String),
    #[error("class table is missing fixed point {0}")]
    MissingPoint(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Symm(#[from] SymmError),
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Errors from the Chern-class layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsmError {
    /// The congruence system (or the localization sum) admits no solution.
    #[error("inconsistent class data in degree {degree}: {detail}")]
    Inconsistent { degree: usize, detail: String },
    /// A degree below the top admits several solutions. For a well-formed
    /// GKM graph this cannot happen and indicates a bug in the input graph.
    #[error("underdetermined congruence system in degree {degree}")]
    Underdetermined { degree: usize },
    #[error("no class supplied for fixed point {0}")]
    MissingClass(String),
    #[error("missing local class template f_{0}")]
    MissingLevel(usize),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Grass(#[from] GrassError),
    #[error(transparent)]
    Symm(#[from] SymmError),
}

/// Errors from the tree-basis layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PositivityError {
    #[error("edge list is not a spanning tree: {0}")]
    NotATree(String),
    #[error("polynomial is not translation invariant")]
    NotTranslationInvariant,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
