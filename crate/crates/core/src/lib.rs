//! Exact equivariant localization calculus on projective spaces and
//! Grassmannians.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate. The layers are:
//!
//! * [`poly`] - sparse multivariate polynomials in the torus characters
//!   `t1..tN`, linear forms, exact trial division, and summation of
//!   fractions whose denominators are products of character differences.
//! * [`symm`] - partitions, Schur polynomials via the bialternant
//!   determinant, and expansion of (two-alphabet) symmetric polynomials in
//!   Schur bases.
//! * [`grass`] - torus-fixed-point geometry of `Grass_m(C^n)`: tangent
//!   weights, Euler classes, GKM graphs, Berline-Vergne integration, Gysin
//!   push-forwards and the iterated-residue evaluator.
//! * [`csm`] - local equivariant Chern classes of singular varieties:
//!   degree-zero anchors, inductive recovery from localization sums, GKM
//!   congruence solving, cone formulas, and the determinant-variety driver.
//! * [`positivity`] - spanning-tree difference bases and nonnegativity
//!   reports for class coefficients.

pub mod csm;
pub mod error;
pub mod grass;
pub mod poly;
pub mod positivity;
pub mod symm;

pub use error::{CsmError, GrassError, PolyError, PositivityError, SymmError};
pub use poly::{AffineForm, Coeff, FractionTerm, LinearForm, Monomial, MultiPoly};
pub use symm::Partition;

/// Big integers, re-exported for downstream crates.
pub use num_bigint::BigInt;
/// Exact rational scalars, re-exported for downstream crates.
pub use num_rational::BigRational;
