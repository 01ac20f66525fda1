//! Exact cohomology of finite-dimensional Lie superalgebras with trivial
//! coefficients.
//!
//! Cochains live in the super-exterior algebra of the dual space, where even
//! generators anticommute and odd generators commute, so odd powers survive.
//! Betti numbers are computed from exact ranks of the coboundary matrices,
//! and for the two Heisenberg families they are also available in closed
//! form, so the two routes can be checked against each other.

pub mod algebra;
pub mod cohomology;
pub mod differential;
pub mod error;
pub mod formulas;
pub mod io;
pub mod linalg;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod superexterior;
pub mod verify;

pub use algebra::{Generator, LieSuperalgebra, Parity, ValidationReport, Violation};
pub use cohomology::{betti_table, cohomology_dims, CohomologyReport, Limits, Method};
pub use differential::{d_element, d_generator, differential_matrix, psi_matrix, tau, DifferentialMatrix};
pub use error::{Error, Result};
pub use linalg::{kernel_dim, rank, RationalMatrix};
pub use superexterior::{
    dual_pairing, enumerate_basis, graded_dim, wedge, SuperElement, SuperMonomial, SuperSpaceDims,
};

/// Exact rational scalar used everywhere in the engine.
pub type Rational = num_rational::BigRational;
