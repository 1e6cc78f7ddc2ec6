//! Exact symbolic toolkit for Hessian nilpotent polynomials.
//!
//! Everything is computed over the Gaussian rationals `ℚ(i)` with no
//! rounding anywhere:
//!
//! * [`poly`], [`field`], [`text`]: sparse multivariate polynomials, their
//!   coefficients and the canonical text format.
//! * [`diffop`]: `f(D) g`, Laplacian, gradient, Hessian and the apolar form.
//! * [`graded`]: graded pieces of homogeneous ideals, their apolar
//!   complements, polynomial solutions of constant-coefficient PDE systems
//!   and the common-zero saturation certificate.
//! * [`hn`]: HN testing, `Δ^m(f·P^m)` experiments, the symmetric map
//!   `F = z - ∇P` and the certificates built from the pieces above.
//! * [`families`]: corpus generators.

pub mod diffop;
pub mod error;
pub mod families;
pub mod field;
pub mod graded;
pub mod hn;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod text;

pub use error::{Error, Result};
pub use field::GaussianRational;
pub use matrix::PolyMatrix;
pub use poly::{Monomial, Polynomial};
pub use text::parse_polynomial;
