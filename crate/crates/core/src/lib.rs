//! Exact computation of type GL_n Macdonald polynomials.
//!
//! The crate provides exact arithmetic over `Q(q, t^{1/2})`, the polynomial
//! representation of the double affine Hecke algebra, the nonsymmetric
//! polynomials `E_mu`, the symmetric `P_lambda` and antisymmetric
//! `A_{lambda+rho}`, closed-form evaluations through c-functions, and the
//! scalar product at `t = q^k`.

pub mod algebra;
pub mod cache;
pub mod cfunction;
pub mod cli;
pub mod error;
pub mod inner;
pub mod json;
pub mod macdonald;
pub mod ops;
pub mod verify;
pub mod weyl;

pub use algebra::{CoeffField, IntPoly2, LaurentPoly, ScalarSpec, VarImage};
pub use error::{Error, Result};
