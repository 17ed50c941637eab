//! Exact arithmetic: integer polynomials in `q, v`, their fraction field and
//! Laurent polynomials over it.

mod coeff;
mod intpoly;
mod laurent;

pub use coeff::{CoeffField, ScalarSpec};
pub use intpoly::IntPoly2;
pub use laurent::{sum_coeffs, Exponent, LaurentPoly, Parity, VarImage};
