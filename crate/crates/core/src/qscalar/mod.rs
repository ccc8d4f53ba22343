//! Exact scalar arithmetic: integer polynomials in `q`, reduced rational
//! functions in `q`, multivariate Laurent polynomials over them, and the
//! q-special functions built on top.

mod laurent;
mod qpoly;
mod qrat;
mod qseries;

pub use laurent::LaurentScalar;
pub use qpoly::QPoly;
pub use qrat::QRat;
pub use qseries::{
    chi, chi_prime, q2_binomial, q2_factorial, q_binomial, q_factorial, q_pochhammer,
    q_pochhammer_in_var,
};
