//! Exact arithmetic: rational Laurent polynomials and cyclotomic numbers.

mod cyclotomic;
mod cycpoly;
mod mpoly;
mod parse;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use cycpoly::CycPoly;
pub use mpoly::{rat, MPoly, MPolyJson, Monomial, TermJson};
pub use num_rational::BigRational;
