//! Exact characters of cyclotomic Hecke algebras `H_{m,n}(q,Q)` and of `G(m,1,n)`.
//!
//! Two routes are implemented and cross-checked: tableau weights transported
//! through an RSK superinsertion ([`rsk`]), and expansion of the deformed power
//! sums `q_mu` in the supersymmetric Schur basis ([`characters::char_oracle`]).

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod exactalg;
pub mod rsk;
pub mod sequences;
pub mod superfunctions;

pub use combinatorics::{
    Cell, HookParams, HookTableau, Multipartition, Parity, Partition, StandardTableau, Symbol,
};
pub use error::{Error, Result};
pub use exactalg::{BigRational, CycPoly, Cyclotomic, MPoly};

/// Library version, part of every cache key.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
