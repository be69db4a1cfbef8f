//! Exact construction of cyclotomic polynomials and the monic divisors of
//! `x^n - 1`, with coefficient-set analytics and closed-form predictions for
//! the 64 divisors of `x^{p^2 q} - 1`.

pub mod analysis;
pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod lattice;
pub mod polyring;

pub use cyclotomic::{phi, psi, FactoredIndex};
pub use error::{Error, Result};
pub use polyring::{CoeffSet, IntPoly};
