//! Exact computer algebra for twisted de Rham cohomology with a deformation
//! parameter.
//!
//! Everything here works over the rationals with no floating point anywhere:
//! sparse multivariate polynomials and differential forms ([`polyalg`]),
//! Gröbner bases and Milnor algebras ([`groebner`]), degree-truncated matrix
//! models of the twisted complex `(Ω•[u], u·d + df∧)` ([`twisted_derham`]),
//! Smith normal form over `Q[u]` ([`cu_linalg`]), the Brieskorn lattice with
//! its `u²∂_u` connection and residue pairing ([`brieskorn`]), and independent
//! combinatorial predictions ([`oracles`]).
//!
//! The crate is `no_std` with `alloc`; all values are immutable after
//! construction and every operation is a pure function, so sharing across
//! threads only needs the usual `Send + Sync` bounds.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod brieskorn;
pub mod cu_linalg;
pub mod groebner;
pub mod linalg;
pub mod oracles;
pub mod polyalg;
pub mod twisted_derham;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand for the exact scalar type used throughout the crate.
pub type Rat = BigRational;

/// `p/q` as an exact rational, panicking on a zero denominator.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// An integer as an exact rational.
pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}
