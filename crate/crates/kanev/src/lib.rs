//! Exact-arithmetic toolkit around the 27 lines on a cubic surface: the
//! `W(E6)` permutation combinatorics, the incidence correspondence and its
//! eigenspaces, monodromy data of maximally degenerate covers, toric ranks of
//! boundary configurations, section spaces on a 72-nodal model curve, and
//! the divisor-class ledger of the associated Hurwitz spaces.
//!
//! Everything is computed over exact integers or rationals; there are no
//! tolerances anywhere.

pub mod boundary;
pub mod degeneration;
pub mod divisors;
pub mod error;
pub mod incidence;
pub mod lattice;
pub mod linalg;
pub mod presets;
pub mod sections;
pub mod tables;
pub mod verify;
pub mod weyl;

pub use error::KanevError;
