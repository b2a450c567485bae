//! Entanglement-assisted quantum error-correcting codes.
//!
//! Everything is built on exact GF(2) linear algebra: Pauli errors are
//! vectors `(z|x)` in `(Z_2)^{2n}`, codes are subspaces, and the number of
//! ebits a code consumes is half the dimension of the symplectic part of
//! its check space. A small dense statevector simulator verifies encoders
//! and decoders end to end for codes of a dozen qubits or fewer.

pub mod corpus;
pub mod eaqec;
pub mod error;
pub mod format;
pub mod gf2;
pub mod gf4;
pub mod pauli;
pub mod report;
pub mod statevector;
pub mod symplectic;

pub use error::{Error, Result};
