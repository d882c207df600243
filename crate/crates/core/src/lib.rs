//! Exact computation with finite-dimensional Hopf algebras.
//!
//! Everything is done over an explicit number field `Q[x]/(p(x))` with
//! arbitrary-precision rational coefficients, so subspace and ideal
//! computations are exact. The crate is organized bottom-up:
//!
//! * [`scalar`] — field elements and their arithmetic,
//! * [`linalg`] — dense matrices and canonical (reduced row echelon) subspaces,
//! * [`hopf`] — Hopf algebras given by structure constants, axiom checks,
//!   builders, quotients, Haar functionals,
//! * [`rep`] — representations and the dual/tensor/product/word calculus,
//! * [`image`] — the largest Hopf ideal inside a representation kernel and
//!   the inner-faithfulness decision, by two independent algorithms,
//! * [`ext`] — normal Hopf subalgebras, exact sequences, induced modules and
//!   the extension representation,
//! * [`star`] — Hopf *-structures, inner unitarity and unitary induction.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the command
//! line front end live in the companion `hopfi` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod ext;
pub mod hopf;
pub mod image;
pub mod linalg;
pub mod rep;
pub mod scalar;
pub mod star;

pub use hopf::HopfAlgebraData;
pub use linalg::{Matrix, Subspace};
pub use rep::Representation;
pub use scalar::{FieldSpec, Rational, Scalar};
