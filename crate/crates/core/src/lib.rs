//! Exact verification kernel for addition-law functional equations on
//! finite semigroups with an involutive anti-automorphism.
//!
//! The crate provides:
//!
//! - Cayley-table semigroups and validated anti-automorphisms ([`semigroup`],
//!   [`carriers`]);
//! - exact scalars over ℚ or F_p and the linear algebra on F(S,F)
//!   ([`scalar`], [`linalg`]);
//! - the translation-operator calculus, including the conjugation identity
//!   J·R(σ(y))·J = L(y) ([`ops`]);
//! - the two-term closure pipeline with its 2×2 matrix extraction
//!   ([`levi_civita`]);
//! - the generalized sine-law analyzer ([`sine_law`]);
//! - an exhaustive solution enumerator used as an independent oracle
//!   ([`enumerate`]);
//! - concrete worked carriers and function families ([`gallery`]).
//!
//! Everything is exact; no floating point, no tolerances.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod carriers;
pub mod enumerate;
pub mod gallery;
pub mod levi_civita;
pub mod linalg;
pub mod ops;
pub mod scalar;
pub mod semigroup;
pub mod sine_law;

pub use linalg::{coordinates_in_basis, rank, solve_2x2, FuncOnS, MatrixF};
pub use ops::Verdict;
pub use scalar::{Scalar, ScalarField};
pub use semigroup::{FiniteSemigroup, InvolutiveAntiAutomorphism};
