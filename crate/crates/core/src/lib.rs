//! Exact inverse systems for local Artinian Gorenstein algebras.
//!
//! Polynomials `f ∈ P = k[x_1..x_n]` are acted on by operators
//! `σ ∈ S = k[[α_1..α_n]]` through contraction. Ideals of `S` are handled
//! modulo a power of the maximal ideal together with a certificate that
//! nothing is lost by the truncation.

#![no_std]
extern crate alloc;

pub mod apolar;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hf;
pub mod ideal;
pub mod index;
pub mod limits;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod ray;
pub mod substitution;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{Field, FieldKind, PrimeField, Rationals};
pub use ideal::TruncatedIdeal;
pub use monomial::Monomial;
pub use poly::{contract, pairing, Operator, Polynomial};
pub use substitution::{dual_substitution, Substitution};
