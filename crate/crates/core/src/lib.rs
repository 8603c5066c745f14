//! Exact computational commutative algebra for charts of linked subspace chains.
//!
//! The crate provides, bottom up:
//!
//! * exact coefficient fields (arbitrary-precision rationals and odd prime
//!   fields) — [`field`];
//! * polynomial rings with named, weighted variables — [`ring`], monomials and
//!   monomial orders — [`monomial`], sparse polynomials — [`poly`], and a text
//!   format for ideals — [`parse`];
//! * Buchberger's algorithm with reduced Groebner bases, plus derived ideal
//!   operations (elimination, quotients, saturation, dimension, Hilbert
//!   functions, substitution schedules, Jacobian ranks) — [`groebner`],
//!   [`ideal_ops`];
//! * matrices over polynomial rings and minor ideals — [`matrix`];
//! * construction of linked-chart ideals, commuting-pair ideals, chain gluing,
//!   and the degeneration-parameter conditions — [`schemes`];
//! * the verification suite (local structure, flatness, dimensions,
//!   Cohen–Macaulayness, reduced fibers, induction step) with deterministic
//!   reports — [`verify`].

pub mod error;
pub mod field;
pub mod ring;
pub mod monomial;
pub mod poly;
pub mod parse;
pub mod rng;
pub mod groebner;
pub mod ideal_ops;
pub mod matrix;
pub mod schemes;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Coeff, FieldSpec};
pub use groebner::{Guards, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::{Ring, VarTable};
