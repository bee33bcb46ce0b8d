//! Exact arithmetic for a two-parameter family of generalized Pell
//! sequences.
//!
//! The crate evaluates P(n) and its companion Q(n) over exact rationals or
//! symbolically over the rational-function field in the parameter R, builds
//! the rational generating functions of stride subsequences, linearizes
//! powers P(n)^ℓ into first-power combinations with geometric weights, and
//! sums Σ σᵏ·P(mk)^ℓ in closed form. Alternative printed variants of
//! several identities are kept verbatim so the verification layer can
//! adjudicate exactly where they disagree with the oracle-checked forms.
//!
//! Everything is exact: there is no floating point anywhere in the crate.
//! All values are immutable after construction and all operations are pure,
//! so concurrent evaluation needs no synchronization. The per-thread
//! multiplication counter in [`opcount`] is observational only.

pub mod error;
pub mod field;
pub mod gf;
pub mod laurent;
pub mod linearize;
pub mod opcount;
pub mod pell;
pub mod poly;
pub mod powersum;
pub mod printed;
pub mod quadext;
pub mod rational;
pub mod ratfunc;

pub use error::{Error, Result};
pub use field::Field;
pub use laurent::LaurentPoly;
pub use pell::{
    brod_convert, pell_binet, pell_fast, pell_iter, pell_pair, pell_prefix, pell_value, q_pell,
    symbolic_params, PellParams,
};
pub use poly::{poly_gcd, Poly};
pub use quadext::QuadExt;
pub use rational::Rational;
pub use ratfunc::RatFunc;
