//! Exact computations around knot concordance filtrations localized at
//! polynomial sequences.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: Laurent polynomials over Q, gcd, resultants, factorization.
//! * [`isogeny`]: strong coprimality versus isogeny of polynomials and tuples.
//! * [`seifert`]: Seifert-matrix invariants (Alexander polynomial,
//!   Levine–Tristram signatures, ρ₀, Arf).
//! * [`alexander`]: rational Alexander modules, Blanchfield pairing,
//!   localization at `p(t)`.
//! * [`operator`]: doubling operators, robustness certificates, composition trees.
//! * [`oracle`]: vanishing/survival verdicts, family certificates, injectivity reports.

pub mod alexander;
pub mod error;
pub mod isogeny;
pub mod library;
pub mod operator;
pub mod oracle;
pub mod poly;
pub mod seifert;

pub use error::{Error, Result};
pub use poly::{parse_poly, LaurentPoly, Rational};
pub use seifert::SeifertMatrix;
