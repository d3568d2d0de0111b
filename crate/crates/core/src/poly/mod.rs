//! Exact arithmetic kernel: rationals, Laurent polynomials, parsing,
//! gcd/resultants, factorization over Q and real root isolation.

pub mod cyclotomic;
pub mod factor;
pub mod laurent;
pub mod matrix;
pub mod modp;
pub mod parse;
pub mod qpoly;
pub mod roots;

pub use cyclotomic::{cyclotomic, cyclotomic_laurent, cyclotomic_order, euler_phi};
pub use factor::{factor, Factorization, FactorizationJson};
pub use laurent::{resultant_q, LaurentPoly};
pub use parse::parse_poly;
pub use qpoly::{rat, ratio, QPoly, Rational};
pub use roots::{RootInterval, Sturm};

/// Parse a polynomial literal; panics on malformed input. Intended for tests and built-in tables.
pub fn poly(text: &str) -> LaurentPoly {
    parse_poly(text).unwrap_or_else(|e| panic!("bad polynomial literal {text:?}: {e}"))
}
