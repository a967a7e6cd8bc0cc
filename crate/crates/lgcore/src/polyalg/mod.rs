//! Sparse exact multivariate polynomials, monomial orders, the text parser,
//! and algebraic differential forms with the twisted differentials.

mod form;
mod order;
mod parse;
mod poly;

pub use form::{exterior_d, twisted_differential, wedge_df, DiffForm, Sign, UDiffForm};
pub use order::MonomialOrder;
pub use parse::{parse_poly, ParseError};
pub use poly::{ExactPoly, Exponent};
