//! Exact computational tools for Weil polynomials of abelian varieties over
//! finite fields.
//!
//! Everything here is integer or rational arithmetic with certified answers:
//! no floating point enters any decision. The main entry points are
//!
//! * [`weilcore::absolute_simplicity`]: decide whether an ordinary abelian
//!   variety stays simple over the algebraic closure of its base field,
//!   working only from its Weil polynomial;
//! * [`surfaces`]: the dimension-two classifier and the census of ordinary
//!   isogeny classes of abelian surfaces;
//! * [`chebgen::construct_absolutely_simple`]: produce, for any dimension
//!   `n >= 2` and any prime power `q`, an ordinary Weil polynomial whose
//!   isogeny class is absolutely simple, together with a checked certificate;
//! * [`asymptotics`]: exact rational enclosures for the constants and bounds
//!   that govern how common such polynomials are.

pub mod asymptotics;
pub mod chebgen;
pub mod surfaces;
pub mod textio;
pub mod error;
pub mod intpoly;
pub mod modpoly;
pub mod numth;
pub mod weilcore;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
