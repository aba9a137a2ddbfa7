//! Exact computation of hypergeometric Bernoulli numbers `B_{N,n}` and their
//! higher-order variants `B_{N,n}^{(r)}`, by several independent routes, with
//! p-adic checks of Kummer-type congruences.
//!
//! Everything is exact: values are [`Rational`]s in lowest terms.

pub mod error;
pub mod exactnum;
pub mod hbnum;
pub mod altforms;
pub mod hessenberg;
pub mod contfrac;
pub mod congruence;
pub mod routes;

pub use error::{Error, Result};
pub use exactnum::Rational;
pub use congruence::{CongruenceVerdict, PadicVal};
pub use contfrac::{ClassicalVariant, ConvergentPair, Poly};
pub use hbnum::{HbKey, MemoStore, Series};
pub use routes::Route;
