//! The Kostant Z-form: PBW monomials, straightening, Hopf-type maps.

mod element;
mod engine;
mod monomial;
mod rank_one;

pub use element::{HyperElement, TensorElement, ZForm};
pub use monomial::{weight_of, CartanExponents, PbwMonomial, RootExponents};
