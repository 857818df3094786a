//! Hyperalgebras of the Frobenius kernels of `SL_2` and `SL_3`, their
//! torus-fixed subalgebras, and the baby Verma modules they act on.
//!
//! Coefficient arithmetic in the Z-form is generic over an integer scalar
//! (`num_traits`); the aliases below fix it to `BigInt`. Everything over
//! `F_p` uses [`scalar::PrimeField`].

pub mod config;
pub mod error;
pub mod generators;
pub mod kostant;
pub mod linalg;
pub mod meataxe;
pub mod module_theory;
pub mod report;
pub mod restricted;
pub mod root_system;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};

/// The Kostant Z-form with arbitrary-precision coefficients.
pub type KostantForm = kostant::ZForm<num_bigint::BigInt>;
/// An element of the Z-form with arbitrary-precision coefficients.
pub type Element = kostant::HyperElement<num_bigint::BigInt>;
/// Machine-width variant, adequate for small exponents.
pub type KostantForm128 = kostant::ZForm<i128>;
