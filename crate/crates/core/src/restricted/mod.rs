//! The finite-dimensional algebras `Dist(G_r)` and `Dist(G_r)^T` over `F_p`.

mod basis;
pub mod cache;
mod checks;
mod torus;

pub use basis::{level_bound, reduce_mod_p, restricted_basis, ModPElement, RestrictedBasis, MAX_BASIS_SIZE};
pub use checks::{
    check_antiautomorphisms, check_associativity, check_augmentation, check_center, check_commutativity,
    check_dimension_formula, check_hopf_failure, check_ideal_j, check_kostant_closure, check_levi_embedding,
    CheckReport, CommutatorWitness, Coverage, DimensionReport, EXHAUSTIVE_PAIR_DIM,
};
pub use torus::{SparseVec, TorusFixedAlgebra};
