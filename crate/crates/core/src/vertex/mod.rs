//! Vertex operators acting on truncated partition-indexed states, and the partition functions
//! they compute.

pub mod functions;
pub mod identities;
pub mod state;

pub use functions::{cylindric_fn, free_fn, mixed_fn, prescribed_fn, pure_fn};
pub use identities::{
    check_all_commutations, check_commutation, check_even_reflection, check_reflection, IdentityReport,
};
pub use state::{run_chain, ChainWeights, StateVector};
