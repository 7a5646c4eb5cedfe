//! Permutation groups: arithmetic, stabilizer chains, orbits, blocks, coset
//! actions, small normalizers, fingerprints and generator files.

mod blocks;
mod chain;
mod coset;
mod fingerprint;
mod group;
mod io;
mod normalizer;
mod permutation;
mod search;

pub use blocks::{minimal_block_system, primitivity_witness, BlockSystem};
pub use chain::{ChainOptions, StabChain};
pub use coset::{coset_action, CosetAction, DEFAULT_COSET_BOUND};
pub use fingerprint::{fingerprint, Fingerprint, FINGERPRINT_ORDER_LIMIT};
pub use group::{closure, PermGroup};
pub use io::{format_generators, load_generators, parse_generators};
pub use normalizer::{subgroup_normalizer_small, DEFAULT_NORMALIZER_ORBIT_BOUND, NORMALIZER_SUBGROUP_LIMIT};
pub use permutation::Permutation;
pub(crate) use permutation::{gcd, lcm};
pub use search::{random_subgroup_search, DEFAULT_SEARCH_BUDGET};
