//! Exact linear algebra over GF(p) and GF(p²), and modular representations.

pub mod descent;
pub mod field;
pub mod matgroup;
pub mod matrix;
pub mod meataxe;
pub mod module;
pub mod poly;
pub mod small_reps;

pub use descent::{galois_descent, sym5_matrix, sym5_power};
pub use field::{is_prime, Fe, Field};
pub use matgroup::MatrixGroup;
pub use matrix::{bilinear, dot, vec_is_zero, Echelon, Matrix};
pub use meataxe::{chop, constituent_dims, direct_summands, is_irreducible, split, Constituent, Split, Summand};
pub use module::{
    centralizer_algebra, fixed_space, intertwiners, invariant_forms, is_alternating, is_symmetric, quotient, restrict,
    spin, MatRep, Subspace,
};
pub use poly::{distinct_degree_factors, minimal_polynomial, phi5, Poly};
pub use small_reps::{
    deleted_permutation_matrix, deleted_permutation_rep, inverting_involution, phi5_companion, phi5_dimension,
};
