//! Constructors for the groups in the tables: affine groups, groups on
//! projective lines, the symplectic double cover 2·S₅⁻ and coset actions.

mod affine;
mod catalogue;
mod gf4;
mod projective;
mod sp6;
mod tables;

pub use affine::{decode, encode, linear_permutation, AffineGroup, MAX_AFFINE_DEGREE};
pub use catalogue::{
    catalogue_fingerprint, catalogue_group, clebsch_affine_group, identify, young_subgroup_4_5, CATALOGUE,
    SUZ8_ORDER,
};
pub use gf4::affine_plane_group;
pub use projective::{pgl2, psl2, LineGroup, ProjectiveLine};
pub use sp6::{
    build_2s5minus, derived_2a5_over_prime, locate_subrep, realized_over_prime_field, trace_labels,
    DOUBLE_COVER_ORDER, LOCATABLE_ORDERS, MAX_SP6_PRIME,
};
pub use tables::{
    affine_linear_part, build_table1_row, build_table2_row, expected_index, infinite_row_condition, load_group_file,
    psl2_on_a5_cosets, row_info, smallest_valid_primes, Construction, GroupSpec, RowInfo, Table,
    MAX_PROJECTIVE_FAMILY_DEGREE,
};
pub use crate::perm::load_generators;
