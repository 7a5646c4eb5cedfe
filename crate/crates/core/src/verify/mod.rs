//! The claim-checking harness: per-row checks of the tables, graph
//! identification, symplectic centralizers and the full suite.

mod checks;
mod graphs;
mod report;
mod selftest;
mod suite;
mod symplectic;
mod table3;

pub use checks::{
    cayley_inversion_check, cayley_row_check, check_row, double_cover_check, expected_trace_labels, lemma_check,
    m11_group, normalizer_of_a4_check, projective_family_check, row_check_id, row_title, CheckOptions,
    CHOP_DEGREE_LIMIT, LEMMA_INSTANCES,
};
pub use graphs::{
    complete_graph, graph_aut_order_small, graph_automorphisms, identify_graph, isomorphic, kneser_graph,
    AutomorphismGroup, GraphIdentification, IntersectionArray, DRG_ALL_BASES_LIMIT, MAX_AUT_VERTICES,
    MAX_IDENTIFY_VERTICES,
};
pub use report::{timed_check, Report, Status};
pub use suite::{affine_test_primes, run_suite, suite_check_ids, SuiteConfig, SuiteOutcome};
pub use symplectic::{
    abelian_structure, centralizer_check, centralizer_group, decompose, decomposition_check, hat_subgroup,
    structure_name, CentralizerGroup, FormType, SummandInfo, Target, MAX_CENTRALIZER_PRIME,
};
pub use table3::{graph_check_id, graph_row_check, table3_graph, GraphInstance, CONSTRUCTIBLE_GRAPH_ROWS};
pub use selftest::{selftest, RANDOM_GROUPS, RANDOM_WORDS};
