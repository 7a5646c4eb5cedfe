//! Suborbits, orbital digraphs and the coset correspondence for arc-transitive
//! digraphs of a given out-valency.

mod digraph;
mod lemma;
mod suborbits;

pub use digraph::Digraph;
pub use lemma::{
    check_lemma_hypotheses, compare_lemma_sides, coset_digraphs, coset_of_orbital, norm_quotient_order_via_suborbits,
    CosetCorrespondence, CosetDigraph, LemmaHypotheses, OracleComparison, COSET_ENUMERATION_LIMIT, MAX_HOM_DEGREE,
};
pub use suborbits::{
    enumerate_digraphs, is_self_paired, orbital_digraph, orbital_neighbourhoods, suborbit_pairing, suborbits,
    SuborbitReport,
};

/// `dg` with every arc also reversed.
pub fn underlying_graph(dg: &Digraph) -> Digraph {
    dg.underlying_graph()
}
