//! Graphs, their independence and clique complexes, chordality and the
//! facet-restriction reversal.

mod chordal;
mod enumerate;
mod explore;
mod graph;
mod restriction;

pub use chordal::{
    chordal_free_vertex_facet, free_vertices, hhz_check, is_chordal, is_perfect_elimination_order, Chordality,
    HhzReport,
};
pub use enumerate::{chordal_graphs, graphs_up_to_isomorphism, ENUMERATION_VERTEX_LIMIT};
pub use explore::{
    explore_exhaustive, explore_sampled, random_chordal_graph, ExploreMode, ExploreReport, ExploreRow,
    EXHAUSTIVE_LIMIT, SAMPLED_LIMIT,
};
pub use graph::{
    clique_complex, clique_whisker, coloring_from_clique_partition, independence_complex, is_unmixed,
    CliquePartition, Graph,
};
pub use restriction::{
    facet_restrictions, find_facet_restriction, has_facet_restriction, reverse_whisker, reverse_whisker_at,
    Reversal,
};
