mod betti;
mod homology;
mod ideal;

pub use betti::{eagon_reiner_poly_check, whisker_dual_betti, BettiTable, WhiskerBetti};
pub use homology::{
    hochster_betti_oracle, reduced_homology_ranks, HOCHSTER_VERTEX_LIMIT, HOMOLOGY_VERTEX_LIMIT,
};
pub use ideal::{alexander_dual, minimal_non_faces, stanley_reisner, MonomialIdeal};

use crate::error::Result;
use crate::whisker::WhiskerComplex;

/// Formula table for `I_{Δ_χ^∨}` computed from the source f-vector.
pub fn whisker_betti(w: &WhiskerComplex) -> Result<WhiskerBetti> {
    whisker_dual_betti(&w.source().f_vector()?, w.source_vertex_count(), w.class_count())
}

/// Hochster table of the Stanley-Reisner ideal of `Δ_χ^∨`.
pub fn whisker_betti_oracle(w: &WhiskerComplex) -> Result<BettiTable> {
    hochster_betti_oracle(&alexander_dual(w.complex())?)
}
