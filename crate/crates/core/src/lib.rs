//! Balanced whiskering of simplicial complexes.
//!
//! Given a complex `Δ` and a colouring `χ`, [`whisker::whisker`] builds the
//! balanced, vertex decomposable complex `Δ_χ` whose h-vector is the f-vector
//! of `Δ`. Around it sit the tools needed to check that claim and its
//! consequences: shedding certificates and shelling orders, Stanley-Reisner
//! ideals with an exact Hochster-formula Betti oracle, and the facet
//! restriction reversal for independence complexes of chordal graphs.

pub mod algebra;
pub mod cli;
pub mod coloring;
pub mod complex;
pub mod decompose;
pub mod error;
pub mod graphs;
pub mod io;
pub mod whisker;

pub use coloring::Coloring;
pub use complex::{Face, IntVector, SimplicialComplex, Universe};
pub use error::{Error, Result};
pub use whisker::{whisker, WhiskerComplex};
