//! The whiskered complex `Δ_χ` of a coloured complex.
//!
//! Given `Δ` on `x_1..x_n` and an `s`-colouring `V_1 ∪ ... ∪ V_s`, `Δ_χ` lives
//! on `x_1..x_n, y_1..y_s` and has one facet `g ∪ g'` for every face `g` of
//! `Δ`, where `g' = {y_j : V_j ∩ g = ∅}`.

use std::sync::Arc;

use crate::coloring::{require_valid, Coloring};
use crate::complex::{Face, IntVector, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct WhiskerComplex {
    complex: SimplicialComplex,
    /// `(g, g ∪ g')` for every face `g` of the source, in canonical order of `g`.
    correspondence: Vec<(Face, Face)>,
    source: SimplicialComplex,
    source_coloring: Coloring,
    induced_coloring: Coloring,
}

impl WhiskerComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn correspondence(&self) -> &[(Face, Face)] {
        &self.correspondence
    }

    pub fn source_coloring(&self) -> &Coloring {
        &self.source_coloring
    }

    /// `V_j' = V_j ∪ {y_j}`.
    pub fn induced_coloring(&self) -> &Coloring {
        &self.induced_coloring
    }

    /// Number of source vertices `n`.
    pub fn source_vertex_count(&self) -> usize {
        self.source.universe().len()
    }

    /// Number of classes `s`.
    pub fn class_count(&self) -> usize {
        self.source_coloring.class_count()
    }

    /// The facet `y_1 ... y_s` (image of the empty face).
    pub fn cone_facet(&self) -> Face {
        let n = self.source_vertex_count();
        (n..n + self.class_count()).collect()
    }

    /// Facet of `Δ_χ` corresponding to a source face.
    pub fn facet_of(&self, g: Face) -> Option<Face> {
        self.correspondence
            .iter()
            .find(|(src, _)| *src == g)
            .map(|(_, f)| *f)
    }
}

/// The y-part `{y_j : V_j ∩ g = ∅}` of the facet over `g`, with `y_j` at index `n + j`.
pub(crate) fn whisker_tips(g: Face, classes: &[Face], n: usize) -> Face {
    classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_disjoint(g))
        .map(|(j, _)| n + j)
        .collect()
}

pub fn whisker(complex: &SimplicialComplex, chi: &Coloring) -> Result<WhiskerComplex> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    require_valid(complex, chi)?;
    let n = complex.universe().len();
    let s = chi.class_count();
    let universe = Arc::new(
        complex
            .universe()
            .extended((1..=s).map(|j| format!("y{j}")))?,
    );
    let correspondence: Vec<(Face, Face)> = complex
        .faces()
        .into_iter()
        .map(|g| (g, g.union(whisker_tips(g, chi.classes(), n))))
        .collect();
    let whiskered =
        SimplicialComplex::from_generators_unchecked(universe, correspondence.iter().map(|p| p.1).collect());
    debug_assert_eq!(whiskered.facets().len(), correspondence.len());
    let induced = Coloring::from_classes_unchecked(
        chi.classes()
            .iter()
            .enumerate()
            .map(|(j, c)| c.with(n + j))
            .collect(),
    );
    Ok(WhiskerComplex {
        complex: whiskered,
        correspondence,
        source: complex.clone(),
        source_coloring: chi.clone(),
        induced_coloring: induced,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HEqualsF {
    pub f: IntVector,
    pub h: IntVector,
    pub matches: bool,
}

/// `f(Δ)` next to `h(Δ_χ)`; the two always agree up to trailing zeros.
pub fn h_equals_f_report(complex: &SimplicialComplex, chi: &Coloring) -> Result<HEqualsF> {
    let w = whisker(complex, chi)?;
    let f = complex.f_vector()?;
    let h = w.complex().h_vector()?;
    let matches = f.eq_up_to_trailing_zeros(&h);
    Ok(HEqualsF { f, h, matches })
}
