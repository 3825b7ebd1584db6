use std::collections::HashSet;
use std::sync::Arc;

use crate::complex::{canonical_facets, Face, SimplicialComplex, Universe};
use crate::error::{Error, Result};

/// Square-free monomial ideal; each generator is the support of a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: Arc<Universe>,
    generators: Vec<Face>,
}

impl MonomialIdeal {
    /// Generators are reduced to a minimal set and sorted canonically.
    pub fn new(variables: Arc<Universe>, generators: Vec<Face>) -> Result<Self> {
        for g in &generators {
            variables.check_face(*g)?;
        }
        let mut gens: Vec<Face> = Vec::new();
        let mut sorted = generators;
        sorted.sort_unstable();
        sorted.dedup();
        for g in sorted {
            if !gens.iter().any(|k| k.is_subset(g)) {
                gens.push(g);
            }
        }
        Ok(MonomialIdeal {
            variables,
            generators: gens,
        })
    }

    pub fn variables(&self) -> &Arc<Universe> {
        &self.variables
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// One generator per line, labels separated by spaces.
    pub fn render(&self) -> String {
        self.generators
            .iter()
            .map(|g| format!("{}\n", self.variables.face_labels(*g).join(" ")))
            .collect()
    }
}

/// Minimal subsets of the universe that are not faces.
pub fn minimal_non_faces(complex: &SimplicialComplex) -> Result<Vec<Face>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let universe = complex.universe().full_face();
    let support = complex.support();
    let faces = complex.faces();
    let face_set: HashSet<Face> = faces.iter().copied().collect();
    let mut out: HashSet<Face> = universe
        .difference(support)
        .iter()
        .map(Face::singleton)
        .collect();
    for &tau in &faces {
        for v in support.difference(tau).iter() {
            let sigma = tau.with(v);
            if face_set.contains(&sigma) {
                continue;
            }
            if sigma.iter().all(|u| face_set.contains(&sigma.without(u))) {
                out.insert(sigma);
            }
        }
    }
    let mut out: Vec<Face> = out.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

pub fn stanley_reisner(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let gens = minimal_non_faces(complex)?;
    MonomialIdeal::new(complex.universe().clone(), gens)
}

/// `Δ^∨ = {V ∖ σ : σ ∉ Δ}`; its facets are the complements of the minimal
/// non-faces of `Δ`.
pub fn alexander_dual(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    let non_faces = minimal_non_faces(complex)?;
    if non_faces.is_empty() {
        return Err(Error::DualOfSimplex);
    }
    let full = complex.universe().full_face();
    let facets = canonical_facets(non_faces.into_iter().map(|s| full.difference(s)).collect());
    Ok(SimplicialComplex::from_canonical(complex.universe().clone(), facets))
}
