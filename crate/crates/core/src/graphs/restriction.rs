//! Facet restrictions and the reversal of whiskering.

use std::collections::HashSet;

use crate::coloring::{min_coloring, require_valid, Coloring};
use crate::complex::{canonical_facets, compress, Face, IntVector, SimplicialComplex};
use crate::error::{Error, Result};

/// `Δ|_{V∖F}` consists of exactly the sets `F_i ∖ F`. Only `⊆` needs checking.
pub fn has_facet_restriction(complex: &SimplicialComplex, f: Face) -> bool {
    let traces: HashSet<Face> = complex.facets().iter().map(|fi| fi.difference(f)).collect();
    traces
        .iter()
        .all(|t| t.subsets().all(|sub| traces.contains(&sub)))
}

/// Every facet restriction, in canonical facet order.
pub fn facet_restrictions(complex: &SimplicialComplex) -> Vec<Face> {
    complex
        .facets()
        .iter()
        .copied()
        .filter(|&f| has_facet_restriction(complex, f))
        .collect()
}

/// First facet restriction in canonical facet order.
pub fn find_facet_restriction(complex: &SimplicialComplex) -> Option<Face> {
    complex
        .facets()
        .iter()
        .copied()
        .find(|&f| has_facet_restriction(complex, f))
}

/// `Δ` undone to `Δ′ = Δ|_{V∖F}` with colouring classes `V_i ∖ F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reversal {
    pub facet: Face,
    /// `Δ|_{V∖F}` re-indexed onto `V ∖ F`.
    pub restricted: SimplicialComplex,
    pub coloring: Coloring,
    pub h: IntVector,
    pub f: IntVector,
}

/// Reverse at the first facet restriction, with the given colouring or the
/// first-fit `(dim+1)`-colouring.
pub fn reverse_whisker(complex: &SimplicialComplex, chi: Option<&Coloring>) -> Result<Reversal> {
    if !complex.is_pure()? {
        return Err(Error::NotPure);
    }
    let s = (complex.dimension()? + 1).max(1) as usize;
    let chi = match chi {
        Some(chi) => chi.clone(),
        None => min_coloring(complex, s).ok_or(Error::NotBalanced)?,
    };
    let f = find_facet_restriction(complex).ok_or(Error::NoFacetRestriction)?;
    reverse_whisker_at(complex, &chi, f)
}

pub fn reverse_whisker_at(complex: &SimplicialComplex, chi: &Coloring, f: Face) -> Result<Reversal> {
    if !complex.is_pure()? {
        return Err(Error::NotPure);
    }
    let universe = complex.universe();
    let s = (complex.dimension()? + 1).max(1) as usize;
    require_valid(complex, chi)?;
    if chi.class_count() != s {
        return Err(Error::WrongClassCount {
            expected: s,
            found: chi.class_count(),
        });
    }
    if !complex.facets().contains(&f) {
        return Err(Error::NotAFacet(universe.format_face(f)));
    }
    if !has_facet_restriction(complex, f) {
        return Err(Error::NoFacetRestriction);
    }
    let rest = universe.full_face().difference(f);
    // a facet meets each of the s classes exactly once, except in {∅}
    let tips: Vec<Option<usize>> = chi.classes().iter().map(|c| c.intersection(f).first()).collect();
    let traces = canonical_facets(complex.faces().into_iter().filter(|g| g.is_subset(rest)).collect());
    let rebuilt: Vec<Face> = complex
        .faces()
        .into_iter()
        .filter(|g| g.is_subset(rest))
        .map(|g| {
            chi.classes()
                .iter()
                .zip(&tips)
                .filter(|(c, _)| c.is_disjoint(g))
                .filter_map(|(_, t)| *t)
                .fold(g, |acc, t| acc.with(t))
        })
        .collect();
    if canonical_facets(rebuilt) != complex.facets() {
        return Err(Error::TheoremViolation(
            "whiskering the restriction does not give back the complex".into(),
        ));
    }
    let compact_universe = std::sync::Arc::new(universe.restricted(rest));
    let restricted = SimplicialComplex::from_canonical(
        compact_universe.clone(),
        canonical_facets(traces.iter().map(|t| compress(*t, rest)).collect()),
    );
    let coloring = Coloring::new(
        &compact_universe,
        chi.classes().iter().map(|c| compress(c.difference(f), rest)).collect(),
    )?;
    let h = complex.h_vector()?;
    let fv = restricted.f_vector()?;
    if !h.eq_up_to_trailing_zeros(&fv) {
        return Err(Error::TheoremViolation(format!("h = {h} but f of the restriction = {fv}")));
    }
    Ok(Reversal {
        facet: f,
        restricted,
        coloring,
        h,
        f: fv,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::singleton_coloring;
    use crate::whisker::whisker;

    fn c(facets: &[&str]) -> SimplicialComplex {
        let gens: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.chars().map(|ch| ch.to_string()).collect())
            .collect();
        SimplicialComplex::from_labels(&["1", "2", "3", "4", "5", "6"], &gens).unwrap()
    }

    #[test]
    fn examples() {
        let no = c(&["123", "234", "345", "456"]);
        assert_eq!(find_facet_restriction(&no), None);
        assert_eq!(reverse_whisker(&no, None), Err(Error::NoFacetRestriction));
        let yes = c(&["124", "245", "235", "456"]);
        let f = find_facet_restriction(&yes).unwrap();
        assert_eq!(yes.universe().format_face(f), "2 4 5");
        assert_eq!(facet_restrictions(&yes), vec![f]);
        let r = reverse_whisker(&yes, None).unwrap();
        assert_eq!(r.facet, f);
        assert_eq!(r.restricted.universe().labels(), &["1", "3", "6"]);
        assert_eq!(r.restricted.facets(), &[Face::singleton(0), Face::singleton(1), Face::singleton(2)]);
        assert!(r.h.eq_up_to_trailing_zeros(&IntVector::h_vector(vec![1, 3])));
        assert_eq!(r.f.entries, vec![1, 3]);
    }

    #[test]
    fn single_facet() {
        let k = c(&["135"]);
        assert_eq!(find_facet_restriction(&k), Some(Face::from_bits(0b10101)));
    }

    #[test]
    fn round_trip() {
        let src = SimplicialComplex::from_labels(&["a", "b", "c"], &[vec!["a", "b"], vec!["c"]]).unwrap();
        let chi = singleton_coloring(&src);
        let w = whisker(&src, &chi).unwrap();
        let r = reverse_whisker_at(w.complex(), w.induced_coloring(), w.cone_facet()).unwrap();
        assert_eq!(r.restricted, src);
        assert_eq!(r.coloring, chi);
    }

    #[test]
    fn precondition_errors() {
        let yes = c(&["124", "245", "235", "456"]);
        let chi = min_coloring(&yes, 3).unwrap();
        assert!(matches!(reverse_whisker_at(&yes, &chi, Face::from_bits(0b111)), Err(Error::NotAFacet(_))));
        let f124 = yes.facets()[0];
        assert_eq!(reverse_whisker_at(&yes, &chi, f124), Err(Error::NoFacetRestriction));
        let mixed = c(&["12", "3"]);
        assert_eq!(reverse_whisker(&mixed, None), Err(Error::NotPure));
        // K4 boundary skeleton: pure of dim 1 but needs four colours
        let k4 = c(&["12", "13", "14", "23", "24", "34"]);
        assert_eq!(reverse_whisker(&k4, None), Err(Error::NotBalanced));
    }
}
