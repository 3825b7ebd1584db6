//! Shelling orders of pure complexes: verification, search, restriction sets,
//! and the dimension-refining order of a whiskered complex.

use std::collections::HashSet;
use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{Face, IntVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::whisker::WhiskerComplex;

/// Facet sequences up to this length are searched without a node budget.
pub const EXHAUSTIVE_FACET_LIMIT: usize = 9;

/// Node budget for the shelling search on larger complexes.
pub const SEARCH_BUDGET: usize = 200_000;

/// A verified shelling: indices into the canonical facet list together with
/// the restriction set `R(F_j)` of every facet in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder {
    pub order: Vec<usize>,
    pub restriction_sets: Vec<Face>,
}

impl ShellingOrder {
    pub fn render(&self, complex: &SimplicialComplex) -> String {
        let u = complex.universe();
        let mut out = String::new();
        for (k, (&idx, r)) in self.order.iter().zip(&self.restriction_sets).enumerate() {
            let _ = writeln!(
                out,
                "{}\tfacet {}\t{}\tR: {}",
                k + 1,
                idx,
                u.format_face(complex.facets()[idx]),
                u.format_face(*r)
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingSearch {
    Found(ShellingOrder),
    NotShellable,
    /// The search budget ran out before a decision.
    Unknown,
}

fn require_pure(complex: &SimplicialComplex) -> Result<()> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure()? {
        return Err(Error::NotPure);
    }
    Ok(())
}

fn check_permutation(t: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; t];
    if order.len() != t {
        return Err(Error::NotAPermutation);
    }
    for &i in order {
        if i >= t || std::mem::replace(&mut seen[i], true) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

/// Can `f` follow the facets in `prior`? For every earlier `F_i` some
/// `v ∈ f ∖ F_i` must satisfy `f ∖ F_l = {v}` for some earlier `F_l`.
fn extends(f: Face, prior: impl Iterator<Item = Face> + Clone) -> bool {
    let tips = prior
        .clone()
        .map(|g| f.difference(g))
        .filter(|d| d.len() == 1)
        .fold(Face::EMPTY, Face::union);
    prior.into_iter().all(|g| !f.difference(g).is_disjoint(tips))
}

pub fn verify_shelling(complex: &SimplicialComplex, order: &[usize]) -> Result<bool> {
    require_pure(complex)?;
    let facets = complex.facets();
    check_permutation(facets.len(), order)?;
    Ok((0..order.len()).all(|j| {
        extends(
            facets[order[j]],
            order[..j].iter().map(|&i| facets[i]),
        )
    }))
}

/// `R(F_j) = {z ∈ F_j : F_j ∖ {z} ⊆ F_l for some l < j}`.
pub fn restriction_sets(complex: &SimplicialComplex, order: &[usize]) -> Vec<Face> {
    let facets = complex.facets();
    (0..order.len())
        .map(|j| {
            let f = facets[order[j]];
            f.iter()
                .filter(|&z| {
                    let rest = f.without(z);
                    order[..j].iter().any(|&l| rest.is_subset(facets[l]))
                })
                .collect()
        })
        .collect()
}

fn finish(complex: &SimplicialComplex, order: Vec<usize>) -> ShellingOrder {
    let restriction_sets = restriction_sets(complex, &order);
    ShellingOrder {
        order,
        restriction_sets,
    }
}

/// Wrap an order after checking it is a shelling.
pub fn shelling_order(complex: &SimplicialComplex, order: Vec<usize>) -> Result<ShellingOrder> {
    if !verify_shelling(complex, &order)? {
        return Err(Error::InvalidShelling);
    }
    Ok(finish(complex, order))
}

fn facet_index(complex: &SimplicialComplex, facet: Face) -> usize {
    complex
        .facets()
        .binary_search(&facet)
        .expect("correspondence image is a facet")
}

/// Facet indices of `Δ_χ` listed in the order of the given source faces.
pub fn order_from_source_faces(w: &WhiskerComplex, faces: &[Face]) -> Result<Vec<usize>> {
    faces
        .iter()
        .map(|g| {
            w.facet_of(*g)
                .map(|f| facet_index(w.complex(), f))
                .ok_or_else(|| Error::NotAFace(w.source().universe().format_face(*g)))
        })
        .collect()
}

/// Facets of `Δ_χ` ordered by the dimension of the source face, ties broken
/// canonically. The restriction set of each facet is checked to equal its
/// source face.
pub fn whisker_shelling_order(w: &WhiskerComplex) -> Result<ShellingOrder> {
    let faces: Vec<Face> = w.correspondence().iter().map(|p| p.0).collect();
    let order = order_from_source_faces(w, &faces)?;
    let shelling = shelling_order(w.complex(), order).map_err(|_| {
        Error::TheoremViolation("dimension-refining order of a whiskered complex is not a shelling".into())
    })?;
    for (g, r) in faces.iter().zip(&shelling.restriction_sets) {
        if g != r {
            return Err(Error::TheoremViolation(format!(
                "restriction set {} differs from source face {}",
                w.complex().universe().format_face(*r),
                w.complex().universe().format_face(*g)
            )));
        }
    }
    Ok(shelling)
}

/// A random order refining the source-face dimension order.
pub fn random_refining_order<R: Rng + ?Sized>(w: &WhiskerComplex, rng: &mut R) -> Result<Vec<usize>> {
    let mut faces: Vec<Face> = w.correspondence().iter().map(|p| p.0).collect();
    faces.shuffle(rng);
    faces.sort_by_key(|g| g.len());
    order_from_source_faces(w, &faces)
}

struct Search<'a> {
    facets: &'a [Face],
    failed: HashSet<Vec<u64>>,
    nodes: usize,
    budget: Option<usize>,
}

impl Search<'_> {
    fn run(&mut self, used: &mut Vec<u64>, prefix: &mut Vec<usize>) -> Option<bool> {
        if prefix.len() == self.facets.len() {
            return Some(true);
        }
        if self.failed.contains(used) {
            return Some(false);
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return None;
        }
        for i in 0..self.facets.len() {
            if used[i / 64] >> (i % 64) & 1 == 1 {
                continue;
            }
            if !extends(self.facets[i], prefix.iter().map(|&p| self.facets[p])) {
                continue;
            }
            used[i / 64] |= 1 << (i % 64);
            prefix.push(i);
            match self.run(used, prefix) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            prefix.pop();
            used[i / 64] &= !(1 << (i % 64));
        }
        self.failed.insert(used.clone());
        Some(false)
    }
}

/// Backtracking search over facet orders. Feasibility of the next facet only
/// depends on the set already placed, so failed sets are memoized.
pub fn find_shelling(complex: &SimplicialComplex) -> Result<ShellingSearch> {
    require_pure(complex)?;
    let facets = complex.facets();
    let mut search = Search {
        facets,
        failed: HashSet::new(),
        nodes: 0,
        budget: (facets.len() > EXHAUSTIVE_FACET_LIMIT).then_some(SEARCH_BUDGET),
    };
    let mut used = vec![0u64; facets.len().div_ceil(64)];
    let mut prefix = Vec::with_capacity(facets.len());
    Ok(match search.run(&mut used, &mut prefix) {
        Some(true) => ShellingSearch::Found(finish(complex, prefix)),
        Some(false) => ShellingSearch::NotShellable,
        None => ShellingSearch::Unknown,
    })
}

/// `h_i = |{j : |R(F_j)| = i}|`.
pub fn h_vector_from_shelling(complex: &SimplicialComplex, shelling: &ShellingOrder) -> Result<IntVector> {
    if !verify_shelling(complex, &shelling.order)? {
        return Err(Error::InvalidShelling);
    }
    let d = complex.dimension()?;
    let mut h = vec![0i64; (d + 2) as usize];
    for r in restriction_sets(complex, &shelling.order) {
        h[r.len()] += 1;
    }
    Ok(IntVector::h_vector(h))
}
