use std::collections::VecDeque;

use super::graph::{clique_complex, independence_complex, is_unmixed, Graph};
use super::restriction::has_facet_restriction;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Outcome of [`is_chordal`], each side with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// Each vertex's later neighbours form a clique.
    PerfectElimination(Vec<usize>),
    /// An induced cycle of length at least four, in cyclic order.
    InducedCycle(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::PerfectElimination(_))
    }
}

/// Maximum cardinality search; the reverse visiting order is a perfect
/// elimination ordering exactly when the graph is chordal.
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut numbered = Face::EMPTY;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unnumbered vertex remains");
        numbered = numbered.with(v);
        visit.push(v);
        for u in g.neighbours(v).difference(numbered).iter() {
            weight[u] += 1;
        }
    }
    visit.reverse();
    visit
}

pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    order.iter().all(|&v| {
        later = later.without(v);
        g.is_clique(g.neighbours(v).intersection(later))
    })
}

fn shortest_path(g: &Graph, allowed: Face, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    let mut seen = Face::singleton(from);
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            while *path.last().unwrap() != from {
                path.push(prev[*path.last().unwrap()]);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbours(x).intersection(allowed).difference(seen).iter() {
            seen = seen.with(y);
            prev[y] = x;
            queue.push_back(y);
        }
    }
    None
}

/// A hole through `v` and two non-adjacent neighbours `u, w`, closed by a
/// shortest `u`-`w` path avoiding the rest of `N[v]`.
fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.vertex_count() {
        let nv = g.neighbours(v);
        for u in nv.iter() {
            for w in nv.iter().filter(|&w| w > u && !g.has_edge(u, w)) {
                let allowed = g.vertices().difference(nv.with(v)).with(u).with(w);
                if let Some(path) = shortest_path(g, allowed, u, w) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let order = mcs_order(g);
    if is_perfect_elimination_order(g, &order) {
        return Chordality::PerfectElimination(order);
    }
    Chordality::InducedCycle(find_hole(g).expect("a graph without a perfect elimination order has a hole"))
}

/// Each facet paired with the vertices lying in no other facet, in canonical
/// facet order.
pub fn free_vertices(complex: &SimplicialComplex) -> Vec<(Face, Face)> {
    let facets = complex.facets();
    facets
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let elsewhere = facets
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(Face::EMPTY, |acc, (_, h)| acc.union(*h));
            (*f, f.difference(elsewhere))
        })
        .collect()
}

/// Facets of `Cl(G)` with at least one free vertex.
fn free_clique_facets(g: &Graph) -> Vec<(Face, Face)> {
    free_vertices(&clique_complex(g))
        .into_iter()
        .filter(|(_, free)| !free.is_empty())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HhzReport {
    pub unmixed: bool,
    /// The clique facets carrying a free vertex partition the vertex set.
    pub partition_holds: bool,
    pub free_facets: Vec<Face>,
}

impl HhzReport {
    pub fn agrees(&self) -> bool {
        self.unmixed == self.partition_holds
    }
}

fn require_chordal(g: &Graph) -> Result<()> {
    if is_chordal(g).is_chordal() {
        Ok(())
    } else {
        Err(Error::NotChordal)
    }
}

/// Both clauses of the Herzog-Hibi-Zheng criterion, computed independently.
pub fn hhz_check(g: &Graph) -> Result<HhzReport> {
    require_chordal(g)?;
    let free_facets: Vec<Face> = free_clique_facets(g).into_iter().map(|(c, _)| c).collect();
    let mut covered = Face::EMPTY;
    let mut disjoint = true;
    for c in &free_facets {
        disjoint &= covered.is_disjoint(*c);
        covered = covered.union(*c);
    }
    Ok(HhzReport {
        unmixed: is_unmixed(g),
        partition_holds: disjoint && covered == g.vertices(),
        free_facets,
    })
}

/// One free vertex (the smallest) from each free clique facet. For a chordal
/// unmixed graph this is a maximal independent set and a facet restriction
/// of `Ind(G)`.
pub fn chordal_free_vertex_facet(g: &Graph) -> Result<Face> {
    require_chordal(g)?;
    if !is_unmixed(g) {
        return Err(Error::NotUnmixed);
    }
    let f: Face = free_clique_facets(g)
        .iter()
        .map(|(_, free)| free.first().expect("filtered to non-empty"))
        .collect();
    let ind = independence_complex(g);
    if !ind.facets().contains(&f) {
        return Err(Error::TheoremViolation(format!(
            "free-vertex set {} is not a maximal independent set",
            g.universe().format_face(f)
        )));
    }
    if !has_facet_restriction(&ind, f) {
        return Err(Error::TheoremViolation(format!(
            "free-vertex set {} is not a facet restriction",
            g.universe().format_face(f)
        )));
    }
    Ok(f)
}
