//! Vertex decomposability of pure complexes, with replayable shedding
//! certificates.

use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use crate::complex::{canonical_facets, Face, SimplicialComplex, Universe};
use crate::error::{Error, Result};

/// A shedding tree. Each internal node names the shedding vertex and carries
/// certificates for the deletion and the link at that vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheddingCertificate {
    Simplex,
    Shed {
        vertex: usize,
        deletion: Arc<SheddingCertificate>,
        link: Arc<SheddingCertificate>,
    },
}

impl SheddingCertificate {
    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            SheddingCertificate::Simplex => 1,
            SheddingCertificate::Shed { deletion, link, .. } => 1 + deletion.size() + link.size(),
        }
    }

    /// Check the certificate against `complex` without any search.
    pub fn verify(&self, complex: &SimplicialComplex) -> bool {
        !complex.is_void() && complex.is_pure().unwrap_or(false) && replay(self, complex.facets())
    }

    /// Indented text form, one node per line.
    pub fn render(&self, universe: &Universe) -> String {
        let mut out = String::new();
        self.render_into(universe, 0, &mut out);
        out
    }

    fn render_into(&self, universe: &Universe, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match self {
            SheddingCertificate::Simplex => {
                let _ = writeln!(out, "{pad}simplex");
            }
            SheddingCertificate::Shed {
                vertex,
                deletion,
                link,
            } => {
                let _ = writeln!(out, "{pad}shed {}", universe.label(*vertex));
                let _ = writeln!(out, "{pad}  deletion:");
                deletion.render_into(universe, depth + 2, out);
                let _ = writeln!(out, "{pad}  link:");
                link.render_into(universe, depth + 2, out);
            }
        }
    }
}

/// Deletion of a single vertex, if it stays pure of the same dimension.
fn shed_deletion(facets: &[Face], v: usize, size: usize) -> Option<Vec<Face>> {
    if facets.iter().all(|f| f.contains(v)) {
        return None;
    }
    let gens = facets.iter().map(|f| f.without(v)).collect();
    let del = canonical_facets(gens);
    del.iter().all(|f| f.len() == size).then_some(del)
}

fn vertex_link(facets: &[Face], v: usize) -> Vec<Face> {
    canonical_facets(
        facets
            .iter()
            .filter(|f| f.contains(v))
            .map(|f| f.without(v))
            .collect(),
    )
}

fn replay(cert: &SheddingCertificate, facets: &[Face]) -> bool {
    match cert {
        SheddingCertificate::Simplex => facets.len() == 1,
        SheddingCertificate::Shed {
            vertex,
            deletion,
            link,
        } => {
            let size = facets[0].len();
            let support = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
            if !support.contains(*vertex) {
                return false;
            }
            match shed_deletion(facets, *vertex, size) {
                Some(del) => replay(deletion, &del) && replay(link, &vertex_link(facets, *vertex)),
                None => false,
            }
        }
    }
}

type Memo = HashMap<Vec<Face>, Option<Arc<SheddingCertificate>>>;

fn search(facets: &[Face], memo: &mut Memo) -> Option<Arc<SheddingCertificate>> {
    if facets.len() == 1 {
        return Some(Arc::new(SheddingCertificate::Simplex));
    }
    if let Some(hit) = memo.get(facets) {
        return hit.clone();
    }
    let size = facets[0].len();
    let support = facets.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    let mut found = None;
    for v in support.iter() {
        let Some(del) = shed_deletion(facets, v, size) else {
            continue;
        };
        let Some(del_cert) = search(&del, memo) else {
            continue;
        };
        let link = vertex_link(facets, v);
        if let Some(link_cert) = search(&link, memo) {
            found = Some(Arc::new(SheddingCertificate::Shed {
                vertex: v,
                deletion: del_cert,
                link: link_cert,
            }));
            break;
        }
    }
    memo.insert(facets.to_vec(), found.clone());
    found
}

/// Exhaustive shedding-vertex search. Returns a certificate when the complex
/// is vertex decomposable and `None` when it is not.
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<Option<SheddingCertificate>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    if !complex.is_pure()? {
        return Err(Error::NotPure);
    }
    let mut memo = Memo::new();
    Ok(search(complex.facets(), &mut memo).map(|c| (*c).clone()))
}
