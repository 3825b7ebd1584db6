//! All graphs on a few vertices up to isomorphism.
//!
//! Classes on `n` vertices come from classes on `n - 1` by adding a vertex
//! with every possible neighbourhood; duplicates are removed through a
//! canonical code, the minimum edge code over the vertex orders compatible
//! with an isomorphism-invariant colour refinement.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::chordal::is_chordal;
use super::graph::Graph;
use crate::complex::Universe;

pub const ENUMERATION_VERTEX_LIMIT: usize = 8;

fn edge_code(adj: &[u8], perm: &[usize]) -> u64 {
    // bit for the pair of positions (a, b), a < b, in a fixed order
    let n = perm.len();
    let mut code = 0u64;
    let mut bit = 0;
    for b in 1..n {
        for a in 0..b {
            if adj[perm[a]] >> perm[b] & 1 == 1 {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Stable colour refinement starting from degrees; returns colour ranks.
fn refine(adj: &[u8]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature present"))
            .collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colour = next;
    }
}

fn canonical_code(adj: &[u8]) -> u64 {
    let colour = refine(adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let cell_count = colour.iter().max().map_or(0, |m| m + 1);
    for c in 0..cell_count {
        cells.push((0..adj.len()).filter(|&v| colour[v] == c).collect());
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(adj.len());
    search(adj, &cells, 0, &mut vec![false; adj.len()], &mut perm, &mut best);
    best
}

fn search(adj: &[u8], cells: &[Vec<usize>], cell: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, best: &mut u64) {
    if perm.len() == adj.len() {
        *best = (*best).min(edge_code(adj, perm));
        return;
    }
    let current = &cells[cell];
    let placed = current.iter().filter(|&&v| used[v]).count();
    let next_cell = if placed + 1 == current.len() { cell + 1 } else { cell };
    for &v in current {
        if !used[v] {
            used[v] = true;
            perm.push(v);
            search(adj, cells, next_cell, used, perm, best);
            perm.pop();
            used[v] = false;
        }
    }
}

fn decode(n: usize, code: u64) -> Vec<u8> {
    let mut adj = vec![0u8; n];
    let mut bit = 0;
    for b in 1..n {
        for a in 0..b {
            if code >> bit & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            bit += 1;
        }
    }
    adj
}

/// Canonical codes of all graphs on `n` vertices up to isomorphism, sorted.
fn codes(n: usize) -> Vec<u64> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(k - 1, code);
            for nb in 0u16..1 << (k - 1) {
                let mut adj = base.clone();
                adj.push(nb as u8);
                for (u, a) in adj.iter_mut().enumerate().take(k - 1) {
                    *a |= ((nb >> u & 1) as u8) << (k - 1);
                }
                next.insert(canonical_code(&adj));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

fn to_graph(n: usize, code: u64) -> Graph {
    let universe = Arc::new(Universe::new((1..=n).map(|i| i.to_string())).expect("distinct labels"));
    let adj = decode(n, code);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| adj[a] >> b & 1 == 1)
        .collect();
    Graph::new(universe, edges).expect("decoded edges are simple")
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// labelled `1..n`.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!(n <= ENUMERATION_VERTEX_LIMIT, "enumeration is limited to {ENUMERATION_VERTEX_LIMIT} vertices");
    codes(n).into_iter().map(|c| to_graph(n, c)).collect()
}

/// Chordal graphs on exactly `n` vertices up to isomorphism.
pub fn chordal_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_isomorphism(n)
        .into_iter()
        .filter(|g| is_chordal(g).is_chordal())
        .collect()
}
