//! Random instances and brute-force oracles shared by the integration tests.
//! The oracles work from definitions on raw bitmasks and never call the
//! library routine they are compared against.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use whiskerkit::decompose::SheddingCertificate;
use whiskerkit::graphs::Graph;
use whiskerkit::{Coloring, Face, SimplicialComplex, Universe};

pub fn universe(n: usize, prefix: &str) -> Arc<Universe> {
    Arc::new(Universe::new((1..=n).map(|i| format!("{prefix}{i}"))).unwrap())
}

/// Complex on `x1..xn` generated by a handful of random subsets.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let k = rng.random_range(1..=6);
    let gens: Vec<Face> = (0..k)
        .map(|_| {
            let size = rng.random_range(0..=n.min(5));
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            vs[..size].iter().copied().collect()
        })
        .collect();
    SimplicialComplex::new(universe(n, "x"), gens).unwrap()
}

fn edges(c: &SimplicialComplex) -> Vec<(usize, usize)> {
    let mut out = HashSet::new();
    for f in c.facets() {
        let vs: Vec<usize> = f.iter().collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                out.insert((a, b));
            }
        }
    }
    out.into_iter().collect()
}

/// A valid colouring with a random number of classes `s ≤ n` (at least one).
/// Vertices take a random colour not used by a neighbour; when that fails a
/// few times the class count is raised.
pub fn random_coloring<R: Rng>(rng: &mut R, c: &SimplicialComplex) -> Coloring {
    let n = c.universe().len();
    let es = edges(c);
    let mut s = rng.random_range(1..=n.max(1));
    loop {
        for _ in 0..20 {
            let mut colour = vec![usize::MAX; n];
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let mut ok = true;
            for &v in &order {
                let used: HashSet<usize> = es
                    .iter()
                    .filter_map(|&(a, b)| match (a == v, b == v) {
                        (true, _) => Some(colour[b]),
                        (_, true) => Some(colour[a]),
                        _ => None,
                    })
                    .collect();
                let free: Vec<usize> = (0..s).filter(|k| !used.contains(k)).collect();
                match free.choose(rng) {
                    Some(&k) => colour[v] = k,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let classes = (0..s)
                    .map(|k| (0..n).filter(|&v| colour[v] == k).collect())
                    .collect();
                return Coloring::new(c.universe(), classes).unwrap();
            }
        }
        s += 1;
    }
}

/// All faces by scanning every subset of the universe.
pub fn brute_faces(c: &SimplicialComplex) -> Vec<u64> {
    let n = c.universe().len();
    (0..1u64 << n)
        .filter(|&s| c.facets().iter().any(|f| s & !f.bits() == 0))
        .collect()
}

pub fn brute_f_vector(c: &SimplicialComplex) -> Vec<i64> {
    let faces = brute_faces(c);
    let top = faces.iter().map(|s| s.count_ones()).max().unwrap() as usize;
    let mut f = vec![0i64; top + 1];
    for s in faces {
        f[s.count_ones() as usize] += 1;
    }
    f
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `Σ_k h_k t^k = Σ_i f_{i-1} t^i (1 - t)^{d+1-i}` by polynomial
/// multiplication.
pub fn h_by_polynomials(f: &[i64]) -> Vec<i64> {
    let top = f.len() - 1;
    let mut h = vec![0i64; top + 1];
    for (i, &fi) in f.iter().enumerate() {
        let mut p = vec![0i64; i + 1];
        p[i] = fi;
        for _ in 0..top - i {
            p = poly_mul(&p, &[1, -1]);
        }
        for (k, v) in p.into_iter().enumerate() {
            h[k] += v;
        }
    }
    h
}

pub fn trim(v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Shelling by definition: each facet meets the earlier ones in a pure
/// complex of codimension one.
pub fn brute_is_shelling(ordered: &[Face]) -> bool {
    let d = ordered[0].len();
    if ordered.iter().any(|f| f.len() != d) {
        return false;
    }
    (1..ordered.len()).all(|j| {
        let fj = ordered[j].bits();
        let traces: Vec<u64> = ordered[..j].iter().map(|f| f.bits() & fj).collect();
        // maximal traces are the facets of the intersection complex
        traces
            .iter()
            .filter(|&&t| !traces.iter().any(|&u| u != t && t & !u == 0))
            .all(|t| t.count_ones() as usize == d - 1)
    })
}

fn maximal(sets: Vec<u64>) -> Vec<u64> {
    let uniq: HashSet<u64> = sets.into_iter().collect();
    uniq.iter()
        .copied()
        .filter(|&s| !uniq.iter().any(|&t| t != s && s & !t == 0))
        .collect()
}

/// Replay a shedding tree on facet bitmasks.
pub fn brute_replay(cert: &SheddingCertificate, facets: &[u64]) -> bool {
    let d = facets[0].count_ones();
    if facets.iter().any(|f| f.count_ones() != d) {
        return false;
    }
    match cert {
        SheddingCertificate::Simplex => facets.len() == 1,
        SheddingCertificate::Shed {
            vertex,
            deletion,
            link,
        } => {
            let bit = 1u64 << vertex;
            let del = maximal(facets.iter().map(|f| f & !bit).collect());
            let lk: Vec<u64> = facets.iter().filter(|&&f| f & bit != 0).map(|f| f & !bit).collect();
            !lk.is_empty()
                && del.iter().all(|f| f.count_ones() == d)
                && brute_replay(deletion, &del)
                && brute_replay(link, &lk)
        }
    }
}

pub fn facet_bits(c: &SimplicialComplex) -> Vec<u64> {
    c.facets().iter().map(|f| f.bits()).collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let es: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::new(universe(n, "v"), es).unwrap()
}

/// Maximal independent sets by scanning all subsets.
pub fn brute_independence_facets(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let independent = |s: u64| (0..n).all(|v| s >> v & 1 == 0 || g.neighbours(v).bits() & s == 0);
    maximal((0..1u64 << n).filter(|&s| independent(s)).collect())
}

/// Some vertex subset of size at least four induces a cycle.
pub fn brute_has_hole(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..1u64 << n).filter(|s| s.count_ones() >= 4).any(|s| {
        let degree_two = (0..n)
            .filter(|v| s >> v & 1 == 1)
            .all(|v| (g.neighbours(v).bits() & s).count_ones() == 2);
        if !degree_two {
            return false;
        }
        // connected: flood from the lowest vertex
        let mut seen = s & s.wrapping_neg();
        loop {
            let mut next = seen;
            for v in 0..n {
                if seen >> v & 1 == 1 {
                    next |= g.neighbours(v).bits() & s;
                }
            }
            if next == seen {
                return seen == s;
            }
            seen = next;
        }
    })
}
