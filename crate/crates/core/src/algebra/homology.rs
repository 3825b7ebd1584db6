//! Reduced simplicial homology over the rationals and Hochster's formula.
//!
//! This is the independent oracle for whisker Betti tables: it never looks at
//! f-vectors, only at boundary-matrix ranks of vertex restrictions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::betti::BettiTable;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

pub const HOMOLOGY_VERTEX_LIMIT: usize = 16;
pub const HOCHSTER_VERTEX_LIMIT: usize = 12;

/// Rank of a matrix given as sparse rows of small integers.
fn rank(rows: Vec<Vec<(usize, i64)>>, cols: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| {
            let mut dense = vec![BigRational::zero(); cols];
            for (c, v) in r {
                dense[c] = BigRational::from_integer(BigInt::from(v));
            }
            dense
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..cols {
                if !m[rank][c].is_zero() {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Reduced Betti numbers of the complex whose faces are `faces` (downward
/// closed, containing `∅`). Entry `k` is the rank of `H̃_{k-1}`.
fn reduced_ranks_of_faces(faces: &[Face]) -> Vec<usize> {
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<Face, usize>> = by_size
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // boundary[k] : C_{k-1} (faces of size k) -> C_{k-2} (size k-1), k >= 1
    let mut boundary_rank = vec![0usize; top + 2];
    for k in 1..=top {
        let rows: Vec<Vec<(usize, i64)>> = by_size[k]
            .iter()
            .map(|f| {
                f.iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[k - 1][&f.without(v)], sign)
                    })
                    .collect()
            })
            .collect();
        boundary_rank[k] = rank(rows, by_size[k - 1].len());
    }
    (0..=top)
        .map(|k| by_size[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect()
}

/// Ranks of reduced homology over `Q`; entry `k` is dimension `k - 1`, so the
/// vector starts at dimension -1. The void complex has no homology.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    let n = complex.universe().len();
    if n > HOMOLOGY_VERTEX_LIMIT {
        return Err(Error::OverScale {
            size: n,
            limit: HOMOLOGY_VERTEX_LIMIT,
        });
    }
    if complex.is_void() {
        return Ok(Vec::new());
    }
    Ok(reduced_ranks_of_faces(&complex.faces()))
}

/// Graded Betti numbers of the Stanley-Reisner ideal of `target` by
/// Hochster's formula: `β_{i,j}(I) = Σ_{|σ|=j} dim H̃_{j-i-2}(Δ|_σ)`.
pub fn hochster_betti_oracle(target: &SimplicialComplex) -> Result<BettiTable> {
    let n = target.universe().len();
    if n > HOCHSTER_VERTEX_LIMIT {
        return Err(Error::OverScale {
            size: n,
            limit: HOCHSTER_VERTEX_LIMIT,
        });
    }
    if target.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces = target.faces();
    let table = (0..1u64 << n)
        .into_par_iter()
        .map(|bits| {
            let sigma = Face::from_bits(bits);
            let restricted: Vec<Face> = faces.iter().copied().filter(|f| f.is_subset(sigma)).collect();
            let ranks = reduced_ranks_of_faces(&restricted);
            let j = sigma.len();
            let mut t = BettiTable::new();
            for (k, &r) in ranks.iter().enumerate() {
                // homology in dimension k - 1 contributes to i = j - (k - 1) - 2
                if r > 0 && j >= k + 1 {
                    t.add(j - k - 1, j, r as u64);
                }
            }
            t
        })
        .reduce(BettiTable::new, BettiTable::merge);
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::complex::Universe;

    fn c(universe: &[&str], facets: &[&str]) -> SimplicialComplex {
        let gens: Vec<Vec<String>> = facets
            .iter()
            .map(|f| f.chars().map(|ch| ch.to_string()).collect())
            .collect();
        SimplicialComplex::from_labels(universe, &gens).unwrap()
    }

    #[test]
    fn homology_examples() {
        let simplex = c(&["a", "b", "c", "d"], &["abcd"]);
        assert!(reduced_homology_ranks(&simplex).unwrap().iter().all(|&r| r == 0));
        let circle = c(&["a", "b", "c"], &["ab", "bc", "ac"]);
        assert_eq!(reduced_homology_ranks(&circle).unwrap(), vec![0, 0, 1]);
        let irr = SimplicialComplex::irrelevant(Arc::new(Universe::new(["a"]).unwrap()));
        assert_eq!(reduced_homology_ranks(&irr).unwrap(), vec![1]);
        let two_points = c(&["a", "b"], &["a", "b"]);
        assert_eq!(reduced_homology_ranks(&two_points).unwrap(), vec![0, 1]);
        // hollow tetrahedron: a 2-sphere
        let sphere = c(&["a", "b", "c", "d"], &["abc", "abd", "acd", "bcd"]);
        assert_eq!(reduced_homology_ranks(&sphere).unwrap(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn homology_scale_limit() {
        let labels: Vec<String> = (0..17).map(|i| format!("v{i}")).collect();
        let k = SimplicialComplex::from_labels(&labels, &[vec!["v0"]]).unwrap();
        assert_eq!(
            reduced_homology_ranks(&k),
            Err(Error::OverScale { size: 17, limit: 16 })
        );
        let labels: Vec<String> = (0..13).map(|i| format!("v{i}")).collect();
        let k = SimplicialComplex::from_labels(&labels, &[vec!["v0"]]).unwrap();
        assert!(matches!(hochster_betti_oracle(&k), Err(Error::OverScale { .. })));
    }

    #[test]
    fn principal_ideal_has_single_betti_number() {
        // Δ = boundary of abc, so I_Δ = (abc)
        let k = c(&["a", "b", "c"], &["ab", "bc", "ac"]);
        let t = hochster_betti_oracle(&k).unwrap();
        let mut expected = BettiTable::new();
        expected.add(0, 3, 1);
        assert_eq!(t, expected);
    }

    #[test]
    fn two_generator_ideal() {
        // Δ = ⟨ab, c⟩ on {a,b,c}: I = (ac, bc), resolution 0 -> S(-3) -> S(-2)^2
        let k = c(&["a", "b", "c"], &["ab", "c"]);
        let t = hochster_betti_oracle(&k).unwrap();
        let mut expected = BettiTable::new();
        expected.add(0, 2, 2);
        expected.add(1, 3, 1);
        assert_eq!(t, expected);
    }
}
