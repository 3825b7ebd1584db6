use std::collections::BTreeMap;
use std::fmt::Write;

use crate::complex::{binomial, IntVector};
use crate::error::{Error, Result};

/// Graded Betti numbers `β_{i,j}` of an ideal, by homological index `i` and
/// internal degree `j`. Only non-zero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn merge(mut self, other: BettiTable) -> Self {
        for ((i, j), v) in other.entries {
            self.add(i, j, v);
        }
        self
    }

    /// `((i, j), β_{i,j})` sorted by `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a non-zero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Total Betti numbers `β_i = Σ_j β_{i,j}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.projective_dimension().map_or(0, |p| p + 1);
        let mut out = vec![0; len];
        for ((i, _), v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    /// Every entry sits in degree `j = i + degree`.
    pub fn is_linear(&self, degree: usize) -> bool {
        self.entries.keys().all(|(i, j)| *j == i + degree)
    }

    /// Header `i\tj\tbeta`, then one row per non-zero entry.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("i\tj\tbeta\n");
        for ((i, j), v) in &self.entries {
            let _ = writeln!(out, "{i}\t{j}\t{v}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskerBetti {
    pub table: BettiTable,
    /// `proj-dim(I_{Δ_χ^∨}) = reg(R/I_{Δ_χ}) = d + 1`.
    pub projective_dimension: usize,
    pub regularity: usize,
}

fn check_f_vector(f: &IntVector, n: usize, s: usize) -> Result<()> {
    let bad = |m: String| Err(Error::MalformedFVector(m));
    if f.offset != -1 {
        return bad(format!("offset {} instead of -1", f.offset));
    }
    if f.entries.first() != Some(&1) {
        return bad(format!("{f} does not start with f_-1 = 1"));
    }
    if f.entries.iter().any(|&e| e <= 0) {
        return bad(format!("{f} has a non-positive entry"));
    }
    if f.entries.len() > 1 && f.entries[1] as u64 > n as u64 {
        return bad(format!("{f} has more than n = {n} vertices"));
    }
    let needed = f.entries.len() - 1;
    if s == 0 || s < needed {
        return bad(format!("{s} classes cannot colour a complex of dimension {}", needed as isize - 1));
    }
    Ok(())
}

/// Betti numbers of the Alexander dual ideal of a whiskered complex from the
/// f-vector of the source:
/// `β_{i,i+n} = Σ_{j=i}^{d+1} C(j, i) f_{j-1}`.
pub fn whisker_dual_betti(f: &IntVector, n: usize, s: usize) -> Result<WhiskerBetti> {
    check_f_vector(f, n, s)?;
    let top = f.entries.len() - 1; // d + 1
    let mut table = BettiTable::new();
    for i in 0..=top {
        let mut acc: u128 = 0;
        for j in i..=top {
            acc = binomial(j as u64, i as u64)
                .checked_mul(f.entries[j] as u128)
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
        table.add(i, i + n, u64::try_from(acc).map_err(|_| Error::Overflow)?);
    }
    Ok(WhiskerBetti {
        table,
        projective_dimension: top,
        regularity: top,
    })
}

/// Compare `Σ_k β_k t^k` with `Σ_i h_i (t+1)^i` coefficient by coefficient.
pub fn eagon_reiner_poly_check(h: &IntVector, betti: &BettiTable) -> bool {
    let mut expanded = vec![0i128; h.entries.len()];
    for (i, &hi) in h.entries.iter().enumerate() {
        for (k, slot) in expanded.iter_mut().enumerate().take(i + 1) {
            *slot += binomial(i as u64, k as u64) as i128 * i128::from(hi);
        }
    }
    let totals = betti.totals();
    let len = expanded.len().max(totals.len());
    (0..len).all(|k| {
        expanded.get(k).copied().unwrap_or(0) == totals.get(k).map_or(0, |&t| i128::from(t))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[(usize, usize, u64)]) -> BettiTable {
        let mut t = BettiTable::new();
        for &(i, j, v) in rows {
            t.add(i, j, v);
        }
        t
    }

    #[test]
    fn running_example_table() {
        let w = whisker_dual_betti(&IntVector::f_vector(vec![1, 4, 5, 1]), 4, 3).unwrap();
        assert_eq!(w.table, table(&[(0, 4, 11), (1, 5, 17), (2, 6, 8), (3, 7, 1)]));
        assert_eq!(w.projective_dimension, 3);
        assert_eq!(w.regularity, 3);
        assert!(w.table.is_linear(4));
        assert_eq!(w.table.to_tsv(), "i\tj\tbeta\n0\t4\t11\n1\t5\t17\n2\t6\t8\n3\t7\t1\n");
    }

    #[test]
    fn small_tables() {
        let w = whisker_dual_betti(&IntVector::f_vector(vec![1]), 5, 2).unwrap();
        assert_eq!(w.table, table(&[(0, 5, 1)]));
        let w = whisker_dual_betti(&IntVector::f_vector(vec![1, 3]), 3, 1).unwrap();
        assert_eq!(w.table, table(&[(0, 3, 4), (1, 4, 3)]));
    }

    #[test]
    fn malformed_f_vectors() {
        for (f, n, s) in [
            (IntVector::h_vector(vec![1, 2]), 2, 2),
            (IntVector::f_vector(vec![2, 2]), 2, 2),
            (IntVector::f_vector(vec![1, 0]), 2, 2),
            (IntVector::f_vector(vec![1, 3]), 2, 2),
            (IntVector::f_vector(vec![1, 3, 1]), 3, 1),
            (IntVector::f_vector(vec![]), 3, 1),
        ] {
            assert!(matches!(whisker_dual_betti(&f, n, s), Err(Error::MalformedFVector(_))), "{f:?}");
        }
    }

    #[test]
    fn eagon_reiner_examples() {
        let h = IntVector::h_vector(vec![1, 4, 5, 1]);
        assert!(eagon_reiner_poly_check(&h, &table(&[(0, 4, 11), (1, 5, 17), (2, 6, 8), (3, 7, 1)])));
        assert!(!eagon_reiner_poly_check(&h, &table(&[(0, 4, 11), (1, 5, 17), (2, 6, 8)])));
        assert!(eagon_reiner_poly_check(&IntVector::h_vector(vec![1]), &table(&[(0, 2, 1)])));
        assert!(eagon_reiner_poly_check(&IntVector::h_vector(vec![1, 3]), &table(&[(0, 3, 4), (1, 4, 3)])));
        assert!(eagon_reiner_poly_check(&IntVector::h_vector(vec![1, 3, 0]), &table(&[(0, 3, 4), (1, 4, 3)])));
    }
}
