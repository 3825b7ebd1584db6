//! Desk-scale check of the chordal case of the f-vector / h-vector equality.
//!
//! Forward: for chordal `G` and a clique partition `π`, whiskering `Ind(G)`
//! gives a balanced vertex decomposable complex with `h = f(Ind(G))`, equal to
//! `Ind(G^π)` with `G^π` chordal. Reverse: when `Ind(G)` is pure it is
//! balanced and vertex decomposable, the free-vertex facet `F` is a facet
//! restriction, and `h(Ind(G)) = f(Ind(G|_{V∖F}))` with `G|_{V∖F}` chordal.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::chordal::{chordal_free_vertex_facet, hhz_check, is_chordal};
use super::enumerate::{chordal_graphs, graphs_up_to_isomorphism};
use super::graph::{
    clique_whisker, coloring_from_clique_partition, independence_complex, CliquePartition, Graph,
};
use super::restriction::reverse_whisker_at;
use crate::coloring::min_coloring;
use crate::complex::{Face, Universe};
use crate::decompose::{is_vertex_decomposable, whisker_shelling_order};
use crate::error::{Error, Result};
use crate::whisker::whisker;

pub const EXHAUSTIVE_LIMIT: usize = 7;
pub const SAMPLED_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExploreMode {
    Exhaustive,
    Sampled { seed: u64, samples: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExploreRow {
    pub n: usize,
    /// Graphs considered: all isomorphism classes, or samples drawn.
    pub graphs: usize,
    pub chordal: usize,
    pub pure: usize,
    pub reversed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExploreReport {
    pub max_n: usize,
    pub mode: ExploreMode,
    pub rows: Vec<ExploreRow>,
    /// Distinct f-vectors of chordal independence complexes seen.
    pub f_vectors: BTreeSet<Vec<i64>>,
    /// Distinct h-vectors of pure chordal independence complexes seen.
    pub h_vectors: BTreeSet<Vec<i64>>,
    pub violations: Vec<String>,
}

impl ExploreReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        match &self.mode {
            ExploreMode::Exhaustive => {
                let _ = writeln!(out, "explore max-n {} exhaustive", self.max_n);
            }
            ExploreMode::Sampled { seed, samples } => {
                let _ = writeln!(out, "explore max-n {} sampled seed {seed} samples {samples}", self.max_n);
            }
        }
        out.push_str("n\tgraphs\tchordal\tpure\treversed\n");
        for r in &self.rows {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", r.n, r.graphs, r.chordal, r.pure, r.reversed);
        }
        let _ = writeln!(out, "distinct f-vectors of chordal Ind(G): {}", self.f_vectors.len());
        let _ = writeln!(out, "distinct h-vectors of pure chordal Ind(G): {}", self.h_vectors.len());
        let _ = writeln!(out, "violations: {}", self.violations.len());
        for v in &self.violations {
            let _ = writeln!(out, "VIOLATION {v}");
        }
        out
    }
}

#[derive(Default)]
struct Verdict {
    pure: bool,
    reversed: bool,
    f: Vec<i64>,
    h: Option<Vec<i64>>,
    violations: Vec<String>,
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|&(a, b)| format!("{}-{}", g.universe().label(a), g.universe().label(b)))
        .collect();
    format!("graph on {} vertices [{}]", g.vertex_count(), edges.join(" "))
}

fn check_forward(g: &Graph, pi: &CliquePartition) -> Result<()> {
    let ind = independence_complex(g);
    let chi = coloring_from_clique_partition(g, pi)?;
    let w = whisker(&ind, &chi)?;
    let violation = |m: &str| Err(Error::TheoremViolation(m.to_string()));
    if !w.complex().h_vector()?.eq_up_to_trailing_zeros(&ind.f_vector()?) {
        return violation("h of the whiskered complex differs from f(Ind(G))");
    }
    let gp = clique_whisker(g, pi)?;
    if &independence_complex(&gp) != w.complex() {
        return violation("Ind(G^π) differs from the whiskered complex");
    }
    if !is_chordal(&gp).is_chordal() {
        return violation("G^π is not chordal");
    }
    match is_vertex_decomposable(w.complex())? {
        Some(cert) if cert.verify(w.complex()) => {}
        _ => return violation("whiskered complex has no verified shedding certificate"),
    }
    whisker_shelling_order(&w)?;
    Ok(())
}

fn check_reverse(g: &Graph) -> Result<Vec<i64>> {
    let ind = independence_complex(g);
    let violation = |m: &str| Err(Error::TheoremViolation(m.to_string()));
    let s = (ind.dimension()? + 1).max(1) as usize;
    let Some(chi) = min_coloring(&ind, s) else {
        return violation("pure Ind(G) is not balanced");
    };
    match is_vertex_decomposable(&ind)? {
        Some(cert) if cert.verify(&ind) => {}
        _ => return violation("pure Ind(G) is not vertex decomposable"),
    }
    let f = chordal_free_vertex_facet(g)?;
    let rev = reverse_whisker_at(&ind, &chi, f)?;
    let rest = g.vertices().difference(f);
    let sub = g.induced(rest);
    if rev.restricted != independence_complex(&sub) {
        return violation("restriction differs from Ind(G|_{V∖F})");
    }
    if !is_chordal(&sub).is_chordal() {
        return violation("G|_{V∖F} is not chordal");
    }
    Ok(rev.h.trimmed().to_vec())
}

fn examine(g: &Graph) -> Verdict {
    let mut v = Verdict::default();
    let ind = independence_complex(g);
    v.f = ind.f_vector().expect("Ind(G) is never void").entries;
    let mut partitions = vec![CliquePartition::singletons(g)];
    let greedy = CliquePartition::greedy(g);
    if greedy != partitions[0] {
        partitions.push(greedy);
    }
    for pi in &partitions {
        if let Err(e) = check_forward(g, pi) {
            v.violations.push(format!("forward, {} classes: {e}", pi.classes().len()));
        }
    }
    match hhz_check(g) {
        Ok(r) if r.agrees() => {}
        Ok(r) => v.violations.push(format!(
            "unmixed = {} but free-vertex partition = {}",
            r.unmixed, r.partition_holds
        )),
        Err(e) => v.violations.push(format!("hhz: {e}")),
    }
    v.pure = ind.is_pure().expect("Ind(G) is never void");
    if v.pure {
        match check_reverse(g) {
            Ok(h) => {
                v.reversed = true;
                v.h = Some(h);
            }
            Err(e) => v.violations.push(format!("reverse: {e}")),
        }
    }
    v.violations = v.violations.into_iter().map(|m| format!("{}: {m}", describe(g))).collect();
    v
}

/// Random chordal graph: each new vertex is joined to a clique of the graph
/// built so far, so the insertion order reversed is a perfect elimination
/// ordering.
pub fn random_chordal_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let mut clique = Face::EMPTY;
        for u in 0..v {
            if rng.random_bool(0.5) && Face::from_bits(adj[u]).intersection(clique) == clique {
                clique = clique.with(u);
            }
        }
        for u in clique.iter() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            edges.push((u, v));
        }
    }
    let universe = Arc::new(Universe::new((1..=n).map(|i| i.to_string())).expect("distinct labels"));
    Graph::new(universe, edges).expect("simple edges")
}

fn merge(report: &mut ExploreReport, row: &mut ExploreRow, verdicts: Vec<Verdict>) {
    for v in verdicts {
        row.pure += v.pure as usize;
        row.reversed += v.reversed as usize;
        report.f_vectors.insert(v.f);
        if let Some(h) = v.h {
            report.h_vectors.insert(h);
        }
        report.violations.extend(v.violations);
    }
}

/// Exhaustive over chordal graphs on `0..=max_n` vertices up to isomorphism.
pub fn explore_exhaustive(max_n: usize) -> Result<ExploreReport> {
    if max_n > EXHAUSTIVE_LIMIT {
        return Err(Error::OverScale {
            size: max_n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut report = ExploreReport {
        max_n,
        mode: ExploreMode::Exhaustive,
        rows: Vec::new(),
        f_vectors: BTreeSet::new(),
        h_vectors: BTreeSet::new(),
        violations: Vec::new(),
    };
    for n in 0..=max_n {
        let all = graphs_up_to_isomorphism(n).len();
        let chordal = chordal_graphs(n);
        let mut row = ExploreRow {
            n,
            graphs: all,
            chordal: chordal.len(),
            ..Default::default()
        };
        let verdicts: Vec<Verdict> = chordal.par_iter().map(examine).collect();
        merge(&mut report, &mut row, verdicts);
        report.rows.push(row);
    }
    // every reverse h-vector is the f-vector of a smaller chordal Ind, all of
    // which were enumerated
    for h in &report.h_vectors {
        if !report.f_vectors.contains(h) {
            report
                .violations
                .push(format!("h-vector {h:?} is not the f-vector of any chordal Ind(G)"));
        }
    }
    Ok(report)
}

/// `samples` random chordal graphs on exactly `n` vertices.
pub fn explore_sampled(n: usize, seed: u64, samples: usize) -> Result<ExploreReport> {
    if n > SAMPLED_LIMIT {
        return Err(Error::OverScale {
            size: n,
            limit: SAMPLED_LIMIT,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..samples).map(|_| random_chordal_graph(n, &mut rng)).collect();
    let mut report = ExploreReport {
        max_n: n,
        mode: ExploreMode::Sampled { seed, samples },
        rows: Vec::new(),
        f_vectors: BTreeSet::new(),
        h_vectors: BTreeSet::new(),
        violations: Vec::new(),
    };
    let mut row = ExploreRow {
        n,
        graphs: samples,
        ..Default::default()
    };
    let verdicts: Vec<Verdict> = graphs
        .par_iter()
        .map(|g| {
            if is_chordal(g).is_chordal() {
                examine(g)
            } else {
                Verdict {
                    violations: vec![format!("{}: sampler produced a non-chordal graph", describe(g))],
                    ..Default::default()
                }
            }
        })
        .collect();
    row.chordal = verdicts.iter().filter(|v| !v.f.is_empty()).count();
    merge(&mut report, &mut row, verdicts);
    report.rows.push(row);
    Ok(report)
}
