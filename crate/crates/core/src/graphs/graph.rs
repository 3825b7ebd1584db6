use std::sync::Arc;

use crate::coloring::{require_valid, Coloring};
use crate::complex::{Face, SimplicialComplex, Universe};
use crate::error::{Error, Result};

/// Simple undirected graph on a labelled universe, adjacency as bitmasks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    universe: Arc<Universe>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(universe: Arc<Universe>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = universe.len();
        let mut adj = vec![0u64; n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) leaves the vertex set")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {}", universe.label(a))));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { universe, adj })
    }

    pub fn from_labels<S: AsRef<str>, T: AsRef<str>>(vertices: &[S], edges: &[(T, T)]) -> Result<Self> {
        let universe = Universe::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        let idx = |l: &T| {
            universe
                .index_of(l.as_ref())
                .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
        };
        let edges = edges
            .iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(Arc::new(universe), edges)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> Face {
        self.universe.full_face()
    }

    pub fn neighbours(&self, v: usize) -> Face {
        Face::from_bits(self.adj[v])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.adj.len())
            .flat_map(|a| {
                self.neighbours(a)
                    .iter()
                    .filter(move |&b| b > a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_clique(&self, set: Face) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbours(v)))
    }

    pub fn is_independent(&self, set: Face) -> bool {
        set.iter().all(|v| self.neighbours(v).is_disjoint(set))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, a)| !a & full & !(1 << v))
            .collect();
        Graph {
            universe: self.universe.clone(),
            adj,
        }
    }

    /// Induced subgraph `G|_W`, re-indexed onto `W`.
    pub fn induced(&self, w: Face) -> Graph {
        let keep: Vec<usize> = w.iter().collect();
        let adj = keep
            .iter()
            .map(|&v| crate::complex::compress(self.neighbours(v).intersection(w), w).bits())
            .collect();
        Graph {
            universe: Arc::new(self.universe.restricted(w)),
            adj,
        }
    }

    /// All inclusion-maximal cliques.
    pub fn maximal_cliques(&self) -> Vec<Face> {
        let mut out = Vec::new();
        self.bron_kerbosch(Face::EMPTY, self.vertices(), Face::EMPTY, &mut out);
        out.sort_unstable();
        out
    }

    fn bron_kerbosch(&self, r: Face, mut p: Face, mut x: Face, out: &mut Vec<Face>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(self.neighbours(u)).len())
            .expect("p ∪ x is non-empty");
        for v in p.difference(self.neighbours(pivot)).iter() {
            let nv = self.neighbours(v);
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out);
            p = p.without(v);
            x = x.with(v);
        }
    }
}

/// Faces are the independent sets of `g`; facets are the maximal ones.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_canonical(g.universe.clone(), g.complement().maximal_cliques())
}

/// Faces are the cliques of `g`.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_canonical(g.universe.clone(), g.maximal_cliques())
}

/// Partition of the vertex set into cliques.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliquePartition {
    classes: Vec<Face>,
}

impl CliquePartition {
    pub fn new(g: &Graph, classes: Vec<Face>) -> Result<Self> {
        let as_coloring = Coloring::new(g.universe(), classes.clone())
            .map_err(|e| Error::InvalidCliquePartition(e.to_string()))?;
        for (j, c) in as_coloring.classes().iter().enumerate() {
            if !g.is_clique(*c) {
                return Err(Error::InvalidCliquePartition(format!(
                    "class {} ({}) is not a clique",
                    j + 1,
                    g.universe().format_face(*c)
                )));
            }
        }
        Ok(CliquePartition { classes })
    }

    /// One class per vertex; the graph without vertices gets one empty class.
    pub fn singletons(g: &Graph) -> Self {
        let mut classes: Vec<Face> = (0..g.vertex_count()).map(Face::singleton).collect();
        if classes.is_empty() {
            classes.push(Face::EMPTY);
        }
        CliquePartition { classes }
    }

    /// First-fit: each vertex joins the first class it is adjacent to entirely.
    pub fn greedy(g: &Graph) -> Self {
        let mut classes: Vec<Face> = Vec::new();
        for v in 0..g.vertex_count() {
            match classes.iter_mut().find(|c| c.is_subset(g.neighbours(v))) {
                Some(c) => *c = c.with(v),
                None => classes.push(Face::singleton(v)),
            }
        }
        if classes.is_empty() {
            classes.push(Face::EMPTY);
        }
        CliquePartition { classes }
    }

    pub fn classes(&self) -> &[Face] {
        &self.classes
    }
}

/// `G^π`: one new vertex `y_i` per class, joined to every vertex of the class.
pub fn clique_whisker(g: &Graph, pi: &CliquePartition) -> Result<Graph> {
    let pi = CliquePartition::new(g, pi.classes.clone())?;
    let n = g.vertex_count();
    let universe = Arc::new(
        g.universe()
            .extended((1..=pi.classes.len()).map(|j| format!("y{j}")))?,
    );
    let mut edges = g.edges();
    for (j, c) in pi.classes.iter().enumerate() {
        edges.extend(c.iter().map(|x| (x, n + j)));
    }
    Graph::new(universe, edges)
}

/// The clique partition read as a colouring of `Ind(G)`.
pub fn coloring_from_clique_partition(g: &Graph, pi: &CliquePartition) -> Result<Coloring> {
    let pi = CliquePartition::new(g, pi.classes.clone())?;
    let chi = Coloring::new(g.universe(), pi.classes)?;
    require_valid(&independence_complex(g), &chi)
        .map_err(|e| Error::TheoremViolation(format!("clique partition is not a colouring of Ind(G): {e}")))?;
    Ok(chi)
}

/// All maximal independent sets have the same size.
pub fn is_unmixed(g: &Graph) -> bool {
    independence_complex(g)
        .is_pure()
        .expect("independence complexes are never void")
}
