//! Finite simplicial complexes over a labelled vertex universe of at most 64
//! vertices. Faces are bitmasks; a complex is stored as its canonical facet
//! list.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices, one bit per vertex of the owning universe.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        Face(1 << v)
    }

    /// The face `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`, so the empty face has dimension -1.
    pub fn dimension(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Smallest vertex, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing index order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    /// Every subset of this face, including the empty face and itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Face::EMPTY, Face::with)
    }
}

/// Canonical order: cardinality first, then the bitmask value.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Face(cur))
    }
}

/// Ordered, labelled vertex set. The position of a label is its vertex index.
#[derive(Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::UniverseTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(label.clone()));
            }
        }
        Ok(Universe { labels, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn full_face(&self) -> Face {
        Face::full(self.len())
    }

    pub fn face<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Face> {
        labels
            .into_iter()
            .map(|l| {
                self.index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
            })
            .collect()
    }

    /// Labels of a face in universe order.
    pub fn face_labels(&self, face: Face) -> Vec<&str> {
        face.iter().map(|v| self.label(v)).collect()
    }

    /// Space-separated labels, `{}` for the empty face.
    pub fn format_face(&self, face: Face) -> String {
        if face.is_empty() {
            "{}".to_string()
        } else {
            self.face_labels(face).join(" ")
        }
    }

    /// This universe followed by `extra`; label collisions are an error.
    pub fn extended<S: AsRef<str>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut labels = self.labels.clone();
        for l in extra {
            let l = l.as_ref();
            if self.index.contains_key(l) {
                return Err(Error::LabelCollision(l.to_string()));
            }
            labels.push(l.to_string());
        }
        Universe::new(labels)
    }

    /// The sub-universe on the vertices of `keep`, in the same relative order.
    pub fn restricted(&self, keep: Face) -> Self {
        Universe::new(keep.iter().map(|v| self.labels[v].clone()))
            .expect("sub-universe of a valid universe is valid")
    }

    pub(crate) fn check_face(&self, face: Face) -> Result<()> {
        if face.is_subset(self.full_face()) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!(
                "index {}",
                face.difference(self.full_face()).first().unwrap_or(0)
            )))
        }
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

/// Reduce a generator list to its inclusion-maximal members in canonical order.
pub(crate) fn canonical_facets(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.cmp(a));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.reverse();
    kept
}

/// A finite simplicial complex given by its facets.
///
/// The facet list is always canonical: inclusion-maximal, sorted by
/// cardinality and then bitmask. An empty facet list is the void complex;
/// the facet list `[∅]` is the irrelevant complex `{∅}`.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: Arc<Universe>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    pub fn new(universe: Arc<Universe>, generators: impl IntoIterator<Item = Face>) -> Result<Self> {
        let generators: Vec<Face> = generators.into_iter().collect();
        for g in &generators {
            universe.check_face(*g)?;
        }
        Ok(SimplicialComplex {
            universe,
            facets: canonical_facets(generators),
        })
    }

    /// Build a complex from vertex labels and generator label lists.
    pub fn from_labels<S: AsRef<str>, T: AsRef<str>, G: AsRef<[T]>>(
        universe: &[S],
        generators: &[G],
    ) -> Result<Self> {
        let universe = Universe::new(universe.iter().map(|s| s.as_ref().to_string()))?;
        let gens = generators
            .iter()
            .map(|g| universe.face(g.as_ref().iter().map(|s| s.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Arc::new(universe), gens)
    }

    pub(crate) fn from_canonical(universe: Arc<Universe>, facets: Vec<Face>) -> Self {
        debug_assert_eq!(canonical_facets(facets.clone()), facets);
        SimplicialComplex { universe, facets }
    }

    pub(crate) fn from_generators_unchecked(universe: Arc<Universe>, generators: Vec<Face>) -> Self {
        SimplicialComplex {
            universe,
            facets: canonical_facets(generators),
        }
    }

    pub fn void(universe: Arc<Universe>) -> Self {
        SimplicialComplex {
            universe,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn irrelevant(universe: Arc<Universe>) -> Self {
        SimplicialComplex {
            universe,
            facets: vec![Face::EMPTY],
        }
    }

    pub fn simplex(universe: Arc<Universe>, face: Face) -> Result<Self> {
        universe.check_face(face)?;
        Ok(SimplicialComplex {
            universe,
            facets: vec![face],
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// A single facet (this includes `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Union of all facets.
    pub fn support(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |a, f| a.union(*f))
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    fn require_nonvoid(&self) -> Result<()> {
        if self.is_void() {
            Err(Error::VoidComplex)
        } else {
            Ok(())
        }
    }

    pub fn dimension(&self) -> Result<isize> {
        self.require_nonvoid()?;
        Ok(self.facets.last().map_or(-1, |f| f.dimension()))
    }

    pub fn is_pure(&self) -> Result<bool> {
        self.require_nonvoid()?;
        Ok(self.facets.first().map(|f| f.len()) == self.facets.last().map(|f| f.len()))
    }

    pub fn f_vector(&self) -> Result<IntVector> {
        let d = self.dimension()?;
        let mut counts = vec![0i64; (d + 2) as usize];
        for face in self.faces() {
            counts[face.len()] += 1;
        }
        Ok(IntVector::f_vector(counts))
    }

    pub fn h_vector(&self) -> Result<IntVector> {
        h_from_f(&self.f_vector()?)
    }

    /// `{τ ∈ Δ : σ ∩ τ = ∅, σ ∪ τ ∈ Δ}`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if !self.contains_face(sigma) {
            return Err(Error::NotAFace(self.universe.format_face(sigma)));
        }
        Ok(self.link_unchecked(sigma))
    }

    pub(crate) fn link_unchecked(&self, sigma: Face) -> Self {
        let gens = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(**f))
            .map(|f| f.difference(sigma))
            .collect();
        Self::from_generators_unchecked(self.universe.clone(), gens)
    }

    /// `{τ ∈ Δ : σ ⊄ τ}`.
    pub fn deletion(&self, sigma: Face) -> Self {
        let mut gens = Vec::with_capacity(self.facets.len());
        for &f in &self.facets {
            if sigma.is_subset(f) {
                gens.extend(sigma.iter().map(|v| f.without(v)));
            } else {
                gens.push(f);
            }
        }
        Self::from_generators_unchecked(self.universe.clone(), gens)
    }

    /// `{F ∈ Δ : F ⊆ W}` on the same universe.
    pub fn restriction(&self, w: Face) -> Result<Self> {
        self.universe.check_face(w)?;
        let gens = self.facets.iter().map(|f| f.intersection(w)).collect();
        Ok(Self::from_generators_unchecked(self.universe.clone(), gens))
    }

    /// Re-index onto the sub-universe `w`, which must contain every facet.
    pub fn compact(&self, w: Face) -> Result<Self> {
        self.universe.check_face(w)?;
        if let Some(f) = self.facets.iter().find(|f| !f.is_subset(w)) {
            return Err(Error::UnknownVertex(
                self.universe.format_face(f.difference(w)),
            ));
        }
        let universe = Arc::new(self.universe.restricted(w));
        let gens = self.facets.iter().map(|f| compress(*f, w)).collect();
        Ok(Self::from_generators_unchecked(universe, gens))
    }

    /// Apply a vertex map into another universe. `map[v]` is the image of `v`.
    pub fn relabel(&self, universe: Arc<Universe>, map: &[usize]) -> Result<Self> {
        let gens = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| map[v]).collect())
            .collect::<Vec<Face>>();
        Self::new(universe, gens)
    }
}

/// Pack the bits of `face` selected by `mask` into the low bits.
pub(crate) fn compress(face: Face, mask: Face) -> Face {
    mask.iter()
        .enumerate()
        .filter(|(_, v)| face.contains(*v))
        .map(|(i, _)| i)
        .collect()
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if facet.is_empty() {
                write!(f, "∅")?;
            } else {
                write!(f, "{}", self.universe.face_labels(*facet).join(""))?;
            }
        }
        write!(f, "⟩")
    }
}

/// Exact integer vector with a starting index: -1 for f-vectors, 0 for h-vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntVector {
    pub offset: i32,
    pub entries: Vec<i64>,
}

impl IntVector {
    pub fn f_vector(entries: Vec<i64>) -> Self {
        IntVector {
            offset: -1,
            entries,
        }
    }

    pub fn h_vector(entries: Vec<i64>) -> Self {
        IntVector { offset: 0, entries }
    }

    /// Entry at index `i` in the vector's own indexing (so `f.get(-1) == 1`).
    pub fn get(&self, i: i32) -> Option<i64> {
        usize::try_from(i - self.offset)
            .ok()
            .and_then(|k| self.entries.get(k).copied())
    }

    pub fn trimmed(&self) -> &[i64] {
        let end = self
            .entries
            .iter()
            .rposition(|&e| e != 0)
            .map_or(0, |p| p + 1);
        &self.entries[..end]
    }

    /// Entry-wise equality after dropping trailing zeros; offsets are ignored.
    pub fn eq_up_to_trailing_zeros(&self, other: &IntVector) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// `h_k = Σ_{i≤k} (-1)^{k-i} C(d+1-i, k-i) f_{i-1}` where `d+1` is the length
/// of `f` minus one.
pub fn h_from_f(f: &IntVector) -> Result<IntVector> {
    if f.offset != -1 || f.entries.is_empty() {
        return Err(Error::MalformedFVector(format!("{f}")));
    }
    let top = f.entries.len() as u64 - 1; // d + 1
    let mut h = Vec::with_capacity(f.entries.len());
    for k in 0..=top {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let c = i128::try_from(binomial(top - i, k - i)).map_err(|_| Error::Overflow)?;
            let term = c
                .checked_mul(i128::from(f.entries[i as usize]))
                .ok_or(Error::Overflow)?;
            acc = if (k - i) % 2 == 0 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .ok_or(Error::Overflow)?;
        }
        h.push(i64::try_from(acc).map_err(|_| Error::Overflow)?);
    }
    Ok(IntVector::h_vector(h))
}

/// Inverse of [`h_from_f`]: `f_{k-1} = Σ_{i≤k} C(d+1-i, k-i) h_i`.
pub fn f_from_h(h: &IntVector) -> Result<IntVector> {
    if h.offset != 0 || h.entries.is_empty() {
        return Err(Error::MalformedFVector(format!("h-vector {h}")));
    }
    let top = h.entries.len() as u64 - 1;
    let mut f = Vec::with_capacity(h.entries.len());
    for k in 0..=top {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let c = i128::try_from(binomial(top - i, k - i)).map_err(|_| Error::Overflow)?;
            acc = c
                .checked_mul(i128::from(h.entries[i as usize]))
                .and_then(|t| acc.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
        f.push(i64::try_from(acc).map_err(|_| Error::Overflow)?);
    }
    Ok(IntVector::f_vector(f))
}
