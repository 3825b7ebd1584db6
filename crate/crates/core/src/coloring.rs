//! Vertex colourings: ordered partitions of the universe in which every facet
//! meets every class at most once.

use crate::complex::{Face, SimplicialComplex, Universe};
use crate::error::{Error, Result};

/// Ordered partition `V = V_1 ∪ ... ∪ V_s`; classes may be empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    classes: Vec<Face>,
}

impl Coloring {
    /// Checks only that the classes partition `universe`.
    pub fn new(universe: &Universe, classes: Vec<Face>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::NoClasses);
        }
        let mut seen = Face::EMPTY;
        for (j, c) in classes.iter().enumerate() {
            universe.check_face(*c)?;
            if !seen.is_disjoint(*c) {
                return Err(Error::NotAPartition(format!(
                    "class {} repeats {}",
                    j + 1,
                    universe.format_face(seen.intersection(*c))
                )));
            }
            seen = seen.union(*c);
        }
        if seen != universe.full_face() {
            return Err(Error::NotAPartition(format!(
                "uncovered vertices {}",
                universe.format_face(universe.full_face().difference(seen))
            )));
        }
        Ok(Coloring { classes })
    }

    pub fn from_labels<S: AsRef<str>, C: AsRef<[S]>>(universe: &Universe, classes: &[C]) -> Result<Self> {
        let classes = classes
            .iter()
            .map(|c| universe.face(c.as_ref().iter().map(|s| s.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, classes)
    }

    pub(crate) fn from_classes_unchecked(classes: Vec<Face>) -> Self {
        Coloring { classes }
    }

    pub fn classes(&self) -> &[Face] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }
}

fn check_partition(complex: &SimplicialComplex, chi: &Coloring) -> Result<()> {
    Coloring::new(complex.universe(), chi.classes.clone()).map(|_| ())
}

/// First `(facet, class index)` pair with `|F ∩ V_j| > 1`, if any.
pub fn coloring_conflict(complex: &SimplicialComplex, chi: &Coloring) -> Result<Option<(Face, usize)>> {
    check_partition(complex, chi)?;
    for &f in complex.facets() {
        for (j, c) in chi.classes.iter().enumerate() {
            if f.intersection(*c).len() > 1 {
                return Ok(Some((f, j)));
            }
        }
    }
    Ok(None)
}

pub fn validate_coloring(complex: &SimplicialComplex, chi: &Coloring) -> Result<bool> {
    Ok(coloring_conflict(complex, chi)?.is_none())
}

/// Like [`validate_coloring`], but a conflict becomes [`Error::InvalidColoring`].
pub fn require_valid(complex: &SimplicialComplex, chi: &Coloring) -> Result<()> {
    match coloring_conflict(complex, chi)? {
        None => Ok(()),
        Some((f, class)) => Err(Error::InvalidColoring {
            facet: complex.universe().format_face(f),
            class: class + 1,
        }),
    }
}

pub fn singleton_coloring(complex: &SimplicialComplex) -> Coloring {
    Coloring {
        classes: (0..complex.universe().len()).map(Face::singleton).collect(),
    }
}

/// Adjacency in the 1-skeleton: `u ~ v` iff they lie in a common facet.
fn conflict_graph(complex: &SimplicialComplex) -> Vec<u64> {
    let mut adj = vec![0u64; complex.universe().len()];
    for &f in complex.facets() {
        for v in f.iter() {
            adj[v] |= f.without(v).bits();
        }
    }
    adj
}

/// A valid colouring with exactly `s` classes, found by first-fit backtracking
/// over vertices in universe order. `None` when no such colouring exists.
pub fn min_coloring(complex: &SimplicialComplex, s: usize) -> Option<Coloring> {
    if s == 0 || complex.is_void() {
        return None;
    }
    let n = complex.universe().len();
    let adj = conflict_graph(complex);
    let mut color = vec![usize::MAX; n];

    fn assign(v: usize, n: usize, s: usize, adj: &[u64], color: &mut [usize]) -> bool {
        if v == n {
            return true;
        }
        for c in 0..s {
            let clash = Face::from_bits(adj[v]).iter().any(|u| color[u] == c);
            if !clash {
                color[v] = c;
                if assign(v + 1, n, s, adj, color) {
                    return true;
                }
            }
        }
        color[v] = usize::MAX;
        false
    }

    if !assign(0, n, s, &adj, &mut color) {
        return None;
    }
    let mut classes = vec![Face::EMPTY; s];
    for (v, c) in color.into_iter().enumerate() {
        classes[c] = classes[c].with(v);
    }
    Some(Coloring { classes })
}

/// `(dim Δ + 1)`-colourable. The complex `{∅}` needs one (possibly empty) class.
pub fn is_balanced(complex: &SimplicialComplex) -> Result<bool> {
    let d = complex.dimension()?;
    Ok(min_coloring(complex, (d + 1).max(1) as usize).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn running() -> SimplicialComplex {
        SimplicialComplex::from_labels(
            &["x1", "x2", "x3", "x4"],
            &[vec!["x1", "x2", "x3"], vec!["x2", "x4"], vec!["x3", "x4"]],
        )
        .unwrap()
    }

    fn restrictable() -> SimplicialComplex {
        SimplicialComplex::from_labels(
            &["1", "2", "3", "4", "5", "6"],
            &[vec!["1", "2", "4"], vec!["2", "4", "5"], vec!["2", "3", "5"], vec!["4", "5", "6"]],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        let c = running();
        let good = Coloring::from_labels(c.universe(), &[vec!["x1", "x4"], vec!["x2"], vec!["x3"]]).unwrap();
        assert!(validate_coloring(&c, &good).unwrap());
        let bad = Coloring::from_labels(c.universe(), &[vec!["x1", "x2"], vec!["x3"], vec!["x4"]]).unwrap();
        assert!(!validate_coloring(&c, &bad).unwrap());
        let (f, class) = coloring_conflict(&c, &bad).unwrap().unwrap();
        assert_eq!(c.universe().format_face(f), "x1 x2 x3");
        assert_eq!(class, 0);
        assert!(matches!(require_valid(&c, &bad), Err(Error::InvalidColoring { class: 1, .. })));
        assert!(validate_coloring(&c, &singleton_coloring(&c)).unwrap());
    }

    #[test]
    fn partition_errors() {
        let c = running();
        let u = c.universe();
        assert!(matches!(
            Coloring::from_labels(u, &[vec!["x1", "x4"], vec!["x2"]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            Coloring::from_labels(u, &[vec!["x1", "x4"], vec!["x2", "x1"], vec!["x3"]]),
            Err(Error::NotAPartition(_))
        ));
        assert_eq!(Coloring::new(u, vec![]), Err(Error::NoClasses));
        let empty_class = Coloring::from_labels(u, &[vec!["x1", "x4"], vec![], vec!["x2"], vec!["x3"]]).unwrap();
        assert!(validate_coloring(&c, &empty_class).unwrap());
    }

    #[test]
    fn singleton_colorings() {
        assert_eq!(singleton_coloring(&running()).class_count(), 4);
        let one = SimplicialComplex::from_labels(&["x1"], &[vec!["x1"]]).unwrap();
        assert_eq!(singleton_coloring(&one).class_count(), 1);
    }

    #[test]
    fn min_coloring_examples() {
        let c = running();
        let chi = min_coloring(&c, 3).unwrap();
        assert!(validate_coloring(&c, &chi).unwrap());
        assert_eq!(chi.class_count(), 3);

        let u = Arc::new(Universe::new(["a", "b", "c", "d"]).unwrap());
        let simplex = SimplicialComplex::simplex(u.clone(), u.full_face()).unwrap();
        assert!(min_coloring(&simplex, 3).is_none());
        assert!(min_coloring(&simplex, 4).is_some());

        let c3 = restrictable();
        let chi = min_coloring(&c3, 3).unwrap();
        assert!(validate_coloring(&c3, &chi).unwrap());
        // first-fit in universe order: 1,5 | 2,6 | 3,4
        let expected = Coloring::from_labels(c3.universe(), &[vec!["1", "5"], vec!["2", "6"], vec!["3", "4"]]).unwrap();
        assert_eq!(chi, expected);
    }

    #[test]
    fn balanced_examples() {
        assert!(is_balanced(&restrictable()).unwrap());
        assert!(is_balanced(&running()).unwrap());
        let u = Arc::new(Universe::new(["a", "b", "c"]).unwrap());
        assert!(is_balanced(&SimplicialComplex::simplex(u.clone(), u.full_face()).unwrap()).unwrap());
        let triangle_boundary = SimplicialComplex::from_labels(
            &["a", "b", "c"],
            &[vec!["a", "b"], vec!["b", "c"], vec!["a", "c"]],
        )
        .unwrap();
        assert!(!is_balanced(&triangle_boundary).unwrap());
        assert!(is_balanced(&SimplicialComplex::void(u)).is_err());
    }
}
