//! Python bindings. Faces cross the boundary as lists of vertex labels and
//! every library error becomes a `ValueError`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use whiskerkit::algebra::{alexander_dual, stanley_reisner, whisker_betti, whisker_betti_oracle, BettiTable};
use whiskerkit::coloring::{is_balanced, min_coloring};
use whiskerkit::decompose::{find_shelling, is_vertex_decomposable, whisker_shelling_order, ShellingSearch};
use whiskerkit::graphs::{self, Chordality};
use whiskerkit::{io, Face, Universe};

fn py_err(e: whiskerkit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn labels(u: &Universe, f: Face) -> Vec<String> {
    u.face_labels(f).into_iter().map(str::to_string).collect()
}

fn betti_dict(t: &BettiTable) -> BTreeMap<(usize, usize), u64> {
    t.iter().collect()
}

/// A simplicial complex over labelled vertices.
#[pyclass(name = "Complex", module = "pywhiskerkit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyComplex(whiskerkit::SimplicialComplex);

#[pymethods]
impl PyComplex {
    #[new]
    fn new(vertices: Vec<String>, facets: Vec<Vec<String>>) -> PyResult<Self> {
        whiskerkit::SimplicialComplex::from_labels(&vertices, &facets)
            .map(PyComplex)
            .map_err(py_err)
    }

    /// Parse the text format; an embedded colouring block is dropped.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        io::parse_complex_with_coloring(text)
            .map(|(c, _)| PyComplex(c))
            .map_err(py_err)
    }

    fn to_text(&self) -> String {
        io::write_complex(&self.0)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.0.universe().labels().to_vec()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<String>> {
        let u = self.0.universe();
        self.0.facets().iter().map(|&f| labels(u, f)).collect()
    }

    fn dimension(&self) -> PyResult<isize> {
        self.0.dimension().map_err(py_err)
    }

    fn f_vector(&self) -> PyResult<Vec<i64>> {
        self.0.f_vector().map(|v| v.entries).map_err(py_err)
    }

    fn h_vector(&self) -> PyResult<Vec<i64>> {
        self.0.h_vector().map(|v| v.entries).map_err(py_err)
    }

    fn is_pure(&self) -> PyResult<bool> {
        self.0.is_pure().map_err(py_err)
    }

    fn is_balanced(&self) -> PyResult<bool> {
        is_balanced(&self.0).map_err(py_err)
    }

    fn is_vertex_decomposable(&self) -> PyResult<bool> {
        is_vertex_decomposable(&self.0).map(|c| c.is_some()).map_err(py_err)
    }

    /// A shelling as a list of facets, or `None` when there is none. Raises
    /// when the search budget runs out.
    fn shelling(&self) -> PyResult<Option<Vec<Vec<String>>>> {
        let u = self.0.universe();
        match find_shelling(&self.0).map_err(py_err)? {
            ShellingSearch::Found(s) => Ok(Some(s.order.iter().map(|&i| labels(u, self.0.facets()[i])).collect())),
            ShellingSearch::NotShellable => Ok(None),
            ShellingSearch::Unknown => Err(PyValueError::new_err("shelling search budget exhausted")),
        }
    }

    /// Minimal generators of the Stanley-Reisner ideal.
    fn sr_ideal(&self) -> PyResult<Vec<Vec<String>>> {
        let ideal = stanley_reisner(&self.0).map_err(py_err)?;
        let u = ideal.variables().clone();
        Ok(ideal.generators().iter().map(|&g| labels(&u, g)).collect())
    }

    fn alexander_dual(&self) -> PyResult<PyComplex> {
        alexander_dual(&self.0).map(PyComplex).map_err(py_err)
    }

    fn facet_restrictions(&self) -> Vec<Vec<String>> {
        let u = self.0.universe();
        graphs::facet_restrictions(&self.0)
            .into_iter()
            .map(|f| labels(u, f))
            .collect()
    }

    /// First-fit colouring with `classes` classes, as label lists.
    fn min_coloring(&self, classes: usize) -> Option<Vec<Vec<String>>> {
        let u = self.0.universe();
        min_coloring(&self.0, classes).map(|chi| chi.classes().iter().map(|&c| labels(u, c)).collect())
    }

    fn __repr__(&self) -> String {
        format!("Complex({:?}, {:?})", self.vertices(), self.facets())
    }
}

/// `Δ_χ` together with its source and colourings.
#[pyclass(name = "Whisker", module = "pywhiskerkit", frozen)]
pub struct PyWhisker(whiskerkit::WhiskerComplex);

#[pymethods]
impl PyWhisker {
    #[getter]
    fn complex(&self) -> PyComplex {
        PyComplex(self.0.complex().clone())
    }

    #[getter]
    fn source(&self) -> PyComplex {
        PyComplex(self.0.source().clone())
    }

    /// Colour classes of `Δ_χ`; class `j` gains `y_j`.
    #[getter]
    fn coloring(&self) -> Vec<Vec<String>> {
        let u = self.0.complex().universe();
        self.0.induced_coloring().classes().iter().map(|&c| labels(u, c)).collect()
    }

    #[getter]
    fn cone_facet(&self) -> Vec<String> {
        labels(self.0.complex().universe(), self.0.cone_facet())
    }

    /// Shelling order induced by a dimension-refining order of the source faces.
    fn shelling(&self) -> PyResult<Vec<Vec<String>>> {
        let c = self.0.complex();
        let s = whisker_shelling_order(&self.0).map_err(py_err)?;
        Ok(s.order.iter().map(|&i| labels(c.universe(), c.facets()[i])).collect())
    }

    /// Betti numbers `{(i, j): β_ij}` of the Alexander dual ideal, from the
    /// f-vector of the source.
    fn betti(&self) -> PyResult<BTreeMap<(usize, usize), u64>> {
        whisker_betti(&self.0).map(|b| betti_dict(&b.table)).map_err(py_err)
    }

    /// The same table through Hochster's formula.
    fn betti_oracle(&self) -> PyResult<BTreeMap<(usize, usize), u64>> {
        whisker_betti_oracle(&self.0).map(|t| betti_dict(&t)).map_err(py_err)
    }

    fn to_text(&self) -> String {
        io::write_whisker(&self.0)
    }
}

/// Whisker `complex` along colour classes given as label lists.
#[pyfunction]
fn whisker(complex: &PyComplex, classes: Vec<Vec<String>>) -> PyResult<PyWhisker> {
    let chi = whiskerkit::Coloring::from_labels(complex.0.universe(), &classes).map_err(py_err)?;
    whiskerkit::whisker(&complex.0, &chi).map(PyWhisker).map_err(py_err)
}

/// Undo a whiskering at a facet restriction. Returns the restricted complex,
/// its colour classes and the facet used.
#[pyfunction]
#[pyo3(signature = (complex, classes=None, facet=None))]
fn reverse(
    complex: &PyComplex,
    classes: Option<Vec<Vec<String>>>,
    facet: Option<Vec<String>>,
) -> PyResult<(PyComplex, Vec<Vec<String>>, Vec<String>)> {
    let c = &complex.0;
    let chi = classes
        .map(|cl| whiskerkit::Coloring::from_labels(c.universe(), &cl))
        .transpose()
        .map_err(py_err)?;
    let rev = match facet {
        None => graphs::reverse_whisker(c, chi.as_ref()),
        Some(f) => {
            let f = c.universe().face(&f).map_err(py_err)?;
            let chi = match chi {
                Some(chi) => chi,
                None => {
                    let s = (c.dimension().map_err(py_err)? + 1).max(1) as usize;
                    min_coloring(c, s).ok_or_else(|| py_err(whiskerkit::Error::NotBalanced))?
                }
            };
            graphs::reverse_whisker_at(c, &chi, f)
        }
    }
    .map_err(py_err)?;
    let u = rev.restricted.universe().clone();
    let out_classes = rev.coloring.classes().iter().map(|&k| labels(&u, k)).collect();
    Ok((PyComplex(rev.restricted), out_classes, labels(c.universe(), rev.facet)))
}

/// A simple graph over labelled vertices.
#[pyclass(name = "Graph", module = "pywhiskerkit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph(graphs::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Self> {
        graphs::Graph::from_labels(&vertices, &edges).map(PyGraph).map_err(py_err)
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.0.universe().labels().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        let u = self.0.universe();
        self.0
            .edges()
            .into_iter()
            .map(|(a, b)| (u.label(a).to_string(), u.label(b).to_string()))
            .collect()
    }

    fn independence_complex(&self) -> PyComplex {
        PyComplex(graphs::independence_complex(&self.0))
    }

    fn clique_complex(&self) -> PyComplex {
        PyComplex(graphs::clique_complex(&self.0))
    }

    fn is_unmixed(&self) -> bool {
        graphs::is_unmixed(&self.0)
    }

    /// `(True, perfect elimination order)` or `(False, induced cycle)`.
    fn chordality(&self) -> (bool, Vec<String>) {
        let u = self.0.universe();
        let name = |vs: Vec<usize>| vs.into_iter().map(|v| u.label(v).to_string()).collect();
        match graphs::is_chordal(&self.0) {
            Chordality::PerfectElimination(o) => (true, name(o)),
            Chordality::InducedCycle(c) => (false, name(c)),
        }
    }

    /// `G^π` for a clique partition given as label lists; `None` uses
    /// singletons.
    #[pyo3(signature = (classes=None))]
    fn clique_whisker(&self, classes: Option<Vec<Vec<String>>>) -> PyResult<PyGraph> {
        let pi = match classes {
            None => graphs::CliquePartition::singletons(&self.0),
            Some(cl) => {
                let faces = cl
                    .iter()
                    .map(|c| self.0.universe().face(c))
                    .collect::<whiskerkit::Result<Vec<_>>>()
                    .map_err(py_err)?;
                graphs::CliquePartition::new(&self.0, faces).map_err(py_err)?
            }
        };
        graphs::clique_whisker(&self.0, &pi).map(PyGraph).map_err(py_err)
    }

    /// A facet of the independence complex of a chordal unmixed graph that is
    /// a facet restriction.
    fn free_vertex_facet(&self) -> PyResult<Vec<String>> {
        graphs::chordal_free_vertex_facet(&self.0)
            .map(|f| labels(self.0.universe(), f))
            .map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Graph({:?}, {:?})", self.vertices(), self.edges())
    }
}

/// Check the chordal f-vector / h-vector equality up to `max_n` vertices;
/// past the exhaustive limit a seed is required. Returns the report text and
/// the list of violations.
#[pyfunction]
#[pyo3(signature = (max_n, seed=None, samples=100))]
fn explore(max_n: usize, seed: Option<u64>, samples: usize) -> PyResult<(String, Vec<String>)> {
    let report = match seed {
        None => graphs::explore_exhaustive(max_n),
        Some(seed) => graphs::explore_sampled(max_n, seed, samples),
    }
    .map_err(py_err)?;
    Ok((report.render(), report.violations))
}

#[pymodule]
fn pywhiskerkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyComplex>()?;
    m.add_class::<PyWhisker>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(whisker, m)?)?;
    m.add_function(wrap_pyfunction!(reverse, m)?)?;
    m.add_function(wrap_pyfunction!(explore, m)?)?;
    Ok(())
}
