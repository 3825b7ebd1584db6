use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("empty vertex label")]
    EmptyLabel,
    #[error("universe has {0} vertices; at most 64 are supported")]
    UniverseTooLarge(usize),
    #[error("operation is undefined on the void complex")]
    VoidComplex,
    #[error("complex is not pure")]
    NotPure,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("colouring is not a partition of the universe: {0}")]
    NotAPartition(String),
    #[error("invalid colouring: facet {facet} meets class {class} in more than one vertex")]
    InvalidColoring { facet: String, class: usize },
    #[error("colouring needs at least one class")]
    NoClasses,
    #[error("new vertex label `{0}` collides with an existing label")]
    LabelCollision(String),
    #[error("complexes live on different universes")]
    UniverseMismatch,
    #[error("facet order is not a permutation of the facets")]
    NotAPermutation,
    #[error("facet order is not a shelling order")]
    InvalidShelling,
    #[error("malformed f-vector: {0}")]
    MalformedFVector(String),
    #[error("the Alexander dual of the full simplex is the void complex")]
    DualOfSimplex,
    #[error("input has {size} vertices, oracle scale limit is {limit}")]
    OverScale { size: usize, limit: usize },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invalid clique partition: {0}")]
    InvalidCliquePartition(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not unmixed")]
    NotUnmixed,
    #[error("no facet restriction")]
    NoFacetRestriction,
    #[error("not balanced")]
    NotBalanced,
    #[error("colouring has {found} classes, expected {expected}")]
    WrongClassCount { expected: usize, found: usize },
    #[error("{0} is not a facet")]
    NotAFacet(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
