mod shelling;
mod vertex;

pub use shelling::{
    find_shelling, h_vector_from_shelling, order_from_source_faces, random_refining_order,
    restriction_sets, shelling_order, verify_shelling, whisker_shelling_order, ShellingOrder,
    ShellingSearch, EXHAUSTIVE_FACET_LIMIT, SEARCH_BUDGET,
};
pub use vertex::{is_vertex_decomposable, SheddingCertificate};
