//! Quadratic embedding constants of small connected graphs.
//!
//! A graph is of QE class when its vertices can be placed in Euclidean space
//! with squared distances equal to graph distances. This crate computes the
//! quadratic embedding constant (QEC), decides QE membership exactly,
//! constructs explicit embeddings, and classifies all connected graphs of a
//! given small order into QE, primary non-QE and non-primary non-QE.

pub mod canon;
pub mod catalog;
pub mod classify;
pub mod closed_form;
pub mod embedding;
pub mod error;
pub mod exact;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod linalg;
pub mod ops;
pub mod qec;

pub use canon::{canonical_cert, canonical_form, is_isomorphic, CanonicalCert};
pub use catalog::{identify, load_catalog, Catalog, CatalogEntry, CatalogError};
pub use classify::{
    classify, classify_all, enumerate_connected, is_isometric_subgraph, non_qe_witness,
    sieve_trace, ClassificationRecord, SieveStep, SieveTrace, Summary, Verdict,
};
pub use closed_form::{
    family_closed_form, qec_formula, qec_join_regular, qec_multipartite, ClosedForm,
};
pub use embedding::{embed, pendant_rule, verify_embedding, Embedding, PendantLift};
pub use error::{Error, Result};
pub use exact::is_cnd_exact;
pub use family::{build_family, FamilySpec};
pub use graph::{diameter, distance_matrix, DistanceMatrix, Graph, MAX_ORDER};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use ops::{add_apex, compose, find_pendant_edge, induced_subgraph, ComposeKind, PendantEdge};
pub use qec::{adjacency_min_eigenvalue, distance_spectrum, qec, QecReport};
