//! Hansen polytopes of split graphs.
//!
//! Builds the vertex-facet incidence structure of `H(G)` directly from the
//! stable sets and cliques of `G`, enumerates its nonempty faces, sorts them
//! into primitive, positive, negative and small classes, and compares the
//! face count against `3^d + p_G`, where `p_G` counts six-way node
//! partitions of the split graph.

pub mod bits;
pub mod corpus;
pub mod error;
pub mod face;
pub mod graph;
pub mod hanner;
pub mod hansen;
pub mod io;
pub mod nodeset;
pub mod partition;
pub mod rank;

pub use bits::BitSet;
pub use error::{Error, Result};
pub use face::{
    brute_force_faces, classify_faces, closure, enumerate_faces, f_vector, with_f_vector,
    ClassCounts, Face, FaceCensus, FaceClass, DEFAULT_FACE_BUDGET,
};
pub use graph::{
    build_threshold, complement, ltimes, random_split, random_threshold, recognize_split,
    recognize_threshold, Graph, SplitCert, SplitMix64, Step, ThresholdSeq,
};
pub use hanner::{fvec_polar, fvec_product, fvec_segment, hanner_from_threshold, FVector};
pub use hansen::{
    cliques, hansen_facets, hansen_vertices, incidence, stable_sets, IncidenceStructure,
    Perfectness, Sign, SignedSet,
};
pub use nodeset::{NodeSet, MAX_NODES};
pub use partition::{
    condition_a, condition_b, count_pg, count_pi, phi, psi, verify_main_theorem, Condition, Identities,
    TriPartition, VerifyReport,
};

/// `3^d`.
pub fn three_pow(d: usize) -> u64 {
    3u64.pow(d as u32)
}
