//! Exact enumeration of spanning trees and rooted spanning forests of
//! labeled complete tripartite graphs.
//!
//! The crate has three layers that deliberately do not share logic:
//!
//! * [`formulas`]: closed-form product formulas and their pre-collapse
//!   sum-form evaluators, computed in exact rational arithmetic.
//! * [`oracle`]: independent ground truth via Laplacian determinants
//!   (Kirchhoff cofactor, all-minors root-set deletion, det(L + I)) and
//!   an exhaustive edge-subset census, plus a uniform spanning-tree
//!   sampler in [`sample`].
//! * [`construct`]: the constructive decomposition that builds every
//!   third-part-rooted spanning forest from a bipartite base forest and
//!   re-derives the counts one forest at a time.
//!
//! [`graph`] and [`exact`] supply the shared representations: part-wise
//! vertex numbering, parent-map forests, big integers, exact fractions,
//! and fraction-free determinants.

pub mod construct;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod sample;
mod unionfind;

pub use construct::{
    add_merge_edges, attach_free_part, close_to_roots, decompose,
    enumerate_bipartite_rooted_forests, enumerate_constructions, enumerate_constructions_for_roots,
    replay, ConstructionEnumeration, ConstructionOutcome, ConstructionPlan, ConstructionState,
    DEFAULT_CONSTRUCTION_VERTEX_LIMIT,
};
pub use error::{Error, Result};
pub use exact::{binomial, product_to_count, signed_power, BigCount, BigFraction, IntMatrix};
pub use formulas::{
    bipartite_forest_count, collapse_identity_check, forest_count_r_roots_in_part,
    forest_count_via_sum, rooted_tree_count_root_in_part, total_rooted_forest_count, total_via_sum,
    tree_count_via_sum, tripartite_tree_count,
};
pub use graph::{
    build_complete_multipartite, is_rooted_spanning_forest, root_distribution, LabeledGraph, Part,
    PartSizes, RootProfile, RootedForest,
};
pub use oracle::{
    exhaustive_census, forest_count_for_root_set, forest_count_r_in_part_oracle, laplacian,
    spanning_tree_count_kirchhoff, total_rooted_forest_oracle, ForestCensus,
    DEFAULT_CENSUS_EDGE_LIMIT,
};
pub use sample::{sample_spanning_tree, TreeSampler};
