//! Projective linear codes and anticodes over small finite fields.
//!
//! The crate builds generator matrices for simplex-complement families,
//! enumerates exact weight distributions, evaluates Griesmer-type bounds for
//! codes and anticodes, decides minimality, and certifies strong
//! walk-regularity of the associated coset graphs.

pub mod bounds;
pub mod catalog;
pub mod code;
pub mod construct;
pub mod error;
pub mod format;
pub mod gf;
pub mod matrix;
pub mod report;
pub mod swrg;

pub use bounds::{
    antigriesmer, antigriesmer_sum, classify_optimality, code_anticode_check, erdos_kleitman,
    griesmer, griesmer_sum, plotkin_anticode_floor, AntiGriesmer, BestKnownTable, BoundsReport,
    Griesmer, Optimality,
};
pub use catalog::{verify_manifest, CatalogReport, Manifest, Recipe, Status};
pub use code::{
    ab_criterion, DualDistance, Limits, LinearCode, MinimalityVerdict, WeightDistribution,
};
pub use construct::{
    complement, complement_points, complementary_mds_trivial, complementary_rs,
    concatenate_with_simplex, dual_bch_code, fixed_weight_anticode, kasami_code, ovoid_code,
    rs_code, simplex, transform_wd, two_subspace_code, ProjectivePointSet, WdTransformSpec,
};
pub use error::{Error, Result};
pub use format::CodeFile;
pub use gf::{relative_trace, Elem, Field, FieldSpec, SubfieldEmbedding};
pub use matrix::GfMatrix;
pub use report::{analyze, CodeReport};
pub use swrg::{
    coset_graph, spectrum_from_wd, verify_swrg, walk_counts, CosetGraph, SwrgCertificate,
    SwrgVerdict, WalkCounts, WalkParameters,
};
