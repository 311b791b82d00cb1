//! Quadratic forms over GF(2), extraspecial 2-groups, the Cayley graphs
//! they generate, and exact symmetry certificates for those graphs.
//!
//! The crate is organized bottom-up:
//!
//! - [`gf2`]: word-packed vectors and matrices over GF(2).
//! - [`quadratic`]: quadratic forms, their bilinearization, radical,
//!   Arf-invariant classification, and totally singular subspaces.
//! - [`symmetric_basis`]: bases on which the form vanishes and all pairs
//!   pair to 1, with an explicit inductive construction and a brute-force
//!   oracle.
//! - [`extraspecial`]: extraspecial 2-groups in normal form over their
//!   central quotient, with cocycle multiplication and the permutation
//!   action on generators.
//! - [`graph`] / [`cayley`] / [`formats`]: Cayley graphs, hypercubes,
//!   central quotients, covers, cycle sequences, and the graph6 / DIMACS /
//!   JSON codecs.
//! - [`perm`] / [`aut`] / [`symmetry`]: permutation groups with stabilizer
//!   chains, a partition-refinement automorphism engine, and the
//!   certificate layer (transitivity, normality, covers, local triviality).

pub mod aut;
pub mod bitset;
pub mod cayley;
pub mod error;
pub mod extraspecial;
pub mod formats;
pub mod gf2;
pub mod graph;
pub mod perm;
pub mod quadratic;
pub mod symmetric_basis;
pub mod symmetry;

pub use aut::automorphism_group;
pub use bitset::BitSet;
pub use cayley::{
    build_cayley, center_fibers, eight_cycle, even_occurrence_check, extract_cycle_sequence,
    quotient_by_center, CycleSequence,
};
pub use error::{Error, Result};
pub use extraspecial::{ExtraspecialGroup, GroupElement};
pub use gf2::{Matrix, Vector};
pub use graph::{
    complete_bipartite, complete_graph, cycle_graph, hypercube, is_cover, path_graph, petersen,
    CoverReport, Graph, Labels,
};
pub use perm::{PermGroup, Permutation};
pub use quadratic::{FormType, QuadraticForm};
pub use symmetric_basis::{BasisOutcome, SymmetricBasis};
pub use symmetry::{
    fixed_cycle_check, is_normal_cayley, is_normal_subgroup, is_two_arc_transitive,
    is_vertex_transitive, normality_witness, pointwise_neighborhood_stabilizer,
    right_regular_embedding, sigma_tilde_generator_perms, sigma_tilde_vertex_perm,
    verify_main_theorem, verify_main_theorem_with, CheckOutcome, TheoremReport,
};
