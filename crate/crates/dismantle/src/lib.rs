//! Exact decision engine and certificate toolkit for the k-dismantlability
//! hierarchy on finite simple graphs.
//!
//! A vertex is k-dismantlable when its open neighbourhood induces a
//! (k-1)-dismantlable graph (cones are the (-1)-dismantlable graphs); a
//! graph is k-dismantlable when successive deletions of such vertices
//! reduce it to a point. This crate decides membership in each class D_k
//! and in their union (the non-evasive graphs), emits machine-checkable
//! move certificates, and ships the named graph families the hierarchy is
//! usually exercised on: cubions, the parasol, and skeletons of dunce-hat
//! and Bing's-house triangulations.

pub mod cert;
pub mod cliques;
pub mod engine;
pub mod game;
pub mod generators;
pub mod graph;
pub mod suite;
pub mod transitivity;

pub use cert::{verify_move_sequence, Certificate, FinalGraph, Move, VerifyOutcome};
pub use engine::{
    is_k_dismantlable, is_non_evasive, k_dismantlable_vertices, min_dismantling_index, stiff_core,
    ws_dismantlable, DismantleResult, MinIndexValue, Solver, Status,
};
pub use graph::{Graph, Mask, VertexPartition, VertexSet};
