//! Generalized splines on edge-labeled graphs.
//!
//! An edge-labeled graph `(G, α)` attaches an ideal of a commutative base
//! ring to every edge. A spline is a vertex labeling `ρ: V → R` whose
//! difference across every edge lies in that edge's ideal. This crate
//! provides exact arithmetic for three base rings (`Z`, `Z/mZ`, `Z[x]`),
//! finitely generated ideals with certified membership, simple-path
//! enumeration and path-ideal computations, constructive spline builders
//! (path, tree, cycle, and a CRT-driven builder for arbitrary connected
//! graphs over `Z` and `Z/mZ`), decision machinery for the Universal
//! Difference Property on pasted graphs, and transport of splines across
//! isomorphisms of edge-labeled graphs.
//!
//! File formats for graphs, splines, and isomorphisms live in [`fileio`];
//! the `gsplines` binary in the companion CLI crate exposes every
//! operation on those files.

pub mod error;
pub mod fileio;
pub mod graph;
pub mod iso;
pub mod ring;
pub mod spline;
pub mod udp;

pub use error::Error;
pub use graph::{EdgeLabeledGraph, GraphBuilder, Path};
pub use iso::{transport_spline, verify_iso, IsoVerdict, LabeledIso};
pub use ring::{
    crt_solve, decompose_into_sum, Automorphism, CrtOutcome, Ideal, MembershipVerdict,
    NonMembershipCertificate, RingDescriptor, RingValue, Trivalent,
};
pub use spline::{
    build_cycle_spline, build_path_spline, build_spline_crt, build_tree_spline, verify_labeling,
    Spline, VerifyOutcome,
};
pub use udp::{
    brute_force_udp, build_pasted_spline, check_pasting_equation, find_cut_decomposition,
    verify_non_udp_witness, verify_non_udp_witness_bounded, BruteForceConfig, PastingCheck,
    PastingDecomposition, UdpReport, UdpVerdict, WitnessOutcome, WitnessReport,
};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
