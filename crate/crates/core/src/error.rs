//! Error type shared by every module in the crate.

use crate::ring::RingDescriptor;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch {
        expected: RingDescriptor,
        found: RingDescriptor,
    },

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("unsupported ring {ring} for {operation}")]
    UnsupportedRing {
        ring: RingDescriptor,
        operation: &'static str,
    },

    #[error("invalid automorphism for ring {ring}: {reason}")]
    InvalidAutomorphism { ring: RingDescriptor, reason: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop on vertex `{0}` is not allowed")]
    SelfLoop(String),

    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(String, String),

    #[error("vertices `{0}` and `{1}` must be distinct")]
    IdenticalVertices(String, String),

    #[error("no path connects `{0}` and `{1}`")]
    DisconnectedPair(String, String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("intersection of non-principal polynomial ideals is not supported")]
    NonPrincipalIntersection,

    #[error("{target} is not in the sum of the given ideals (gcd {gcd} does not divide it)")]
    NotInSum { target: String, gcd: String },

    #[error("{target} is not in the ideal {ideal}")]
    NotInIdeal { target: String, ideal: String },

    #[error("membership of {target} in {ideal} could not be decided")]
    MembershipUndecided { target: String, ideal: String },

    #[error("graph is not a {0} graph")]
    WrongShape(&'static str),

    #[error("missing value for vertex `{0}`")]
    MissingVertexValue(String),

    #[error("labeling violates the edge condition on {0} -- {1}")]
    NotASpline(String, String),

    #[error("`{0}` is not a cut vertex")]
    NotACutVertex(String),

    #[error("removing `{0}` leaves {1} components; only two-sided pastings are supported")]
    MoreThanTwoSides(String, usize),

    #[error("`{vertex}` is not strictly on the {side} side of the cut `{cut}`")]
    SidesViolated {
        vertex: String,
        side: &'static str,
        cut: String,
    },

    #[error("pasting equation fails for ({0}, {1}); the requested difference need not be achievable")]
    PastingEquationFails(String, String),

    #[error("pasting equation could not be decided for ({0}, {1})")]
    PastingEquationUndecided(String, String),

    #[error("enumeration budget exceeded: {needed} assignments > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("isomorphism is not valid: {0}")]
    InvalidIso(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{file}: {detail}")]
    File { file: String, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
