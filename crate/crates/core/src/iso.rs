//! Isomorphisms of edge-labeled graphs and transport of splines across
//! them: a vertex bijection paired with a ring automorphism that carries
//! every edge ideal onto the corresponding image ideal.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Error;
use crate::graph::EdgeLabeledGraph;
use crate::ring::{Automorphism, RingValue, Trivalent};
use crate::spline::Spline;
use crate::Result;

/// A candidate isomorphism: callers supply the bijection, [`verify_iso`]
/// checks it. No isomorphism search is performed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledIso {
    pub vertex_map: BTreeMap<String, String>,
    pub automorphism: Automorphism,
}

impl LabeledIso {
    pub fn new(vertex_map: BTreeMap<String, String>, automorphism: Automorphism) -> Self {
        LabeledIso {
            vertex_map,
            automorphism,
        }
    }

    /// The identity isomorphism of a graph onto itself.
    pub fn identity(graph: &EdgeLabeledGraph) -> Self {
        let vertex_map = graph
            .vertices()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect();
        LabeledIso {
            vertex_map,
            automorphism: Automorphism::Identity,
        }
    }

    pub fn inverse_vertex_map(&self) -> BTreeMap<String, String> {
        self.vertex_map
            .iter()
            .map(|(k, v)| (v.clone(), k.clone()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoVerdict {
    Valid,
    Invalid { reason: String },
    /// Some polynomial label comparison could not be decided.
    Unknown,
}

impl IsoVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, IsoVerdict::Valid)
    }

    fn invalid(reason: impl Into<String>) -> Self {
        IsoVerdict::Invalid {
            reason: reason.into(),
        }
    }
}

/// Checks that `candidate` is an isomorphism of edge-labeled graphs from
/// `g` to `g_prime`: a vertex bijection preserving adjacency in both
/// directions whose automorphism maps every edge ideal onto the image
/// edge's ideal.
pub fn verify_iso(
    g: &EdgeLabeledGraph,
    g_prime: &EdgeLabeledGraph,
    candidate: &LabeledIso,
) -> Result<IsoVerdict> {
    g.ring().expect_same(g_prime.ring())?;
    candidate.automorphism.validate_for(g.ring())?;

    if candidate.vertex_map.len() != g.vertex_count()
        || g.vertex_count() != g_prime.vertex_count()
    {
        return Ok(IsoVerdict::invalid(format!(
            "vertex map has {} entries for {} source and {} target vertices",
            candidate.vertex_map.len(),
            g.vertex_count(),
            g_prime.vertex_count()
        )));
    }
    let mut seen_images = BTreeMap::new();
    for (from, to) in &candidate.vertex_map {
        if !g.has_vertex(from) {
            return Ok(IsoVerdict::invalid(format!(
                "`{from}` is not a vertex of the source graph"
            )));
        }
        if !g_prime.has_vertex(to) {
            return Ok(IsoVerdict::invalid(format!(
                "`{to}` is not a vertex of the target graph"
            )));
        }
        if let Some(previous) = seen_images.insert(to.clone(), from.clone()) {
            return Ok(IsoVerdict::invalid(format!(
                "`{previous}` and `{from}` both map to `{to}`"
            )));
        }
    }

    if g.edge_count() != g_prime.edge_count() {
        return Ok(IsoVerdict::invalid(format!(
            "edge counts differ: {} vs {}",
            g.edge_count(),
            g_prime.edge_count()
        )));
    }
    for (from, to, _) in g.edges() {
        let (fi, ti) = (&candidate.vertex_map[from], &candidate.vertex_map[to]);
        if !g_prime.has_edge(fi, ti) {
            return Ok(IsoVerdict::invalid(format!(
                "edge {from} -- {to} maps to the non-edge {fi} -- {ti}"
            )));
        }
    }
    let inverse = candidate.inverse_vertex_map();
    for (from, to, _) in g_prime.edges() {
        let (fi, ti) = (&inverse[from], &inverse[to]);
        if !g.has_edge(fi, ti) {
            return Ok(IsoVerdict::invalid(format!(
                "target edge {from} -- {to} pulls back to the non-edge {fi} -- {ti}"
            )));
        }
    }

    let mut undecided = false;
    for (from, to, label) in g.edges() {
        let image = candidate.automorphism.apply_ideal(label)?;
        let target_label =
            g_prime.edge_label(&candidate.vertex_map[from], &candidate.vertex_map[to])?;
        match image.equal(target_label)? {
            Trivalent::True => {}
            Trivalent::False => {
                return Ok(IsoVerdict::invalid(format!(
                    "label of {from} -- {to} maps to {image}, but the image edge carries {target_label}"
                )));
            }
            Trivalent::Unknown => undecided = true,
        }
    }
    if undecided {
        Ok(IsoVerdict::Unknown)
    } else {
        Ok(IsoVerdict::Valid)
    }
}

/// Transports a spline across a verified isomorphism:
/// `gamma(v') = phi2(rho(phi1^{-1}(v')))`. The result is re-verified on
/// the target graph.
pub fn transport_spline(
    rho: &Spline,
    iso: &LabeledIso,
    g_prime: &Arc<EdgeLabeledGraph>,
) -> Result<Spline> {
    match verify_iso(rho.graph(), g_prime, iso)? {
        IsoVerdict::Valid => {}
        IsoVerdict::Invalid { reason } => return Err(Error::InvalidIso(reason)),
        IsoVerdict::Unknown => {
            return Err(Error::InvalidIso(
                "label compatibility could not be decided".to_string(),
            ))
        }
    }
    let mut labeling: BTreeMap<String, RingValue> = BTreeMap::new();
    for (source, value) in rho.values() {
        let image = &iso.vertex_map[source];
        labeling.insert(image.clone(), iso.automorphism.apply(value)?);
    }
    Spline::new(g_prime, labeling)
}
