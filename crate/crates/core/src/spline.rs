//! Splines (vertex labelings whose edge differences land in the edge
//! ideals), their ring/module operations, and the constructive builders
//! for paths, trees, cycles, and arbitrary connected graphs over `Z` and
//! `Z/mZ` (the latter through the elementwise CRT).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Error;
use crate::graph::EdgeLabeledGraph;
use crate::ring::{crt_solve, decompose_into_sum, CrtOutcome, Ideal, RingValue};
use crate::Result;

/// Result of checking a vertex labeling against every edge ideal.
/// `Unknown` can only arise over `Z[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Valid,
    Invalid { violations: Vec<EdgeCheck> },
    Unknown { undecided: Vec<EdgeCheck> },
}

impl VerifyOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, VerifyOutcome::Valid)
    }
}

/// One edge whose condition failed (or could not be decided).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCheck {
    pub from: String,
    pub to: String,
    pub difference: RingValue,
    pub label: Ideal,
}

/// Checks `labeling` on every edge of `graph`: the difference across edge
/// `uv` must belong to the ideal labeling `uv`. The labeling must assign
/// a ring-consistent value to exactly the graph's vertices.
pub fn verify_labeling(
    graph: &EdgeLabeledGraph,
    labeling: &BTreeMap<String, RingValue>,
) -> Result<VerifyOutcome> {
    for name in labeling.keys() {
        graph.vertex_index(name)?;
    }
    for name in graph.vertices() {
        let value = labeling
            .get(name)
            .ok_or_else(|| Error::MissingVertexValue(name.clone()))?;
        graph.ring().expect_same(value.ring())?;
    }
    let mut violations = Vec::new();
    let mut undecided = Vec::new();
    for (from, to, label) in graph.edges() {
        let difference = labeling[from].sub(&labeling[to])?;
        let verdict = label.contains(&difference)?;
        let check = || EdgeCheck {
            from: from.to_string(),
            to: to.to_string(),
            difference: difference.clone(),
            label: label.clone(),
        };
        if verdict.is_no() {
            violations.push(check());
        } else if verdict.is_unknown() {
            undecided.push(check());
        }
    }
    if !violations.is_empty() {
        Ok(VerifyOutcome::Invalid { violations })
    } else if !undecided.is_empty() {
        Ok(VerifyOutcome::Unknown { undecided })
    } else {
        Ok(VerifyOutcome::Valid)
    }
}

/// A verified spline: the edge condition has been checked on every edge.
/// Maps produced by the ring/module operations stay splines by closure,
/// so those skip re-verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spline {
    graph: Arc<EdgeLabeledGraph>,
    values: Vec<RingValue>,
}

impl Spline {
    /// Verifies `labeling` and wraps it. Fails with the first violated
    /// edge if invalid, or with an undecided-membership error when the
    /// polynomial checker cannot certify some edge.
    pub fn new(
        graph: &Arc<EdgeLabeledGraph>,
        labeling: BTreeMap<String, RingValue>,
    ) -> Result<Spline> {
        match verify_labeling(graph, &labeling)? {
            VerifyOutcome::Valid => Ok(Spline::from_checked(graph, &labeling)),
            VerifyOutcome::Invalid { violations } => {
                let v = &violations[0];
                Err(Error::NotASpline(v.from.clone(), v.to.clone()))
            }
            VerifyOutcome::Unknown { undecided } => {
                let u = &undecided[0];
                Err(Error::MembershipUndecided {
                    target: u.difference.to_string(),
                    ideal: u.label.to_string(),
                })
            }
        }
    }

    fn from_checked(graph: &Arc<EdgeLabeledGraph>, labeling: &BTreeMap<String, RingValue>) -> Spline {
        let values = graph
            .vertices()
            .iter()
            .map(|name| labeling[name].clone())
            .collect();
        Spline {
            graph: Arc::clone(graph),
            values,
        }
    }

    fn from_values_unchecked(graph: &Arc<EdgeLabeledGraph>, values: Vec<RingValue>) -> Spline {
        debug_assert_eq!(values.len(), graph.vertex_count());
        Spline {
            graph: Arc::clone(graph),
            values,
        }
    }

    /// The constant spline: every difference is zero, which belongs to
    /// every ideal.
    pub fn constant(graph: &Arc<EdgeLabeledGraph>, value: RingValue) -> Result<Spline> {
        graph.ring().expect_same(value.ring())?;
        let values = vec![value; graph.vertex_count()];
        Ok(Spline::from_values_unchecked(graph, values))
    }

    pub fn graph(&self) -> &Arc<EdgeLabeledGraph> {
        &self.graph
    }

    pub fn value(&self, vertex: &str) -> Result<&RingValue> {
        Ok(&self.values[self.graph.vertex_index(vertex)?])
    }

    /// Values in vertex-declaration order.
    pub fn values(&self) -> impl Iterator<Item = (&str, &RingValue)> {
        self.graph
            .vertices()
            .iter()
            .map(String::as_str)
            .zip(self.values.iter())
    }

    pub fn to_map(&self) -> BTreeMap<String, RingValue> {
        self.values()
            .map(|(name, value)| (name.to_string(), value.clone()))
            .collect()
    }

    pub fn difference(&self, u: &str, w: &str) -> Result<RingValue> {
        self.value(u)?.sub(self.value(w)?)
    }

    fn expect_same_graph(&self, other: &Spline) -> Result<()> {
        if self.graph == other.graph {
            Ok(())
        } else {
            Err(Error::Internal(
                "splines live on different graphs".to_string(),
            ))
        }
    }

    /// Pointwise sum; splines form a ring, so the result needs no
    /// re-verification.
    pub fn add(&self, other: &Spline) -> Result<Spline> {
        self.expect_same_graph(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spline::from_values_unchecked(&self.graph, values))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Spline) -> Result<Spline> {
        self.expect_same_graph(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spline::from_values_unchecked(&self.graph, values))
    }

    /// Scalar multiple `r * self` (the module action).
    pub fn scale(&self, r: &RingValue) -> Result<Spline> {
        self.graph.ring().expect_same(r.ring())?;
        let values = self
            .values
            .iter()
            .map(|v| r.mul(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spline::from_values_unchecked(&self.graph, values))
    }

    /// Adds the constant `r - self(v)` everywhere, producing a spline with
    /// value `r` at `v` and identical pairwise differences.
    pub fn translate(&self, vertex: &str, r: &RingValue) -> Result<Spline> {
        self.graph.ring().expect_same(r.ring())?;
        let shift = r.sub(self.value(vertex)?)?;
        let values = self
            .values
            .iter()
            .map(|v| v.add(&shift))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spline::from_values_unchecked(&self.graph, values))
    }
}

/// Shared tail of the path/tree constructions: values assigned along the
/// anchor path, then every remaining vertex copies its nearest assigned
/// vertex (multi-source BFS).
fn extend_by_nearest(
    graph: &EdgeLabeledGraph,
    mut assigned: BTreeMap<String, RingValue>,
) -> Result<BTreeMap<String, RingValue>> {
    let mut frontier: Vec<usize> = assigned
        .keys()
        .map(|name| graph.vertex_index(name))
        .collect::<Result<Vec<_>>>()?;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &v in &frontier {
            let value = assigned[graph.vertex_name(v)].clone();
            for n in graph.neighbors(graph.vertex_name(v))? {
                if !assigned.contains_key(n) {
                    assigned.insert(n.to_string(), value.clone());
                    next.push(graph.vertex_index(n)?);
                }
            }
        }
        frontier = next;
    }
    Ok(assigned)
}

/// Assigns suffix sums of `parts` along `path_vertices`: the last vertex
/// gets 0 and each earlier vertex adds its outgoing edge's part, so the
/// first vertex receives the full sum.
fn assign_partial_sums(
    path_vertices: &[String],
    parts: &[RingValue],
    out: &mut BTreeMap<String, RingValue>,
) {
    let ring = parts
        .first()
        .map(|p| p.ring().clone())
        .expect("path has at least one edge");
    let mut acc = RingValue::zero(&ring);
    for (i, name) in path_vertices.iter().enumerate().rev() {
        if i < path_vertices.len() - 1 {
            acc = acc.add(&parts[i]).expect("same ring");
        }
        out.insert(name.clone(), acc.clone());
    }
}

/// Builds a spline on a path graph with `rho(u) - rho(w) = x`, following
/// the constructive proof: decompose `x` along the unique `u`-`w` path,
/// accumulate partial sums backward from `rho(w) = 0`, and copy the
/// endpoint values to the vertices outside the `u`-`w` stretch.
pub fn build_path_spline(
    graph: &Arc<EdgeLabeledGraph>,
    u: &str,
    w: &str,
    x: &RingValue,
) -> Result<Spline> {
    if !graph.is_path_graph() {
        return Err(Error::WrongShape("path"));
    }
    build_tree_like(graph, u, w, x)
}

/// Builds a spline on a tree with `rho(u) - rho(w) = x`: path construction
/// on the unique `u`-`w` path, then every off-path vertex copies the value
/// of its nearest path vertex.
pub fn build_tree_spline(
    graph: &Arc<EdgeLabeledGraph>,
    u: &str,
    w: &str,
    x: &RingValue,
) -> Result<Spline> {
    if !graph.is_tree() {
        return Err(Error::WrongShape("tree"));
    }
    build_tree_like(graph, u, w, x)
}

fn build_tree_like(
    graph: &Arc<EdgeLabeledGraph>,
    u: &str,
    w: &str,
    x: &RingValue,
) -> Result<Spline> {
    graph.ring().expect_same(x.ring())?;
    let paths = graph.enumerate_paths(u, w)?;
    let path = paths
        .first()
        .ok_or_else(|| Error::DisconnectedPair(u.to_string(), w.to_string()))?;
    let edge_ideals = path
        .vertices()
        .windows(2)
        .map(|pair| graph.edge_label(&pair[0], &pair[1]).cloned())
        .collect::<Result<Vec<_>>>()?;
    let parts = decompose_into_sum(x, &edge_ideals)?;
    let mut assigned = BTreeMap::new();
    assign_partial_sums(path.vertices(), &parts, &mut assigned);
    let labeling = extend_by_nearest(graph, assigned)?;
    Spline::new(graph, labeling)
}

/// Builds a spline on a cycle with `rho(u) - rho(w) = x`, decomposing `x`
/// independently along the two internally disjoint `u`-`w` paths. Both
/// assignments give `x` at `u` and `0` at `w`, so they agree where they
/// meet.
pub fn build_cycle_spline(
    graph: &Arc<EdgeLabeledGraph>,
    u: &str,
    w: &str,
    x: &RingValue,
) -> Result<Spline> {
    if !graph.is_cycle() {
        return Err(Error::WrongShape("cycle"));
    }
    graph.ring().expect_same(x.ring())?;
    let paths = graph.enumerate_paths(u, w)?;
    debug_assert_eq!(paths.len(), 2);
    let intersection = graph.paths_intersection_ideal(u, w)?;
    if !intersection.contains(x)?.is_yes() {
        return Err(Error::NotInIdeal {
            target: x.to_string(),
            ideal: intersection.to_string(),
        });
    }
    let mut labeling = BTreeMap::new();
    for path in &paths {
        let edge_ideals = path
            .vertices()
            .windows(2)
            .map(|pair| graph.edge_label(&pair[0], &pair[1]).cloned())
            .collect::<Result<Vec<_>>>()?;
        let parts = decompose_into_sum(x, &edge_ideals)?;
        assign_partial_sums(path.vertices(), &parts, &mut labeling);
    }
    Spline::new(graph, labeling)
}

/// Builds a spline with `rho(u) - rho(w) = x` on any connected graph over
/// `Z` or `Z/mZ`, by the inductive CRT construction: vertices are
/// processed in BFS order from `u` (with `w` pre-assigned 0 and kept
/// last), and each new vertex solves the congruence system that keeps it
/// compatible with every already-assigned vertex.
pub fn build_spline_crt(
    graph: &Arc<EdgeLabeledGraph>,
    u: &str,
    w: &str,
    x: &RingValue,
) -> Result<Spline> {
    graph.ring().expect_same(x.ring())?;
    if graph.ring().is_polynomial() {
        return Err(Error::UnsupportedRing {
            ring: graph.ring().clone(),
            operation: "build_spline_crt",
        });
    }
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let u_index = graph.vertex_index(u)?;
    let w_index = graph.vertex_index(w)?;
    if u_index == w_index {
        return Err(Error::IdenticalVertices(u.to_string(), w.to_string()));
    }

    let intersection = graph.paths_intersection_ideal(u, w)?;
    if !intersection.contains(x)?.is_yes() {
        return Err(Error::NotInIdeal {
            target: x.to_string(),
            ideal: intersection.to_string(),
        });
    }

    // Assignments in order: u = x first, w = 0, intermediates by BFS.
    let mut assigned: Vec<(usize, RingValue)> = vec![
        (u_index, x.clone()),
        (w_index, RingValue::zero(graph.ring())),
    ];
    for v in graph.bfs_order(u_index) {
        if v == u_index || v == w_index {
            continue;
        }
        let name = graph.vertex_name(v);
        let congruences: Vec<(RingValue, Ideal)> = assigned
            .iter()
            .map(|(s, value)| {
                let ideal = graph.paths_intersection_ideal(graph.vertex_name(*s), name)?;
                Ok((value.clone(), ideal))
            })
            .collect::<Result<Vec<_>>>()?;
        match crt_solve(&congruences)? {
            CrtOutcome::Solved(value) => assigned.push((v, value)),
            CrtOutcome::Infeasible(j, k) => {
                return Err(Error::Internal(format!(
                    "CRT construction hit an infeasible pair ({j}, {k}) at vertex `{name}`; \
                     this contradicts solvability over {} and indicates a bug",
                    graph.ring()
                )))
            }
        }
    }

    let labeling: BTreeMap<String, RingValue> = assigned
        .into_iter()
        .map(|(v, value)| (graph.vertex_name(v).to_string(), value))
        .collect();
    Spline::new(graph, labeling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn zi(g: i64) -> Ideal {
        Ideal::principal(RingValue::integer(g))
    }

    fn int(v: i64) -> RingValue {
        RingValue::integer(v)
    }

    /// The 10-vertex path: a1 - a2 - u - v1 .. v5 - w - b1, with the
    /// u..w stretch labeled <4>, <6>, <2>, <8>, <12>, <20>.
    fn reference_path_graph() -> Arc<EdgeLabeledGraph> {
        Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["a1", "a2", "u", "v1", "v2", "v3", "v4", "v5", "w", "b1"])
                .edge("a1", "a2", zi(7))
                .edge("a2", "u", zi(9))
                .edge("u", "v1", zi(4))
                .edge("v1", "v2", zi(6))
                .edge("v2", "v3", zi(2))
                .edge("v3", "v4", zi(8))
                .edge("v4", "v5", zi(12))
                .edge("v5", "w", zi(20))
                .edge("w", "b1", zi(10))
                .build()
                .unwrap(),
        )
    }

    fn reference_labeling() -> BTreeMap<String, RingValue> {
        [
            ("a1", 64),
            ("a2", 64),
            ("u", 64),
            ("v1", 56),
            ("v2", 44),
            ("v3", 40),
            ("v4", 32),
            ("v5", 20),
            ("w", 0),
            ("b1", 0),
        ]
        .into_iter()
        .map(|(name, value)| (name.to_string(), int(value)))
        .collect()
    }

    #[test]
    fn reference_path_labeling_is_valid() {
        let g = reference_path_graph();
        assert!(verify_labeling(&g, &reference_labeling()).unwrap().is_valid());
    }

    #[test]
    fn constant_labeling_is_always_valid() {
        let g = reference_path_graph();
        let s = Spline::constant(&g, int(17)).unwrap();
        assert!(verify_labeling(&g, &s.to_map()).unwrap().is_valid());
    }

    #[test]
    fn corrupted_labeling_flags_the_edge() {
        let g = reference_path_graph();
        let mut labeling = reference_labeling();
        labeling.insert("v1".to_string(), int(57));
        match verify_labeling(&g, &labeling).unwrap() {
            VerifyOutcome::Invalid { violations } => {
                // 64 - 57 = 7 is not in <4>
                assert!(violations
                    .iter()
                    .any(|v| (v.from.as_str(), v.to.as_str()) == ("u", "v1")));
            }
            other => panic!("expected invalid, got {other:?}"),
        }
    }

    #[test]
    fn missing_vertex_value_is_an_error() {
        let g = reference_path_graph();
        let mut labeling = reference_labeling();
        labeling.remove("v3");
        assert!(matches!(
            verify_labeling(&g, &labeling),
            Err(Error::MissingVertexValue(_))
        ));
    }

    #[test]
    fn path_builder_achieves_the_difference() {
        let g = reference_path_graph();
        let s = build_path_spline(&g, "u", "w", &int(64)).unwrap();
        assert_eq!(s.difference("u", "w").unwrap(), int(64));
        assert!(verify_labeling(&g, &s.to_map()).unwrap().is_valid());
        // tail vertices copy the endpoint values
        assert_eq!(s.value("a1").unwrap(), s.value("u").unwrap());
        assert_eq!(s.value("b1").unwrap(), s.value("w").unwrap());
    }

    #[test]
    fn path_builder_zero_gives_constant() {
        let g = reference_path_graph();
        let s = build_path_spline(&g, "u", "w", &int(0)).unwrap();
        assert!(s.values().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn path_builder_rejects_outside_targets() {
        let g = reference_path_graph();
        // alpha(P1) = <2>, so odd targets are unreachable
        assert!(matches!(
            build_path_spline(&g, "u", "w", &int(3)),
            Err(Error::NotInSum { .. })
        ));
    }

    #[test]
    fn path_builder_rejects_non_paths() {
        let g = Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["a", "b", "c"])
                .edge("a", "b", zi(1))
                .edge("b", "c", zi(1))
                .edge("c", "a", zi(1))
                .build()
                .unwrap(),
        );
        assert!(matches!(
            build_path_spline(&g, "a", "b", &int(1)),
            Err(Error::WrongShape("path"))
        ));
    }

    /// The tree example: path u - p1 - p2 - p3 - w labeled <5>, <5>,
    /// <11>, <12>, plus off-path vertices.
    fn reference_tree() -> Arc<EdgeLabeledGraph> {
        Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["u", "p1", "p2", "p3", "w", "t1", "t2", "t3"])
                .edge("u", "p1", zi(5))
                .edge("p1", "p2", zi(5))
                .edge("p2", "p3", zi(11))
                .edge("p3", "w", zi(12))
                .edge("p1", "t1", zi(6))
                .edge("p2", "t2", zi(4))
                .edge("w", "t3", zi(9))
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn tree_builder_achieves_the_difference() {
        let g = reference_tree();
        let s = build_tree_spline(&g, "u", "w", &int(53)).unwrap();
        assert_eq!(s.difference("u", "w").unwrap(), int(53));
        // off-path vertices copy their nearest path vertex
        assert_eq!(s.value("t1").unwrap(), s.value("p1").unwrap());
        assert_eq!(s.value("t2").unwrap(), s.value("p2").unwrap());
        assert_eq!(s.value("t3").unwrap(), s.value("w").unwrap());
    }

    #[test]
    fn paper_tree_labeling_is_valid() {
        let g = reference_tree();
        let labeling: BTreeMap<String, RingValue> = [
            ("u", 53),
            ("p1", 38),
            ("p2", 23),
            ("p3", 12),
            ("w", 0),
            ("t1", 38),
            ("t2", 23),
            ("t3", 0),
        ]
        .into_iter()
        .map(|(name, value)| (name.to_string(), int(value)))
        .collect();
        assert!(verify_labeling(&g, &labeling).unwrap().is_valid());
    }

    #[test]
    fn star_graph_decomposes_across_two_ideals() {
        let g = Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["m", "a", "b"])
                .edge("m", "a", zi(4))
                .edge("m", "b", zi(6))
                .build()
                .unwrap(),
        );
        let s = build_tree_spline(&g, "a", "b", &int(10)).unwrap();
        assert_eq!(s.difference("a", "b").unwrap(), int(10));
    }

    /// The 11-cycle: P1 = u,c1..c4,w labeled <2>,<6>,<8>,<18>,<2> and
    /// P2 = u,d1..d5,w labeled <3>,<5>,<12>,<11>,<4>,<3>.
    fn reference_cycle() -> Arc<EdgeLabeledGraph> {
        Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["u", "c1", "c2", "c3", "c4", "w", "d1", "d2", "d3", "d4", "d5"])
                .edge("u", "c1", zi(2))
                .edge("c1", "c2", zi(6))
                .edge("c2", "c3", zi(8))
                .edge("c3", "c4", zi(18))
                .edge("c4", "w", zi(2))
                .edge("u", "d1", zi(3))
                .edge("d1", "d2", zi(5))
                .edge("d2", "d3", zi(12))
                .edge("d3", "d4", zi(11))
                .edge("d4", "d5", zi(4))
                .edge("d5", "w", zi(3))
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn cycle_intersection_is_two() {
        // alpha(P1) = <2>, alpha(P2) = <1>, intersection <2>
        let g = reference_cycle();
        assert_eq!(g.paths_intersection_ideal("u", "w").unwrap(), zi(2));
    }

    #[test]
    fn cycle_builder_achieves_the_difference() {
        let g = reference_cycle();
        let s = build_cycle_spline(&g, "u", "w", &int(48)).unwrap();
        assert_eq!(s.difference("u", "w").unwrap(), int(48));
        assert!(verify_labeling(&g, &s.to_map()).unwrap().is_valid());
        let zero = build_cycle_spline(&g, "u", "w", &int(0)).unwrap();
        assert!(zero.values().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn cycle_builder_rejects_outside_targets() {
        let g = reference_cycle();
        assert!(matches!(
            build_cycle_spline(&g, "u", "w", &int(7)),
            Err(Error::NotInIdeal { .. })
        ));
    }

    #[test]
    fn triangle_smallest_positive_member() {
        // labels <2>, <3>, <5>; u, w adjacent via the <2> edge.
        // Path ideals: <2> and <3> + <5> = <1>; brute-force oracle over
        // small positives: the least positive member of both is 2.
        let g = Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["u", "w", "t"])
                .edge("u", "w", zi(2))
                .edge("w", "t", zi(3))
                .edge("t", "u", zi(5))
                .build()
                .unwrap(),
        );
        let intersection = g.paths_intersection_ideal("u", "w").unwrap();
        // membership in both path ideals, checked by plain divisibility
        let path_gens = [2i64, gcd_i64(3, 5)];
        let oracle_least = (1..100)
            .find(|&k| path_gens.iter().all(|&g| k % g == 0))
            .unwrap();
        assert!(intersection.contains(&int(oracle_least)).unwrap().is_yes());
        assert_eq!(intersection, zi(2));
        let s = build_cycle_spline(&g, "u", "w", &int(oracle_least)).unwrap();
        assert_eq!(s.difference("u", "w").unwrap(), int(oracle_least));
    }

    #[test]
    fn crt_builder_matches_specialized_builders() {
        let path = reference_path_graph();
        let a = build_path_spline(&path, "u", "w", &int(64)).unwrap();
        let b = build_spline_crt(&path, "u", "w", &int(64)).unwrap();
        assert_eq!(a.difference("u", "w").unwrap(), int(64));
        assert_eq!(b.difference("u", "w").unwrap(), int(64));
        assert!(verify_labeling(&path, &b.to_map()).unwrap().is_valid());

        let cycle = reference_cycle();
        let c = build_spline_crt(&cycle, "u", "w", &int(48)).unwrap();
        assert_eq!(c.difference("u", "w").unwrap(), int(48));
        assert!(verify_labeling(&cycle, &c.to_map()).unwrap().is_valid());
    }

    #[test]
    fn crt_builder_on_pasted_cycles() {
        let g = Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["u", "a", "b", "z", "c", "d", "w"])
                .edge("u", "a", zi(2))
                .edge("a", "z", zi(2))
                .edge("u", "b", zi(2))
                .edge("b", "z", zi(2))
                .edge("z", "c", zi(3))
                .edge("c", "w", zi(3))
                .edge("z", "d", zi(5))
                .edge("d", "w", zi(5))
                .build()
                .unwrap(),
        );
        let intersection = g.paths_intersection_ideal("u", "w").unwrap();
        let x = intersection.generators()[0].clone();
        let s = build_spline_crt(&g, "u", "w", &x).unwrap();
        assert_eq!(s.difference("u", "w").unwrap(), x);
        assert!(verify_labeling(&g, &s.to_map()).unwrap().is_valid());
    }

    #[test]
    fn crt_builder_zero_target() {
        let g = reference_cycle();
        let s = build_spline_crt(&g, "u", "w", &int(0)).unwrap();
        assert!(s.values().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn spline_ring_operations() {
        let g = reference_path_graph();
        let a = build_path_spline(&g, "u", "w", &int(64)).unwrap();
        let zero = Spline::constant(&g, int(0)).unwrap();
        let one = Spline::constant(&g, int(1)).unwrap();
        assert_eq!(a.add(&zero).unwrap(), a);
        assert_eq!(one.mul(&a).unwrap(), a);

        let doubled = a.scale(&int(2)).unwrap();
        assert!(verify_labeling(&g, &doubled.to_map()).unwrap().is_valid());
        assert_eq!(doubled.difference("u", "w").unwrap(), int(128));
    }

    #[test]
    fn translation_preserves_differences() {
        let g = reference_path_graph();
        let a = build_path_spline(&g, "u", "w", &int(64)).unwrap();
        let t = a.translate("w", &int(10)).unwrap();
        assert_eq!(t.value("w").unwrap(), &int(10));
        assert_eq!(t.difference("u", "w").unwrap(), int(64));
        assert!(verify_labeling(&g, &t.to_map()).unwrap().is_valid());
        // translating to the current value changes nothing
        let same = a.translate("w", &int(0)).unwrap();
        assert_eq!(same, a);
        // translating a constant spline gives another constant spline
        let c = Spline::constant(&g, int(4)).unwrap();
        let c2 = c.translate("v3", &int(9)).unwrap();
        assert!(c2.values().all(|(_, v)| v == &int(9)));
    }

    #[test]
    fn modular_ring_builders() {
        let m = 8;
        let label = |g: i64| Ideal::principal(RingValue::residue(m, g).unwrap());
        let g = Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::integers_mod(m).unwrap())
                .vertices(["u", "a", "w", "b"])
                .edge("u", "a", label(2))
                .edge("a", "w", label(4))
                .edge("w", "b", label(2))
                .edge("b", "u", label(4))
                .build()
                .unwrap(),
        );
        let intersection = g.paths_intersection_ideal("u", "w").unwrap();
        for r in intersection.residues().unwrap() {
            let x = RingValue::residue(m, r).unwrap();
            let s = build_cycle_spline(&g, "u", "w", &x).unwrap();
            assert_eq!(s.difference("u", "w").unwrap(), x);
            let c = build_spline_crt(&g, "u", "w", &x).unwrap();
            assert_eq!(c.difference("u", "w").unwrap(), x);
        }
    }

    #[test]
    fn example_three_cycle_spline() {
        // an integer 3-cycle carrying the spline (2, 16, 26)
        let g = Arc::new(
            EdgeLabeledGraph::builder(RingDescriptor::Integers)
                .vertices(["v1", "v2", "v3"])
                .edge("v1", "v2", zi(14))
                .edge("v2", "v3", zi(10))
                .edge("v1", "v3", zi(8))
                .build()
                .unwrap(),
        );
        let labeling: BTreeMap<String, RingValue> = [("v1", 2), ("v2", 16), ("v3", 26)]
            .into_iter()
            .map(|(n, v)| (n.to_string(), int(v)))
            .collect();
        assert!(verify_labeling(&g, &labeling).unwrap().is_valid());
    }

    fn gcd_i64(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    }
}
