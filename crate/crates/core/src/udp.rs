//! Universal Difference Property machinery: the pasting criterion for
//! graphs glued at a cut vertex, a constructive builder for pasted
//! splines, an exhaustive UDP oracle over finite rings, and verification
//! of non-UDP witnesses.
//!
//! The pasting criterion compares, for vertices `u` and `w` on opposite
//! sides of a cut vertex `z`, the intersection ideal over all `u`-`w`
//! paths (LHS) with the sum of the `u`-`z` and `z`-`w` intersection
//! ideals (RHS). RHS is always contained in LHS; the property holds for
//! the pair exactly when they are equal, and an element of LHS minus RHS
//! witnesses an unachievable difference.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::graph::EdgeLabeledGraph;
use crate::ring::{
    decompose_into_sum, Ideal, MembershipVerdict, RingDescriptor, RingValue, Trivalent,
};
use crate::spline::{build_spline_crt, Spline};
use crate::Result;

/// A graph split at a cut vertex into two sides that share only the cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PastingDecomposition {
    cut: String,
    side1: BTreeSet<String>,
    side2: BTreeSet<String>,
}

impl PastingDecomposition {
    pub fn cut(&self) -> &str {
        &self.cut
    }

    pub fn side1(&self) -> &BTreeSet<String> {
        &self.side1
    }

    pub fn side2(&self) -> &BTreeSet<String> {
        &self.side2
    }

    /// The side strictly containing `vertex` (the cut itself belongs to
    /// both and returns `None`).
    fn strict_side(&self, vertex: &str) -> Option<u8> {
        if vertex == self.cut {
            None
        } else if self.side1.contains(vertex) {
            Some(1)
        } else if self.side2.contains(vertex) {
            Some(2)
        } else {
            None
        }
    }
}

/// Splits `g` at the cut vertex `z`: removing `z` must leave exactly two
/// connected components, which become the two sides (each re-attached to
/// `z`).
pub fn find_cut_decomposition(g: &EdgeLabeledGraph, z: &str) -> Result<PastingDecomposition> {
    let z_index = g.vertex_index(z)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let mut component = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if start == z_index || component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = count;
        while let Some(v) = stack.pop() {
            for name in g.neighbors(g.vertex_name(v))? {
                let idx = g.vertex_index(name)?;
                if idx != z_index && component[idx] == usize::MAX {
                    component[idx] = count;
                    stack.push(idx);
                }
            }
        }
        count += 1;
    }
    match count {
        0 | 1 => Err(Error::NotACutVertex(z.to_string())),
        2 => {
            let mut side1: BTreeSet<String> = (0..n)
                .filter(|&v| component[v] == 0)
                .map(|v| g.vertex_name(v).to_string())
                .collect();
            let mut side2: BTreeSet<String> = (0..n)
                .filter(|&v| component[v] == 1)
                .map(|v| g.vertex_name(v).to_string())
                .collect();
            side1.insert(z.to_string());
            side2.insert(z.to_string());
            Ok(PastingDecomposition {
                cut: z.to_string(),
                side1,
                side2,
            })
        }
        more => Err(Error::MoreThanTwoSides(z.to_string(), more)),
    }
}

/// Verdict for one vertex pair (or a whole graph): the property holds,
/// fails with a witness difference that no spline can achieve, or could
/// not be decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UdpVerdict {
    Holds,
    Fails { witness: RingValue },
    Unknown,
}

impl UdpVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, UdpVerdict::Holds)
    }
}

impl fmt::Display for UdpVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UdpVerdict::Holds => write!(f, "holds"),
            UdpVerdict::Fails { witness } => write!(f, "fails (witness {witness})"),
            UdpVerdict::Unknown => write!(f, "unknown"),
        }
    }
}

/// Everything `check_pasting_equation` learned about one pair.
#[derive(Debug, Clone)]
pub struct PastingCheck {
    pub from: String,
    pub to: String,
    pub cut: String,
    /// Intersection over all `u`-`w` paths; `None` when it is not
    /// computable (non-principal polynomial intersection).
    pub lhs: Option<Ideal>,
    pub rhs_u_side: Ideal,
    pub rhs_w_side: Ideal,
    pub rhs: Ideal,
    /// Whether LHS is contained in the `u`-side intersection alone (a
    /// sufficient condition for the pair).
    pub sufficient_3: Trivalent,
    /// Same for the `w`-side intersection.
    pub sufficient_4: Trivalent,
    pub verdict: UdpVerdict,
}

/// Decides the pasting criterion for `u` and `w` on opposite sides of the
/// decomposition. Over `Z[x]`, when the LHS cannot be computed or compared,
/// a failure witness is searched among the path-ideal generators and small
/// combinations of them; if none certifies, the verdict is `Unknown`.
pub fn check_pasting_equation(
    g: &EdgeLabeledGraph,
    decomposition: &PastingDecomposition,
    u: &str,
    w: &str,
) -> Result<PastingCheck> {
    g.vertex_index(u)?;
    g.vertex_index(w)?;
    let z = decomposition.cut();
    let side_u = decomposition
        .strict_side(u)
        .ok_or_else(|| Error::SidesViolated {
            vertex: u.to_string(),
            side: "one",
            cut: z.to_string(),
        })?;
    let side_w = decomposition
        .strict_side(w)
        .ok_or_else(|| Error::SidesViolated {
            vertex: w.to_string(),
            side: "other",
            cut: z.to_string(),
        })?;
    if side_u == side_w {
        return Err(Error::SidesViolated {
            vertex: w.to_string(),
            side: "opposite",
            cut: z.to_string(),
        });
    }

    let rhs_u_side = g.paths_intersection_ideal(u, z)?;
    let rhs_w_side = g.paths_intersection_ideal(z, w)?;
    let rhs = rhs_u_side.sum(&rhs_w_side)?;

    let lhs = match g.paths_intersection_ideal(u, w) {
        Ok(ideal) => Some(ideal),
        Err(Error::NonPrincipalIntersection) => None,
        Err(e) => return Err(e),
    };

    let (sufficient_3, sufficient_4) = match &lhs {
        Some(lhs) => (
            rhs_u_side.contains_ideal(lhs)?,
            rhs_w_side.contains_ideal(lhs)?,
        ),
        None => (Trivalent::Unknown, Trivalent::Unknown),
    };

    let verdict = match &lhs {
        Some(lhs) => match lhs.equal(&rhs)? {
            Trivalent::True => UdpVerdict::Holds,
            Trivalent::False => {
                // RHS is always a subset of LHS, so inequality means some
                // LHS generator escapes RHS.
                let mut witness = None;
                for generator in lhs.generators() {
                    if rhs.contains(generator)?.is_no() {
                        witness = Some(generator.clone());
                        break;
                    }
                }
                match witness {
                    Some(witness) => UdpVerdict::Fails { witness },
                    None => search_failure_witness(g, u, w, &rhs)?,
                }
            }
            Trivalent::Unknown => search_failure_witness(g, u, w, &rhs)?,
        },
        None => search_failure_witness(g, u, w, &rhs)?,
    };

    Ok(PastingCheck {
        from: u.to_string(),
        to: w.to_string(),
        cut: z.to_string(),
        lhs,
        rhs_u_side,
        rhs_w_side,
        rhs,
        sufficient_3,
        sufficient_4,
        verdict,
    })
}

/// Searches for an element of every `u`-`w` path ideal that certifiably
/// fails membership in `rhs`. Candidates are the path-ideal generators
/// first, then combinations of up to three of them with small
/// coefficients.
fn search_failure_witness(
    g: &EdgeLabeledGraph,
    u: &str,
    w: &str,
    rhs: &Ideal,
) -> Result<UdpVerdict> {
    let paths = g.enumerate_paths(u, w)?;
    let path_ideals = paths
        .iter()
        .map(|p| g.path_ideal(p))
        .collect::<Result<Vec<_>>>()?;

    let mut generators: Vec<RingValue> = Vec::new();
    for ideal in &path_ideals {
        for generator in ideal.generators() {
            if !generator.is_zero() && !generators.contains(generator) {
                generators.push(generator.clone());
            }
        }
    }

    let mut candidates: Vec<RingValue> = generators.clone();
    for generator in &generators {
        for k in [2i64, 3] {
            let scaled = RingValue::from_integer(generator.ring(), k).mul(generator)?;
            candidates.push(scaled);
        }
    }
    for i in 0..generators.len() {
        for j in (i + 1)..generators.len() {
            candidates.push(generators[i].add(&generators[j])?);
            candidates.push(generators[i].sub(&generators[j])?);
            for k in (j + 1)..generators.len() {
                for (sj, sk) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut c = generators[i].clone();
                    c = if sj > 0 {
                        c.add(&generators[j])?
                    } else {
                        c.sub(&generators[j])?
                    };
                    c = if sk > 0 {
                        c.add(&generators[k])?
                    } else {
                        c.sub(&generators[k])?
                    };
                    candidates.push(c);
                }
            }
        }
    }

    'candidates: for candidate in candidates {
        if candidate.is_zero() {
            continue;
        }
        for ideal in &path_ideals {
            if !ideal.contains(&candidate)?.is_yes() {
                continue 'candidates;
            }
        }
        if rhs.contains(&candidate)?.is_no() {
            return Ok(UdpVerdict::Fails { witness: candidate });
        }
    }
    Ok(UdpVerdict::Unknown)
}

/// Builds a spline with `rho(u) - rho(w) = x` on a pasted graph by
/// splitting `x = s + t` across the two sides, building each side with
/// the CRT construction, and aligning the side splines at the cut.
pub fn build_pasted_spline(
    g: &Arc<EdgeLabeledGraph>,
    decomposition: &PastingDecomposition,
    u: &str,
    w: &str,
    x: &RingValue,
) -> Result<Spline> {
    g.ring().expect_same(x.ring())?;
    if g.ring().is_polynomial() {
        return Err(Error::UnsupportedRing {
            ring: g.ring().clone(),
            operation: "build_pasted_spline",
        });
    }
    let check = check_pasting_equation(g, decomposition, u, w)?;
    match &check.verdict {
        UdpVerdict::Holds => {}
        UdpVerdict::Fails { .. } => {
            return Err(Error::PastingEquationFails(u.to_string(), w.to_string()))
        }
        UdpVerdict::Unknown => {
            return Err(Error::PastingEquationUndecided(
                u.to_string(),
                w.to_string(),
            ))
        }
    }
    let lhs = check.lhs.as_ref().expect("computable over Z and Z/mZ");
    if !lhs.contains(x)?.is_yes() {
        return Err(Error::NotInIdeal {
            target: x.to_string(),
            ideal: lhs.to_string(),
        });
    }

    let parts = decompose_into_sum(x, &[check.rhs_u_side.clone(), check.rhs_w_side.clone()])?;
    let (s, t) = (&parts[0], &parts[1]);
    let z = decomposition.cut();

    let (u_vertices, w_vertices) = if decomposition.strict_side(u) == Some(1) {
        (decomposition.side1(), decomposition.side2())
    } else {
        (decomposition.side2(), decomposition.side1())
    };
    let side_u_graph = Arc::new(g.induced_subgraph(u_vertices)?);
    let side_w_graph = Arc::new(g.induced_subgraph(w_vertices)?);

    // rho1 on the u side achieves s = rho1(u) - rho1(z); rho2 on the
    // w side achieves t = rho2(z) - rho2(w), with rho2(w) = 0.
    let rho1 = build_spline_crt(&side_u_graph, u, z, s)?;
    let rho2 = build_spline_crt(&side_w_graph, z, w, t)?;
    let rho1 = rho1.translate(z, rho2.value(z)?)?;

    let mut labeling: BTreeMap<String, RingValue> = BTreeMap::new();
    for (name, value) in rho1.values().chain(rho2.values()) {
        labeling.insert(name.to_string(), value.clone());
    }
    Spline::new(g, labeling)
}

/// Configuration for [`brute_force_udp`].
#[derive(Debug, Clone, Copy)]
pub struct BruteForceConfig {
    /// Upper bound on `m^|V|`, the number of vertex assignments.
    pub budget: u64,
    /// Worker threads; the first vertex's values are partitioned across
    /// them and the per-pair difference sets merged by union.
    pub jobs: usize,
}

impl Default for BruteForceConfig {
    fn default() -> Self {
        BruteForceConfig {
            budget: 10_000_000,
            jobs: 1,
        }
    }
}

/// Per-pair outcome of the exhaustive search.
#[derive(Debug, Clone)]
pub struct PairReport {
    pub from: String,
    pub to: String,
    pub intersection: Ideal,
    /// Differences `rho(from) - rho(to)` realized by some spline, sorted.
    pub achievable: Vec<u64>,
    /// Residues of the intersection ideal, sorted.
    pub expected: Vec<u64>,
    pub verdict: UdpVerdict,
}

/// Exhaustive UDP decision over `Z/mZ`.
#[derive(Debug, Clone)]
pub struct UdpReport {
    pub ring: RingDescriptor,
    pub pairs: Vec<PairReport>,
    pub verdict: UdpVerdict,
}

impl fmt::Display for UdpReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ring)?;
        for pair in &self.pairs {
            writeln!(f, "pair ({}, {})", pair.from, pair.to)?;
            writeln!(f, "  intersection: {}", pair.intersection)?;
            writeln!(f, "  achievable: {:?}", pair.achievable)?;
            writeln!(f, "  expected:   {:?}", pair.expected)?;
            writeln!(f, "  verdict: {}", pair.verdict)?;
        }
        write!(f, "overall: {}", self.verdict)
    }
}

/// Enumerates every spline on `g` over `Z/mZ` (depth-first over vertex
/// values with edge-constraint pruning) and compares, for every connected
/// vertex pair, the achievable-difference set with the residues of the
/// paths-intersection ideal.
pub fn brute_force_udp(g: &EdgeLabeledGraph, config: BruteForceConfig) -> Result<UdpReport> {
    let modulus = match g.ring() {
        RingDescriptor::IntegersMod { modulus } => *modulus,
        ring => {
            return Err(Error::UnsupportedRing {
                ring: ring.clone(),
                operation: "brute_force_udp",
            })
        }
    };
    let n = g.vertex_count();
    let needed = (modulus as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if needed > config.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: config.budget,
        });
    }

    // Edges from each vertex to earlier vertices, as lifted generators.
    let mut back_edges: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for (from, to, label) in g.edges() {
        let a = g.vertex_index(from)?;
        let b = g.vertex_index(to)?;
        let d = label.generators()[0]
            .as_residue()
            .expect("modular ring labels");
        let (lo, hi) = (a.min(b), a.max(b));
        back_edges[hi].push((lo, d));
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if g.connected_pair(g.vertex_name(i), g.vertex_name(j))? {
                pairs.push((i, j));
            }
        }
    }

    let jobs = config.jobs.max(1).min(modulus as usize).max(1);
    let sets = if n == 0 {
        Vec::new()
    } else if jobs == 1 {
        enumerate_difference_sets(n, modulus, &back_edges, &pairs, &(0..modulus).collect::<Vec<_>>())
    } else {
        let chunks: Vec<Vec<u64>> = (0..jobs as u64)
            .map(|t| (0..modulus).filter(|v| v % jobs as u64 == t).collect())
            .collect();
        let mut merged = vec![vec![false; modulus as usize]; pairs.len()];
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| {
                    let back_edges = &back_edges;
                    let pairs = &pairs;
                    scope.spawn(move || {
                        enumerate_difference_sets(n, modulus, back_edges, pairs, chunk)
                    })
                })
                .collect();
            for handle in handles {
                let partial = handle.join().expect("enumeration worker panicked");
                for (acc, part) in merged.iter_mut().zip(partial) {
                    for (a, b) in acc.iter_mut().zip(part) {
                        *a |= b;
                    }
                }
            }
        });
        merged
    };

    let mut reports = Vec::new();
    let mut overall = UdpVerdict::Holds;
    for (index, &(i, j)) in pairs.iter().enumerate() {
        let from = g.vertex_name(i).to_string();
        let to = g.vertex_name(j).to_string();
        let intersection = g.paths_intersection_ideal(&from, &to)?;
        let expected = intersection.residues()?;
        let achievable: Vec<u64> = sets[index]
            .iter()
            .enumerate()
            .filter_map(|(v, &hit)| hit.then_some(v as u64))
            .collect();
        for v in &achievable {
            if !expected.contains(v) {
                return Err(Error::Internal(format!(
                    "achievable difference {v} escapes the intersection ideal on ({from}, {to})"
                )));
            }
        }
        let missing: Vec<u64> = expected
            .iter()
            .copied()
            .filter(|v| !achievable.contains(v))
            .collect();
        let verdict = match missing.first() {
            None => UdpVerdict::Holds,
            Some(&witness) => UdpVerdict::Fails {
                witness: RingValue::residue(modulus, witness)?,
            },
        };
        if overall.holds() && !verdict.holds() {
            overall = verdict.clone();
        }
        reports.push(PairReport {
            from,
            to,
            intersection,
            achievable,
            expected,
            verdict,
        });
    }

    Ok(UdpReport {
        ring: g.ring().clone(),
        pairs: reports,
        verdict: overall,
    })
}

fn enumerate_difference_sets(
    n: usize,
    m: u64,
    back_edges: &[Vec<(usize, u64)>],
    pairs: &[(usize, usize)],
    first_values: &[u64],
) -> Vec<Vec<bool>> {
    struct State<'a> {
        m: u64,
        back_edges: &'a [Vec<(usize, u64)>],
        pairs: &'a [(usize, usize)],
        values: Vec<u64>,
        sets: Vec<Vec<bool>>,
    }

    impl State<'_> {
        fn admissible(&self, vertex: usize, value: u64) -> bool {
            self.back_edges[vertex].iter().all(|&(j, d)| {
                let diff = (value + self.m - self.values[j]) % self.m;
                if d == 0 {
                    diff == 0
                } else {
                    diff % d == 0
                }
            })
        }

        fn descend(&mut self, vertex: usize) {
            if vertex == self.values.len() {
                for (index, &(i, j)) in self.pairs.iter().enumerate() {
                    let diff = (self.values[i] + self.m - self.values[j]) % self.m;
                    self.sets[index][diff as usize] = true;
                }
                return;
            }
            for value in 0..self.m {
                if self.admissible(vertex, value) {
                    self.values[vertex] = value;
                    self.descend(vertex + 1);
                }
            }
        }
    }

    let mut state = State {
        m,
        back_edges,
        pairs,
        values: vec![0; n],
        sets: vec![vec![false; m as usize]; pairs.len()],
    };
    for &v0 in first_values {
        state.values[0] = v0;
        state.descend(1);
    }
    state.sets
}

/// Membership of the witness in one path's ideal.
#[derive(Debug, Clone)]
pub struct PathMembership {
    pub path: crate::graph::Path,
    pub ideal: Ideal,
    pub verdict: MembershipVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// The witness lies in every path ideal and certifiably misses the
    /// pasting RHS: no spline achieves it.
    Confirmed,
    /// Definitively not a counterexample witness.
    NotAWitness,
    /// Some membership could not be decided; never silently passes.
    Unconfirmed,
}

/// Full account of a witness check.
#[derive(Debug, Clone)]
pub struct WitnessReport {
    pub witness: RingValue,
    pub path_checks: Vec<PathMembership>,
    pub cut: Option<String>,
    pub rhs: Option<Ideal>,
    pub rhs_verdict: Option<MembershipVerdict>,
    pub outcome: WitnessOutcome,
    pub reason: String,
}

/// Confirms that `x` witnesses failure of the Universal Difference
/// Property for the pair `(u, w)`: `x` must lie in every `u`-`w` path
/// ideal, and — when a cut vertex separates `u` from `w` — certifiably
/// lie outside the pasting RHS, which rules out every spline.
pub fn verify_non_udp_witness(
    g: &EdgeLabeledGraph,
    u: &str,
    w: &str,
    x: &RingValue,
) -> Result<WitnessReport> {
    verify_non_udp_witness_bounded(g, u, w, x, None)
}

/// [`verify_non_udp_witness`] with an explicit cofactor degree bound for
/// the polynomial membership searches.
pub fn verify_non_udp_witness_bounded(
    g: &EdgeLabeledGraph,
    u: &str,
    w: &str,
    x: &RingValue,
    degree_bound: Option<usize>,
) -> Result<WitnessReport> {
    let contains = |ideal: &Ideal, t: &RingValue| match degree_bound {
        Some(bound) => ideal.contains_bounded(t, bound),
        None => ideal.contains(t),
    };
    g.ring().expect_same(x.ring())?;
    let mut report = WitnessReport {
        witness: x.clone(),
        path_checks: Vec::new(),
        cut: None,
        rhs: None,
        rhs_verdict: None,
        outcome: WitnessOutcome::Unconfirmed,
        reason: String::new(),
    };
    if x.is_zero() {
        report.outcome = WitnessOutcome::NotAWitness;
        report.reason = "0 is achieved by every constant labeling".to_string();
        return Ok(report);
    }

    let paths = g.enumerate_paths(u, w)?;
    if paths.is_empty() {
        return Err(Error::DisconnectedPair(u.to_string(), w.to_string()));
    }
    let mut any_unknown = false;
    for path in paths {
        let ideal = g.path_ideal(&path)?;
        let verdict = contains(&ideal, x)?;
        match &verdict {
            MembershipVerdict::No { .. } => {
                report.path_checks.push(PathMembership { path, ideal, verdict });
                report.outcome = WitnessOutcome::NotAWitness;
                report.reason =
                    "the witness is outside a path ideal, so it is not in the intersection"
                        .to_string();
                return Ok(report);
            }
            MembershipVerdict::Unknown => any_unknown = true,
            MembershipVerdict::Yes { .. } => {}
        }
        report.path_checks.push(PathMembership { path, ideal, verdict });
    }

    // A cut vertex separating u from w gives the non-achievability side.
    let cut = g
        .vertices()
        .iter()
        .filter(|z| z.as_str() != u && z.as_str() != w)
        .find_map(|z| {
            let decomposition = find_cut_decomposition(g, z).ok()?;
            let su = decomposition.strict_side(u)?;
            let sw = decomposition.strict_side(w)?;
            (su != sw).then_some(decomposition)
        });
    let Some(decomposition) = cut else {
        report.reason =
            "no single cut vertex separates the pair; non-achievability is not certified"
                .to_string();
        return Ok(report);
    };
    let z = decomposition.cut().to_string();
    let rhs = g
        .paths_intersection_ideal(u, &z)?
        .sum(&g.paths_intersection_ideal(&z, w)?)?;
    let rhs_verdict = contains(&rhs, x)?;
    report.cut = Some(z);
    report.rhs = Some(rhs);
    match &rhs_verdict {
        MembershipVerdict::Yes { .. } => {
            report.outcome = WitnessOutcome::NotAWitness;
            report.reason =
                "the witness splits across the cut (it lies in the pasting RHS), so it is \
                 achievable whenever both sides satisfy the property"
                    .to_string();
        }
        MembershipVerdict::No { .. } if !any_unknown => {
            report.outcome = WitnessOutcome::Confirmed;
            report.reason =
                "in every path ideal, certifiably outside the pasting RHS".to_string();
        }
        MembershipVerdict::No { .. } => {
            report.reason = "a path membership could not be decided".to_string();
        }
        MembershipVerdict::Unknown => {
            report.reason = "membership in the pasting RHS could not be decided".to_string();
        }
    }
    report.rhs_verdict = Some(rhs_verdict);
    Ok(report)
}
