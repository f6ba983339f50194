//! Helpers shared by the integration suites: small graph constructors,
//! random instances, and an independent brute-force spline enumerator.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use graph_splines::graph::EdgeLabeledGraph;
use graph_splines::ring::{Ideal, RingDescriptor, RingValue};
use rand::rngs::StdRng;
use rand::Rng;

pub fn mod_ring(m: u64) -> RingDescriptor {
    RingDescriptor::integers_mod(m).unwrap()
}

pub fn residue_ideal(m: u64, g: u64) -> Ideal {
    Ideal::principal(RingValue::residue(m, g).unwrap())
}

pub fn int_ideal(g: i64) -> Ideal {
    Ideal::principal(RingValue::integer(g))
}

/// Path p0 - p1 - ... over Z/mZ with the given edge generators.
pub fn labeled_path(m: u64, labels: &[u64]) -> EdgeLabeledGraph {
    let names: Vec<String> = (0..=labels.len()).map(|i| format!("p{i}")).collect();
    let mut builder = EdgeLabeledGraph::builder(mod_ring(m)).vertices(names.clone());
    for (i, &g) in labels.iter().enumerate() {
        builder = builder.edge(&names[i], &names[i + 1], residue_ideal(m, g));
    }
    builder.build().unwrap()
}

/// Cycle c0 - c1 - ... - c0 over Z/mZ.
pub fn labeled_cycle(m: u64, labels: &[u64]) -> EdgeLabeledGraph {
    let n = labels.len();
    let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let mut builder = EdgeLabeledGraph::builder(mod_ring(m)).vertices(names.clone());
    for (i, &g) in labels.iter().enumerate() {
        builder = builder.edge(&names[i], &names[(i + 1) % n], residue_ideal(m, g));
    }
    builder.build().unwrap()
}

/// Random tree over Z/mZ: vertex t_i attaches to a random earlier vertex.
pub fn random_labeled_tree(rng: &mut StdRng, m: u64, n: usize) -> EdgeLabeledGraph {
    let names: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    let mut builder = EdgeLabeledGraph::builder(mod_ring(m)).vertices(names.clone());
    for i in 1..n {
        let parent = rng.random_range(0..i);
        let label = residue_ideal(m, rng.random_range(0..m));
        builder = builder.edge(&names[parent], &names[i], label);
    }
    builder.build().unwrap()
}

/// Random connected graph over Z/mZ: a random spanning tree plus up to
/// `extra` additional edges.
pub fn random_connected_mod_graph(
    rng: &mut StdRng,
    m: u64,
    n: usize,
    extra: usize,
) -> EdgeLabeledGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut present: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 1..n {
        let parent = rng.random_range(0..i);
        present.insert((parent.min(i), parent.max(i)));
    }
    for _ in 0..extra {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b {
            present.insert((a.min(b), a.max(b)));
        }
    }
    let mut builder = EdgeLabeledGraph::builder(mod_ring(m)).vertices(names.clone());
    for (a, b) in present {
        let label = residue_ideal(m, rng.random_range(0..m));
        builder = builder.edge(&names[a], &names[b], label);
    }
    builder.build().unwrap()
}

/// Random connected graph over Z with generators up to `max_gen`.
pub fn random_connected_int_graph(
    rng: &mut StdRng,
    n: usize,
    max_gen: i64,
    extra: usize,
) -> EdgeLabeledGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut present: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 1..n {
        let parent = rng.random_range(0..i);
        present.insert((parent.min(i), parent.max(i)));
    }
    for _ in 0..extra {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b {
            present.insert((a.min(b), a.max(b)));
        }
    }
    let mut builder = EdgeLabeledGraph::builder(RingDescriptor::Integers).vertices(names.clone());
    for (a, b) in present {
        builder = builder.edge(&names[a], &names[b], int_ideal(rng.random_range(1..=max_gen)));
    }
    builder.build().unwrap()
}

/// Pastes two graphs that share exactly the vertex named `z`.
pub fn paste_graphs(
    g1: &EdgeLabeledGraph,
    g2: &EdgeLabeledGraph,
    z: &str,
) -> EdgeLabeledGraph {
    let mut builder = EdgeLabeledGraph::builder(g1.ring().clone());
    for v in g1.vertices() {
        builder = builder.vertex(v.clone());
    }
    for v in g2.vertices() {
        if v != z {
            builder = builder.vertex(v.clone());
        }
    }
    for (from, to, label) in g1.edges().chain(g2.edges()) {
        builder = builder.edge(from, to, label.clone());
    }
    builder.build().unwrap()
}

/// Visits every spline on a Z/mZ graph. This enumerator is independent of
/// the library's: it walks raw assignments and checks the edge condition
/// by integer divisibility.
pub fn for_each_spline(g: &EdgeLabeledGraph, mut f: impl FnMut(&[u64])) {
    let m = match g.ring() {
        RingDescriptor::IntegersMod { modulus } => *modulus,
        _ => panic!("for_each_spline needs a Z/mZ graph"),
    };
    let n = g.vertex_count();
    let edges: Vec<(usize, usize, u64)> = g
        .edges()
        .map(|(from, to, label)| {
            (
                g.vertex_index(from).unwrap(),
                g.vertex_index(to).unwrap(),
                label.generators()[0].as_residue().unwrap(),
            )
        })
        .collect();
    let mut values = vec![0u64; n];
    visit(0, &mut values, m, &edges, &mut f);

    fn visit(
        k: usize,
        values: &mut Vec<u64>,
        m: u64,
        edges: &[(usize, usize, u64)],
        f: &mut impl FnMut(&[u64]),
    ) {
        if k == values.len() {
            f(values);
            return;
        }
        'next_value: for value in 0..m {
            values[k] = value;
            // check each edge once, when its later endpoint is assigned
            for &(a, b, d) in edges {
                if a.max(b) != k {
                    continue;
                }
                let (x, y) = (values[a], values[b]);
                let diff = (x + m - y) % m;
                let ok = if d == 0 { diff == 0 } else { diff % d == 0 };
                if !ok {
                    continue 'next_value;
                }
            }
            visit(k + 1, values, m, edges, f);
        }
    }
}

/// Achievable difference sets per connected pair, computed from the
/// independent enumerator.
pub fn difference_sets(g: &EdgeLabeledGraph) -> BTreeMap<(String, String), BTreeSet<u64>> {
    let m = match g.ring() {
        RingDescriptor::IntegersMod { modulus } => *modulus,
        _ => panic!("difference_sets needs a Z/mZ graph"),
    };
    let n = g.vertex_count();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let u = g.vertex_name(i).to_string();
            let w = g.vertex_name(j).to_string();
            if g.connected_pair(&u, &w).unwrap() {
                pairs.push((i, j, u, w));
            }
        }
    }
    let mut sets: BTreeMap<(String, String), BTreeSet<u64>> = pairs
        .iter()
        .map(|(_, _, u, w)| ((u.clone(), w.clone()), BTreeSet::new()))
        .collect();
    for_each_spline(g, |values| {
        for (i, j, u, w) in &pairs {
            let diff = (values[*i] + m - values[*j]) % m;
            sets.get_mut(&(u.clone(), w.clone())).unwrap().insert(diff);
        }
    });
    sets
}
