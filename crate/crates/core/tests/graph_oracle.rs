//! Cross-checks the path enumerator against a brute-force oracle that
//! tries every vertex permutation, plus the containment facts that path
//! ideals must satisfy.

use std::collections::BTreeSet;

use graph_splines::graph::{EdgeLabeledGraph, Path};
use graph_splines::ring::{Ideal, RingDescriptor, RingValue, Trivalent};
use itertools::Itertools;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn zi(g: i64) -> Ideal {
    Ideal::principal(RingValue::integer(g))
}

fn random_graph(rng: &mut StdRng, n: usize, edge_probability: f64) -> EdgeLabeledGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    loop {
        let mut builder = EdgeLabeledGraph::builder(RingDescriptor::Integers)
            .vertices(names.clone());
        let mut edges = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random_bool(edge_probability) {
                    builder = builder.edge(&names[i], &names[j], zi(rng.random_range(0..=12)));
                    edges += 1;
                }
            }
        }
        if edges > 0 {
            return builder.build().unwrap();
        }
    }
}

/// Every simple u-w path, found by trying every ordering of every subset
/// of the intermediate vertices.
fn brute_force_paths(g: &EdgeLabeledGraph, u: &str, w: &str) -> BTreeSet<Vec<String>> {
    let intermediates: Vec<&String> = g
        .vertices()
        .iter()
        .filter(|v| v.as_str() != u && v.as_str() != w)
        .collect();
    let mut found = BTreeSet::new();
    for k in 0..=intermediates.len() {
        for subset in intermediates.iter().combinations(k) {
            for order in subset.iter().permutations(k) {
                let mut vertices = vec![u.to_string()];
                vertices.extend(order.iter().map(|v| v.as_str().to_string()));
                vertices.push(w.to_string());
                let adjacent = vertices
                    .windows(2)
                    .all(|pair| g.has_edge(&pair[0], &pair[1]));
                if adjacent {
                    found.insert(vertices);
                }
            }
        }
    }
    found
}

#[test]
fn enumeration_matches_permutation_oracle() {
    let mut rng = StdRng::seed_from_u64(7);
    for trial in 0..60 {
        let n = rng.random_range(2..=7);
        let g = random_graph(&mut rng, n, 0.45);
        let u = "v0";
        let w = format!("v{}", n - 1);
        let enumerated = g.enumerate_paths(u, &w).unwrap();
        let as_set: BTreeSet<Vec<String>> = enumerated
            .iter()
            .map(|p| p.vertices().to_vec())
            .collect();
        assert_eq!(as_set.len(), enumerated.len(), "duplicate path in trial {trial}");
        assert_eq!(as_set, brute_force_paths(&g, u, &w), "trial {trial}");
        for path in &enumerated {
            g.validate_path(path).unwrap();
        }
        // determinism: a second run yields the identical ordering
        assert_eq!(g.enumerate_paths(u, &w).unwrap(), enumerated);
    }
}

#[test]
fn prefix_ideals_are_contained_in_path_ideals() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.random_range(3..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let w = format!("v{}", n - 1);
        for path in g.enumerate_paths("v0", &w).unwrap() {
            let full = g.path_ideal(&path).unwrap();
            for prefix_len in 2..path.vertices().len() {
                let prefix = Path::new(path.vertices()[..prefix_len].to_vec());
                let truncated = g.path_ideal(&prefix).unwrap();
                assert_eq!(
                    full.contains_ideal(&truncated).unwrap(),
                    Trivalent::True,
                    "{truncated} not within {full}"
                );
            }
        }
    }
}

#[test]
fn intersection_is_contained_in_every_path_ideal() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..40 {
        let n = rng.random_range(2..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let w = format!("v{}", n - 1);
        if !g.connected_pair("v0", &w).unwrap() {
            continue;
        }
        let intersection = g.paths_intersection_ideal("v0", &w).unwrap();
        for path in g.enumerate_paths("v0", &w).unwrap() {
            let ideal = g.path_ideal(&path).unwrap();
            assert_eq!(ideal.contains_ideal(&intersection).unwrap(), Trivalent::True);
        }
    }
}
