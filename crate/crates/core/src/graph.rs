//! Edge-labeled simple graphs, deterministic simple-path enumeration, and
//! path-ideal computations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::ring::{Ideal, RingDescriptor};
use crate::Result;

/// An immutable simple undirected graph whose every edge carries an ideal
/// of the base ring. Construct one through [`GraphBuilder`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeledGraph {
    ring: RingDescriptor,
    vertices: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Neighbor lists sorted by vertex insertion order.
    adjacency: Vec<Vec<usize>>,
    /// Keyed by `(min index, max index)`.
    edges: BTreeMap<(usize, usize), Ideal>,
}

pub struct GraphBuilder {
    ring: RingDescriptor,
    vertices: Vec<String>,
    index: BTreeMap<String, usize>,
    edges: BTreeMap<(usize, usize), Ideal>,
    error: Option<Error>,
}

impl GraphBuilder {
    pub fn new(ring: RingDescriptor) -> Self {
        let error = ring.validate().err();
        GraphBuilder {
            ring,
            vertices: Vec::new(),
            index: BTreeMap::new(),
            edges: BTreeMap::new(),
            error,
        }
    }

    fn record(&mut self, result: Result<()>) {
        if self.error.is_none() {
            self.error = result.err();
        }
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        let name = name.into();
        if self.index.contains_key(&name) {
            self.record(Err(Error::DuplicateVertex(name)));
            return self;
        }
        self.index.insert(name.clone(), self.vertices.len());
        self.vertices.push(name);
        self
    }

    pub fn vertices<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for name in names {
            self = self.vertex(name);
        }
        self
    }

    pub fn edge(mut self, from: &str, to: &str, label: Ideal) -> Self {
        let result = self.try_edge(from, to, label);
        self.record(result);
        self
    }

    fn try_edge(&mut self, from: &str, to: &str, label: Ideal) -> Result<()> {
        let a = *self
            .index
            .get(from)
            .ok_or_else(|| Error::UnknownVertex(from.to_string()))?;
        let b = *self
            .index
            .get(to)
            .ok_or_else(|| Error::UnknownVertex(to.to_string()))?;
        if a == b {
            return Err(Error::SelfLoop(from.to_string()));
        }
        self.ring.expect_same(label.ring())?;
        let key = (a.min(b), a.max(b));
        if self.edges.contains_key(&key) {
            return Err(Error::DuplicateEdge(from.to_string(), to.to_string()));
        }
        self.edges.insert(key, label);
        Ok(())
    }

    pub fn build(self) -> Result<EdgeLabeledGraph> {
        if let Some(error) = self.error {
            return Err(error);
        }
        let mut adjacency = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in self.edges.keys() {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for neighbors in &mut adjacency {
            neighbors.sort_unstable();
        }
        Ok(EdgeLabeledGraph {
            ring: self.ring,
            vertices: self.vertices,
            index: self.index,
            adjacency,
            edges: self.edges,
        })
    }
}

/// A simple path: ordered, distinct vertices with consecutive adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<String>,
}

impl Path {
    pub fn new(vertices: Vec<String>) -> Self {
        Path { vertices }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn endpoints(&self) -> Option<(&str, &str)> {
        match (self.vertices.first(), self.vertices.last()) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices.join(" -> "))
    }
}

impl EdgeLabeledGraph {
    pub fn builder(ring: RingDescriptor) -> GraphBuilder {
        GraphBuilder::new(ring)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_name(&self, index: usize) -> &str {
        &self.vertices[index]
    }

    pub fn has_vertex(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn has_edge(&self, from: &str, to: &str) -> bool {
        match (self.index.get(from), self.index.get(to)) {
            (Some(&a), Some(&b)) => self.edges.contains_key(&(a.min(b), a.max(b))),
            _ => false,
        }
    }

    pub fn edge_label(&self, from: &str, to: &str) -> Result<&Ideal> {
        let a = self.vertex_index(from)?;
        let b = self.vertex_index(to)?;
        self.edges
            .get(&(a.min(b), a.max(b)))
            .ok_or_else(|| Error::InvalidPath(format!("no edge {from} -- {to}")))
    }

    /// Edges in canonical order (sorted by endpoint indices), as
    /// `(from, to, label)` with `from` the earlier-declared endpoint.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, &Ideal)> {
        self.edges.iter().map(move |(&(a, b), label)| {
            (self.vertices[a].as_str(), self.vertices[b].as_str(), label)
        })
    }

    pub fn neighbors(&self, name: &str) -> Result<impl Iterator<Item = &str>> {
        let v = self.vertex_index(name)?;
        Ok(self.adjacency[v].iter().map(|&n| self.vertices[n].as_str()))
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    /// All simple paths from `u` to `w`, by depth-first search expanding
    /// neighbors in vertex-declaration order. The result is empty exactly
    /// when `u` and `w` lie in different components.
    pub fn enumerate_paths(&self, u: &str, w: &str) -> Result<Vec<Path>> {
        let start = self.vertex_index(u)?;
        let goal = self.vertex_index(w)?;
        if start == goal {
            return Err(Error::IdenticalVertices(u.to_string(), w.to_string()));
        }
        let mut paths = Vec::new();
        let mut trail = vec![start];
        let mut visited = vec![false; self.vertices.len()];
        visited[start] = true;
        self.dfs_paths(goal, &mut trail, &mut visited, &mut paths);
        Ok(paths)
    }

    fn dfs_paths(
        &self,
        goal: usize,
        trail: &mut Vec<usize>,
        visited: &mut Vec<bool>,
        out: &mut Vec<Path>,
    ) {
        let current = *trail.last().unwrap();
        for &next in &self.adjacency[current] {
            if next == goal {
                let mut vertices: Vec<String> =
                    trail.iter().map(|&i| self.vertices[i].clone()).collect();
                vertices.push(self.vertices[goal].clone());
                out.push(Path::new(vertices));
                continue;
            }
            if visited[next] {
                continue;
            }
            visited[next] = true;
            trail.push(next);
            self.dfs_paths(goal, trail, visited, out);
            trail.pop();
            visited[next] = false;
        }
    }

    /// Checks that `path` is a simple path of this graph with at least one
    /// edge.
    pub fn validate_path(&self, path: &Path) -> Result<()> {
        if path.vertices().len() < 2 {
            return Err(Error::InvalidPath(
                "a path needs at least one edge".to_string(),
            ));
        }
        let mut seen = BTreeSet::new();
        for name in path.vertices() {
            self.vertex_index(name)?;
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidPath(format!("repeated vertex `{name}`")));
            }
        }
        for pair in path.vertices().windows(2) {
            if !self.has_edge(&pair[0], &pair[1]) {
                return Err(Error::InvalidPath(format!(
                    "no edge {} -- {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(())
    }

    /// The path ideal: the sum of the ideals labeling the path's edges.
    pub fn path_ideal(&self, path: &Path) -> Result<Ideal> {
        self.validate_path(path)?;
        let mut acc: Option<Ideal> = None;
        for pair in path.vertices().windows(2) {
            let label = self.edge_label(&pair[0], &pair[1])?;
            acc = Some(match acc {
                None => label.clone(),
                Some(current) => current.sum(label)?,
            });
        }
        Ok(acc.expect("path has at least one edge"))
    }

    /// The intersection of the path ideals over every simple `u`-`w` path.
    /// With a single path no intersection is formed, so multi-generator
    /// polynomial path ideals are returned as-is.
    pub fn paths_intersection_ideal(&self, u: &str, w: &str) -> Result<Ideal> {
        let paths = self.enumerate_paths(u, w)?;
        if paths.is_empty() {
            return Err(Error::DisconnectedPair(u.to_string(), w.to_string()));
        }
        let mut acc: Option<Ideal> = None;
        for path in &paths {
            let ideal = self.path_ideal(path)?;
            acc = Some(match acc {
                None => ideal,
                Some(current) => current.intersect(&ideal)?,
            });
        }
        Ok(acc.unwrap())
    }

    pub fn connected_pair(&self, u: &str, w: &str) -> Result<bool> {
        let a = self.vertex_index(u)?;
        let b = self.vertex_index(w)?;
        Ok(self.component_of(a)[b])
    }

    fn component_of(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &n in &self.adjacency[v] {
                if !seen[n] {
                    seen[n] = true;
                    stack.push(n);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.len() {
            0 => true,
            _ => self.component_of(0).iter().all(|&b| b),
        }
    }

    /// Vertex indices in breadth-first order from `start`, expanding
    /// neighbors in declaration order. Only reachable vertices appear.
    pub fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &n in &self.adjacency[v] {
                if !seen[n] {
                    seen[n] = true;
                    order.push(n);
                }
            }
        }
        order
    }

    pub fn is_path_graph(&self) -> bool {
        if self.vertices.is_empty() || !self.is_connected() {
            return false;
        }
        if self.vertices.len() == 1 {
            return true;
        }
        let mut endpoints = 0;
        for v in 0..self.vertices.len() {
            match self.degree(v) {
                1 => endpoints += 1,
                2 => {}
                _ => return false,
            }
        }
        endpoints == 2
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty()
            && self.is_connected()
            && self.edges.len() == self.vertices.len() - 1
    }

    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3
            && self.is_connected()
            && (0..self.vertices.len()).all(|v| self.degree(v) == 2)
    }

    /// The subgraph induced by `keep` (labels carried over), with vertices
    /// kept in declaration order.
    pub fn induced_subgraph(&self, keep: &BTreeSet<String>) -> Result<EdgeLabeledGraph> {
        let mut builder = GraphBuilder::new(self.ring.clone());
        for name in &self.vertices {
            if keep.contains(name) {
                builder = builder.vertex(name.clone());
            }
        }
        for (from, to, label) in self.edges() {
            if keep.contains(from) && keep.contains(to) {
                builder = builder.edge(from, to, label.clone());
            }
        }
        builder.build()
    }
}
