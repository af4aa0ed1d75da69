//! Simple labeled graphs and the graph algorithms the rest of the crate
//! consumes: bipartitions, components, maximum matching, perfect elimination
//! orders, chordless-cycle enumeration and cut-point-property subsets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is not bipartite")]
    NonBipartite,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("elimination order has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("graph too large for exhaustive enumeration: {vertices} vertices (cap {cap})")]
    TooLarge { vertices: usize, cap: usize },
    #[error("malformed edge list line `{0}`")]
    BadEdgeList(String),
}

/// A simple undirected graph with string-labeled vertices.
///
/// The vertex order is fixed at construction and every operation iterates in
/// that order, so all outputs are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
    /// Edges as index pairs (u, v) with u < v.
    edges: BTreeSet<(usize, usize)>,
}

/// A set of pairwise vertex-disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Edges as label pairs, each pair sorted, the list sorted.
    pub edges: Vec<(String, String)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A permutation of the vertex set, by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<String>,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            let prev = index.insert(l.clone(), i);
            assert!(prev.is_none(), "duplicate vertex label `{l}`");
        }
        let n = labels.len();
        Graph {
            labels,
            index,
            adj: vec![BTreeSet::new(); n],
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_id(&self, label: &str) -> Result<usize, GraphError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let u = self.vertex_id(a)?;
        let v = self.vertex_id(b)?;
        assert_ne!(u, v, "loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&u), Some(&v)) => self.adj[u].contains(&v),
            _ => false,
        }
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as index pairs (u, v) with u < v, in deterministic order.
    pub fn edge_ids(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Edges as sorted label pairs, in deterministic order.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Returns (V1, V2) with every edge crossing the parts, or `None` if the
    /// graph contains an odd cycle. V1 holds the first-constructed vertex of
    /// each component.
    pub fn bipartition(&self) -> Option<(Vec<String>, Vec<String>)> {
        self.bipartition_ids().map(|side| {
            let mut v1 = Vec::new();
            let mut v2 = Vec::new();
            for v in 0..self.vertex_count() {
                if side[v] == 0 {
                    v1.push(self.labels[v].clone());
                } else {
                    v2.push(self.labels[v].clone());
                }
            }
            (v1, v2)
        })
    }

    /// Two-coloring by BFS: side 0 or 1 per vertex, the first vertex of each
    /// component getting side 0. `None` when an odd cycle exists.
    pub(crate) fn bipartition_ids(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Partition of the vertex labels into maximal connected sets, ordered by
    /// first-constructed vertex.
    pub fn connected_components(&self) -> Vec<Vec<String>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp.into_iter().map(|v| self.labels[v].clone()).collect());
        }
        components
    }

    /// Maximum-cardinality matching of a bipartite graph, by repeated
    /// augmenting paths. The matching size is unique even though the edge set
    /// is not; ties are broken by vertex order.
    pub fn max_matching(&self) -> Result<Matching, GraphError> {
        let side = self.bipartition_ids().ok_or(GraphError::NonBipartite)?;
        let n = self.vertex_count();
        // partner[v] = matched neighbor of v, or usize::MAX
        let mut partner = vec![usize::MAX; n];
        for u in 0..n {
            if side[u] != 0 || partner[u] != usize::MAX {
                continue;
            }
            let mut seen = vec![false; n];
            self.augment(u, &mut seen, &mut partner);
        }
        let mut edges = Vec::new();
        for u in 0..n {
            let v = partner[u];
            if v != usize::MAX && u < v {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                edges.push(if a <= b { (a, b) } else { (b, a) });
            }
        }
        edges.sort();
        Ok(Matching { edges })
    }

    fn augment(&self, u: usize, seen: &mut [bool], partner: &mut [usize]) -> bool {
        for &w in &self.adj[u] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if partner[w] == usize::MAX || self.augment(partner[w], seen, partner) {
                partner[w] = u;
                partner[u] = w;
                return true;
            }
        }
        false
    }

    /// Checks that `edges` (label pairs) is a valid matching of this graph.
    pub fn is_valid_matching(&self, m: &Matching) -> bool {
        let mut used = BTreeSet::new();
        for (a, b) in &m.edges {
            if !self.has_edge(a, b) {
                return false;
            }
            if !used.insert(a.clone()) || !used.insert(b.clone()) {
                return false;
            }
        }
        true
    }

    /// Returns a perfect elimination order when the graph is chordal
    /// (maximum-cardinality-search candidate, verified by definition),
    /// `None` otherwise.
    pub fn is_chordal(&self) -> Option<EliminationOrder> {
        let n = self.vertex_count();
        // Maximum cardinality search; visit order reversed is a PEO iff chordal.
        let mut weight = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut visit_order = Vec::with_capacity(n);
        for _ in 0..n {
            let u = (0..n)
                .filter(|&v| !visited[v])
                .max_by_key(|&v| (weight[v], usize::MAX - v))
                .unwrap();
            visited[u] = true;
            visit_order.push(u);
            for &w in &self.adj[u] {
                if !visited[w] {
                    weight[w] += 1;
                }
            }
        }
        visit_order.reverse();
        let ord = EliminationOrder {
            order: visit_order.iter().map(|&v| self.labels[v].clone()).collect(),
        };
        match self.verify_peo(&ord) {
            Ok(true) => Some(ord),
            _ => None,
        }
    }

    /// True iff for each position i, the later neighbors of the i-th vertex
    /// form a clique.
    pub fn verify_peo(&self, ord: &EliminationOrder) -> Result<bool, GraphError> {
        let n = self.vertex_count();
        if ord.order.len() != n {
            return Err(GraphError::LengthMismatch {
                got: ord.order.len(),
                expected: n,
            });
        }
        let mut position = vec![usize::MAX; n];
        for (pos, label) in ord.order.iter().enumerate() {
            let v = self.vertex_id(label)?;
            if position[v] != usize::MAX {
                return Err(GraphError::LengthMismatch {
                    got: ord.order.len(),
                    expected: n,
                });
            }
            position[v] = pos;
        }
        for v in 0..n {
            let later: Vec<usize> = self.adj[v]
                .iter()
                .copied()
                .filter(|&w| position[w] > position[v])
                .collect();
            for (ai, &a) in later.iter().enumerate() {
                for &b in &later[ai + 1..] {
                    if !self.adj[a].contains(&b) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// All chordless (primitive) cycles of length <= `max_len`, each reported
    /// once up to rotation and reflection, as label sequences.
    pub fn chordless_cycles(&self, max_len: usize) -> Vec<Vec<String>> {
        assert!(max_len >= 3, "max_len must be at least 3");
        let n = self.vertex_count();
        let mut cycles = Vec::new();
        let mut path = Vec::new();
        for s in 0..n {
            // Cycles whose least vertex is s; reflection killed by requiring
            // the first step to be smaller than the last.
            let firsts: Vec<usize> = self.adj[s].iter().copied().filter(|&v| v > s).collect();
            for &a in &firsts {
                path.clear();
                path.push(s);
                path.push(a);
                self.extend_chordless(s, max_len, &mut path, &mut cycles);
            }
        }
        cycles
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.labels[v].clone()).collect())
            .collect()
    }

    fn extend_chordless(
        &self,
        s: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in &self.adj[last] {
            if w <= s || path.contains(&w) {
                continue;
            }
            // w must not be adjacent to any path vertex except its predecessor
            // (and possibly s, which closes the cycle).
            let interior = &path[1..path.len() - 1];
            if interior.iter().any(|&p| self.adj[w].contains(&p)) {
                continue;
            }
            let closes = self.adj[w].contains(&s);
            if closes {
                if path.len() >= 2 && path.len() < max_len && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    out.push(cycle);
                }
                // A chordless cycle cannot be extended past a neighbor of s.
                continue;
            }
            if path.len() + 1 < max_len {
                path.push(w);
                self.extend_chordless(s, max_len, path, out);
                path.pop();
            }
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.labels.clone());
        for u in 0..self.vertex_count() {
            for v in u + 1..self.vertex_count() {
                if !self.adj[u].contains(&v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                    g.edges.insert((u, v));
                }
            }
        }
        g
    }

    /// Subgraph on the vertex set `keep`, with exactly the edges inside it.
    pub fn induced_subgraph(&self, keep: &[String]) -> Result<Graph, GraphError> {
        let mut ids = Vec::with_capacity(keep.len());
        for l in keep {
            ids.push(self.vertex_id(l)?);
        }
        let keep_set: BTreeSet<usize> = ids.iter().copied().collect();
        let mut g = Graph::new(keep.to_vec());
        for &(u, v) in &self.edges {
            if keep_set.contains(&u) && keep_set.contains(&v) {
                g.add_edge(&self.labels[u], &self.labels[v])?;
            }
        }
        Ok(g)
    }

    pub fn remove_vertices(&self, drop: &[String]) -> Result<Graph, GraphError> {
        for l in drop {
            self.vertex_id(l)?;
        }
        let drop_set: BTreeSet<&String> = drop.iter().collect();
        let keep: Vec<String> = self
            .labels
            .iter()
            .filter(|l| !drop_set.contains(l))
            .cloned()
            .collect();
        self.induced_subgraph(&keep)
    }

    /// True iff removing `label` increases the number of connected components.
    pub fn is_cut_vertex(&self, label: &str) -> Result<bool, GraphError> {
        self.vertex_id(label)?;
        let before = self.connected_components().len();
        let after = self
            .remove_vertices(std::slice::from_ref(&label.to_string()))?
            .connected_components()
            .len();
        // Removing a vertex also removes its singleton component, so the count
        // increases strictly only when the vertex separated its component.
        Ok(after > before)
    }

    /// All subsets A of the vertex set (including the empty set) such that
    /// every v in A is a cut vertex of the graph with A minus {v} removed.
    /// Exhaustive over subsets; refuses graphs with more than 20 vertices.
    pub fn cut_point_property_sets(&self) -> Result<Vec<Vec<String>>, GraphError> {
        const CAP: usize = 20;
        let n = self.vertex_count();
        if n > CAP {
            return Err(GraphError::TooLarge {
                vertices: n,
                cap: CAP,
            });
        }
        let mut result = Vec::new();
        'subset: for mask in 0u32..(1u32 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            for &v in &members {
                let rest: Vec<String> = members
                    .iter()
                    .filter(|&&w| w != v)
                    .map(|&w| self.labels[w].clone())
                    .collect();
                let reduced = self.remove_vertices(&rest)?;
                if !reduced.is_cut_vertex(&self.labels[v])? {
                    continue 'subset;
                }
            }
            result.push(members.into_iter().map(|v| self.labels[v].clone()).collect());
        }
        Ok(result)
    }

    /// Emits the edge-list text format: one line per edge, `label1 label2`;
    /// isolated vertices as single-label lines so the graph round-trips.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        for v in 0..self.vertex_count() {
            if self.adj[v].is_empty() {
                let _ = writeln!(out, "{}", self.labels[v]);
            }
        }
        out
    }

    /// Parses the edge-list text format produced by [`Graph::to_edge_list`].
    /// Vertices appear in first-mention order.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut labels: Vec<String> = Vec::new();
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [a] => {
                    if seen.insert(a.to_string()) {
                        labels.push(a.to_string());
                    }
                }
                [a, b] => {
                    for t in [a, b] {
                        if seen.insert(t.to_string()) {
                            labels.push(t.to_string());
                        }
                    }
                    edges.push((a.to_string(), b.to_string()));
                }
                _ => return Err(GraphError::BadEdgeList(line.to_string())),
            }
        }
        let mut g = Graph::new(labels);
        for (a, b) in edges {
            g.add_edge(&a, &b)?;
        }
        Ok(g)
    }
}
