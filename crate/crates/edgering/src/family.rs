//! The concrete graph family on the m-by-n grid: the shift graph H, its zone
//! subgraphs H_k, the corner-pruned graph H', the canonical matching, the
//! co-chordal cover with elimination orders, the balancing matrix A, the
//! extremal degree vector u-hat, the three u-hat-type subgraphs, and the
//! directed-cut family.
//!
//! Vertices are labeled "i,j" with row i in [m] and column j in [n]. Every
//! edge of H joins a column-j vertex to a column-(j+1) vertex with strictly
//! larger row on the right: {x(i,j), x(i',j+1)} for i < i'.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EliminationOrder, Graph, Matching};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("zone index {k} out of range 1..={max}")]
    BadZone { k: usize, max: usize },
    #[error("parameters (m,n)=({m},{n}) unsupported: {reason}")]
    BadParams { m: usize, n: usize, reason: String },
    #[error("elimination order failed verification for zone {k}")]
    PeoFailure { k: usize },
    #[error("graph is not a subgraph of the corner-pruned host")]
    NotSubgraph,
}

/// Grid dimensions: m rows, n columns, both at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridParams {
    pub m: usize,
    pub n: usize,
}

impl GridParams {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m >= 2 && n >= 2, "grid needs m,n >= 2");
        GridParams { m, n }
    }
}

/// An m-by-n integer matrix, row-major, 1-based access helpers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn zeros(p: GridParams) -> Self {
        IntMatrix {
            entries: vec![vec![0; p.n]; p.m],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i - 1][j - 1] = v;
    }

    /// Sum of all entries.
    pub fn total(&self) -> i64 {
        self.entries.iter().flatten().sum()
    }
}

/// A directed cut: the edges leaving `source` under the odd-to-even-column
/// orientation, stored as (tail, head) label pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectedCut {
    pub source: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// Label of the grid vertex in row i, column j.
pub fn vlabel(i: usize, j: usize) -> String {
    format!("{i},{j}")
}

/// Parses a grid label "i,j" back into (row, column).
pub fn parse_label(label: &str) -> Option<(usize, usize)> {
    let (i, j) = label.split_once(',')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

fn grid_labels(p: GridParams) -> Vec<String> {
    let mut labels = Vec::with_capacity(p.m * p.n);
    for i in 1..=p.m {
        for j in 1..=p.n {
            labels.push(vlabel(i, j));
        }
    }
    labels
}

/// Edges of H as ((i,j),(i',j+1)) index pairs, in deterministic order.
pub fn h_edges(p: GridParams) -> Vec<((usize, usize), (usize, usize))> {
    let mut edges = Vec::new();
    for j in 1..p.n {
        for i in 1..p.m {
            for i2 in i + 1..=p.m {
                edges.push(((i, j), (i2, j + 1)));
            }
        }
    }
    edges
}

/// The shift graph H on the full grid: edges {x(i,j), x(i',j+1)} for i < i'.
pub fn build_h(p: GridParams) -> Graph {
    let mut g = Graph::new(grid_labels(p));
    for ((i, j), (i2, j2)) in h_edges(p) {
        g.add_edge(&vlabel(i, j), &vlabel(i2, j2)).unwrap();
    }
    g
}

/// The zone subgraph H_k: the induced subgraph of H on columns {k, k+1}.
pub fn build_hk(p: GridParams, k: usize) -> Result<Graph, FamilyError> {
    if !(1..p.n).contains(&k) {
        return Err(FamilyError::BadZone { k, max: p.n - 1 });
    }
    let keep: Vec<String> = (1..=p.m)
        .flat_map(|i| [vlabel(i, k), vlabel(i, k + 1)])
        .collect();
    Ok(build_h(p).induced_subgraph(&keep).unwrap())
}

/// H with the two isolated corner vertices x(m,1) and x(1,n) removed.
pub fn build_hprime(p: GridParams) -> Graph {
    build_h(p)
        .remove_vertices(&[vlabel(p.m, 1), vlabel(1, p.n)])
        .unwrap()
}

/// The explicit maximum matching of H:
/// {x(i,j), x(i+1,j+1)} for i in [m-1] and odd j, plus
/// {x(1,j), x(m,j+1)} for even j.
pub fn canonical_matching(p: GridParams) -> Matching {
    let mut edges = Vec::new();
    for j in 1..p.n {
        if j % 2 == 1 {
            for i in 1..p.m {
                edges.push(sorted_pair(vlabel(i, j), vlabel(i + 1, j + 1)));
            }
        } else {
            edges.push(sorted_pair(vlabel(1, j), vlabel(p.m, j + 1)));
        }
    }
    edges.sort();
    Matching { edges }
}

fn sorted_pair(a: String, b: String) -> (String, String) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The co-chordal cover of H: the n-1 zone subgraphs H_k, each paired with
/// the vertex order x(1,k),...,x(m,k),x(1,k+1),...,x(m,k+1), which is a
/// perfect elimination order of the complement of H_k. A failed verification
/// signals an implementation bug.
pub fn cochord_cover(p: GridParams) -> Result<Vec<(Graph, EliminationOrder)>, FamilyError> {
    let mut cover = Vec::new();
    for k in 1..p.n {
        let hk = build_hk(p, k)?;
        let order: Vec<String> = (1..=p.m)
            .map(|i| vlabel(i, k))
            .chain((1..=p.m).map(|i| vlabel(i, k + 1)))
            .collect();
        let ord = EliminationOrder { order };
        match hk.complement().verify_peo(&ord) {
            Ok(true) => cover.push((hk, ord)),
            _ => return Err(FamilyError::PeoFailure { k }),
        }
    }
    Ok(cover)
}

/// The balancing matrix A: zero at the two corners (1,n) and (m,1), +1 in odd
/// columns and -1 in even columns elsewhere. A annihilates every edge vector
/// of H': a(i,j) + a(i',j+1) = 0 along every edge.
pub fn matrix_a(p: GridParams) -> IntMatrix {
    let mut a = IntMatrix::zeros(p);
    for i in 1..=p.m {
        for j in 1..=p.n {
            if (i, j) == (1, p.n) || (i, j) == (p.m, 1) {
                continue;
            }
            a.set(i, j, if j % 2 == 1 { 1 } else { -1 });
        }
    }
    a
}

/// The extremal degree vector u-hat as an m-by-n matrix: zero at the corners
/// (1,n) and (m,1); 2 at (1,n-1); at (m,2) the value 2 for even n and m-2 for
/// odd n; 1 everywhere else. Requires m >= 4.
pub fn vector_u_hat(p: GridParams) -> Result<IntMatrix, FamilyError> {
    if p.m < 4 {
        return Err(FamilyError::BadParams {
            m: p.m,
            n: p.n,
            reason: "u-hat is defined only for m >= 4".into(),
        });
    }
    let mut u = IntMatrix::zeros(p);
    for i in 1..=p.m {
        for j in 1..=p.n {
            u.set(i, j, 1);
        }
    }
    u.set(1, p.n, 0);
    u.set(p.m, 1, 0);
    u.set(1, p.n - 1, 2);
    u.set(p.m, 2, if p.n.is_multiple_of(2) { 2 } else { (p.m - 2) as i64 });
    Ok(u)
}

/// Zone contents of the first u-hat-type subgraph. Zones come in two shapes
/// that alternate with column parity, the parity depending on whether n is
/// odd or even:
///   long zones: the two long parallel edges {x(1,j), x(m-1,j+1)} and
///     {x(2,j), x(m,j+1)};
///   steep zones: the m-2 parallel edges {x(i,j), x(i+2,j+1)}, i in [m-2].
/// For odd n the long zones sit at odd j (zone 1 additionally fans
/// {x(i,1), x(m,2)} for 3 <= i <= m-1); for even n the steep zones sit at odd
/// j (zone 1 additionally gets {x(m-1,1), x(m,2)}). The last zone always
/// gets the extra edge {x(1,n-1), x(2,n)}.
fn zone_is_long(p: GridParams, j: usize) -> bool {
    if p.n % 2 == 1 {
        j % 2 == 1
    } else {
        j.is_multiple_of(2)
    }
}

type E = ((usize, usize), (usize, usize));

fn h1_zone(p: GridParams, j: usize) -> Vec<E> {
    let m = p.m;
    let mut edges: Vec<E> = Vec::new();
    if zone_is_long(p, j) {
        edges.push(((1, j), (m - 1, j + 1)));
        edges.push(((2, j), (m, j + 1)));
        if j == 1 {
            // Odd n: zone 1 fans rows 3..m-1 into x(m,2).
            for i in 3..m {
                edges.push(((i, 1), (m, 2)));
            }
        }
    } else {
        for i in 1..=m - 2 {
            edges.push(((i, j), (i + 2, j + 1)));
        }
        if j == 1 {
            // Even n: zone 1 gets the short corner edge.
            edges.push(((m - 1, 1), (m, 2)));
        }
    }
    if j == p.n - 1 {
        edges.push(((1, p.n - 1), (2, p.n)));
    }
    edges
}

fn h2_zone(p: GridParams, j: usize) -> Vec<E> {
    let m = p.m;
    let mut edges: Vec<E> = Vec::new();
    if zone_is_long(p, j) {
        // Cross the two long parallel edges.
        edges.push(((1, j), (m, j + 1)));
        edges.push(((2, j), (m - 1, j + 1)));
        if j == 1 {
            for i in 3..m {
                edges.push(((i, 1), (m, 2)));
            }
        }
    } else {
        // m-3 parallel edges of slope -1, plus one long edge.
        for i in 2..=m - 2 {
            edges.push(((i, j), (i + 1, j + 1)));
        }
        edges.push(((1, j), (m, j + 1)));
        if j == 1 {
            edges.push(((m - 1, 1), (m, 2)));
        }
    }
    if j == p.n - 1 {
        edges.push(((1, p.n - 1), (2, p.n)));
    }
    edges
}

fn h3_edges(p: GridParams) -> Vec<E> {
    let mut edges: Vec<E> = (1..p.n).flat_map(|j| h1_zone(p, j)).collect();
    let m = p.m;
    let swap = |edges: &mut Vec<E>, from: E, to: E| {
        let pos = edges
            .iter()
            .position(|&e| e == from)
            .expect("edge scheduled for replacement is missing");
        edges[pos] = to;
    };
    for j in 1..=p.n - 2 {
        if zone_is_long(p, j) {
            swap(&mut edges, ((1, j), (m - 1, j + 1)), ((1, j), (m - 2, j + 1)));
            swap(
                &mut edges,
                ((m - 2, j + 1), (m, j + 2)),
                ((m - 1, j + 1), (m, j + 2)),
            );
        } else {
            swap(&mut edges, ((1, j), (3, j + 1)), ((1, j), (2, j + 1)));
            swap(
                &mut edges,
                ((2, j + 1), (m, j + 2)),
                ((3, j + 1), (m, j + 2)),
            );
        }
    }
    edges
}

fn graph_on_hprime(p: GridParams, edges: &[E]) -> Graph {
    let host = build_hprime(p);
    let mut g = Graph::new(host.labels().to_vec());
    for &((i, j), (i2, j2)) in edges {
        g.add_edge(&vlabel(i, j), &vlabel(i2, j2)).unwrap();
    }
    g
}

/// The three u-hat-type subgraphs of H'. Each has degree matrix (with the two
/// corners forced to zero) equal to u-hat, and the union of their edge sets
/// is a connected subgraph of H'. Requires m >= 4 and n >= 3.
pub fn u_type_subgraphs(p: GridParams) -> Result<[Graph; 3], FamilyError> {
    if p.m < 4 || p.n < 3 {
        return Err(FamilyError::BadParams {
            m: p.m,
            n: p.n,
            reason: "u-hat-type subgraphs need m >= 4 and n >= 3".into(),
        });
    }
    let h1: Vec<E> = (1..p.n).flat_map(|j| h1_zone(p, j)).collect();
    let h2: Vec<E> = (1..p.n).flat_map(|j| h2_zone(p, j)).collect();
    let h3 = h3_edges(p);
    Ok([
        graph_on_hprime(p, &h1),
        graph_on_hprime(p, &h2),
        graph_on_hprime(p, &h3),
    ])
}

/// Degree matrix of a subgraph of H': entry (i,j) is the degree of x(i,j),
/// with the corner entries (1,n) and (m,1) forced to zero.
pub fn degree_matrix(sub: &Graph, p: GridParams) -> Result<IntMatrix, FamilyError> {
    let host = build_hprime(p);
    for (a, b) in sub.edge_labels() {
        if !host.has_edge(&a, &b) {
            return Err(FamilyError::NotSubgraph);
        }
    }
    let mut d = IntMatrix::zeros(p);
    for v in 0..sub.vertex_count() {
        let (i, j) = parse_label(sub.label(v)).ok_or(FamilyError::NotSubgraph)?;
        if i < 1 || i > p.m || j < 1 || j > p.n {
            return Err(FamilyError::NotSubgraph);
        }
        if (i, j) == (1, p.n) || (i, j) == (p.m, 1) {
            continue;
        }
        d.set(i, j, sub.degree(v) as i64);
    }
    Ok(d)
}

/// The directed-cut family of H' under the orientation sending every edge
/// from its odd-column endpoint to its even-column endpoint: one cut per
/// odd-column vertex, and for even n the cut at x(1,n-1) is refined into
/// the two cuts leaving {x(1,n-1), x(2,n)} and leaving V' minus {x(2,n)}.
/// The cuts are pairwise edge-disjoint and cover E(H').
pub fn directed_cut_family(p: GridParams) -> Result<Vec<DirectedCut>, FamilyError> {
    if p.m < 4 {
        return Err(FamilyError::BadParams {
            m: p.m,
            n: p.n,
            reason: "the directed-cut certificate needs m >= 4".into(),
        });
    }
    let hp = build_hprime(p);
    let mut cuts = Vec::new();
    for j in (1..=p.n).step_by(2) {
        for i in 1..=p.m {
            let u = vlabel(i, j);
            if !hp.has_vertex(&u) {
                continue;
            }
            if p.n.is_multiple_of(2) && (i, j) == (1, p.n - 1) {
                // Refinement: split this vertex cut into two directed cuts.
                let u2 = vlabel(2, p.n);
                let mut long_part = Vec::new();
                for i2 in 3..=p.m {
                    long_part.push((u.clone(), vlabel(i2, p.n)));
                }
                cuts.push(DirectedCut {
                    source: vec![u.clone(), u2.clone()],
                    edges: long_part,
                });
                let keep_out = u2.clone();
                let source: Vec<String> = hp
                    .labels()
                    .iter()
                    .filter(|l| **l != keep_out)
                    .cloned()
                    .collect();
                cuts.push(DirectedCut {
                    source,
                    edges: vec![(u.clone(), u2)],
                });
            } else {
                let uid = hp.vertex_id(&u).unwrap();
                let edges: Vec<(String, String)> = hp
                    .neighbors(uid)
                    .iter()
                    .map(|&w| (u.clone(), hp.label(w).to_string()))
                    .collect();
                cuts.push(DirectedCut { source: vec![u], edges });
            }
        }
    }
    Ok(cuts)
}

/// Checks that `cut.edges` really is the directed cut leaving `cut.source`
/// in H' under the odd-to-even orientation, with no edge entering the source.
pub fn verify_directed_cut(p: GridParams, cut: &DirectedCut) -> bool {
    let hp = build_hprime(p);
    let in_source: std::collections::BTreeSet<&String> = cut.source.iter().collect();
    let mut expected = Vec::new();
    for (a, b) in hp.edge_labels() {
        let (_, ja) = parse_label(&a).unwrap();
        // Tail = odd-column endpoint.
        let (tail, head) = if ja % 2 == 1 { (a, b) } else { (b, a) };
        let tail_in = in_source.contains(&tail);
        let head_in = in_source.contains(&head);
        if tail_in && !head_in {
            expected.push((tail, head));
        } else if head_in && !tail_in {
            // An edge enters the source set: not a directed cut.
            return false;
        }
    }
    expected.sort();
    let mut got = cut.edges.clone();
    got.sort();
    expected == got
}
