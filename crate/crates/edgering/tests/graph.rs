//! Graph algorithm tests, each checked against an independent brute-force
//! oracle where one exists.

use edgering::family::{build_h, build_hk, GridParams};
use edgering::graph::{EliminationOrder, Graph, GraphError};
use proptest::prelude::*;

// ---------- helpers ----------

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn path(n: usize) -> Graph {
    let mut g = Graph::new(labels(n));
    for i in 1..n {
        g.add_edge(&i.to_string(), &(i + 1).to_string()).unwrap();
    }
    g
}

fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    g.add_edge(&n.to_string(), "1").unwrap();
    g
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::new(labels(n));
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_edge(&i.to_string(), &j.to_string()).unwrap();
        }
    }
    g
}

/// Maximum matching size by brute force over all edge subsets.
fn brute_matching(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edge_ids().collect();
    assert!(edges.len() <= 22, "brute force oracle capped");
    let mut best = 0;
    for mask in 0u64..(1 << edges.len()) {
        let chosen: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        let mut used = std::collections::BTreeSet::new();
        if chosen
            .iter()
            .all(|&(u, v)| used.insert(u) && used.insert(v))
            && chosen.len() > best
        {
            best = chosen.len();
        }
    }
    best
}

/// Chordality by brute force: no vertex subset of size >= 4 induces a cycle.
fn brute_chordal(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 10);
    let all: Vec<String> = g.labels().to_vec();
    for mask in 0u32..(1 << n) {
        let subset: Vec<String> = (0..n)
            .filter(|&v| mask & (1 << v) != 0)
            .map(|v| all[v].clone())
            .collect();
        if subset.len() < 4 {
            continue;
        }
        let sub = g.induced_subgraph(&subset).unwrap();
        let is_cycle = (0..sub.vertex_count()).all(|v| sub.degree(v) == 2)
            && sub.connected_components().len() == 1;
        if is_cycle {
            return false;
        }
    }
    true
}

/// Small deterministic graph from a vertex count and an edge bitmask.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(labels(n));
    let mut bit = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if mask & (1 << bit) != 0 {
                g.add_edge(&i.to_string(), &j.to_string()).unwrap();
            }
            bit += 1;
        }
    }
    g
}

// ---------- bipartition ----------

#[test]
fn bipartition_single_edge() {
    let g = graph_from_mask(2, 1);
    assert_eq!(
        g.bipartition(),
        Some((vec!["1".into()], vec!["2".into()]))
    );
}

#[test]
fn bipartition_triangle_absent() {
    assert_eq!(complete(3).bipartition(), None);
}

#[test]
fn bipartition_h33_is_by_column_parity() {
    let g = build_h(GridParams::new(3, 3));
    let (v1, v2) = g.bipartition().unwrap();
    for l in &v1 {
        let (_, j) = edgering::family::parse_label(l).unwrap();
        assert_eq!(j % 2, 1, "odd columns on side 1, got {l}");
    }
    for l in &v2 {
        let (_, j) = edgering::family::parse_label(l).unwrap();
        assert_eq!(j % 2, 0, "even columns on side 2, got {l}");
    }
    assert_eq!(v1.len() + v2.len(), 9);
}

// ---------- connected components ----------

#[test]
fn components_of_grid_graphs() {
    assert_eq!(build_h(GridParams::new(4, 5)).connected_components().len(), 3);
    assert_eq!(build_h(GridParams::new(2, 5)).connected_components().len(), 6);
    let empty = Graph::new(labels(4));
    assert_eq!(empty.connected_components().len(), 4);
}

#[test]
fn isolated_corners() {
    let g = build_h(GridParams::new(4, 5));
    let comps = g.connected_components();
    assert!(comps.contains(&vec!["4,1".to_string()]));
    assert!(comps.contains(&vec!["1,5".to_string()]));
}

// ---------- maximum matching ----------

#[test]
fn matching_small_examples() {
    assert_eq!(path(3).max_matching().unwrap().len(), 1);
    assert_eq!(build_h(GridParams::new(4, 6)).max_matching().unwrap().len(), 11);
    assert_eq!(build_h(GridParams::new(2, 3)).max_matching().unwrap().len(), 2);
}

#[test]
fn matching_rejects_non_bipartite() {
    assert_eq!(complete(3).max_matching(), Err(GraphError::NonBipartite));
}

#[test]
fn matching_is_valid_and_optimal_on_small_grids() {
    for (m, n) in [(2, 3), (2, 4), (3, 3), (2, 7), (3, 4), (4, 3)] {
        let g = build_h(GridParams::new(m, n));
        if g.edge_count() > 12 {
            continue;
        }
        let matching = g.max_matching().unwrap();
        assert!(g.is_valid_matching(&matching));
        assert_eq!(matching.len(), brute_matching(&g), "grid ({m},{n})");
    }
}

proptest! {
    #[test]
    fn matching_matches_brute_force(n in 2usize..7, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        prop_assume!(g.edge_count() <= 12);
        if let Ok(matching) = g.max_matching() {
            prop_assert!(g.is_valid_matching(&matching));
            prop_assert_eq!(matching.len(), brute_matching(&g));
        } else {
            prop_assert!(g.bipartition().is_none());
        }
    }
}

// ---------- chordality and elimination orders ----------

#[test]
fn c4_is_not_chordal() {
    assert!(cycle(4).is_chordal().is_none());
}

#[test]
fn k4_is_chordal() {
    let ord = complete(4).is_chordal().unwrap();
    assert!(complete(4).verify_peo(&ord).unwrap());
}

#[test]
fn h1_complement_in_grid_34_is_chordal_with_paper_order() {
    let p = GridParams::new(3, 4);
    let h1 = build_hk(p, 1).unwrap();
    let comp = h1.complement();
    let order: Vec<String> = (1..=3)
        .map(|i| format!("{i},1"))
        .chain((1..=3).map(|i| format!("{i},2")))
        .collect();
    assert!(comp.verify_peo(&EliminationOrder { order }).unwrap());
    assert!(comp.is_chordal().is_some());
}

#[test]
fn verify_peo_examples() {
    let k3 = complete(3);
    let ord = EliminationOrder { order: labels(3) };
    assert!(k3.verify_peo(&ord).unwrap());

    let c4 = cycle(4);
    // Every order of C4 fails; check a couple.
    for order in [vec!["1", "2", "3", "4"], vec!["3", "1", "4", "2"]] {
        let ord = EliminationOrder {
            order: order.into_iter().map(String::from).collect(),
        };
        assert!(!c4.verify_peo(&ord).unwrap());
    }
}

#[test]
fn zone_complement_peo_for_small_m() {
    for m in [3usize, 4, 5] {
        let p = GridParams::new(m, 2);
        let h1 = build_hk(p, 1).unwrap();
        let order: Vec<String> = (1..=m)
            .map(|i| format!("{i},1"))
            .chain((1..=m).map(|i| format!("{i},2")))
            .collect();
        assert!(
            h1.complement()
                .verify_peo(&EliminationOrder { order })
                .unwrap(),
            "m = {m}"
        );
    }
}

#[test]
fn verify_peo_length_mismatch() {
    let g = complete(3);
    let ord = EliminationOrder {
        order: vec!["1".into(), "2".into()],
    };
    assert!(matches!(
        g.verify_peo(&ord),
        Err(GraphError::LengthMismatch { .. })
    ));
}

proptest! {
    #[test]
    fn chordality_matches_brute_force(n in 2usize..7, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let expected = brute_chordal(&g);
        match g.is_chordal() {
            Some(ord) => {
                prop_assert!(g.verify_peo(&ord).unwrap());
                prop_assert!(expected);
            }
            None => prop_assert!(!expected),
        }
    }
}

// ---------- chordless cycles ----------

#[test]
fn chordless_cycle_examples() {
    let c6 = cycle(6);
    let found = c6.chordless_cycles(12);
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].len(), 6);

    let h = build_h(GridParams::new(4, 3));
    for c in h.chordless_cycles(8) {
        assert_eq!(c.len(), 4);
    }

    assert!(path(5).chordless_cycles(10).is_empty());
}

#[test]
fn triangle_is_a_chordless_cycle() {
    assert_eq!(complete(3).chordless_cycles(3).len(), 1);
    // K4: four triangles, no chordless 4-cycles.
    let cycles = complete(4).chordless_cycles(8);
    assert_eq!(cycles.len(), 4);
    assert!(cycles.iter().all(|c| c.len() == 3));
}

proptest! {
    #[test]
    fn bipartite_chordless_cycles_are_even(n in 2usize..7, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        prop_assume!(g.bipartition().is_some());
        for c in g.chordless_cycles(2 * n) {
            prop_assert_eq!(c.len() % 2, 0);
        }
    }
}

// ---------- complement / induced / remove ----------

#[test]
fn complement_induced_remove_examples() {
    assert_eq!(complete(3).complement().edge_count(), 0);

    let p3 = path(4)
        .induced_subgraph(&["1".into(), "2".into(), "3".into()])
        .unwrap();
    assert_eq!(p3.edge_count(), 2);

    let g = path(4).remove_vertices(&["2".into()]).unwrap();
    assert_eq!(g.vertex_count(), 3);
    assert_eq!(g.edge_count(), 1);
    assert_eq!(g.connected_components().len(), 2);
}

#[test]
fn unknown_vertex_is_an_error() {
    assert!(matches!(
        path(3).induced_subgraph(&["9".into()]),
        Err(GraphError::UnknownVertex(_))
    ));
}

// ---------- cut point property subsets ----------

fn set(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn cut_point_sets_p3() {
    let got = path(3).cut_point_property_sets().unwrap();
    assert_eq!(got, vec![set(&[]), set(&["2"])]);
}

#[test]
fn cut_point_sets_k3() {
    assert_eq!(complete(3).cut_point_property_sets().unwrap(), vec![set(&[])]);
}

#[test]
fn cut_point_sets_p5() {
    let got = path(5).cut_point_property_sets().unwrap();
    assert_eq!(
        got,
        vec![set(&[]), set(&["2"]), set(&["3"]), set(&["4"]), set(&["2", "4"])]
    );
}

#[test]
fn cut_point_sets_members_are_cut_vertices() {
    let g = path(6);
    for a in g.cut_point_property_sets().unwrap() {
        for v in &a {
            let rest: Vec<String> = a.iter().filter(|w| *w != v).cloned().collect();
            let reduced = g.remove_vertices(&rest).unwrap();
            assert!(reduced.is_cut_vertex(v).unwrap());
        }
    }
}

#[test]
fn cut_point_sets_refuses_large_graphs() {
    let g = Graph::new(labels(21));
    assert!(matches!(
        g.cut_point_property_sets(),
        Err(GraphError::TooLarge { .. })
    ));
}

// ---------- edge-list round trip ----------

#[test]
fn edge_list_round_trip() {
    let mut g = build_h(GridParams::new(3, 3));
    let text = g.to_edge_list();
    let parsed = Graph::from_edge_list(&text).unwrap();
    assert_eq!(parsed.edge_count(), g.edge_count());
    for (a, b) in g.edge_labels() {
        assert!(parsed.has_edge(&a, &b));
    }
    // Isolated vertices survive the round trip.
    g = build_h(GridParams::new(4, 4));
    let parsed = Graph::from_edge_list(&g.to_edge_list()).unwrap();
    assert_eq!(parsed.vertex_count(), g.vertex_count());
    assert!(parsed.has_vertex("4,1") && parsed.has_vertex("1,4"));
}

#[test]
fn edge_list_emit_is_deterministic() {
    let a = build_h(GridParams::new(4, 5)).to_edge_list();
    let b = build_h(GridParams::new(4, 5)).to_edge_list();
    assert_eq!(a, b);
}
