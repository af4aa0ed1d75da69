//! Tests for the grid family constructions. The three u-hat-type subgraphs
//! for (6,7) and (6,8) are checked edge-for-edge against fixture data taken
//! from the published figures (given there in picture coordinates (x,y),
//! which name the vertex in row m+1-y, column x).

use edgering::family::*;
use edgering::graph::Graph;

fn h_formula_edge_count(m: usize, n: usize) -> usize {
    (n - 1) * m * (m - 1) / 2
}

// ---------- H, H_k, H' ----------

#[test]
fn h_23_exact_edges() {
    let g = build_h(GridParams::new(2, 3));
    assert_eq!(g.edge_count(), 2);
    assert!(g.has_edge("1,1", "2,2"));
    assert!(g.has_edge("1,2", "2,3"));
}

#[test]
fn h_counts_and_components() {
    for m in 2..=5 {
        for n in 2..=6 {
            let g = build_h(GridParams::new(m, n));
            assert_eq!(g.edge_count(), h_formula_edge_count(m, n), "({m},{n})");
            let comps = g.connected_components().len();
            if m == 2 {
                assert_eq!(comps, n + 1, "({m},{n})");
            } else {
                assert_eq!(comps, 3, "({m},{n})");
            }
            let corner1 = g.vertex_id(&vlabel(m, 1)).unwrap();
            let corner2 = g.vertex_id(&vlabel(1, n)).unwrap();
            assert_eq!(g.degree(corner1), 0);
            assert_eq!(g.degree(corner2), 0);
        }
    }
}

#[test]
fn hk_and_hprime() {
    let p = GridParams::new(3, 3);
    let h1 = build_hk(p, 1).unwrap();
    assert_eq!(h1.vertex_count(), 6);
    assert_eq!(h1.edge_count(), 3);

    let hp = build_hprime(GridParams::new(4, 6));
    assert_eq!(hp.vertex_count(), 22);
    assert_eq!(hp.connected_components().len(), 1);

    assert!(build_hk(p, 3).is_err());
}

#[test]
fn zone_subgraphs_pairwise_isomorphic_by_column_shift() {
    let p = GridParams::new(4, 5);
    let h1 = build_hk(p, 1).unwrap();
    for k in 2..p.n {
        let hk = build_hk(p, k).unwrap();
        // The natural isomorphism shifts column k to column 1.
        for (a, b) in hk.edge_labels() {
            let (ia, ja) = parse_label(&a).unwrap();
            let (ib, jb) = parse_label(&b).unwrap();
            assert!(h1.has_edge(&vlabel(ia, ja - k + 1), &vlabel(ib, jb - k + 1)));
        }
        assert_eq!(hk.edge_count(), h1.edge_count());
    }
}

// ---------- canonical matching ----------

#[test]
fn canonical_matching_sizes() {
    assert_eq!(canonical_matching(GridParams::new(4, 6)).len(), 11);
    assert_eq!(canonical_matching(GridParams::new(2, 2)).len(), 1);
    // The (4,7) value: the closed formula gives (m-1)*floor(n/2)+floor((n-1)/2) = 12.
    assert_eq!(canonical_matching(GridParams::new(4, 7)).len(), 12);
}

#[test]
fn canonical_matching_is_valid_and_optimal() {
    for m in 2..=5 {
        for n in 2..=7 {
            let p = GridParams::new(m, n);
            let g = build_h(p);
            let cm = canonical_matching(p);
            assert!(g.is_valid_matching(&cm), "({m},{n})");
            let opt = g.max_matching().unwrap();
            assert_eq!(cm.len(), opt.len(), "({m},{n})");
            let formula = (m - 1) * (n / 2) + (n - 1) / 2;
            assert_eq!(cm.len(), formula, "({m},{n})");
        }
    }
}

// ---------- co-chordal cover ----------

#[test]
fn cochord_cover_counts() {
    assert_eq!(cochord_cover(GridParams::new(3, 4)).unwrap().len(), 3);
    assert_eq!(cochord_cover(GridParams::new(4, 2)).unwrap().len(), 1);
}

#[test]
fn cochord_cover_union_is_all_of_h() {
    let p = GridParams::new(5, 5);
    let g = build_h(p);
    let mut union: std::collections::BTreeSet<(String, String)> = Default::default();
    for (hk, _) in cochord_cover(p).unwrap() {
        union.extend(hk.edge_labels());
    }
    let all: std::collections::BTreeSet<(String, String)> = g.edge_labels().into_iter().collect();
    assert_eq!(union, all);
}

// ---------- matrix A ----------

#[test]
fn matrix_a_2x2() {
    let a = matrix_a(GridParams::new(2, 2));
    assert_eq!(a.entries, vec![vec![1, 0], vec![0, -1]]);
}

#[test]
fn matrix_a_67_matches_figure() {
    let a = matrix_a(GridParams::new(6, 7));
    let expected = vec![
        vec![1, -1, 1, -1, 1, -1, 0],
        vec![1, -1, 1, -1, 1, -1, 1],
        vec![1, -1, 1, -1, 1, -1, 1],
        vec![1, -1, 1, -1, 1, -1, 1],
        vec![1, -1, 1, -1, 1, -1, 1],
        vec![0, -1, 1, -1, 1, -1, 1],
    ];
    assert_eq!(a.entries, expected);
}

#[test]
fn matrix_a_annihilates_hprime_edges() {
    for (m, n) in [(4, 4), (5, 5), (6, 7), (6, 8), (2, 5)] {
        let p = GridParams::new(m, n);
        let a = matrix_a(p);
        for (u, v) in build_hprime(p).edge_labels() {
            let (i, j) = parse_label(&u).unwrap();
            let (i2, j2) = parse_label(&v).unwrap();
            assert_eq!(a.get(i, j) + a.get(i2, j2), 0, "edge {u}-{v} of ({m},{n})");
        }
    }
}

// ---------- u-hat ----------

#[test]
fn u_hat_67_matches_figure() {
    let u = vector_u_hat(GridParams::new(6, 7)).unwrap();
    let expected = vec![
        vec![1, 1, 1, 1, 1, 2, 0],
        vec![1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1, 1],
        vec![0, 4, 1, 1, 1, 1, 1],
    ];
    assert_eq!(u.entries, expected);
    assert_eq!(u.total(), 44);
}

#[test]
fn u_hat_68_matches_figure() {
    let u = vector_u_hat(GridParams::new(6, 8)).unwrap();
    let expected = vec![
        vec![1, 1, 1, 1, 1, 1, 2, 0],
        vec![1, 1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1, 1, 1],
        vec![0, 2, 1, 1, 1, 1, 1, 1],
    ];
    assert_eq!(u.entries, expected);
    assert_eq!(u.total(), 48);
}

#[test]
fn u_hat_totals_and_small_m_rejection() {
    assert_eq!(vector_u_hat(GridParams::new(4, 4)).unwrap().total(), 16);
    assert!(vector_u_hat(GridParams::new(3, 5)).is_err());
    for m in 4..=7 {
        for n in 3..=8 {
            let total = vector_u_hat(GridParams::new(m, n)).unwrap().total() as usize;
            let expected = if n % 2 == 0 {
                2 * (m * n / 2)
            } else {
                2 * (m * (n + 1) / 2 - 2)
            };
            assert_eq!(total, expected, "({m},{n})");
        }
    }
}

// ---------- u-hat-type subgraphs ----------

/// Converts a figure edge in picture coordinates into the grid edge labels.
fn fig_edge(m: usize, (x1, y1): (usize, usize), (x2, y2): (usize, usize)) -> (String, String) {
    let a = vlabel(m + 1 - y1, x1);
    let b = vlabel(m + 1 - y2, x2);
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn assert_graph_equals_figure(g: &Graph, m: usize, fig: &[((usize, usize), (usize, usize))]) {
    let mut expected: Vec<(String, String)> =
        fig.iter().map(|&(p, q)| fig_edge(m, p, q)).collect();
    expected.sort();
    expected.dedup();
    assert_eq!(expected.len(), fig.len(), "figure fixture has duplicates");
    let got = g.edge_labels();
    assert_eq!(got, expected);
}

#[test]
fn u_type_subgraphs_67_match_figures() {
    let [h1, h2, h3] = u_type_subgraphs(GridParams::new(6, 7)).unwrap();
    let fig1 = [
        ((7, 5), (6, 6)), ((7, 4), (6, 6)), ((7, 3), (6, 5)), ((7, 2), (6, 4)),
        ((7, 1), (6, 3)), ((5, 6), (6, 2)), ((5, 5), (6, 1)), ((5, 4), (4, 6)),
        ((5, 3), (4, 5)), ((5, 2), (4, 4)), ((5, 1), (4, 3)), ((3, 6), (4, 2)),
        ((3, 5), (4, 1)), ((3, 4), (2, 6)), ((3, 3), (2, 5)), ((3, 2), (2, 4)),
        ((3, 1), (2, 3)), ((1, 6), (2, 2)), ((1, 5), (2, 1)), ((1, 4), (2, 1)),
        ((1, 3), (2, 1)), ((1, 2), (2, 1)),
    ];
    assert_graph_equals_figure(&h1, 6, &fig1);
    let fig2 = [
        ((7, 5), (6, 6)), ((7, 4), (6, 5)), ((7, 3), (6, 4)), ((7, 2), (6, 3)),
        ((7, 1), (6, 6)), ((5, 5), (6, 2)), ((5, 6), (6, 1)), ((5, 4), (4, 5)),
        ((5, 3), (4, 4)), ((5, 2), (4, 3)), ((5, 1), (4, 6)), ((3, 5), (4, 2)),
        ((3, 6), (4, 1)), ((3, 4), (2, 5)), ((3, 3), (2, 4)), ((3, 2), (2, 3)),
        ((3, 1), (2, 6)), ((1, 5), (2, 2)), ((1, 6), (2, 1)), ((1, 4), (2, 1)),
        ((1, 3), (2, 1)), ((1, 2), (2, 1)),
    ];
    assert_graph_equals_figure(&h2, 6, &fig2);
    let fig3 = [
        ((7, 5), (6, 6)), ((7, 4), (6, 6)), ((7, 3), (6, 5)), ((7, 2), (6, 4)),
        ((7, 1), (6, 2)), ((5, 6), (6, 3)), ((5, 4), (6, 1)), ((5, 5), (4, 6)),
        ((5, 3), (4, 5)), ((5, 2), (4, 4)), ((5, 1), (4, 2)), ((3, 6), (4, 3)),
        ((3, 4), (4, 1)), ((3, 5), (2, 6)), ((3, 3), (2, 5)), ((3, 2), (2, 4)),
        ((3, 1), (2, 2)), ((1, 6), (2, 3)), ((1, 5), (2, 1)), ((1, 4), (2, 1)),
        ((1, 3), (2, 1)), ((1, 2), (2, 1)),
    ];
    assert_graph_equals_figure(&h3, 6, &fig3);
}

#[test]
fn u_type_subgraphs_68_match_figures() {
    let [h1, h2, h3] = u_type_subgraphs(GridParams::new(6, 8)).unwrap();
    let fig1 = [
        ((7, 6), (8, 5)), ((7, 6), (8, 4)), ((7, 5), (8, 3)), ((7, 4), (8, 2)),
        ((7, 3), (8, 1)), ((7, 2), (6, 6)), ((7, 1), (6, 5)), ((5, 6), (6, 4)),
        ((5, 5), (6, 3)), ((5, 4), (6, 2)), ((5, 3), (6, 1)), ((5, 2), (4, 6)),
        ((5, 1), (4, 5)), ((3, 6), (4, 4)), ((3, 5), (4, 3)), ((3, 4), (4, 2)),
        ((3, 3), (4, 1)), ((3, 2), (2, 6)), ((3, 1), (2, 5)), ((1, 6), (2, 4)),
        ((1, 5), (2, 3)), ((1, 4), (2, 2)), ((1, 3), (2, 1)), ((1, 2), (2, 1)),
    ];
    assert_graph_equals_figure(&h1, 6, &fig1);
    let fig2 = [
        ((7, 6), (8, 5)), ((7, 5), (8, 4)), ((7, 4), (8, 3)), ((7, 3), (8, 2)),
        ((7, 6), (8, 1)), ((7, 2), (6, 5)), ((7, 1), (6, 6)), ((5, 5), (6, 4)),
        ((5, 4), (6, 3)), ((5, 3), (6, 2)), ((5, 6), (6, 1)), ((5, 2), (4, 5)),
        ((5, 1), (4, 6)), ((3, 5), (4, 4)), ((3, 4), (4, 3)), ((3, 3), (4, 2)),
        ((3, 6), (4, 1)), ((3, 2), (2, 5)), ((3, 1), (2, 6)), ((1, 5), (2, 4)),
        ((1, 4), (2, 3)), ((1, 3), (2, 2)), ((1, 2), (2, 1)), ((1, 6), (2, 1)),
    ];
    assert_graph_equals_figure(&h2, 6, &fig2);
    let fig3 = [
        ((7, 6), (8, 5)), ((7, 6), (8, 4)), ((7, 5), (8, 3)), ((7, 4), (8, 2)),
        ((7, 2), (8, 1)), ((7, 3), (6, 6)), ((7, 1), (6, 4)), ((5, 6), (6, 5)),
        ((5, 5), (6, 3)), ((5, 4), (6, 2)), ((5, 2), (6, 1)), ((5, 3), (4, 6)),
        ((5, 1), (4, 4)), ((3, 6), (4, 5)), ((3, 5), (4, 3)), ((3, 4), (4, 2)),
        ((3, 2), (4, 1)), ((3, 3), (2, 6)), ((3, 1), (2, 4)), ((1, 6), (2, 5)),
        ((1, 5), (2, 3)), ((1, 4), (2, 2)), ((1, 3), (2, 1)), ((1, 2), (2, 1)),
    ];
    assert_graph_equals_figure(&h3, 6, &fig3);
}

#[test]
fn u_type_degree_matrices_and_connectivity() {
    for m in 4..=6 {
        for n in 3..=8 {
            let p = GridParams::new(m, n);
            let u = vector_u_hat(p).unwrap();
            let subs = u_type_subgraphs(p).unwrap();
            for (s, g) in subs.iter().enumerate() {
                assert_eq!(
                    degree_matrix(g, p).unwrap(),
                    u,
                    "subgraph {} of ({m},{n})",
                    s + 1
                );
            }
            // The combined graph must be connected.
            let mut combined = Graph::new(build_hprime(p).labels().to_vec());
            for g in &subs {
                for (a, b) in g.edge_labels() {
                    combined.add_edge(&a, &b).unwrap();
                }
            }
            assert_eq!(combined.connected_components().len(), 1, "({m},{n})");
        }
    }
}

#[test]
fn u_type_rejects_small_params() {
    assert!(u_type_subgraphs(GridParams::new(3, 5)).is_err());
    assert!(u_type_subgraphs(GridParams::new(5, 2)).is_err());
}

// ---------- degree matrix ----------

#[test]
fn degree_matrix_of_empty_subgraph_is_zero() {
    let p = GridParams::new(4, 4);
    let empty = Graph::new(build_hprime(p).labels().to_vec());
    assert_eq!(degree_matrix(&empty, p).unwrap(), IntMatrix::zeros(p));
}

#[test]
fn degree_matrix_of_canonical_matching() {
    let p = GridParams::new(4, 6);
    let mut g = Graph::new(build_hprime(p).labels().to_vec());
    for (a, b) in &canonical_matching(p).edges {
        g.add_edge(a, b).unwrap();
    }
    let d = degree_matrix(&g, p).unwrap();
    for i in 1..=4 {
        for j in 1..=6 {
            let expected = if (i, j) == (4, 1) || (i, j) == (1, 6) { 0 } else { 1 };
            assert_eq!(d.get(i, j), expected, "({i},{j})");
        }
    }
}

#[test]
fn degree_matrix_rejects_non_subgraphs() {
    let p = GridParams::new(4, 4);
    let mut g = Graph::new(vec!["1,1".into(), "1,2".into()]);
    g.add_edge("1,1", "1,2").unwrap(); // not an edge of H'
    assert_eq!(degree_matrix(&g, p), Err(FamilyError::NotSubgraph));
}

// ---------- directed cuts ----------

#[test]
fn directed_cut_family_counts() {
    assert_eq!(directed_cut_family(GridParams::new(6, 7)).unwrap().len(), 22);
    assert_eq!(directed_cut_family(GridParams::new(6, 8)).unwrap().len(), 24);
    assert_eq!(directed_cut_family(GridParams::new(4, 4)).unwrap().len(), 8);
    assert!(directed_cut_family(GridParams::new(3, 4)).is_err());
}

#[test]
fn directed_cuts_partition_hprime_edges() {
    for (m, n) in [(4, 4), (4, 5), (6, 7), (6, 8)] {
        let p = GridParams::new(m, n);
        let cuts = directed_cut_family(p).unwrap();
        let mut seen: std::collections::BTreeMap<(String, String), usize> = Default::default();
        for cut in &cuts {
            assert!(verify_directed_cut(p, cut), "cut of ({m},{n}) invalid");
            for (a, b) in &cut.edges {
                let key = if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                };
                *seen.entry(key).or_insert(0) += 1;
            }
        }
        let hp = build_hprime(p);
        assert_eq!(seen.len(), hp.edge_count(), "({m},{n}) coverage");
        assert!(seen.values().all(|&c| c == 1), "({m},{n}) disjointness");
    }
}
