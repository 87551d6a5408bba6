use std::collections::BTreeSet;

use proptest::prelude::*;
use ryser_core::delta2::{edge_cover_graph, reduce_dual, ryser_delta2, ComponentKind};
use ryser_core::generators::{gen_delta2, Delta2Mode};
use ryser_core::hypergraph::dual;
use ryser_core::matching::{matched_pairs, max_matching};
use ryser_core::oracles::{alpha, alpha_prime, nu, parameters_exact, rho, tau};
use ryser_core::{Hypergraph, OracleLimits};

fn graph_as_hypergraph(n: usize, edges: &[(usize, usize)]) -> Hypergraph {
    Hypergraph::from_indexed(2, n, edges.iter().map(|&(u, v)| vec![u, v]).collect(), None)
}

/// Triples `e_i = {h_i, h_{i+1}, p_i}` around a cycle of length `m`.
fn triple_cycle(m: usize) -> Hypergraph {
    let edges = (0..m).map(|i| vec![i, (i + 1) % m, m + i]).collect();
    Hypergraph::from_indexed(3, 2 * m, edges, None)
}

fn petersen() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect()
}

#[test]
fn disjoint_triples() {
    let h = Hypergraph::from_indexed(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]], None);
    let reduction = reduce_dual(&dual(&h)).unwrap();
    assert_eq!(reduction.forced.len(), 2);
    assert!(reduction.graph.vertices.is_empty());
    let out = ryser_delta2(&h).unwrap();
    assert_eq!(out.cover.len(), 2);
    assert_eq!(out.bound, 4);
}

#[test]
fn cycle_of_triples() {
    let h = triple_cycle(4);
    let reduction = reduce_dual(&dual(&h)).unwrap();
    assert_eq!(reduction.absorbed, 4);
    assert!(reduction.forced.is_empty());
    assert_eq!(reduction.components.len(), 1);
    assert_eq!(reduction.components[0].1, ComponentKind::Cycle(4));
    let out = ryser_delta2(&h).unwrap();
    assert_eq!(out.cover.len(), 2);
    assert_eq!(out.nu, 2);
    assert_eq!(out.bound, 4);
    let p = parameters_exact(&h, &OracleLimits::default()).unwrap();
    assert_eq!((p.tau, p.nu), (2, 2));
}

#[test]
fn isolated_dual_vertex_is_forced() {
    // Edge 0 meets nothing; edges 1 and 2 share vertex 5.
    let h = Hypergraph::from_indexed(3, 8, vec![vec![0, 1, 2], vec![3, 4, 5], vec![5, 6, 7]], None);
    let reduction = reduce_dual(&dual(&h)).unwrap();
    assert_eq!(reduction.removed_vertices, vec![0]);
    assert_eq!(reduction.forced[0].hyperedge, 0);
    assert_eq!(reduction.graph.vertices, vec![1, 2]);
    assert_eq!(reduction.components[0].1, ComponentKind::Complete(2));
}

#[test]
fn rejects_high_degree() {
    let h = Hypergraph::from_indexed(3, 7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]], None);
    assert!(ryser_delta2(&h).is_err());
    let pairs = Hypergraph::from_indexed(2, 3, vec![vec![0, 1], vec![1, 2]], None);
    assert!(ryser_delta2(&pairs).is_err());
    assert!(reduce_dual(&dual(&h)).is_err());
}

#[test]
fn petersen_against_gallai() {
    let edges = petersen();
    let out = edge_cover_graph(10, &edges, 3).unwrap();
    let matching = matched_pairs(&max_matching(10, &edges)).len();
    assert_eq!(10 - matching, 5);
    assert_eq!(rho(&graph_as_hypergraph(10, &edges), &OracleLimits::default()).unwrap(), Some(5));
    assert!(out.edges.len() >= 5);
    assert_eq!(out.alpha, 4);
    assert!(out.edges.len() <= 8);
    let trace = &out.components[0];
    assert_eq!(trace.kind, ComponentKind::General);
    assert!(out.edges.len() <= trace.matching + trace.alpha);
}

#[test]
fn every_component_kind_occurs() {
    let mut kinds = BTreeSet::new();
    for seed in 0..200 {
        let mode = [Delta2Mode::Mixed, Delta2Mode::Cycle, Delta2Mode::Disjoint][seed as usize % 3];
        let h = gen_delta2(3 + seed as usize % 3, 2 + seed as usize % 9, seed, mode).unwrap();
        for (_, kind) in ryser_delta2(&h).unwrap().reduction.components {
            kinds.insert(match kind {
                ComponentKind::Cycle(_) => "cycle",
                ComponentKind::Complete(2) => "k2",
                ComponentKind::Complete(_) => "complete",
                ComponentKind::General => "general",
            });
        }
    }
    // K_4 in the dual: four triples pairwise sharing one vertex.
    let h = Hypergraph::from_indexed(3, 6, vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]], None);
    let out = ryser_delta2(&h).unwrap();
    assert_eq!(out.reduction.components[0].1, ComponentKind::Complete(4));
    assert_eq!(out.cover.len(), 2);
    kinds.insert("complete");
    assert_eq!(kinds.len(), 4, "{kinds:?}");
}

fn check_instance(h: &Hypergraph) -> Result<(), TestCaseError> {
    let limits = OracleLimits::default();
    let out = ryser_delta2(h).unwrap();
    let t = tau(h, &limits).unwrap();
    let matching = nu(h, &limits).unwrap();
    prop_assert!(h.edges().iter().all(|e| e.iter().any(|v| out.cover.contains(v))));
    prop_assert!(t <= out.cover.len());
    prop_assert_eq!(out.nu, matching);
    prop_assert!(out.cover.len() <= (h.r() - 1) * matching);
    let d = dual(h);
    prop_assert_eq!(alpha_prime(&d, &limits).unwrap(), matching);
    // A forced hyperedge is the only way to cover its edge of H.
    for f in &out.reduction.forced {
        prop_assert!(h.edges()[f.dual_vertex].iter().all(|&v| h.degree(v) == 1));
    }
    let g = &out.reduction.graph;
    if !g.vertices.is_empty() {
        let n = g.vertices.len();
        let gallai = n - matched_pairs(&max_matching(n, &g.edges)).len();
        prop_assert!(out.edge_cover.edges.len() >= gallai);
        let as_h = graph_as_hypergraph(n, &g.edges);
        prop_assert_eq!(rho(&as_h, &limits).unwrap(), Some(gallai));
        prop_assert_eq!(out.edge_cover.alpha, n - tau(&as_h, &limits).unwrap());
        prop_assert_eq!(out.edge_cover.alpha, alpha(&as_h, &limits).unwrap());
        prop_assert!(out.edge_cover.edges.len() <= (h.r() - 1) * out.edge_cover.alpha);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn covers_are_sandwiched(seed in any::<u64>(), r in 3usize..6, m in 1usize..14, mode in 0usize..3) {
        let mode = [Delta2Mode::Mixed, Delta2Mode::Cycle, Delta2Mode::Disjoint][mode];
        let h = gen_delta2(r, m, seed, mode).unwrap();
        prop_assume!(h.vertex_count() <= 40);
        check_instance(&h)?;
    }

    #[test]
    fn random_graph_covers(seed in any::<u64>(), n in 2usize..16) {
        use rand::Rng;
        let mut rng = ryser_core::generators::rng(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        // Attach isolated vertices to a neighbour.
        for v in 0..n {
            if !edges.iter().any(|&(a, b)| a == v || b == v) {
                let w = (v + 1) % n;
                edges.push((v.min(w), v.max(w)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let r = (0..n).map(|v| edges.iter().filter(|&&(a, b)| a == v || b == v).count()).max().unwrap().max(3);
        let out = edge_cover_graph(n, &edges, r).unwrap();
        let gallai = n - matched_pairs(&max_matching(n, &edges)).len();
        prop_assert!(out.edges.len() >= gallai);
        prop_assert!(out.edges.len() <= (r - 1) * out.alpha);
    }
}
