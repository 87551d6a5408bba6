use std::collections::BTreeSet;

use proptest::prelude::*;
use ryser_core::colored::{contract_full_color_classes, delete_color, gyarfas_graph};
use ryser_core::generators::{gen_layered_exact_t, gen_t_intersecting_hypergraph, gen_transitive_colored};
use ryser_core::oracles::min_component_cover;
use ryser_core::t_cover::{
    cover_t, lemma_cover, max_common_triangle, max_common_triangle_naive, triangle_case_cover, EdgeLemma, LemmaBranch, Step,
    TriangleCase,
};
use ryser_core::{ColorSet, ColoredCompleteGraph, OracleLimits};

fn cs(colors: &[usize]) -> ColorSet {
    colors.iter().copied().collect()
}

fn graph(n: usize, r: usize, pairs: &[((usize, usize), &[usize])]) -> ColoredCompleteGraph {
    ColoredCompleteGraph::from_fn(n, r, |u, v| {
        pairs
            .iter()
            .find(|((a, b), _)| (*a, *b) == (u, v))
            .map(|(_, c)| cs(c))
            .unwrap_or_else(|| panic!("pair ({u}, {v}) not listed"))
    })
    .unwrap()
}

/// Valid `(r, t)` with `r <= 7`.
fn parameter_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 2..=7 {
        for t in 1..r {
            if 4 * t > r {
                out.push((r, t));
            }
        }
    }
    out
}

fn assert_valid(g: &ColoredCompleteGraph, t: usize) -> usize {
    let out = cover_t(g, t).unwrap_or_else(|e| panic!("{e}\n{g:?}"));
    assert!(out.cover.covers_all());
    assert!(out.cover.len() <= g.r() - t);
    assert!(out.cover.parts_are_components_of(g));
    out.cover.len()
}

#[test]
fn intersecting_three_partite_needs_two() {
    for seed in 0..50 {
        let (h, _) = gen_t_intersecting_hypergraph(3, 1, 7, 3, seed).unwrap();
        let g = gyarfas_graph(&h).unwrap().complete().unwrap();
        assert!(assert_valid(&g, 1) <= 2);
    }
}

#[test]
fn common_color_gives_single_part() {
    let g = ColoredCompleteGraph::from_fn(7, 3, |u, v| if u % 2 == v % 2 { cs(&[1, 2]) } else { cs(&[1]) }).unwrap();
    assert!(g.is_transitive());
    let out = cover_t(&g, 1).unwrap();
    assert_eq!(out.cover.len(), 1);
    assert_eq!(out.trace, vec![Step::Spanning { color: 1 }]);
    let single = ColoredCompleteGraph::from_fn(7, 4, |_, _| cs(&[1, 3])).unwrap();
    assert_eq!(cover_t(&single, 2).unwrap().cover.len(), 1);
}

#[test]
fn rich_edge_with_empty_j() {
    // r = 7, t = 2, |col(01)| = 4: r > t + ell, j = (7 - 2 - 4) / 2 = 0.
    let g = graph(3, 7, &[((0, 1), &[1, 2, 3, 4]), ((0, 2), &[1, 5]), ((1, 2), &[1, 6])]);
    assert!(g.is_transitive());
    let (cover, plan) = lemma_cover(&g, 2, 0, 1).unwrap();
    assert_eq!(plan.lemma, EdgeLemma::RichEdge);
    assert_eq!(plan.branch, LemmaBranch::Outside);
    assert_eq!((plan.ell, plan.j), (4, 0));
    assert_eq!(cover.len(), 4);
    assert!(cover.covers_all());
    // Colour 1 spans, so the dispatcher stops early.
    assert_eq!(cover_t(&g, 2).unwrap().trace, vec![Step::Spanning { color: 1 }]);
}

#[test]
fn triangle_many_shared() {
    // r = 7, t = 2, colour 1 on every pair: k = 1, 3k > t.
    let g = graph(3, 7, &[((0, 1), &[1, 2]), ((0, 2), &[1, 3]), ((1, 2), &[1, 4])]);
    assert_eq!(max_common_triangle(&g), Some((1, [0, 1, 2])));
    let out = triangle_case_cover(&g, 2, 1, [0, 1, 2]).unwrap();
    assert_eq!(out.case, TriangleCase::ManyShared);
    let p = &out.partition;
    assert_eq!(p.x_chosen.len() + p.y_chosen.len() + p.z_chosen.len(), 1);
    assert!(out.cover.covers_all());
    assert!(out.cover.len() <= 5);
}

#[test]
fn triangle_pairing() {
    // Three perfect matchings of K4 with colour pairs {1,2}, {3,4}, {5,6}.
    let g = graph(
        4,
        7,
        &[
            ((0, 1), &[1, 2]),
            ((2, 3), &[1, 2]),
            ((0, 2), &[3, 4]),
            ((1, 3), &[3, 4]),
            ((0, 3), &[5, 6]),
            ((1, 2), &[5, 6]),
        ],
    );
    assert!(g.is_transitive());
    assert_eq!(max_common_triangle(&g).unwrap().0, 0);
    let out = cover_t(&g, 2).unwrap();
    assert!(matches!(
        out.trace.last(),
        Some(Step::Triangle {
            case: TriangleCase::Pairing,
            ..
        })
    ));
    assert_eq!(out.cover.len(), 2);
}

#[test]
fn triangle_cover_rejects_wrong_k() {
    let g = graph(3, 7, &[((0, 1), &[1, 2]), ((0, 2), &[1, 3]), ((1, 2), &[1, 4])]);
    assert!(triangle_case_cover(&g, 2, 0, [0, 1, 2]).is_err());
    assert!(triangle_case_cover(&g, 1, 1, [0, 1, 2]).is_err());
}

fn branch_label(step: &Step) -> &'static str {
    match step {
        Step::Base { .. } => "base",
        Step::Spanning { .. } => "spanning",
        Step::Contracted { .. } => "contracted",
        Step::Lemma(p) => match (p.lemma, p.branch) {
            (EdgeLemma::UniformT, LemmaBranch::Inside) => "uniform-inside",
            (EdgeLemma::UniformT, LemmaBranch::Outside) => "uniform-outside",
            (EdgeLemma::RichEdge, LemmaBranch::Inside) => "rich-inside",
            (EdgeLemma::RichEdge, LemmaBranch::Outside) => "rich-outside",
        },
        Step::Triangle { case, .. } => match case {
            TriangleCase::Pairing => "pairing",
            TriangleCase::FewShared => "few-shared",
            TriangleCase::ManyShared => "many-shared",
        },
    }
}

#[test]
fn dispatcher_reaches_every_branch() {
    let mut seen = BTreeSet::new();
    let configs = [(4, 6, 2), (4, 11, 3), (4, 7, 2), (8, 7, 2), (9, 11, 3), (7, 3, 1)];
    for seed in 0..600 {
        let (n, r, t) = configs[seed as usize % configs.len()];
        let g = gen_layered_exact_t(n, r, t, seed).unwrap();
        assert_valid(&g, t);
        seen.extend(cover_t(&g, t).unwrap().trace.iter().map(branch_label));
    }
    for seed in 0..300 {
        let (n, r, t) = [(9, 5, 2), (6, 7, 2), (3, 7, 3)][seed as usize % 3];
        let g = gen_transitive_colored(n, r, t, seed).unwrap();
        seen.extend(cover_t(&g, t).unwrap().trace.iter().map(branch_label));
    }
    for n in 0..=2 {
        let g = ColoredCompleteGraph::from_fn(n, 3, |_, _| cs(&[2])).unwrap();
        seen.extend(cover_t(&g, 1).unwrap().trace.iter().map(branch_label));
    }
    let expected = [
        "base",
        "spanning",
        "contracted",
        "uniform-outside",
        "rich-inside",
        "rich-outside",
        "pairing",
        "few-shared",
        "many-shared",
    ];
    for label in expected {
        assert!(seen.contains(label), "{label} never fired; saw {seen:?}");
    }
}

#[test]
fn uniform_lemma_inside_branch() {
    // r = 5, t = 3 <= r <= 2t: colours 1, 2 everywhere plus one parallel class of AG(2,2).
    let g = graph(
        4,
        5,
        &[
            ((0, 1), &[1, 2, 3]),
            ((2, 3), &[1, 2, 3]),
            ((0, 2), &[1, 2, 4]),
            ((1, 3), &[1, 2, 4]),
            ((0, 3), &[1, 2, 5]),
            ((1, 2), &[1, 2, 5]),
        ],
    );
    assert!(g.is_transitive());
    let (cover, plan) = lemma_cover(&g, 3, 0, 1).unwrap();
    assert_eq!((plan.lemma, plan.branch), (EdgeLemma::UniformT, LemmaBranch::Inside));
    assert_eq!(plan.j_set, cs(&[1, 2]));
    assert!(cover.covers_all());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cover_is_valid_and_dominates_oracle(seed in any::<u64>(), idx in 0usize..64, n in 2usize..11) {
        let pairs = parameter_pairs();
        let (r, t) = pairs[idx % pairs.len()];
        let g = gen_transitive_colored(n, r, t, seed).unwrap();
        let size = assert_valid(&g, t);
        let best = min_component_cover(&g, &OracleLimits::default()).unwrap();
        prop_assert!(best.covers_all());
        prop_assert!(best.len() <= size);
    }

    #[test]
    fn exact_t_instances_are_covered(seed in any::<u64>(), t in 1usize..4, n in 3usize..14, slack in 0usize..3) {
        let r = (4 * t - 1).saturating_sub(slack).max(t + 1);
        let g = gen_layered_exact_t(n, r, t, seed).unwrap();
        assert_valid(&g, t);
    }

    #[test]
    fn deleting_a_color_keeps_a_smaller_cover(seed in any::<u64>(), n in 2usize..12, idx in 0usize..64) {
        let pairs: Vec<_> = parameter_pairs().into_iter().filter(|&(r, t)| t + 2 <= r && 4 * t > r).collect();
        let (r, t) = pairs[idx % pairs.len()];
        let g = gen_transitive_colored(n, r, t + 1, seed).unwrap();
        let reduced = delete_color(&g, r).unwrap();
        let out = cover_t(&reduced, t).unwrap();
        prop_assert!(out.cover.covers_all());
        prop_assert!(out.cover.len() <= r - 1 - t);
        // Colours below r have the same components in both graphs.
        for part in out.cover.parts() {
            prop_assert_eq!(g.components().component_of(part.vertices[0], part.color), part.vertices.as_slice());
        }
    }

    #[test]
    fn contraction_lifts_covers(seed in any::<u64>(), n in 2usize..16) {
        let g = gen_transitive_colored(n, 5, 2, seed).unwrap();
        let c = contract_full_color_classes(&g).unwrap();
        let sub = cover_t(&c.graph, 2).unwrap().cover;
        let lifted = c.lift(&sub);
        prop_assert!(lifted.covers_all());
        prop_assert_eq!(lifted.len(), sub.len());
        prop_assert!(lifted.parts_are_components_of(&g));
    }

    #[test]
    fn triangle_search_matches_naive(seed in any::<u64>(), n in 3usize..12) {
        let g = gen_transitive_colored(n, 6, 2, seed).unwrap();
        prop_assert_eq!(max_common_triangle(&g), max_common_triangle_naive(&g));
        let h = gen_layered_exact_t(n, 7, 2, seed).unwrap();
        prop_assert_eq!(max_common_triangle(&h), max_common_triangle_naive(&h));
    }
}
