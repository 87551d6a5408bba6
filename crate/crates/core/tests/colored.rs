use proptest::prelude::*;
use rand::Rng;
use ryser_core::colored::{contract_full_color_classes, delete_color, gyarfas_graph, transitive_closure, GyarfasGraph};
use ryser_core::error::Error;
use ryser_core::generators::{gen_t_intersecting_hypergraph, gen_transitive_colored, rng};
use ryser_core::oracles::{min_component_cover, tau};
use ryser_core::planes::{affine_plane, blowup_graph, truncated_projective_plane};
use ryser_core::{ColorSet, ColoredCompleteGraph, Hypergraph, OracleLimits};

fn cs(colors: &[usize]) -> ColorSet {
    colors.iter().copied().collect()
}

fn random_coloring(n: usize, r: usize, seed: u64) -> ColoredCompleteGraph {
    let mut rng = rng(seed);
    let mut col = vec![ColorSet::EMPTY; n * n];
    for u in 0..n {
        for v in u + 1..n {
            let mut c = ColorSet::from_bits(rng.gen_range(0..1u32 << r));
            if c.is_empty() {
                c = ColorSet::single(rng.gen_range(1..=r));
            }
            col[u * n + v] = c;
        }
    }
    ColoredCompleteGraph::from_fn(n, r, |u, v| col[u * n + v]).unwrap()
}

#[test]
fn gyarfas_of_truncated_fano_is_affine_blowup() {
    let g = gyarfas_graph(&truncated_projective_plane(2).unwrap()).unwrap().complete().unwrap();
    assert_eq!(g.n(), 4);
    assert!(g.pairs().all(|(_, _, c)| c.len() == 1));
    assert!(g.is_transitive());
    assert!(g.is_isomorphic(&blowup_graph(&affine_plane(2).unwrap(), 1).unwrap()));
}

#[test]
fn gyarfas_requires_classes() {
    let h = Hypergraph::from_indexed(3, 3, vec![vec![0, 1, 2]], None);
    assert!(gyarfas_graph(&h).is_err());
}

#[test]
fn closure_adds_one_step() {
    // 0-1 and 1-2 coloured {1}, 0-2 coloured {2}.
    let g = ColoredCompleteGraph::from_fn(3, 2, |u, v| if (u, v) == (0, 2) { cs(&[2]) } else { cs(&[1]) }).unwrap();
    assert!(!g.is_transitive());
    let c = transitive_closure(&g);
    assert_eq!(c.col(0, 2), cs(&[1, 2]));
    assert!(c.is_transitive());
}

#[test]
fn components_of_examples() {
    let g = ColoredCompleteGraph::from_fn(5, 2, |_, _| cs(&[1])).unwrap();
    assert_eq!(g.components().k(1), 1);
    assert_eq!(g.components().gammas(1), vec![5]);
    let b = blowup_graph(&affine_plane(2).unwrap(), 1).unwrap();
    for c in 1..=3 {
        assert_eq!(b.components().gammas(c), vec![2, 2]);
    }
    let parts = b.components_of(2, ColorSet::full(3)).unwrap();
    assert_eq!(parts.len(), 3);
    assert!(parts.parts().iter().all(|p| p.vertices.contains(&2)));
    assert!(b.components_of(0, cs(&[4])).is_err());
}

#[test]
fn deletion_examples() {
    let g = ColoredCompleteGraph::from_fn(4, 3, |u, v| if u + v == 3 { cs(&[2]) } else { cs(&[1, 2]) }).unwrap();
    assert!(matches!(delete_color(&g, 2), Err(Error::DeletionEmptiesEdge { .. })));
    let blowup = blowup_graph(&affine_plane(2).unwrap(), 2).unwrap();
    // Pairs inside a point keep the other colours; cross pairs may lose their only colour.
    let err = delete_color(&blowup, 1);
    assert!(err.is_err());
    let ok = ColoredCompleteGraph::from_fn(4, 3, |_, _| cs(&[1, 3])).unwrap();
    let d = delete_color(&ok, 3).unwrap();
    assert_eq!(d.r(), 2);
    assert!(d.pairs().all(|(_, _, c)| c == cs(&[1])));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn closure_keeps_components_and_is_idempotent(n in 2usize..12, r in 1usize..5, seed in any::<u64>()) {
        let g = random_coloring(n, r, seed);
        let c = transitive_closure(&g);
        prop_assert!(c.is_transitive());
        prop_assert_eq!(transitive_closure(&c), c.clone());
        for color in 1..=r {
            prop_assert_eq!(g.components().components(color), c.components().components(color));
        }
        for (u, v, col) in g.pairs() {
            prop_assert!(col.is_subset(c.col(u, v)));
        }
    }

    #[test]
    fn components_are_cliques(n in 2usize..14, r in 2usize..6, t in 1usize..5, seed in any::<u64>()) {
        let t = t.min(r - 1);
        let g = gen_transitive_colored(n, r, t, seed).unwrap();
        let index = g.components();
        for color in 1..=r {
            prop_assert_eq!(index.gammas(color).iter().sum::<usize>(), n);
            for comp in index.components(color) {
                for (i, &u) in comp.iter().enumerate() {
                    for &v in &comp[i + 1..] {
                        prop_assert!(g.col(u, v).contains(color));
                    }
                }
            }
        }
    }

    #[test]
    fn contraction_is_well_defined(n in 2usize..14, seed in any::<u64>()) {
        let g = gen_transitive_colored(n, 4, 2, seed).unwrap();
        let c = contract_full_color_classes(&g).unwrap();
        let full = ColorSet::full(4);
        prop_assert!(c.graph.pairs().all(|(_, _, col)| col != full));
        for (a, class_a) in c.classes.iter().enumerate() {
            for (b, class_b) in c.classes.iter().enumerate() {
                if a != b {
                    for &u in class_a {
                        for &v in class_b {
                            prop_assert_eq!(g.col(u, v), c.graph.col(a, b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn deletion_keeps_transitivity(n in 2usize..12, seed in any::<u64>()) {
        let g = gen_transitive_colored(n, 5, 3, seed).unwrap();
        let d = delete_color(&g, 2).unwrap();
        prop_assert!(d.is_transitive());
        prop_assert!(d.min_colors_per_pair().is_none_or(|m| m >= 2));
    }

    #[test]
    fn gyarfas_cover_correspondence(r in 2usize..5, m in 1usize..9, seed in any::<u64>()) {
        let (h, _) = gen_t_intersecting_hypergraph(r, 1, m, 3, seed).unwrap();
        let GyarfasGraph::Complete(g) = gyarfas_graph(&h).unwrap() else {
            return Err(TestCaseError::fail("intersecting input gave a partial graph"));
        };
        prop_assert!(g.is_transitive());
        let class_map = h.class_map().unwrap();
        let stars = h.stars();
        let nv = h.vertex_count();
        for subset in 0u32..1 << nv {
            let chosen: Vec<usize> = (0..nv).filter(|&v| subset >> v & 1 == 1).collect();
            let covers_h = h.edges().iter().all(|e| e.iter().any(|v| chosen.contains(v)));
            let mut seen = vec![false; g.n()];
            for &v in &chosen {
                let color = class_map[v].unwrap() + 1;
                for &e in g.components().component_of(stars[v][0], color) {
                    seen[e] = true;
                }
            }
            prop_assert_eq!(covers_h, seen.iter().all(|&s| s));
        }
        let limits = OracleLimits::default();
        prop_assert_eq!(tau(&h, &limits).unwrap(), min_component_cover(&g, &limits).unwrap().len());
    }
}
