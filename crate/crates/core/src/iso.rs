//! Exact isomorphism testing by colour refinement plus individualization.
//!
//! Structures are encoded as vertex-typed simple graphs. Two graphs are refined
//! jointly so that class labels are comparable; when refinement stalls, one
//! vertex of the first graph is individualized against every candidate of the
//! second in turn. The search is complete, so a `false` answer is exact.

use std::collections::BTreeMap;

use crate::colored::ColoredCompleteGraph;
use crate::hypergraph::Hypergraph;

/// Undirected graph whose vertices carry an initial type label.
#[derive(Clone, Debug)]
pub(crate) struct TypedGraph {
    labels: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl TypedGraph {
    fn new() -> Self {
        TypedGraph {
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    fn add(&mut self, label: u32) -> usize {
        self.labels.push(label);
        self.adj.push(Vec::new());
        self.labels.len() - 1
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn finish(mut self) -> Self {
        for list in &mut self.adj {
            list.sort_unstable();
        }
        self
    }
}

/// Incidence graph: vertex nodes, then one node per edge instance.
fn incidence_graph(h: &Hypergraph) -> TypedGraph {
    let mut g = TypedGraph::new();
    for _ in 0..h.vertex_count() {
        g.add(0);
    }
    for e in h.edges() {
        let node = g.add(1);
        for &v in e {
            g.link(node, v);
        }
    }
    g.finish()
}

/// Vertex nodes, one node per pair, one node per colour. Colours may be
/// permuted by an isomorphism.
fn pair_graph(g: &ColoredCompleteGraph) -> TypedGraph {
    let n = g.n();
    let mut t = TypedGraph::new();
    for _ in 0..n {
        t.add(0);
    }
    let colors: Vec<usize> = (0..g.r()).map(|_| t.add(2)).collect();
    for u in 0..n {
        for v in u + 1..n {
            let p = t.add(1);
            t.link(p, u);
            t.link(p, v);
            for c in g.col(u, v).iter() {
                t.link(p, colors[c - 1]);
            }
        }
    }
    t.finish()
}

pub(crate) fn hypergraphs_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut sa: Vec<usize> = a.edges().iter().map(Vec::len).collect();
    let mut sb: Vec<usize> = b.edges().iter().map(Vec::len).collect();
    sa.sort_unstable();
    sb.sort_unstable();
    sa == sb && isomorphic(&incidence_graph(a), &incidence_graph(b))
}

/// Isomorphism of coloured complete graphs up to vertex and colour relabeling.
pub(crate) fn colored_isomorphic(a: &ColoredCompleteGraph, b: &ColoredCompleteGraph) -> bool {
    a.n() == b.n() && a.r() == b.r() && isomorphic(&pair_graph(a), &pair_graph(b))
}

pub(crate) fn isomorphic(a: &TypedGraph, b: &TypedGraph) -> bool {
    if a.labels.len() != b.labels.len() {
        return false;
    }
    let ea: usize = a.adj.iter().map(Vec::len).sum();
    let eb: usize = b.adj.iter().map(Vec::len).sum();
    if ea != eb {
        return false;
    }
    search(a, b, a.labels.clone(), b.labels.clone())
}

/// Joint refinement to a stable partition. Returns `None` as soon as the
/// class histograms of the two graphs differ.
fn refine(
    a: &TypedGraph,
    b: &TypedGraph,
    mut ca: Vec<u32>,
    mut cb: Vec<u32>,
) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut classes = count_classes(&ca, &cb)?;
    loop {
        let sig = |g: &TypedGraph, c: &[u32], v: usize| {
            let mut nb: Vec<u32> = g.adj[v].iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let siga: Vec<_> = (0..a.labels.len()).map(|v| sig(a, &ca, v)).collect();
        let sigb: Vec<_> = (0..b.labels.len()).map(|v| sig(b, &cb, v)).collect();
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in siga.iter().chain(sigb.iter()) {
            ids.insert(s, 0);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u32;
        }
        ca = siga.iter().map(|s| ids[s]).collect();
        cb = sigb.iter().map(|s| ids[s]).collect();
        let next = count_classes(&ca, &cb)?;
        if next == classes {
            return Some((ca, cb));
        }
        classes = next;
    }
}

fn count_classes(ca: &[u32], cb: &[u32]) -> Option<usize> {
    let mut ha: BTreeMap<u32, usize> = BTreeMap::new();
    let mut hb: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in ca {
        *ha.entry(c).or_default() += 1;
    }
    for &c in cb {
        *hb.entry(c).or_default() += 1;
    }
    (ha == hb).then_some(ha.len())
}

fn search(a: &TypedGraph, b: &TypedGraph, ca: Vec<u32>, cb: Vec<u32>) -> bool {
    let Some((ca, cb)) = refine(a, b, ca, cb) else {
        return false;
    };
    let mut count: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &ca {
        *count.entry(c).or_default() += 1;
    }
    let target = count
        .iter()
        .filter(|(_, &n)| n > 1)
        .min_by_key(|(&c, &n)| (n, c))
        .map(|(&c, _)| c);
    let Some(target) = target else {
        return discrete_map_is_isomorphism(a, b, &ca, &cb);
    };
    let fresh = count.keys().next_back().copied().unwrap_or(0) + 1;
    let v = ca.iter().position(|&c| c == target).unwrap();
    for w in (0..cb.len()).filter(|&w| cb[w] == target) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[v] = fresh;
        nb[w] = fresh;
        if search(a, b, na, nb) {
            return true;
        }
    }
    false
}

fn discrete_map_is_isomorphism(a: &TypedGraph, b: &TypedGraph, ca: &[u32], cb: &[u32]) -> bool {
    let mut by_label = vec![0usize; cb.len()];
    for (w, &c) in cb.iter().enumerate() {
        by_label[c as usize] = w;
    }
    let map: Vec<usize> = ca.iter().map(|&c| by_label[c as usize]).collect();
    (0..a.adj.len()).all(|u| {
        a.adj[u]
            .iter()
            .all(|&v| b.adj[map[u]].binary_search(&map[v]).is_ok())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> TypedGraph {
        let mut g = TypedGraph::new();
        for _ in 0..n {
            g.add(0);
        }
        for i in 0..n {
            g.link(i, (i + 1) % n);
        }
        g.finish()
    }

    fn two_triangles() -> TypedGraph {
        let mut g = TypedGraph::new();
        for _ in 0..6 {
            g.add(0);
        }
        for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
            g.link(a, b);
        }
        g.finish()
    }

    #[test]
    fn regular_graphs_need_individualization() {
        // Refinement alone cannot tell C6 from two triangles.
        assert!(!isomorphic(&cycle(6), &two_triangles()));
        assert!(isomorphic(&cycle(6), &cycle(6)));
        assert!(isomorphic(&two_triangles(), &two_triangles()));
    }

    #[test]
    fn relabeled_hypergraphs() {
        let a = Hypergraph::builder(3)
            .edge(&["a", "b", "c"])
            .edge(&["c", "d", "e"])
            .build();
        let b = Hypergraph::builder(3)
            .edge(&["x", "y", "z"])
            .edge(&["p", "q", "x"])
            .build();
        let c = Hypergraph::builder(3)
            .edge(&["x", "y", "z"])
            .edge(&["x", "y", "q"])
            .build();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&c));
    }
}
