//! Vertex covers of size at most `(r-1) ν` for r-uniform hypergraphs of
//! maximum degree two, built from edge covers of the dual graph.
//!
//! In the dual every vertex of `H` becomes a hyperedge of size one or two, and
//! every edge of `H` a vertex. Size-one hyperedges are either absorbed by a
//! size-two hyperedge through the same dual vertex or force that dual vertex
//! into the cover; what remains is a simple graph `G` without isolated
//! vertices, and `ν(H)` equals the forced count plus `α(G)`.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matching::{bipartite_matching, matched_pairs, max_matching};
use crate::oracles::max_independent_set;

/// Shape of a connected component of the reduced dual graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Cycle(usize),
    /// `K_m` with `m = 2` or `m >= 4`.
    Complete(usize),
    General,
}

/// A dual vertex that must be covered by one of its size-one hyperedges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Forced {
    /// The dual vertex, i.e. an edge index of `H`.
    pub dual_vertex: usize,
    /// The dual hyperedge chosen for it, i.e. a vertex of `H`.
    pub hyperedge: usize,
}

/// Simple graph left by [`reduce_dual`], on local ids `0..vertices.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    /// Dual vertex behind each local id.
    pub vertices: Vec<usize>,
    /// Edges `(u, v)` with `u < v`, without parallel copies.
    pub edges: Vec<(usize, usize)>,
    /// Smallest dual hyperedge realizing each edge.
    pub witness: Vec<usize>,
}

impl DualGraph {
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbours();
        let mut seen = vec![false; adj.len()];
        let mut out = Vec::new();
        for s in 0..adj.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualReduction {
    pub graph: DualGraph,
    pub forced: Vec<Forced>,
    /// Dual vertices dropped together with their forced hyperedges.
    pub removed_vertices: Vec<usize>,
    /// Size-one hyperedges dropped because a size-two hyperedge contains them.
    pub absorbed: usize,
    pub components: Vec<(Vec<usize>, ComponentKind)>,
}

fn classify(comp: &[usize], adj: &[Vec<usize>]) -> ComponentKind {
    let m = comp.len();
    let degree_sum: usize = comp.iter().map(|&v| adj[v].len()).sum();
    if m >= 3 && comp.iter().all(|&v| adj[v].len() == 2) {
        ComponentKind::Cycle(m)
    } else if degree_sum == m * (m - 1) {
        ComponentKind::Complete(m)
    } else {
        ComponentKind::General
    }
}

/// Removes size-one hyperedges from a dual whose hyperedges have at most two
/// vertices, and splits the remaining graph into classified components.
/// Empty hyperedges, from isolated vertices of `H`, are ignored.
pub fn reduce_dual(dual: &Hypergraph) -> Result<DualReduction> {
    let n = dual.vertex_count();
    let mut singles: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pairs: Vec<((usize, usize), usize)> = Vec::new();
    for (id, e) in dual.edges().iter().enumerate() {
        match e.as_slice() {
            [] => {}
            &[v] => singles[v].push(id),
            &[u, v] => pairs.push(((u.min(v), u.max(v)), id)),
            _ => {
                return Err(Error::precondition(
                    "reduce_dual",
                    format!("not a dual of a hypergraph with maximum degree 2: hyperedge {id} has {} vertices", e.len()),
                ))
            }
        }
    }
    let mut in_pair = vec![false; n];
    for &((u, v), _) in &pairs {
        in_pair[u] = true;
        in_pair[v] = true;
    }
    let mut forced = Vec::new();
    let mut removed_vertices = Vec::new();
    let mut absorbed = 0;
    for v in 0..n {
        if singles[v].is_empty() {
            continue;
        }
        if in_pair[v] {
            absorbed += singles[v].len();
        } else {
            forced.push(Forced {
                dual_vertex: v,
                hyperedge: singles[v][0],
            });
            removed_vertices.push(v);
        }
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| in_pair[v]).collect();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    pairs.sort_unstable();
    let mut edges = Vec::new();
    let mut witness = Vec::new();
    for ((u, v), id) in pairs {
        let e = (local[u], local[v]);
        if edges.last() != Some(&e) {
            edges.push(e);
            witness.push(id);
        }
    }
    let graph = DualGraph {
        vertices,
        edges,
        witness,
    };
    let adj = graph.neighbours();
    let components = graph
        .components()
        .into_iter()
        .map(|c| {
            let kind = classify(&c, &adj);
            (c, kind)
        })
        .collect();
    Ok(DualReduction {
        graph,
        forced,
        removed_vertices,
        absorbed,
        components,
    })
}

/// How one component was covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTrace {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
    /// Indices into the graph's edge list.
    pub cover: Vec<usize>,
    /// Exact independence number of the component.
    pub alpha: usize,
    /// For general components: the matching outside the independent set.
    pub matching: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCover {
    /// Indices into the graph's edge list, sorted.
    pub edges: Vec<usize>,
    pub alpha: usize,
    pub components: Vec<ComponentTrace>,
}

/// An edge cover of a graph without isolated vertices, component by
/// component, of size at most `(r-1) α(G)` where `r >= 3` bounds the maximum
/// degree.
///
/// Cycles take every other edge, complete graphs a pairing. Other components
/// take a maximum independent set `I`, a maximum matching `M` of `G - I`, a
/// matching of the leftover vertices `Y` into `I` (it exists since `I` is
/// maximum, by Hall's condition), and one more edge per uncovered vertex of
/// `I`: at most `|M| + |I|` edges.
pub fn edge_cover_graph(n: usize, edges: &[(usize, usize)], r: usize) -> Result<EdgeCover> {
    const OP: &str = "edge_cover_graph";
    if r < 3 {
        return Err(Error::precondition(OP, format!("needs r >= 3, got {r}")));
    }
    if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n || u == v) {
        return Err(Error::precondition(OP, format!("bad edge ({u}, {v})")));
    }
    let graph = DualGraph {
        vertices: (0..n).collect(),
        edges: edges.to_vec(),
        witness: (0..edges.len()).collect(),
    };
    let adj = graph.neighbours();
    if let Some(v) = (0..n).find(|&v| adj[v].is_empty()) {
        return Err(Error::precondition(OP, format!("vertex {v} is isolated")));
    }
    if let Some(d) = adj.iter().map(Vec::len).max().filter(|&d| d > r) {
        return Err(Error::precondition(OP, format!("maximum degree {d} exceeds r = {r}")));
    }
    let mut edge_id = std::collections::HashMap::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        edge_id.entry((u.min(v), u.max(v))).or_insert(i);
    }
    let id = |u: usize, v: usize| edge_id[&(u.min(v), u.max(v))];

    let mut traces = Vec::new();
    for comp in graph.components() {
        let kind = classify(&comp, &adj);
        let m = comp.len();
        let (cover, alpha, matching) = match kind {
            ComponentKind::Cycle(l) => {
                // Walk the cycle and take edges 0-1, 2-3, ..., closing if odd.
                let mut order = vec![comp[0]];
                let mut prev = usize::MAX;
                while order.len() < l {
                    let cur = *order.last().unwrap();
                    let next = adj[cur].iter().copied().find(|&w| w != prev && w != order[0]).unwrap();
                    prev = cur;
                    order.push(next);
                }
                let mut cover: Vec<usize> = (0..l / 2).map(|i| id(order[2 * i], order[2 * i + 1])).collect();
                if l % 2 == 1 {
                    cover.push(id(order[l - 1], order[0]));
                }
                (cover, l / 2, 0)
            }
            ComponentKind::Complete(_) => {
                let mut cover: Vec<usize> = comp.chunks(2).filter(|c| c.len() == 2).map(|c| id(c[0], c[1])).collect();
                if m % 2 == 1 {
                    cover.push(id(comp[0], comp[m - 1]));
                }
                (cover, 1, 0)
            }
            ComponentKind::General => general_cover(&comp, &adj, &id)?,
        };
        // Brooks gives α >= m/Δ on these components, hence |M| <= ⌊(Δ-1)α/2⌋.
        let max_degree = comp.iter().map(|&v| adj[v].len()).max().unwrap_or(0);
        let ceiling = (max_degree - 1) * alpha / 2 + alpha;
        if kind == ComponentKind::General && cover.len() > ceiling {
            return Err(Error::InvariantViolated(format!(
                "{OP}: component of {m} vertices covered by {} edges, above ⌊(Δ-1)α/2⌋ + α = {ceiling}",
                cover.len()
            )));
        }
        traces.push(ComponentTrace {
            vertices: comp,
            kind,
            cover,
            alpha,
            matching,
        });
    }
    let mut all: Vec<usize> = traces.iter().flat_map(|t| t.cover.iter().copied()).collect();
    all.sort_unstable();
    all.dedup();
    let alpha: usize = traces.iter().map(|t| t.alpha).sum();
    let mut touched = vec![false; n];
    for &e in &all {
        touched[edges[e].0] = true;
        touched[edges[e].1] = true;
    }
    if touched.contains(&false) {
        return Err(Error::InvariantViolated(format!("{OP}: result misses a vertex")));
    }
    if all.len() > (r - 1) * alpha {
        return Err(Error::InvariantViolated(format!(
            "{OP}: {} edges exceed (r-1)α = {}",
            all.len(),
            (r - 1) * alpha
        )));
    }
    Ok(EdgeCover {
        edges: all,
        alpha,
        components: traces,
    })
}

fn general_cover(
    comp: &[usize],
    adj: &[Vec<usize>],
    id: &dyn Fn(usize, usize) -> usize,
) -> Result<(Vec<usize>, usize, usize)> {
    let m = comp.len();
    if m > 64 {
        return Err(Error::LimitExceeded {
            what: "component vertex",
            limit: 64,
            actual: m,
        });
    }
    let pos = |v: usize| comp.binary_search(&v).unwrap();
    let masks: Vec<u64> = comp
        .iter()
        .map(|&v| adj[v].iter().fold(0u64, |acc, &w| acc | 1 << pos(w)))
        .collect();
    let independent = max_independent_set(&masks);
    let in_i = |i: usize| independent >> i & 1 == 1;
    let rest: Vec<usize> = (0..m).filter(|&i| !in_i(i)).collect();
    let rest_pos = |i: usize| rest.binary_search(&i).ok();
    let rest_edges: Vec<(usize, usize)> = rest
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| {
            adj[comp[i]].iter().filter_map(move |&w| {
                let j = pos(w);
                rest_pos(j).filter(|&b| a < b).map(|b| (a, b))
            })
        })
        .collect();
    let mate = max_matching(rest.len(), &rest_edges);
    let matching = matched_pairs(&mate);
    let mut cover: Vec<usize> = matching.iter().map(|&(a, b)| id(comp[rest[a]], comp[rest[b]])).collect();

    let y: Vec<usize> = rest.iter().enumerate().filter(|&(a, _)| mate[a].is_none()).map(|(_, &i)| i).collect();
    let i_list: Vec<usize> = (0..m).filter(|&i| in_i(i)).collect();
    let i_pos = |i: usize| i_list.binary_search(&i).ok();
    let y_adj: Vec<Vec<usize>> = y
        .iter()
        .map(|&i| adj[comp[i]].iter().filter_map(|&w| i_pos(pos(w))).collect())
        .collect();
    let partner = bipartite_matching(i_list.len(), &y_adj);
    let mut i_covered = vec![false; i_list.len()];
    for (a, p) in partner.iter().enumerate() {
        let Some(b) = *p else {
            return Err(Error::InvariantViolated(format!(
                "Hall's condition failed: vertex {} cannot be matched into the independent set",
                comp[y[a]]
            )));
        };
        i_covered[b] = true;
        cover.push(id(comp[y[a]], comp[i_list[b]]));
    }
    for (b, &i) in i_list.iter().enumerate() {
        if !i_covered[b] {
            let w = *adj[comp[i]].iter().min().expect("no isolated vertices");
            cover.push(id(comp[i], w));
        }
    }
    let bound = matching.len() + i_list.len();
    if cover.len() > bound {
        return Err(Error::InvariantViolated(format!("{} edges exceed |M| + |I| = {bound}", cover.len())));
    }
    Ok((cover, i_list.len(), matching.len()))
}

/// Result of [`ryser_delta2`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta2Cover {
    /// Vertices of `H`, sorted.
    pub cover: Vec<usize>,
    /// `ν(H)`, as forced count plus `α` of the reduced dual graph.
    pub nu: usize,
    /// `(r-1) ν`.
    pub bound: usize,
    pub reduction: DualReduction,
    pub edge_cover: EdgeCover,
}

/// A vertex cover of an r-uniform hypergraph with `r >= 3` and maximum
/// degree at most 2, of size at most `(r-1) ν(H)`.
pub fn ryser_delta2(h: &Hypergraph) -> Result<Delta2Cover> {
    const OP: &str = "ryser_delta2";
    let r = h.r();
    if r < 3 {
        return Err(Error::precondition(OP, format!("needs r >= 3, got {r}")));
    }
    if !h.is_uniform() {
        return Err(Error::precondition(OP, format!("hypergraph is not {r}-uniform")));
    }
    if h.max_degree() > 2 {
        return Err(Error::precondition(OP, format!("maximum degree is {}", h.max_degree())));
    }
    let reduction = reduce_dual(&crate::hypergraph::dual(h))?;
    let g = &reduction.graph;
    let edge_cover = edge_cover_graph(g.vertices.len(), &g.edges, r)?;
    let mut cover: Vec<usize> = reduction
        .forced
        .iter()
        .map(|f| f.hyperedge)
        .chain(edge_cover.edges.iter().map(|&e| g.witness[e]))
        .collect();
    cover.sort_unstable();
    cover.dedup();
    let nu = reduction.forced.len() + edge_cover.alpha;
    let bound = (r - 1) * nu;
    if let Some(i) = h.edges().iter().position(|e| !e.iter().any(|v| cover.binary_search(v).is_ok())) {
        return Err(Error::InvariantViolated(format!("{OP}: edge {i} is not covered")));
    }
    if cover.len() > bound {
        return Err(Error::InvariantViolated(format!(
            "{OP}: {} vertices exceed (r-1)ν = {bound}",
            cover.len()
        )));
    }
    Ok(Delta2Cover {
        cover,
        nu,
        bound,
        reduction,
        edge_cover,
    })
}
