//! Exact values by exhaustive or branch-and-bound search.
//!
//! These serve as ground truth for the constructive algorithms. Everything
//! here works on bit masks, so universes are capped at 64 elements on top of
//! the configurable [`OracleLimits`].

mod search;

use crate::colored::{ColoredCompleteGraph, ComponentCover, CoverPart};
use crate::error::{Error, Result};
use crate::hypergraph::{intersection_level, Hypergraph, HypergraphParams};

pub(crate) use search::max_independent_set;
use search::{bit, bits, min_set_cover, ones};

/// Size limits for the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Distinct component vertex sets considered by [`min_component_cover`].
    pub max_components: usize,
    /// Component tuples enumerated by [`max_partial_cover_distinct`].
    pub max_tuples: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 40,
            max_edges: 64,
            max_components: 64,
            max_tuples: 10_000_000,
        }
    }
}

fn limit(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        return Err(Error::LimitExceeded { what, limit, actual });
    }
    Ok(())
}

fn check_size(h: &Hypergraph, limits: &OracleLimits) -> Result<()> {
    limit("vertex", limits.max_vertices.min(64), h.vertex_count())?;
    limit("edge", limits.max_edges.min(64), h.edge_count())
}

fn edge_masks(h: &Hypergraph) -> Vec<u64> {
    h.edges()
        .iter()
        .map(|e| e.iter().fold(0, |m, &v| m | bit(v)))
        .collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

fn reject_empty_edges(h: &Hypergraph) -> Result<()> {
    match h.edges().iter().position(Vec::is_empty) {
        Some(i) => Err(Error::EmptyHyperedge(i)),
        None => Ok(()),
    }
}

/// A minimum vertex cover, as sorted vertex ids.
pub fn min_vertex_cover(h: &Hypergraph, limits: &OracleLimits) -> Result<Vec<usize>> {
    check_size(h, limits)?;
    reject_empty_edges(h)?;
    // Hitting the edges is covering the edge set by vertex stars.
    let stars: Vec<u64> = h
        .stars()
        .iter()
        .map(|s| s.iter().fold(0, |m, &e| m | bit(e)))
        .collect();
    Ok(min_set_cover(full_mask(h.edge_count()), &stars).expect("every nonempty edge is hit by its vertices"))
}

/// Vertex covering number.
pub fn tau(h: &Hypergraph, limits: &OracleLimits) -> Result<usize> {
    min_vertex_cover(h, limits).map(|c| c.len())
}

/// Vertex covering number by plain enumeration of vertex subsets in order of
/// size. Independent of the branch-and-bound path; at most 20 vertices.
pub fn tau_by_enumeration(h: &Hypergraph) -> Result<usize> {
    limit("enumeration vertex", 20, h.vertex_count())?;
    reject_empty_edges(h)?;
    let n = h.vertex_count();
    let masks = edge_masks(h);
    for k in 0..=n {
        for subset in subsets_of_size(n, k) {
            if masks.iter().all(|&e| e & subset != 0) {
                return Ok(k);
            }
        }
    }
    unreachable!("the full vertex set hits every nonempty edge")
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    // Gosper's hack over n-bit words.
    let limit = bit(n);
    let mut next = if k == 0 { Some(0u64) } else if k <= n { Some(bit(k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < limit).then_some(nxt)
        };
        Some(cur)
    })
}

/// Matching number: maximum number of pairwise disjoint edge instances.
pub fn nu(h: &Hypergraph, limits: &OracleLimits) -> Result<usize> {
    check_size(h, limits)?;
    let masks = edge_masks(h);
    let adj: Vec<u64> = (0..masks.len())
        .map(|i| {
            (0..masks.len())
                .filter(|&j| j != i && masks[i] & masks[j] != 0)
                .fold(0, |m, j| m | bit(j))
        })
        .collect();
    Ok(ones(max_independent_set(&adj)))
}

/// Edge covering number; `None` when some vertex lies in no edge.
pub fn rho(h: &Hypergraph, limits: &OracleLimits) -> Result<Option<usize>> {
    check_size(h, limits)?;
    Ok(min_set_cover(full_mask(h.vertex_count()), &edge_masks(h)).map(|c| c.len()))
}

/// Strong independence number: largest vertex set meeting every edge at
/// most once, i.e. an independent set of the 2-section graph.
pub fn alpha_prime(h: &Hypergraph, limits: &OracleLimits) -> Result<usize> {
    check_size(h, limits)?;
    let mut adj = vec![0u64; h.vertex_count()];
    for e in h.edges() {
        let m = e.iter().fold(0, |m, &v| m | bit(v));
        for &v in e {
            adj[v] |= m & !bit(v);
        }
    }
    Ok(ones(max_independent_set(&adj)))
}

/// Independence number: largest vertex set containing no edge. Its
/// complement is a vertex cover, so this is `|V| - tau`.
pub fn alpha(h: &Hypergraph, limits: &OracleLimits) -> Result<usize> {
    Ok(h.vertex_count() - tau(h, limits)?)
}

/// All parameters at once.
pub fn parameters_exact(h: &Hypergraph, limits: &OracleLimits) -> Result<HypergraphParams> {
    let tau = tau(h, limits)?;
    Ok(HypergraphParams {
        tau,
        nu: nu(h, limits)?,
        rho: rho(h, limits)?,
        delta: h.max_degree(),
        alpha: h.vertex_count() - tau,
        alpha_prime: alpha_prime(h, limits)?,
        t_level: if h.edge_count() == 0 {
            0
        } else {
            intersection_level(h)?
        },
    })
}

/// Distinct component vertex sets of all colours, each with the first
/// (colour, smallest vertex) under which it occurs.
fn distinct_components(g: &ColoredCompleteGraph) -> Vec<(usize, Vec<usize>)> {
    let index = g.components();
    let mut out: Vec<(usize, Vec<usize>)> = Vec::new();
    for color in 1..=g.r() {
        for comp in index.components(color) {
            if !out.iter().any(|(_, c)| c == comp) {
                out.push((color, comp.clone()));
            }
        }
    }
    out
}

/// A minimum set of monochromatic components covering all vertices.
pub fn min_component_cover(g: &ColoredCompleteGraph, limits: &OracleLimits) -> Result<ComponentCover> {
    g.check_transitive()?;
    limit("vertex", 64, g.n())?;
    let comps = distinct_components(g);
    limit("component", limits.max_components, comps.len())?;
    let masks: Vec<u64> = comps
        .iter()
        .map(|(_, c)| c.iter().fold(0, |m, &v| m | bit(v)))
        .collect();
    let pick = min_set_cover(full_mask(g.n()), &masks).expect("components partition the vertex set");
    let parts = pick
        .into_iter()
        .map(|i| CoverPart {
            color: comps[i].0,
            vertices: comps[i].1.clone(),
        })
        .collect();
    Ok(ComponentCover::new(g.n(), parts))
}

/// Number of component tuples [`max_partial_cover_distinct`] would visit.
pub fn partial_cover_tuples(g: &ColoredCompleteGraph) -> u64 {
    let index = g.components();
    (1..=g.r())
        .map(|omit| {
            (1..=g.r())
                .filter(|&c| c != omit)
                .map(|c| index.k(c) as u64)
                .fold(1u64, |a, k| a.saturating_mul(k))
        })
        .fold(0u64, |a, x| a.saturating_add(x))
}

/// The best cover by `r - 1` components of pairwise distinct colours, over
/// every omitted colour and every choice of one component per other colour.
pub fn max_partial_cover_distinct(g: &ColoredCompleteGraph, limits: &OracleLimits) -> Result<ComponentCover> {
    if g.r() < 2 {
        return Err(Error::precondition("max_partial_cover_distinct", "needs r >= 2"));
    }
    limit("vertex", 64, g.n())?;
    let tuples = partial_cover_tuples(g);
    if tuples > limits.max_tuples {
        return Err(Error::LimitExceeded {
            what: "component tuple",
            limit: limits.max_tuples as usize,
            actual: tuples.min(usize::MAX as u64) as usize,
        });
    }
    let index = g.components();
    let masks: Vec<Vec<u64>> = (1..=g.r())
        .map(|c| {
            index
                .components(c)
                .iter()
                .map(|comp| comp.iter().fold(0, |m, &v| m | bit(v)))
                .collect()
        })
        .collect();
    let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
    for omit in 1..=g.r() {
        let colors: Vec<usize> = (1..=g.r()).filter(|&c| c != omit).collect();
        let widest: Vec<usize> = colors
            .iter()
            .map(|&c| masks[c - 1].iter().map(|&m| ones(m)).max().unwrap_or(0))
            .collect();
        // suffix[i] = sum of the widest component sizes of colors[i..]
        let mut suffix = vec![0; colors.len() + 1];
        for i in (0..colors.len()).rev() {
            suffix[i] = suffix[i + 1] + widest[i];
        }
        let mut choice = Vec::with_capacity(colors.len());
        partial_rec(&colors, &masks, &suffix, 0, 0, &mut choice, &mut best);
        if best.as_ref().is_some_and(|(c, _)| *c == g.n()) {
            break;
        }
    }
    let (_, choice) = best.expect("r >= 2 gives at least one tuple");
    let parts: Vec<CoverPart> = choice
        .iter()
        .map(|&(color, idx)| CoverPart {
            color,
            vertices: index.components(color)[idx].clone(),
        })
        .collect();
    let common = choice
        .iter()
        .fold(full_mask(g.n()), |acc, &(c, i)| acc & masks[c - 1][i]);
    let cover = ComponentCover::new(g.n(), parts);
    Ok(match bits(common).next() {
        Some(x) => cover.with_common_vertex(x),
        None => cover,
    })
}

fn partial_rec(
    colors: &[usize],
    masks: &[Vec<u64>],
    suffix: &[usize],
    depth: usize,
    covered: u64,
    choice: &mut Vec<(usize, usize)>,
    best: &mut Option<(usize, Vec<(usize, usize)>)>,
) {
    let best_count = best.as_ref().map_or(0, |(c, _)| *c);
    if depth == colors.len() {
        if best.is_none() || ones(covered) > best_count {
            *best = Some((ones(covered), choice.clone()));
        }
        return;
    }
    if best.is_some() && ones(covered) + suffix[depth] <= best_count {
        return;
    }
    let c = colors[depth];
    for (i, &m) in masks[c - 1].iter().enumerate() {
        choice.push((c, i));
        partial_rec(colors, masks, suffix, depth + 1, covered | m, choice, best);
        choice.pop();
    }
}
