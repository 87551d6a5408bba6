//! Seeded random instances. Every generator draws from a `ChaCha8Rng` seeded
//! with the given `u64`, so equal arguments give equal output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colored::{ColorSet, ColoredCompleteGraph};
use crate::error::{Error, Result};
use crate::hypergraph::{intersection_size, Hypergraph};
use crate::planes::{affine_plane, blowup_graph};

/// The generator behind every function here.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn graph_from_labels(n: usize, labels: &[Vec<usize>]) -> Result<ColoredCompleteGraph> {
    ColoredCompleteGraph::from_fn(n, labels.len(), |u, v| {
        labels
            .iter()
            .enumerate()
            .filter(|(_, l)| l[u] == l[v])
            .map(|(c, _)| c + 1)
            .collect()
    })
}

/// A colour-transitive graph in which every pair carries at least `t` colours.
///
/// Each colour starts as an independent random partition of the vertices.
/// While some pair has fewer than `t` colours, the first such pair with the
/// fewest colours gets its two blocks merged in the colour that lifts the
/// most deficient pairs (lowest colour on ties).
pub fn gen_transitive_colored(n: usize, r: usize, t: usize, seed: u64) -> Result<ColoredCompleteGraph> {
    const OP: &str = "gen_transitive_colored";
    if n < 2 || t == 0 || t >= r {
        return Err(Error::precondition(OP, format!("need n >= 2 and 1 <= t < r, got n = {n}, r = {r}, t = {t}")));
    }
    let mut rng = rng(seed);
    let mut labels: Vec<Vec<usize>> = (0..r)
        .map(|_| {
            let blocks = rng.gen_range(1..=n);
            (0..n).map(|_| rng.gen_range(0..blocks)).collect()
        })
        .collect();
    let count = |labels: &[Vec<usize>], u: usize, v: usize| labels.iter().filter(|l| l[u] == l[v]).count();
    let cap = 10 * r * n;
    for _ in 0..=cap {
        let mut worst: Option<(usize, usize, usize)> = None;
        let mut deficient = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let c = count(&labels, u, v);
                if c < t {
                    deficient.push((u, v));
                    if worst.is_none_or(|(w, _, _)| c < w) {
                        worst = Some((c, u, v));
                    }
                }
            }
        }
        let Some((_, u, v)) = worst else {
            return graph_from_labels(n, &labels);
        };
        let (color, _) = (0..r)
            .filter(|&c| labels[c][u] != labels[c][v])
            .map(|c| {
                let (bu, bv) = (labels[c][u], labels[c][v]);
                let gain = deficient
                    .iter()
                    .filter(|&&(a, b)| {
                        let (la, lb) = (labels[c][a], labels[c][b]);
                        (la == bu && lb == bv) || (la == bv && lb == bu)
                    })
                    .count();
                (c, gain)
            })
            .fold(None, |best: Option<(usize, usize)>, (c, g)| match best {
                Some((_, bg)) if bg >= g => best,
                _ => Some((c, g)),
            })
            .expect("a deficient pair misses some colour");
        let (from, to) = (labels[color][v], labels[color][u]);
        for l in labels[color].iter_mut() {
            if *l == from {
                *l = to;
            }
        }
    }
    Err(Error::LimitExceeded {
        what: "colour repair iterations",
        limit: cap,
        actual: cap + 1,
    })
}

/// A group of colours in which every pair lies in exactly one block.
enum Layer {
    /// One colour, one block.
    Clique,
    /// The parallel classes of AG(2, q), vertices placed on random points.
    Plane(usize),
    /// A round-robin 1-factorization: every block has at most two vertices.
    Matchings,
}

impl Layer {
    fn cost(&self, n: usize) -> usize {
        match self {
            Layer::Clique => 1,
            Layer::Plane(q) => q + 1,
            Layer::Matchings => n + n % 2 - 1,
        }
    }

    /// Block label of each vertex, per colour of the layer.
    fn labels(&self, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<usize>>> {
        Ok(match *self {
            Layer::Clique => vec![vec![0; n]],
            Layer::Plane(q) => {
                let plane = affine_plane(q)?;
                let mut points: Vec<usize> = (0..q * q).collect();
                points.shuffle(rng);
                plane
                    .parallel_classes()
                    .iter()
                    .map(|class| {
                        let mut line_of = vec![0; q * q];
                        for &l in class {
                            for &p in &plane.lines()[l] {
                                line_of[p] = l;
                            }
                        }
                        (0..n).map(|v| line_of[points[v]]).collect()
                    })
                    .collect()
            }
            Layer::Matchings => {
                let m = n + n % 2;
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                // Round i pairs (i, m-1) and (a, b) with a + b = 2i mod (m-1).
                let round = |a: usize, b: usize| {
                    if a == m - 1 {
                        b
                    } else if b == m - 1 {
                        a
                    } else {
                        (a + b) * (m / 2) % (m - 1)
                    }
                };
                (0..m - 1)
                    .map(|i| {
                        let mut label: Vec<usize> = (0..n).map(|v| n + v).collect();
                        for a in 0..n {
                            for b in a + 1..n {
                                if round(perm[a], perm[b]) == i {
                                    label[a] = a;
                                    label[b] = a;
                                }
                            }
                        }
                        label
                    })
                    .collect()
            }
        })
    }
}

/// A colour-transitive graph in which every pair carries exactly `t` colours.
///
/// The palette is split into `t` disjoint layers, each a family of partitions
/// that puts every pair in exactly one block: a single clique, the parallel
/// classes of an affine plane restricted to `n` random points, or a
/// 1-factorization. Unused colours have no edges. Colours are shuffled.
pub fn gen_layered_exact_t(n: usize, r: usize, t: usize, seed: u64) -> Result<ColoredCompleteGraph> {
    const OP: &str = "gen_layered_exact_t";
    if n < 2 || t == 0 || t > r {
        return Err(Error::precondition(OP, format!("need n >= 2 and 1 <= t <= r, got n = {n}, r = {r}, t = {t}")));
    }
    let mut rng = rng(seed);
    let mut budget = r;
    let mut labels = Vec::new();
    for left in (1..=t).rev() {
        let room = budget - (left - 1);
        let mut options = vec![Layer::Clique, Layer::Matchings];
        options.extend([2, 3, 4, 5, 7].into_iter().filter(|q| q * q >= n).map(Layer::Plane));
        options.retain(|l| l.cost(n) <= room);
        let layer = options.choose(&mut rng).expect("a clique always fits");
        budget -= layer.cost(n);
        labels.extend(layer.labels(n, &mut rng)?);
    }
    while labels.len() < r {
        labels.push((0..n).collect());
    }
    labels.shuffle(&mut rng);
    graph_from_labels(n, &labels)
}

/// An `r`-partite hypergraph with classes of `class_size` vertices whose
/// edges pairwise share at least `t` vertices (`t = 0` puts no constraint).
///
/// Candidates are either uniform tuples or an accepted edge with `r - t`
/// coordinates resampled; a candidate is kept iff it meets every kept edge in
/// at least `t` vertices. Sampling stops at `m` edges or after `200 m`
/// candidates; the flag reports a short result. Vertices in no edge are dropped.
pub fn gen_t_intersecting_hypergraph(
    r: usize,
    t: usize,
    m: usize,
    class_size: usize,
    seed: u64,
) -> Result<(Hypergraph, bool)> {
    const OP: &str = "gen_t_intersecting_hypergraph";
    if r == 0 || t >= r || class_size < 2 || m == 0 {
        return Err(Error::precondition(
            OP,
            format!("need t < r, class size >= 2 and m >= 1, got r = {r}, t = {t}, class size = {class_size}, m = {m}"),
        ));
    }
    let mut rng = rng(seed);
    let mut kept: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut attempts = 0;
    while kept.len() < m && attempts < 200 * m {
        attempts += 1;
        let candidate: Vec<usize> = match kept.choose(&mut rng) {
            Some(base) if rng.gen_bool(0.5) => {
                let mut e = base.clone();
                let mut coords: Vec<usize> = (0..r).collect();
                coords.shuffle(&mut rng);
                for &c in &coords[..r - t] {
                    e[c] = rng.gen_range(0..class_size);
                }
                e
            }
            _ => (0..r).map(|_| rng.gen_range(0..class_size)).collect(),
        };
        let ok = kept
            .iter()
            .all(|e| e.iter().zip(&candidate).filter(|(a, b)| a == b).count() >= t);
        if ok {
            kept.push(candidate);
        }
    }
    let short = kept.len() < m;
    let mut used = vec![vec![false; class_size]; r];
    for e in &kept {
        for (c, &x) in e.iter().enumerate() {
            used[c][x] = true;
        }
    }
    let mut id = vec![vec![usize::MAX; class_size]; r];
    let mut names = Vec::new();
    let mut classes = vec![Vec::new(); r];
    for c in 0..r {
        for x in 0..class_size {
            if used[c][x] {
                id[c][x] = names.len();
                classes[c].push(names.len());
                names.push(format!("c{}v{}", c + 1, x));
            }
        }
    }
    let edges = kept
        .iter()
        .map(|e| e.iter().enumerate().map(|(c, &x)| id[c][x]).collect())
        .collect();
    let h = Hypergraph::from_named(r, names, edges, Some(classes));
    debug_assert!(h.edges().iter().enumerate().all(|(i, a)| h.edges()[..i]
        .iter()
        .all(|b| intersection_size(a, b) >= t)));
    Ok((h, short))
}

/// Shape of a maximum-degree-2 instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Delta2Mode {
    /// Each new edge reuses a random number of degree-1 vertices.
    Mixed,
    /// Consecutive edges share one vertex, cyclically; the dual graph is a cycle.
    Cycle,
    /// Pairwise disjoint edges.
    Disjoint,
}

/// An `r`-uniform hypergraph with `m` edges in which no vertex lies in more than two edges.
pub fn gen_delta2(r: usize, m: usize, seed: u64, mode: Delta2Mode) -> Result<Hypergraph> {
    if r < 3 {
        return Err(Error::precondition("gen_delta2", format!("need r >= 3, got {r}")));
    }
    let mut rng = rng(seed);
    let mut next = 0;
    let mut fresh = |count: usize| {
        let out: Vec<usize> = (next..next + count).collect();
        next += count;
        out
    };
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    match mode {
        Delta2Mode::Disjoint => {
            for _ in 0..m {
                edges.push(fresh(r));
            }
        }
        Delta2Mode::Cycle if m >= 2 => {
            let hinge = fresh(m);
            for i in 0..m {
                let mut e = vec![hinge[i], hinge[(i + 1) % m]];
                e.extend(fresh(r - 2));
                edges.push(e);
            }
        }
        Delta2Mode::Cycle => {
            for _ in 0..m {
                edges.push(fresh(r));
            }
        }
        Delta2Mode::Mixed => {
            let mut open: Vec<usize> = Vec::new();
            for _ in 0..m {
                let reuse = rng.gen_range(0..=r.min(open.len()));
                open.shuffle(&mut rng);
                let mut e: Vec<usize> = open.drain(..reuse).collect();
                let added = fresh(r - reuse);
                open.extend(&added);
                e.extend(added);
                edges.push(e);
            }
        }
    }
    let names = (0..next).map(|v| format!("v{v}")).collect();
    Ok(Hypergraph::from_named(r, names, edges, None))
}

/// A blowup of AG(2, q) with two components of one random colour merged.
///
/// Merging keeps the colouring transitive (the two cliques become one) and
/// lowers that colour's component count to `q - 1`.
pub fn gen_coarsened_blowup(q: usize, b: usize, seed: u64) -> Result<ColoredCompleteGraph> {
    let g = blowup_graph(&affine_plane(q)?, b)?;
    let mut rng = rng(seed);
    let color = rng.gen_range(1..=g.r());
    let comps = g.components().components(color);
    let mut picks: Vec<usize> = (0..comps.len()).collect();
    picks.shuffle(&mut rng);
    let n = g.n();
    let mut side = vec![0u8; n];
    for &v in &comps[picks[0]] {
        side[v] = 1;
    }
    for &v in &comps[picks[1]] {
        side[v] = 2;
    }
    ColoredCompleteGraph::from_fn(n, g.r(), |u, v| {
        let c = g.col(u, v);
        if side[u] | side[v] == 3 {
            c | ColorSet::single(color)
        } else {
            c
        }
    })
}
