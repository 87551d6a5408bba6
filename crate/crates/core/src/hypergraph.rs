//! Hypergraphs with optional partite classes.
//!
//! Vertices are opaque string tokens, renumbered densely in insertion order.
//! Hyperedges form a multiset: repeated edges are kept as distinct instances
//! and are addressed by their index.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::iso;

/// An `r`-uniform (declared) hypergraph, possibly with `r` partite classes.
///
/// The value may violate its declared invariants; [`validate`] reports them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    r: usize,
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Vec<usize>>,
    classes: Option<Vec<Vec<usize>>>,
}

/// Incremental construction of a [`Hypergraph`].
#[derive(Clone, Debug)]
pub struct HypergraphBuilder {
    inner: Hypergraph,
}

impl HypergraphBuilder {
    pub fn vertex(&mut self, name: &str) -> usize {
        if let Some(&v) = self.inner.index.get(name) {
            return v;
        }
        let v = self.inner.names.len();
        self.inner.names.push(name.to_string());
        self.inner.index.insert(name.to_string(), v);
        v
    }

    /// Adds one edge instance. Repeated tokens collapse, so an edge listing a
    /// vertex twice shows up as a uniformity violation.
    pub fn edge<S: AsRef<str>>(&mut self, vertices: &[S]) -> &mut Self {
        let mut e: Vec<usize> = vertices.iter().map(|s| self.vertex(s.as_ref())).collect();
        e.sort_unstable();
        e.dedup();
        self.inner.edges.push(e);
        self
    }

    /// Sets the partite classes, class `i` (0-based here) holding the given vertices.
    pub fn classes<S: AsRef<str>>(&mut self, classes: &[Vec<S>]) -> &mut Self {
        let ids = classes
            .iter()
            .map(|c| c.iter().map(|s| self.vertex(s.as_ref())).collect())
            .collect();
        self.inner.classes = Some(ids);
        self
    }

    pub fn build(&self) -> Hypergraph {
        self.inner.clone()
    }
}

impl Hypergraph {
    pub fn builder(r: usize) -> HypergraphBuilder {
        HypergraphBuilder {
            inner: Hypergraph {
                r,
                names: Vec::new(),
                index: HashMap::new(),
                edges: Vec::new(),
                classes: None,
            },
        }
    }

    /// Builds a hypergraph on vertices `0..vertex_count` named by their index.
    pub fn from_indexed(
        r: usize,
        vertex_count: usize,
        edges: Vec<Vec<usize>>,
        classes: Option<Vec<Vec<usize>>>,
    ) -> Self {
        let names: Vec<String> = (0..vertex_count).map(|v| v.to_string()).collect();
        Self::from_named(r, names, edges, classes)
    }

    pub(crate) fn from_named(
        r: usize,
        names: Vec<String>,
        edges: Vec<Vec<usize>>,
        classes: Option<Vec<Vec<usize>>>,
    ) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let edges = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                e
            })
            .collect();
        Hypergraph {
            r,
            names,
            index,
            edges,
            classes,
        }
    }

    /// Declared uniformity.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn classes(&self) -> Option<&[Vec<usize>]> {
        self.classes.as_deref()
    }

    /// Class index (0-based) of every vertex, `None` for vertices outside all
    /// classes. The first class wins when classes overlap.
    pub fn class_map(&self) -> Option<Vec<Option<usize>>> {
        let classes = self.classes.as_ref()?;
        let mut map = vec![None; self.vertex_count()];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                map[v].get_or_insert(i);
            }
        }
        Some(map)
    }

    /// Edge instances containing each vertex.
    pub fn stars(&self) -> Vec<Vec<usize>> {
        let mut stars = vec![Vec::new(); self.vertex_count()];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                stars[v].push(i);
            }
        }
        stars
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    /// Maximum vertex degree; zero for a hypergraph without edges.
    pub fn max_degree(&self) -> usize {
        self.stars().iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_uniform(&self) -> bool {
        self.edges.iter().all(|e| e.len() == self.r)
    }

    /// Vertices lying in at least one edge.
    pub fn covered_vertices(&self) -> Vec<usize> {
        let stars = self.stars();
        (0..self.vertex_count()).filter(|&v| !stars[v].is_empty()).collect()
    }

    /// Exact isomorphism test ignoring names and partite classes.
    pub fn is_isomorphic(&self, other: &Hypergraph) -> bool {
        iso::hypergraphs_isomorphic(self, other)
    }
}

/// One violated hypergraph invariant together with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotUniform {
        edge: usize,
        vertices: Vec<String>,
        r: usize,
    },
    ClassCount {
        expected: usize,
        actual: usize,
    },
    VertexInTwoClasses {
        vertex: String,
        first: usize,
        second: usize,
    },
    VertexOutsideClasses {
        vertex: String,
        edge: usize,
    },
    NotPartite {
        edge: usize,
        a: String,
        b: String,
        class: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotUniform { edge, vertices, r } => write!(
                f,
                "not r-uniform: edge #{edge} {{{}}} has {} vertices, r = {r}",
                vertices.join(","),
                vertices.len()
            ),
            Violation::ClassCount { expected, actual } => {
                write!(f, "wrong class count: {actual} classes, r = {expected}")
            }
            Violation::VertexInTwoClasses {
                vertex,
                first,
                second,
            } => write!(
                f,
                "classes not disjoint: {vertex} in classes {} and {}",
                first + 1,
                second + 1
            ),
            Violation::VertexOutsideClasses { vertex, edge } => write!(
                f,
                "classes do not cover edges: {vertex} of edge #{edge} is in no class"
            ),
            Violation::NotPartite { edge, a, b, class } => write!(
                f,
                "not r-partite: edge #{edge} contains ({a}, {b}) from class {}",
                class + 1
            ),
        }
    }
}

/// Result of a validation pass: the list of violated invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport<V> {
    pub violations: Vec<V>,
}

impl<V> ValidationReport<V> {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<V> Default for ValidationReport<V> {
    fn default() -> Self {
        ValidationReport {
            violations: Vec::new(),
        }
    }
}

/// Checks r-uniformity and, when classes are declared, r-partiteness.
pub fn validate(h: &Hypergraph) -> ValidationReport<Violation> {
    let mut report = ValidationReport::default();
    for (i, e) in h.edges.iter().enumerate() {
        if e.len() != h.r {
            report.violations.push(Violation::NotUniform {
                edge: i,
                vertices: e.iter().map(|&v| h.names[v].clone()).collect(),
                r: h.r,
            });
        }
    }
    let Some(classes) = &h.classes else {
        return report;
    };
    if classes.len() != h.r {
        report.violations.push(Violation::ClassCount {
            expected: h.r,
            actual: classes.len(),
        });
    }
    let mut owner: Vec<Option<usize>> = vec![None; h.vertex_count()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            match owner[v] {
                Some(first) if first != i => {
                    report.violations.push(Violation::VertexInTwoClasses {
                        vertex: h.names[v].clone(),
                        first,
                        second: i,
                    })
                }
                _ => owner[v] = Some(i),
            }
        }
    }
    for (i, e) in h.edges.iter().enumerate() {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for &v in e {
            match owner[v] {
                None => report.violations.push(Violation::VertexOutsideClasses {
                    vertex: h.names[v].clone(),
                    edge: i,
                }),
                Some(c) => {
                    if let Some(&u) = seen.get(&c) {
                        report.violations.push(Violation::NotPartite {
                            edge: i,
                            a: h.names[u].clone(),
                            b: h.names[v].clone(),
                            class: c,
                        });
                    } else {
                        seen.insert(c, v);
                    }
                }
            }
        }
    }
    report
}

/// The dual hypergraph: one vertex per edge instance (named `e<i>`), one
/// hyperedge per vertex star, kept as a multiset in vertex order.
///
/// Isolated vertices give empty dual edges, so the dual of the dual is
/// isomorphic to the original. The declared uniformity of the dual is the
/// maximum degree of `h`.
pub fn dual(h: &Hypergraph) -> Hypergraph {
    let names = (0..h.edge_count()).map(|i| format!("e{i}")).collect();
    let stars = h.stars();
    let r = stars.iter().map(Vec::len).max().unwrap_or(0);
    Hypergraph::from_named(r, names, stars, None)
}

pub(crate) fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Largest `t` such that `h` is t-intersecting: the minimum intersection size
/// over pairs of distinct edge instances, or `r` for a single edge.
pub fn intersection_level(h: &Hypergraph) -> Result<usize> {
    match h.edges.len() {
        0 => Err(Error::EmptyHypergraph),
        1 => Ok(h.r),
        _ => {
            let mut best = usize::MAX;
            for (i, e) in h.edges.iter().enumerate() {
                for f in &h.edges[i + 1..] {
                    best = best.min(intersection_size(e, f));
                    if best == 0 {
                        return Ok(0);
                    }
                }
            }
            Ok(best)
        }
    }
}

/// Exact covering/packing parameters of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphParams {
    pub tau: usize,
    pub nu: usize,
    /// `None` when some vertex lies in no edge.
    pub rho: Option<usize>,
    pub delta: usize,
    pub alpha: usize,
    pub alpha_prime: usize,
    /// Largest t for which the hypergraph is t-intersecting (0 without edges).
    pub t_level: usize,
}
