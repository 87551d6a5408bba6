//! Multi edge-coloured complete graphs and their monochromatic components.
//!
//! Every unordered pair of distinct vertices carries a nonempty set of colours
//! drawn from `1..=r`. A colouring is transitive when a colour shared by `uv`
//! and `vw` is also on `uw`; then each colour class is a disjoint union of
//! cliques and its components are exactly those cliques.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hypergraph::{validate, Hypergraph};
use crate::iso;

/// Largest supported palette.
pub const MAX_COLORS: usize = 30;

/// A set of colours from `1..=MAX_COLORS`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// All colours `1..=r`.
    pub fn full(r: usize) -> Self {
        debug_assert!(r <= MAX_COLORS);
        ColorSet(((1u64 << r) - 1) as u32)
    }

    pub fn single(color: usize) -> Self {
        debug_assert!((1..=MAX_COLORS).contains(&color));
        ColorSet(1 << (color - 1))
    }

    pub fn from_bits(bits: u32) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, color: usize) -> bool {
        (1..=32).contains(&color) && self.0 & (1 << (color - 1)) != 0
    }

    pub fn insert(&mut self, color: usize) {
        *self = *self | ColorSet::single(color);
    }

    pub fn remove(&mut self, color: usize) {
        *self = *self - ColorSet::single(color);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// The `k` smallest colours of the set (all of them if fewer).
    pub fn smallest(self, k: usize) -> ColorSet {
        self.iter().take(k).collect()
    }

    /// Colours in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(c + 1)
        })
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl BitOr for ColorSet {
    type Output = ColorSet;
    fn bitor(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 | rhs.0)
    }
}

impl BitAnd for ColorSet {
    type Output = ColorSet;
    fn bitand(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & rhs.0)
    }
}

impl Sub for ColorSet {
    type Output = ColorSet;
    fn sub(self, rhs: ColorSet) -> ColorSet {
        ColorSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Comma separated, as in the CGF format.
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Monochromatic components of every colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentIndex {
    labels: Vec<Vec<usize>>,
    components: Vec<Vec<Vec<usize>>>,
}

impl ComponentIndex {
    /// Number of components `k_i` of colour `color`.
    pub fn k(&self, color: usize) -> usize {
        self.components[color - 1].len()
    }

    /// Components of `color`, each sorted, ordered by their smallest vertex.
    pub fn components(&self, color: usize) -> &[Vec<usize>] {
        &self.components[color - 1]
    }

    /// Index (into [`components`](Self::components)) of the component of `v`.
    pub fn label(&self, v: usize, color: usize) -> usize {
        self.labels[color - 1][v]
    }

    pub fn component_of(&self, v: usize, color: usize) -> &[usize] {
        &self.components[color - 1][self.labels[color - 1][v]]
    }

    /// Component cardinalities of `color`.
    pub fn gammas(&self, color: usize) -> Vec<usize> {
        self.components(color).iter().map(Vec::len).collect()
    }

    pub fn colors(&self) -> usize {
        self.components.len()
    }
}

/// A complete graph with a nonempty colour set on every pair.
///
/// Transitivity is not enforced by construction; algorithms that need it
/// check it with [`ColoredCompleteGraph::check_transitive`].
#[derive(Clone)]
pub struct ColoredCompleteGraph {
    n: usize,
    r: usize,
    col: Vec<ColorSet>,
    index: OnceLock<ComponentIndex>,
    transitivity: OnceLock<Option<Error>>,
}

impl PartialEq for ColoredCompleteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.col == other.col
    }
}

impl Eq for ColoredCompleteGraph {}

impl fmt::Debug for ColoredCompleteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                pairs.push(((u, v), self.col(u, v)));
            }
        }
        f.debug_struct("ColoredCompleteGraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("col", &pairs)
            .finish()
    }
}

fn check_palette(r: usize) -> Result<()> {
    if r > MAX_COLORS {
        return Err(Error::LimitExceeded {
            what: "color count",
            limit: MAX_COLORS,
            actual: r,
        });
    }
    Ok(())
}

impl ColoredCompleteGraph {
    /// Builds the graph from a colour function on pairs `u < v`.
    pub fn from_fn(n: usize, r: usize, mut f: impl FnMut(usize, usize) -> ColorSet) -> Result<Self> {
        check_palette(r)?;
        let mut col = vec![ColorSet::EMPTY; n * n];
        let palette = ColorSet::full(r);
        for u in 0..n {
            for v in u + 1..n {
                let c = f(u, v);
                if c.is_empty() {
                    return Err(Error::NotComplete { u, v });
                }
                if !c.is_subset(palette) {
                    return Err(Error::ColorOutOfRange {
                        color: (c - palette).min().unwrap(),
                        r,
                    });
                }
                col[u * n + v] = c;
                col[v * n + u] = c;
            }
        }
        Ok(Self::from_raw(n, r, col))
    }

    fn from_raw(n: usize, r: usize, col: Vec<ColorSet>) -> Self {
        ColoredCompleteGraph {
            n,
            r,
            col,
            index: OnceLock::new(),
            transitivity: OnceLock::new(),
        }
    }

    /// Transitive colouring whose colour-`i` components are the blocks of
    /// `partitions[i - 1]`, given as a block label per vertex.
    pub fn from_partitions(n: usize, partitions: &[Vec<usize>]) -> Result<Self> {
        Self::from_fn(n, partitions.len(), |u, v| {
            partitions
                .iter()
                .enumerate()
                .filter(|(_, p)| p[u] == p[v])
                .map(|(i, _)| i + 1)
                .collect()
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Colours of the pair `{u, v}`; empty on the diagonal.
    pub fn col(&self, u: usize, v: usize) -> ColorSet {
        self.col[u * self.n + v]
    }

    /// All pairs `u < v` with their colours, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, ColorSet)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v, self.col(u, v))))
    }

    pub fn min_colors_per_pair(&self) -> Option<usize> {
        self.pairs().map(|(_, _, c)| c.len()).min()
    }

    pub fn check_color(&self, color: usize) -> Result<()> {
        if color == 0 || color > self.r {
            return Err(Error::ColorOutOfRange { color, r: self.r });
        }
        Ok(())
    }

    /// `Ok` iff the colouring is transitive; otherwise the first violating
    /// triple in lexicographic order.
    pub fn check_transitive(&self) -> Result<()> {
        let cached = self.transitivity.get_or_init(|| {
            for u in 0..self.n {
                for v in 0..self.n {
                    if v == u {
                        continue;
                    }
                    let uv = self.col(u, v);
                    for w in u + 1..self.n {
                        if w == v {
                            continue;
                        }
                        let missing = (uv & self.col(v, w)) - self.col(u, w);
                        if let Some(color) = missing.min() {
                            return Some(Error::NotTransitive { u, v, w, color });
                        }
                    }
                }
            }
            None
        });
        match cached {
            None => Ok(()),
            Some(e) => Err(e.clone()),
        }
    }

    pub fn is_transitive(&self) -> bool {
        self.check_transitive().is_ok()
    }

    /// Components of the subgraph formed by each colour. Computed once.
    pub fn components(&self) -> &ComponentIndex {
        self.index.get_or_init(|| {
            let mut labels = Vec::with_capacity(self.r);
            let mut components = Vec::with_capacity(self.r);
            for color in 1..=self.r {
                let mut uf = UnionFind::new(self.n);
                for (u, v, c) in self.pairs() {
                    if c.contains(color) {
                        uf.union(u, v);
                    }
                }
                let (l, comps) = uf.into_blocks();
                labels.push(l);
                components.push(comps);
            }
            ComponentIndex { labels, components }
        })
    }

    /// The components `C(x, I)`: one part per colour of `colors`, each the
    /// component of that colour containing `x`.
    pub fn components_of(&self, x: usize, colors: ColorSet) -> Result<ComponentCover> {
        if let Some(bad) = (colors - ColorSet::full(self.r)).min() {
            return Err(Error::ColorOutOfRange {
                color: bad,
                r: self.r,
            });
        }
        let index = self.components();
        let parts = colors
            .iter()
            .map(|c| CoverPart {
                color: c,
                vertices: index.component_of(x, c).to_vec(),
            })
            .collect();
        Ok(ComponentCover::new(self.n, parts).with_common_vertex(x))
    }

    /// Exact isomorphism up to vertex and colour relabeling.
    pub fn is_isomorphic(&self, other: &ColoredCompleteGraph) -> bool {
        iso::colored_isomorphic(self, other)
    }

    /// The induced colouring on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> ColoredCompleteGraph {
        let m = vertices.len();
        let mut col = vec![ColorSet::EMPTY; m * m];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j {
                    col[i * m + j] = self.col(u, v);
                }
            }
        }
        Self::from_raw(m, self.r, col)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Block label per element and the blocks, ordered by smallest element.
    fn into_blocks(mut self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.parent.len();
        let mut label = vec![usize::MAX; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let root = self.find(v);
            if label[root] == usize::MAX {
                label[root] = blocks.len();
                blocks.push(Vec::new());
            }
            let b = label[root];
            label[v] = b;
            blocks[b].push(v);
        }
        (label, blocks)
    }
}

/// One monochromatic component used in a cover.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverPart {
    pub color: usize,
    pub vertices: Vec<usize>,
}

/// A set of monochromatic components with covered-vertex accounting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCover {
    n: usize,
    parts: Vec<CoverPart>,
    covered_count: usize,
    common_vertex: Option<usize>,
}

impl ComponentCover {
    /// Drops repeated parts (same colour and vertex set), keeping first occurrences.
    pub fn new(n: usize, parts: Vec<CoverPart>) -> Self {
        let mut unique: Vec<CoverPart> = Vec::with_capacity(parts.len());
        for p in parts {
            if !unique.contains(&p) {
                unique.push(p);
            }
        }
        let mut covered = vec![false; n];
        for p in &unique {
            for &v in &p.vertices {
                covered[v] = true;
            }
        }
        ComponentCover {
            n,
            covered_count: covered.iter().filter(|&&c| c).count(),
            parts: unique,
            common_vertex: None,
        }
    }

    /// Records `x` as a vertex lying in every part.
    ///
    /// # Panics
    /// If some part misses `x`.
    pub fn with_common_vertex(mut self, x: usize) -> Self {
        assert!(
            self.parts.iter().all(|p| p.vertices.binary_search(&x).is_ok()),
            "vertex {x} is not common to all parts"
        );
        self.common_vertex = Some(x);
        self
    }

    pub fn parts(&self) -> &[CoverPart] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covered_count(&self) -> usize {
        self.covered_count
    }

    pub fn common_vertex(&self) -> Option<usize> {
        self.common_vertex
    }

    pub fn covers_all(&self) -> bool {
        self.covered_count == self.n
    }

    pub fn uncovered(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n];
        for p in &self.parts {
            for &v in &p.vertices {
                covered[v] = true;
            }
        }
        (0..self.n).filter(|&v| !covered[v]).collect()
    }

    /// Colours of the parts, with repetition, in part order.
    pub fn colors(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.color).collect()
    }

    /// Union of two covers of the same vertex set. The common vertex is kept
    /// only if both sides agree on it.
    pub fn union(&self, other: &ComponentCover) -> ComponentCover {
        debug_assert_eq!(self.n, other.n);
        let parts = self.parts.iter().chain(other.parts.iter()).cloned().collect();
        let mut out = ComponentCover::new(self.n, parts);
        if self.common_vertex.is_some() && self.common_vertex == other.common_vertex {
            out.common_vertex = self.common_vertex;
        }
        out
    }

    /// True iff every part is a monochromatic component of `g`.
    pub fn parts_are_components_of(&self, g: &ColoredCompleteGraph) -> bool {
        let index = g.components();
        self.n == g.n()
            && self.parts.iter().all(|p| {
                (1..=g.r()).contains(&p.color)
                    && !p.vertices.is_empty()
                    && index.component_of(p.vertices[0], p.color) == p.vertices.as_slice()
            })
    }
}

/// Colouring of a non-complete graph; pairs without colour are missing edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoredGraph {
    pub n: usize,
    pub r: usize,
    col: Vec<ColorSet>,
}

impl PartialColoredGraph {
    pub fn col(&self, u: usize, v: usize) -> ColorSet {
        self.col[u * self.n + v]
    }

    /// Pairs `u < v` with no colour.
    pub fn missing_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.col(u, v).is_empty() {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Output of [`gyarfas_graph`]: complete iff the hypergraph is intersecting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GyarfasGraph {
    Complete(ColoredCompleteGraph),
    Partial(PartialColoredGraph),
}

impl GyarfasGraph {
    pub fn complete(self) -> Option<ColoredCompleteGraph> {
        match self {
            GyarfasGraph::Complete(g) => Some(g),
            GyarfasGraph::Partial(_) => None,
        }
    }
}

/// One vertex per edge instance of `h`; the pair of two edges is coloured by
/// the (1-based) classes in which they share a vertex.
pub fn gyarfas_graph(h: &Hypergraph) -> Result<GyarfasGraph> {
    const OP: &str = "gyarfas_graph";
    let Some(class_map) = h.class_map() else {
        return Err(Error::precondition(OP, "hypergraph has no partite classes"));
    };
    let report = validate(h);
    if let Some(v) = report.violations.first() {
        return Err(Error::precondition(OP, v.to_string()));
    }
    check_palette(h.r())?;
    let n = h.edge_count();
    let edges = h.edges();
    let mut col = vec![ColorSet::EMPTY; n * n];
    let mut complete = true;
    for u in 0..n {
        for v in u + 1..n {
            let c: ColorSet = edges[u]
                .iter()
                .filter(|w| edges[v].binary_search(w).is_ok())
                .map(|&w| class_map[w].expect("validated") + 1)
                .collect();
            complete &= !c.is_empty();
            col[u * n + v] = c;
            col[v * n + u] = c;
        }
    }
    Ok(if complete {
        GyarfasGraph::Complete(ColoredCompleteGraph::from_raw(n, h.r(), col))
    } else {
        GyarfasGraph::Partial(PartialColoredGraph { n, r: h.r(), col })
    })
}

/// Colour-transitive closure: `i` is on `uv` iff `u` and `v` lie in the same
/// colour-`i` component of `g`. Component vertex sets do not change.
pub fn transitive_closure(g: &ColoredCompleteGraph) -> ColoredCompleteGraph {
    let index = g.components();
    let (n, r) = (g.n(), g.r());
    let mut col = vec![ColorSet::EMPTY; n * n];
    for u in 0..n {
        for v in 0..n {
            if u != v {
                col[u * n + v] = (1..=r)
                    .filter(|&c| index.label(u, c) == index.label(v, c))
                    .collect();
            }
        }
    }
    ColoredCompleteGraph::from_raw(n, r, col)
}

/// Result of contracting the full-colour classes of a transitive graph.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: ColoredCompleteGraph,
    /// Original vertices of each contracted vertex, sorted.
    pub classes: Vec<Vec<usize>>,
    /// Contracted vertex of each original vertex.
    pub class_of: Vec<usize>,
}

impl Contraction {
    /// Expands a cover of the contracted graph to one of the original graph
    /// with the same parts.
    pub fn lift(&self, cover: &ComponentCover) -> ComponentCover {
        let n = self.class_of.len();
        let parts = cover
            .parts()
            .iter()
            .map(|p| {
                let mut vertices: Vec<usize> = p
                    .vertices
                    .iter()
                    .flat_map(|&c| self.classes[c].iter().copied())
                    .collect();
                vertices.sort_unstable();
                CoverPart {
                    color: p.color,
                    vertices,
                }
            })
            .collect();
        let lifted = ComponentCover::new(n, parts);
        match cover.common_vertex() {
            Some(x) => lifted.with_common_vertex(self.classes[x][0]),
            None => lifted,
        }
    }
}

/// Contracts every class of the relation "pair carries all `r` colours".
///
/// Under transitivity that relation is an equivalence (if `uv` and `vw` carry
/// every colour, so does `uw`), and any `z` outside a class sees all members
/// with the same colours, so the contracted colouring is well defined. Both
/// facts are checked rather than assumed.
pub fn contract_full_color_classes(g: &ColoredCompleteGraph) -> Result<Contraction> {
    g.check_transitive()?;
    let full = ColorSet::full(g.r());
    let mut uf = UnionFind::new(g.n());
    for (u, v, c) in g.pairs() {
        if c == full {
            uf.union(u, v);
        }
    }
    let (class_of, classes) = uf.into_blocks();
    for class in &classes {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if g.col(u, v) != full {
                    return Err(Error::InvariantViolated(format!(
                        "full-colour relation not transitive at ({u}, {v})"
                    )));
                }
            }
        }
    }
    let m = classes.len();
    let contracted = ColoredCompleteGraph::from_fn(m, g.r(), |a, b| g.col(classes[a][0], classes[b][0]))?;
    for a in 0..m {
        for b in a + 1..m {
            let expected = contracted.col(a, b);
            for &u in &classes[a] {
                for &v in &classes[b] {
                    if g.col(u, v) != expected {
                        return Err(Error::InvariantViolated(format!(
                            "contracted colour of classes {a}, {b} not well defined at ({u}, {v})"
                        )));
                    }
                }
            }
        }
    }
    Ok(Contraction {
        graph: contracted,
        classes,
        class_of,
    })
}

/// Removes `color` from every pair. Colours above it shift down by one, so
/// the result uses the palette `1..=r-1`.
pub fn delete_color(g: &ColoredCompleteGraph, color: usize) -> Result<ColoredCompleteGraph> {
    g.check_color(color)?;
    let low = ColorSet::full(color - 1);
    let shift = |c: ColorSet| ColorSet::from_bits((c & low).bits() | ((c.bits() >> color) << (color - 1)));
    if let Some((u, v, _)) = g.pairs().find(|&(_, _, c)| c == ColorSet::single(color)) {
        return Err(Error::DeletionEmptiesEdge { u, v, color });
    }
    let col = g.col.iter().map(|&c| shift(c)).collect();
    Ok(ColoredCompleteGraph::from_raw(g.n(), g.r() - 1, col))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(colors: &[usize]) -> ColorSet {
        colors.iter().copied().collect()
    }

    #[test]
    fn color_set_basics() {
        let s = cs(&[1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.smallest(2), cs(&[1, 3]));
        assert_eq!(s.to_string(), "1,3,5");
        assert_eq!(ColorSet::full(4) - s, cs(&[2, 4]));
        assert_eq!(s.max(), Some(5));
        assert!(cs(&[3]).is_subset(s));
    }

    #[test]
    fn closure_adds_transitive_color() {
        // u-v and v-w in colour 1, u-w only in colour 2.
        let g = ColoredCompleteGraph::from_fn(3, 2, |u, v| match (u, v) {
            (0, 2) => cs(&[2]),
            _ => cs(&[1]),
        })
        .unwrap();
        assert!(!g.is_transitive());
        let c = transitive_closure(&g);
        assert_eq!(c.col(0, 2), cs(&[1, 2]));
        assert!(c.is_transitive());
        assert_eq!(transitive_closure(&c), c);
    }

    #[test]
    fn single_color_graph_has_one_component() {
        let g = ColoredCompleteGraph::from_fn(5, 3, |_, _| cs(&[1])).unwrap();
        let idx = g.components();
        assert_eq!(idx.k(1), 1);
        assert_eq!(idx.gammas(1), vec![5]);
        assert_eq!(idx.k(2), 5);
        let cover = g.components_of(2, ColorSet::full(3)).unwrap();
        assert_eq!(cover.len(), 3);
        assert_eq!(cover.common_vertex(), Some(2));
        assert!(cover.parts().iter().all(|p| p.vertices.contains(&2)));
        assert!(matches!(
            g.components_of(0, cs(&[4])),
            Err(Error::ColorOutOfRange { color: 4, r: 3 })
        ));
    }

    #[test]
    fn missing_colors_rejected() {
        assert_eq!(
            ColoredCompleteGraph::from_fn(3, 2, |u, _| if u == 1 { ColorSet::EMPTY } else { cs(&[1]) }),
            Err(Error::NotComplete { u: 1, v: 2 })
        );
        assert!(matches!(
            ColoredCompleteGraph::from_fn(2, 2, |_, _| cs(&[3])),
            Err(Error::ColorOutOfRange { .. })
        ));
    }

    #[test]
    fn contraction_of_full_graph_is_one_vertex() {
        let g = ColoredCompleteGraph::from_fn(4, 3, |_, _| ColorSet::full(3)).unwrap();
        let c = contract_full_color_classes(&g).unwrap();
        assert_eq!(c.graph.n(), 1);
        assert_eq!(c.classes, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn contraction_without_full_pairs_is_identity() {
        let g = ColoredCompleteGraph::from_partitions(4, &[vec![0, 0, 1, 1], vec![0, 1, 0, 1], vec![0, 1, 1, 0]])
            .unwrap();
        let c = contract_full_color_classes(&g).unwrap();
        assert_eq!(c.graph, g);
    }

    #[test]
    fn contraction_lifts_components() {
        // Vertices 0 and 3 are twins carrying all colours.
        let g = ColoredCompleteGraph::from_partitions(4, &[vec![0, 0, 1, 0], vec![0, 1, 1, 0], vec![0, 1, 0, 0]])
            .unwrap();
        let c = contract_full_color_classes(&g).unwrap();
        assert_eq!(c.graph.n(), 3);
        let small = c.graph.components_of(c.class_of[0], ColorSet::full(3)).unwrap();
        let lifted = c.lift(&small);
        assert!(lifted.covers_all());
        assert!(lifted.parts_are_components_of(&g));
        assert_eq!(lifted.len(), small.len());
    }

    #[test]
    fn delete_color_shifts_palette() {
        let g = ColoredCompleteGraph::from_fn(3, 3, |_, _| cs(&[1, 3])).unwrap();
        let d = delete_color(&g, 1).unwrap();
        assert_eq!(d.r(), 2);
        assert_eq!(d.col(0, 1), cs(&[2]));
        let d = delete_color(&g, 2).unwrap();
        assert_eq!(d.col(0, 2), cs(&[1, 2]));
        assert_eq!(
            delete_color(&d, 1).and_then(|d| delete_color(&d, 1)),
            Err(Error::DeletionEmptiesEdge { u: 0, v: 1, color: 1 })
        );
        assert!(matches!(delete_color(&g, 0), Err(Error::ColorOutOfRange { .. })));
    }

    #[test]
    fn gyarfas_of_two_edges_sharing_two_classes() {
        let h = Hypergraph::builder(3)
            .classes(&[vec!["a"], vec!["b"], vec!["c", "d"]])
            .edge(&["a", "b", "c"])
            .edge(&["a", "b", "d"])
            .build();
        let g = gyarfas_graph(&h).unwrap().complete().unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.col(0, 1), cs(&[1, 2]));
    }

    #[test]
    fn gyarfas_of_disjoint_edges_is_partial() {
        let h = Hypergraph::builder(2)
            .classes(&[vec!["a", "c"], vec!["b", "d"]])
            .edge(&["a", "b"])
            .edge(&["c", "d"])
            .build();
        match gyarfas_graph(&h).unwrap() {
            GyarfasGraph::Partial(p) => assert_eq!(p.missing_pairs(), vec![(0, 1)]),
            other => panic!("expected partial graph, got {other:?}"),
        }
        let unpartite = Hypergraph::builder(2).edge(&["a", "b"]).build();
        assert!(matches!(gyarfas_graph(&unpartite), Err(Error::Precondition { .. })));
    }
}
