//! Covering many vertices by `r - 1` monochromatic components of pairwise
//! distinct colours that share a vertex, and recognizing the graphs where no
//! choice does better than `(1 - (r-2)/(r-1)^2) n`: blowups of affine planes.

use num_rational::Ratio;

use crate::colored::{ColorSet, ColoredCompleteGraph, ComponentCover};
use crate::error::{Error, Result};
use crate::oracles::{max_partial_cover_distinct, OracleLimits};
use crate::planes::{verify_affine_axioms, AffinePlane, BlowupMap, IncidenceStructure};

/// `(1 - (r-2)/(r-1)^2) n` as an exact fraction.
pub fn coverage_bound_exact(n: usize, r: usize) -> Ratio<i128> {
    assert!(r >= 2, "the bound needs r >= 2");
    let (n, r) = (n as i128, r as i128);
    (Ratio::from_integer(1) - Ratio::new(r - 2, (r - 1) * (r - 1))) * Ratio::from_integer(n)
}

/// The least integer at or above [`coverage_bound_exact`].
pub fn coverage_bound(n: usize, r: usize) -> usize {
    coverage_bound_exact(n, r).ceil().to_integer() as usize
}

/// Degree and component counts per colour.
///
/// `d[v][i-1]` counts neighbours `u` with `col(uv) = {i}`; `m[i-1]` counts
/// pairs coloured exactly `{i}`, `big_m[i-1]` pairs containing `i`;
/// `k[i-1]` and `gammas[i-1]` are the number and sizes of colour-`i`
/// components; `multi_edge_count` counts pairs with at least two colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorStats {
    pub n: usize,
    pub r: usize,
    pub d: Vec<Vec<usize>>,
    pub m: Vec<usize>,
    pub big_m: Vec<usize>,
    pub k: Vec<usize>,
    pub gammas: Vec<Vec<usize>>,
    pub multi_edge_count: usize,
}

pub fn color_stats(g: &ColoredCompleteGraph) -> ColorStats {
    let (n, r) = (g.n(), g.r());
    let mut d = vec![vec![0; r]; n];
    let mut m = vec![0; r];
    let mut big_m = vec![0; r];
    let mut multi_edge_count = 0;
    for (u, v, c) in g.pairs() {
        if c.len() == 1 {
            let i = c.min().unwrap();
            d[u][i - 1] += 1;
            d[v][i - 1] += 1;
            m[i - 1] += 1;
        } else {
            multi_edge_count += 1;
        }
        for i in c.iter() {
            big_m[i - 1] += 1;
        }
    }
    let index = g.components();
    ColorStats {
        n,
        r,
        d,
        m,
        big_m,
        k: (1..=r).map(|c| index.k(c)).collect(),
        gammas: (1..=r).map(|c| index.gammas(c)).collect(),
        multi_edge_count,
    }
}

impl ColorStats {
    /// Checks the counting identities and, for transitive graphs, the lower
    /// bound `M_i >= n^2/(2 k_i) - n/2`.
    pub fn check(&self, transitive: bool) -> Result<()> {
        let n = self.n;
        let pairs = n * n.saturating_sub(1) / 2;
        for i in 0..self.r {
            let degree_sum: usize = self.d.iter().map(|row| row[i]).sum();
            if degree_sum != 2 * self.m[i] {
                return Err(Error::InvariantViolated(format!(
                    "colour {}: sum of d_i(v) = {degree_sum}, 2 m_i = {}",
                    i + 1,
                    2 * self.m[i]
                )));
            }
            if self.m[i] > self.big_m[i] {
                return Err(Error::InvariantViolated(format!("colour {}: m_i > M_i", i + 1)));
            }
            if transitive && n > 0 {
                let lower = Ratio::new((n * n) as i128, 2 * self.k[i] as i128) - Ratio::new(n as i128, 2);
                if Ratio::from_integer(self.big_m[i] as i128) < lower {
                    return Err(Error::InvariantViolated(format!(
                        "colour {}: M_i = {} below n^2/(2k_i) - n/2 = {lower}",
                        i + 1,
                        self.big_m[i]
                    )));
                }
                let from_gammas: usize = self.gammas[i].iter().map(|g| g * (g - 1) / 2).sum();
                if from_gammas != self.big_m[i] {
                    return Err(Error::InvariantViolated(format!(
                        "colour {}: M_i = {} but components hold {from_gammas} pairs",
                        i + 1,
                        self.big_m[i]
                    )));
                }
            }
        }
        let single: usize = self.m.iter().sum();
        if single + self.multi_edge_count != pairs {
            return Err(Error::InvariantViolated(format!(
                "sum of m_i = {single}, multi-coloured pairs = {}, pairs = {pairs}",
                self.multi_edge_count
            )));
        }
        Ok(())
    }
}

/// `Σ_{C ∈ C_i, C' ∈ C_j} |C - C'|` over components of colours `i` and `j`.
pub fn component_difference_sum(g: &ColoredCompleteGraph, i: usize, j: usize) -> usize {
    let index = g.components();
    let mut total = 0;
    for c in index.components(i) {
        for target in 0..index.k(j) {
            total += c.iter().filter(|&&v| index.label(v, j) != target).count();
        }
    }
    total
}

/// Checks `Σ |C - C'| = (k_j - 1) n` for every ordered pair of distinct colours.
pub fn check_difference_identity(g: &ColoredCompleteGraph) -> Result<()> {
    let index = g.components();
    for i in 1..=g.r() {
        for j in 1..=g.r() {
            if i == j {
                continue;
            }
            let lhs = component_difference_sum(g, i, j);
            let rhs = (index.k(j) - 1) * g.n();
            if lhs != rhs {
                return Err(Error::InvariantViolated(format!(
                    "colours ({i}, {j}): sum of |C - C'| = {lhs}, (k_j - 1) n = {rhs}"
                )));
            }
        }
    }
    Ok(())
}

/// How [`partial_cover_distinct`] found its cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartialStrategy {
    /// Vertex `v` has no edge of colour `omitted`; everything is covered.
    NotSpanning,
    /// Two colours: one of them is connected.
    TwoColors,
    /// Colour `spanning` has a single component.
    SpanningColor { spanning: usize },
    /// Smallest `C - C'` over components of a colour with the most
    /// components and one with the fewest.
    ComponentPair { many: usize, few: usize },
    /// Vertex and colour with the fewest neighbours joined by that colour alone.
    FewestPrivate { d: usize },
}

/// Result of [`partial_cover_distinct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCover {
    pub cover: ComponentCover,
    pub omitted: usize,
    pub strategy: PartialStrategy,
    pub bound: usize,
}

fn all_but(r: usize, omitted: usize) -> ColorSet {
    ColorSet::full(r) - ColorSet::single(omitted)
}

/// `r - 1` components of pairwise distinct colours through one vertex,
/// covering at least `⌈(1 - (r-2)/(r-1)^2) n⌉` vertices.
pub fn partial_cover_distinct(g: &ColoredCompleteGraph) -> Result<PartialCover> {
    const OP: &str = "partial_cover_distinct";
    let (n, r) = (g.n(), g.r());
    if r < 2 {
        return Err(Error::precondition(OP, format!("needs r >= 2, got {r}")));
    }
    if n == 0 {
        return Err(Error::precondition(OP, "graph has no vertices"));
    }
    g.check_transitive()?;
    let bound = coverage_bound(n, r);
    let finish = |x: usize, omitted: usize, strategy: PartialStrategy| -> Result<PartialCover> {
        let cover = g.components_of(x, all_but(r, omitted))?;
        Ok(PartialCover {
            cover,
            omitted,
            strategy,
            bound,
        })
    };
    let out = 'found: {
        // A vertex without some colour: the other colours at it reach everything.
        for omitted in 1..=r {
            for v in 0..n {
                if (0..n).all(|u| u == v || !g.col(u, v).contains(omitted)) {
                    break 'found finish(v, omitted, PartialStrategy::NotSpanning)?;
                }
            }
        }
        let index = g.components();
        if r == 2 {
            // If colour 1 is disconnected, every pair across its components
            // carries colour 2 only, so colour 2 is connected.
            let spanning = if index.k(1) == 1 { 1 } else { 2 };
            break 'found finish(0, 3 - spanning, PartialStrategy::TwoColors)?;
        }
        if let Some(spanning) = (1..=r).find(|&c| index.k(c) == 1) {
            let omitted = (1..=r).find(|&c| c != spanning).unwrap();
            break 'found finish(0, omitted, PartialStrategy::SpanningColor { spanning })?;
        }
        let pair = component_pair_candidate(g)?;
        let private = fewest_private_candidate(g)?;
        if pair.cover.covered_count() >= private.cover.covered_count() {
            pair
        } else {
            private
        }
    };
    let cover = &out.cover;
    let distinct = cover.len() == r - 1 && {
        let mut colors = cover.colors();
        colors.dedup();
        colors.len() == r - 1
    };
    if !distinct || cover.common_vertex().is_none() || cover.covered_count() < bound {
        return Err(Error::InvariantViolated(format!(
            "{OP}: {} parts, common vertex {:?}, {} covered, bound {bound}",
            cover.len(),
            cover.common_vertex(),
            cover.covered_count()
        )));
    }
    Ok(out)
}

/// Colour `many` maximizes `k`, colour `few` minimizes it among the others
/// (smallest index on ties); take `C ∈ C_many`, `C' ∈ C_few` minimizing
/// `|C - C'|`, a vertex `x ∈ C ∩ C'`, and `C(x, [r] - {many})`.
fn component_pair_candidate(g: &ColoredCompleteGraph) -> Result<PartialCover> {
    let (n, r) = (g.n(), g.r());
    let index = g.components();
    let many = (1..=r).fold(1, |best, c| if index.k(c) > index.k(best) { c } else { best });
    let few = (1..=r)
        .filter(|&c| c != many)
        .fold(None, |best: Option<usize>, c| match best {
            Some(b) if index.k(b) <= index.k(c) => Some(b),
            _ => Some(c),
        })
        .expect("r >= 2");
    let mut best: Option<(usize, usize, usize)> = None;
    for (a, c) in index.components(many).iter().enumerate() {
        for b in 0..index.k(few) {
            let diff = c.iter().filter(|&&v| index.label(v, few) != b).count();
            if best.is_none_or(|(d, _, _)| diff < d) {
                best = Some((diff, a, b));
            }
        }
    }
    let (_, a, b) = best.expect("every colour has a component");
    let c = &index.components(many)[a];
    let Some(&x) = c.iter().find(|&&v| index.label(v, few) == b) else {
        return Err(Error::InvariantViolated(format!(
            "minimizing pair of colours {many} and {few} is disjoint"
        )));
    };
    let cover = g.components_of(x, all_but(r, many))?;
    Ok(PartialCover {
        cover,
        omitted: many,
        strategy: PartialStrategy::ComponentPair { many, few },
        bound: coverage_bound(n, r),
    })
}

/// Minimizes `d_i(v)` over `(d, i, v)` and returns `C(v, [r] - {i})`.
fn fewest_private_candidate(g: &ColoredCompleteGraph) -> Result<PartialCover> {
    let (n, r) = (g.n(), g.r());
    let stats = color_stats(g);
    let (d, i, v) = (1..=r)
        .flat_map(|i| (0..n).map(move |v| (i, v)))
        .map(|(i, v)| (stats.d[v][i - 1], i, v))
        .min()
        .expect("n >= 1");
    let cover = g.components_of(v, all_but(r, i))?;
    Ok(PartialCover {
        cover,
        omitted: i,
        strategy: PartialStrategy::FewestPrivate { d },
        bound: coverage_bound(n, r),
    })
}

/// Evidence that a graph is a blowup of an affine plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupWitness {
    pub plane: AffinePlane,
    pub b: usize,
    pub map: BlowupMap,
}

/// Recovers the affine plane, `b` and the point map if `g` is the blowup of an
/// affine plane of order `r - 1`, colours being parallel classes.
///
/// Points are the classes of vertices joined by every colour, lines are the
/// monochromatic components. Returns `None` unless every colour has `r - 1`
/// components, every pair carries one colour or all of them, `(r-1)^2` divides
/// `n`, components of different colours meet in exactly `n/(r-1)^2` vertices,
/// and the resulting incidence structure satisfies the affine axioms.
pub fn is_affine_blowup(g: &ColoredCompleteGraph) -> Option<BlowupWitness> {
    let (n, r) = (g.n(), g.r());
    if r < 3 || n == 0 || !g.is_transitive() {
        return None;
    }
    let q = r - 1;
    let index = g.components();
    if (1..=r).any(|c| index.k(c) != q) {
        return None;
    }
    let full = ColorSet::full(r);
    if g.pairs().any(|(_, _, c)| c.len() != 1 && c != full) {
        return None;
    }
    if n % (q * q) != 0 {
        return None;
    }
    let b = n / (q * q);
    for i in 1..=r {
        for j in i + 1..=r {
            for a in 0..q {
                for c in 0..q {
                    let meet = index.components(i)[a]
                        .iter()
                        .filter(|&&v| index.label(v, j) == c)
                        .count();
                    if meet != b {
                        return None;
                    }
                }
            }
        }
    }
    // Points: classes of the "all colours" relation, ordered by smallest vertex.
    let mut point_of = vec![usize::MAX; n];
    let mut points: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if point_of[v] == usize::MAX {
            let class: Vec<usize> = (v..n).filter(|&u| u == v || g.col(u, v) == full).collect();
            for &u in &class {
                point_of[u] = points.len();
            }
            points.push(class);
        }
    }
    let map = BlowupMap { b, point_of };
    if !map.is_valid(points.len()) || points.len() != q * q {
        return None;
    }
    let mut lines = Vec::new();
    let mut classes = Vec::new();
    for c in 1..=r {
        let mut class = Vec::new();
        for comp in index.components(c) {
            let mut pts: Vec<usize> = comp.iter().map(|&v| map.point_of[v]).collect();
            pts.sort_unstable();
            pts.dedup();
            class.push(lines.len());
            lines.push(pts);
        }
        classes.push(class);
    }
    let structure = IncidenceStructure {
        point_count: points.len(),
        lines: lines.clone(),
    };
    if !verify_affine_axioms(&structure, q).is_empty() {
        return None;
    }
    let labels = points.iter().map(|class| format!("p{}", class[0])).collect();
    let plane = AffinePlane::from_parts(q, labels, lines, classes).ok()?;
    Some(BlowupWitness { plane, b, map })
}

/// Whether the partial-cover bound is attained, and by what structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharpnessStatus {
    Sharp,
    NotSharp,
    /// The bound is not an integer, or `r < 3`; no structural statement applies.
    OutsideCharacterization,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessReport {
    pub status: SharpnessStatus,
    pub is_sharp: bool,
    pub bound: usize,
    pub bound_exact: Ratio<i128>,
    pub oracle_max: usize,
    pub best: ComponentCover,
    pub witness: Option<BlowupWitness>,
}

/// Compares the exact optimum with the bound and with blowup recognition.
///
/// A sharp graph without a blowup witness, or a witness on a graph that beats
/// the bound, is reported as [`Error::CharacterizationViolated`].
pub fn check_sharpness(g: &ColoredCompleteGraph, limits: &OracleLimits) -> Result<SharpnessReport> {
    let (n, r) = (g.n(), g.r());
    if r < 2 {
        return Err(Error::precondition("check_sharpness", format!("needs r >= 2, got {r}")));
    }
    g.check_transitive()?;
    let best = max_partial_cover_distinct(g, limits)?;
    let oracle_max = best.covered_count();
    let bound_exact = coverage_bound_exact(n, r);
    let bound = coverage_bound(n, r);
    if oracle_max < bound {
        return Err(Error::InvariantViolated(format!(
            "best distinct-colour cover reaches {oracle_max} < bound {bound}"
        )));
    }
    let witness = is_affine_blowup(g);
    let in_scope = r >= 3 && bound_exact.is_integer();
    let is_sharp = in_scope && oracle_max == bound;
    if is_sharp && witness.is_none() {
        return Err(Error::CharacterizationViolated(format!(
            "optimum {oracle_max} equals the bound but the graph is not a recognized blowup"
        )));
    }
    if !is_sharp && witness.is_some() {
        return Err(Error::CharacterizationViolated(format!(
            "blowup recognized but optimum {oracle_max} differs from bound {bound_exact}"
        )));
    }
    let status = if !in_scope {
        SharpnessStatus::OutsideCharacterization
    } else if is_sharp {
        SharpnessStatus::Sharp
    } else {
        SharpnessStatus::NotSharp
    };
    Ok(SharpnessReport {
        status,
        is_sharp,
        bound,
        bound_exact,
        oracle_max,
        best,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planes::{affine_plane, blowup_graph};

    #[test]
    fn bound_arithmetic() {
        assert_eq!(coverage_bound(4, 3), 3);
        assert_eq!(coverage_bound(12, 3), 9);
        assert_eq!(coverage_bound(5, 3), 4);
        assert_eq!(coverage_bound(7, 2), 7);
        assert_eq!(coverage_bound_exact(9, 4), Ratio::new(21, 3));
        assert!(!coverage_bound_exact(5, 3).is_integer());
    }

    #[test]
    fn blowup_of_fano_affine_part() {
        let g = blowup_graph(&affine_plane(2).unwrap(), 1).unwrap();
        let out = partial_cover_distinct(&g).unwrap();
        assert_eq!(out.cover.covered_count(), 3);
        assert_eq!(out.cover.len(), 2);
        assert!(out.cover.common_vertex().is_some());
    }

    #[test]
    fn stats_on_blowup() {
        let g = blowup_graph(&affine_plane(2).unwrap(), 2).unwrap();
        let s = color_stats(&g);
        assert_eq!(s.k, vec![2, 2, 2]);
        assert_eq!(s.gammas, vec![vec![4, 4]; 3]);
        assert_eq!(s.big_m, vec![12, 12, 12]);
        s.check(true).unwrap();
        check_difference_identity(&g).unwrap();
    }

    #[test]
    fn single_color_stats() {
        let g = ColoredCompleteGraph::from_fn(5, 2, |_, _| ColorSet::single(1)).unwrap();
        let s = color_stats(&g);
        assert_eq!((s.m[0], s.big_m[0], s.multi_edge_count), (10, 10, 0));
        s.check(true).unwrap();
    }

    #[test]
    fn not_spanning_covers_everything() {
        // Vertex 0 sees only colour 1; r = 3.
        let g = ColoredCompleteGraph::from_fn(4, 3, |u, _| {
            if u == 0 {
                ColorSet::single(1)
            } else {
                [1, 3].into_iter().collect()
            }
        })
        .unwrap();
        let out = partial_cover_distinct(&g).unwrap();
        assert_eq!(out.strategy, PartialStrategy::NotSpanning);
        assert_eq!(out.cover.covered_count(), 4);
    }

    #[test]
    fn two_colors_cover_all() {
        let g = ColoredCompleteGraph::from_fn(6, 2, |u, v| {
            if u % 3 == v % 3 {
                ColorSet::full(2)
            } else {
                ColorSet::single(2)
            }
        })
        .unwrap();
        assert!(g.is_transitive());
        let out = partial_cover_distinct(&g).unwrap();
        assert_eq!(out.cover.len(), 1);
        assert_eq!(out.cover.covered_count(), 6);
    }

    #[test]
    fn sharp_blowup_is_recognized() {
        let plane = affine_plane(2).unwrap();
        let g = blowup_graph(&plane, 3).unwrap();
        let report = check_sharpness(&g, &OracleLimits::default()).unwrap();
        assert_eq!(report.bound, 9);
        assert_eq!(report.oracle_max, 9);
        assert!(report.is_sharp);
        let w = report.witness.unwrap();
        assert_eq!(w.b, 3);
        assert!(w.plane.structure().to_hypergraph().is_isomorphic(&plane.structure().to_hypergraph()));
    }

    #[test]
    fn non_integral_bound_is_outside() {
        // n = 5, r = 3: bound 15/4.
        let g = ColoredCompleteGraph::from_fn(5, 3, |u, v| if u / 2 == v / 2 { ColorSet::full(3) } else { ColorSet::single(1) })
            .unwrap();
        let report = check_sharpness(&g, &OracleLimits::default()).unwrap();
        assert_eq!(report.status, SharpnessStatus::OutsideCharacterization);
        assert!(!report.is_sharp);
    }
}
