//! Covering a colour-transitive complete graph by at most `r - t`
//! monochromatic components when every pair carries at least `t` of the `r`
//! colours and `r - 1 >= t > r / 4`.
//!
//! The algorithm follows the inductive argument: return a spanning component
//! if one exists, contract pairs carrying every colour, use an edge with more than `t` colours if there is one, otherwise
//! work from a single edge (`r <= 4t - 2`) or from a triangle whose edges share
//! the most colours (`r = 4t - 1`).

use std::fmt;

use crate::colored::{contract_full_color_classes, ColorSet, ColoredCompleteGraph, ComponentCover, CoverPart};
use crate::error::{Error, Result};

/// Which edge lemma a [`LemmaPlan`] instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeLemma {
    /// Every pair has exactly `t` colours and `t + 1 <= r <= 4t - 2`.
    UniformT,
    /// The chosen pair has `t < |col| < r` colours and `t + 1 <= r <= 4t - 1`.
    RichEdge,
}

/// Whether `J` was taken inside `I = col(xy)` or outside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaBranch {
    /// `J ⊆ I`, `|J| = r - t`; the cover is `C(x, J)`.
    Inside,
    /// `J ∩ I = ∅`; the cover is `C(x, I) ∪ C(x, J) ∪ C(y, J)`.
    Outside,
}

/// The colour sets chosen from one edge `xy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaPlan {
    pub lemma: EdgeLemma,
    pub branch: LemmaBranch,
    pub x: usize,
    pub y: usize,
    pub i: ColorSet,
    pub ell: usize,
    pub j_set: ColorSet,
    pub j: usize,
}

impl LemmaPlan {
    /// Number of components the plan asks for, before deduplication.
    pub fn part_bound(&self) -> usize {
        match self.branch {
            LemmaBranch::Inside => self.j,
            LemmaBranch::Outside => self.ell + 2 * self.j,
        }
    }
}

/// Which of the three triangle cases applies for `r = 4t - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleCase {
    /// `k = 0`: incident pairs share no colour, so `n <= r + 1`; pair up vertices.
    Pairing,
    /// `0 < 3k <= t`.
    FewShared,
    /// `3k > t`.
    ManyShared,
}

/// Colour classes around a triangle `xyz` with `k` colours common to its three edges.
///
/// `k_colors = col(xy) ∩ col(yz) ∩ col(zx)`, `x_colors = col(yz) - K`,
/// `y_colors = col(xz) - K`, `z_colors = col(xy) - K`, and `s_colors` is the
/// rest of the palette. `*_chosen` are the selected subsets and `*_rest` their complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePartition {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub k: usize,
    pub k_colors: ColorSet,
    pub x_colors: ColorSet,
    pub y_colors: ColorSet,
    pub z_colors: ColorSet,
    pub s_colors: ColorSet,
    pub x_chosen: ColorSet,
    pub y_chosen: ColorSet,
    pub z_chosen: ColorSet,
    pub x_rest: ColorSet,
    pub y_rest: ColorSet,
    pub z_rest: ColorSet,
}

impl TrianglePartition {
    fn new(g: &ColoredCompleteGraph, [x, y, z]: [usize; 3]) -> Self {
        let (xy, yz, xz) = (g.col(x, y), g.col(y, z), g.col(x, z));
        let k_colors = xy & yz & xz;
        let x_colors = yz - k_colors;
        let y_colors = xz - k_colors;
        let z_colors = xy - k_colors;
        TrianglePartition {
            x,
            y,
            z,
            k: k_colors.len(),
            k_colors,
            x_colors,
            y_colors,
            z_colors,
            s_colors: ColorSet::full(g.r()) - (xy | yz | xz),
            x_chosen: ColorSet::EMPTY,
            y_chosen: ColorSet::EMPTY,
            z_chosen: ColorSet::EMPTY,
            x_rest: x_colors,
            y_rest: y_colors,
            z_rest: z_colors,
        }
    }

    /// Takes the `count` smallest colours of the enabled sets, filling X′,
    /// then Y′, then Z′.
    fn choose(&mut self, count: usize, [use_x, use_y, use_z]: [bool; 3]) {
        let mut left = count;
        let mut take = |set: ColorSet, enabled: bool| {
            let chosen = if enabled { set.smallest(left.min(set.len())) } else { ColorSet::EMPTY };
            left -= chosen.len();
            (chosen, set - chosen)
        };
        (self.x_chosen, self.x_rest) = take(self.x_colors, use_x);
        (self.y_chosen, self.y_rest) = take(self.y_colors, use_y);
        (self.z_chosen, self.z_rest) = take(self.z_colors, use_z);
        debug_assert_eq!(left, 0, "not enough colours to choose {count}");
    }
}

/// One step of the recursion, recorded for reproducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Base { n: usize },
    /// One colour is connected on all vertices.
    Spanning { color: usize },
    Contracted { from: usize, to: usize },
    Lemma(LemmaPlan),
    Triangle { case: TriangleCase, partition: TrianglePartition },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Base { n } => write!(f, "base case on {n} vertices"),
            Step::Spanning { color } => write!(f, "colour {color} spans all vertices"),
            Step::Contracted { from, to } => {
                write!(f, "contracted full-colour classes: {from} -> {to} vertices")
            }
            Step::Lemma(p) => {
                let name = match p.lemma {
                    EdgeLemma::UniformT => "uniform-t edge lemma",
                    EdgeLemma::RichEdge => "rich edge lemma",
                };
                let branch = match p.branch {
                    LemmaBranch::Inside => "J inside I",
                    LemmaBranch::Outside => "J outside I",
                };
                write!(f, "{name} on ({}, {}), {branch}: I={{{}}}, J={{{}}}", p.x, p.y, p.i, p.j_set)
            }
            Step::Triangle { case, partition: p } => {
                let name = match case {
                    TriangleCase::Pairing => "pairing (k = 0)",
                    TriangleCase::FewShared => "triangle, 0 < 3k <= t",
                    TriangleCase::ManyShared => "triangle, 3k > t",
                };
                write!(f, "{name} on ({}, {}, {}), k = {}", p.x, p.y, p.z, p.k)
            }
        }
    }
}

/// A cover together with the steps that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TCover {
    pub cover: ComponentCover,
    pub trace: Vec<Step>,
}

fn check_parameters(op: &'static str, r: usize, t: usize) -> Result<()> {
    if t == 0 || t + 1 > r {
        return Err(Error::precondition(op, format!("need 1 <= t <= r - 1, got t = {t}, r = {r}")));
    }
    if 4 * t <= r {
        return Err(Error::precondition(op, format!("need t > r/4, got t = {t}, r = {r}")));
    }
    Ok(())
}

fn check_min_colors(op: &'static str, g: &ColoredCompleteGraph, t: usize) -> Result<()> {
    if let Some((u, v, c)) = g.pairs().find(|&(_, _, c)| c.len() < t) {
        return Err(Error::precondition(
            op,
            format!("pair ({u}, {v}) has {} colours {{{c}}}, fewer than t = {t}", c.len()),
        ));
    }
    Ok(())
}

fn check_exactly_t(op: &'static str, g: &ColoredCompleteGraph, t: usize) -> Result<()> {
    if let Some((u, v, c)) = g.pairs().find(|&(_, _, c)| c.len() != t) {
        return Err(Error::precondition(
            op,
            format!("pair ({u}, {v}) has {} colours {{{c}}}, expected exactly t = {t}", c.len()),
        ));
    }
    Ok(())
}

/// Turns an incomplete cover into a diagnostic naming the first missed
/// vertex and its colours towards the anchor vertices.
fn require_cover(
    op: &'static str,
    g: &ColoredCompleteGraph,
    cover: &ComponentCover,
    anchors: &[usize],
    extra: impl Fn(usize) -> String,
) -> Result<()> {
    let Some(&w) = cover.uncovered().first() else {
        return Ok(());
    };
    let mut msg = format!("vertex {w} is not covered;");
    for &a in anchors {
        msg.push_str(&format!(" col({a},{w})={{{}}}", g.col(a, w)));
    }
    msg.push_str(&extra(w));
    msg.push_str(" (input is not transitive or breaks the colour threshold)");
    Err(Error::HypothesisViolated { op, diagnostic: msg })
}

fn plan(g: &ColoredCompleteGraph, t: usize, x: usize, y: usize) -> Result<LemmaPlan> {
    const OP: &str = "lemma_cover";
    let r = g.r();
    if x == y || x >= g.n() || y >= g.n() {
        return Err(Error::precondition(OP, format!("({x}, {y}) is not a pair of distinct vertices")));
    }
    let i = g.col(x, y);
    let ell = i.len();
    let outside = ColorSet::full(r) - i;
    let (lemma, j_set, branch) = if ell == t {
        if t + 1 > r || r + 2 > 4 * t {
            return Err(Error::precondition(OP, format!("uniform-t lemma needs t + 1 <= r <= 4t - 2, got t = {t}, r = {r}")));
        }
        if r <= 2 * t {
            (EdgeLemma::UniformT, i.smallest(r - t), LemmaBranch::Inside)
        } else {
            (EdgeLemma::UniformT, outside.smallest(r / 2 - t), LemmaBranch::Outside)
        }
    } else if t < ell && ell < r {
        if r + 1 > 4 * t {
            return Err(Error::precondition(OP, format!("rich edge lemma needs r <= 4t - 1, got t = {t}, r = {r}")));
        }
        if r <= t + ell {
            (EdgeLemma::RichEdge, i.smallest(r - t), LemmaBranch::Inside)
        } else {
            (EdgeLemma::RichEdge, outside.smallest((r - t - ell) / 2), LemmaBranch::Outside)
        }
    } else {
        return Err(Error::precondition(
            OP,
            format!("pair ({x}, {y}) has {ell} colours; need t = {t} or t < |col| < r = {r}"),
        ));
    };
    let plan = LemmaPlan {
        lemma,
        branch,
        x,
        y,
        i,
        ell,
        j: j_set.len(),
        j_set,
    };
    let ok = match branch {
        LemmaBranch::Inside => j_set.is_subset(i) && plan.j == r - t,
        LemmaBranch::Outside => (j_set & i).is_empty() && plan.part_bound() <= r - t,
    };
    if !ok {
        return Err(Error::InvariantViolated(format!("lemma plan arithmetic: {plan:?}")));
    }
    Ok(plan)
}

/// Covers `g` from the edge `xy` with one of the two edge lemmas, chosen by `|col(xy)|`.
pub fn lemma_cover(g: &ColoredCompleteGraph, t: usize, x: usize, y: usize) -> Result<(ComponentCover, LemmaPlan)> {
    let plan = plan(g, t, x, y)?;
    match plan.lemma {
        EdgeLemma::UniformT => check_exactly_t("lemma_cover", g, t)?,
        EdgeLemma::RichEdge => check_min_colors("lemma_cover", g, t)?,
    }
    let cover = match plan.branch {
        LemmaBranch::Inside => g.components_of(x, plan.j_set)?,
        LemmaBranch::Outside => g
            .components_of(x, plan.i)?
            .union(&g.components_of(x, plan.j_set)?)
            .union(&g.components_of(y, plan.j_set)?),
    };
    require_cover("lemma_cover", g, &cover, &[x, y], |_| String::new())?;
    Ok((cover, plan))
}

/// Largest number `k` of colours shared by all three edges of a triangle,
/// with the lexicographically smallest triangle attaining it. `None` if `n < 3`.
pub fn max_common_triangle(g: &ColoredCompleteGraph) -> Option<(usize, [usize; 3])> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    // No triangle can share more colours than the richest pair carries.
    let ceiling = g.pairs().map(|(_, _, c)| c.len()).max().unwrap_or(0);
    let mut best = (0, [0, 1, 2]);
    let mut found = false;
    for x in 0..n {
        for y in x + 1..n {
            let xy = g.col(x, y);
            if found && xy.len() <= best.0 {
                continue;
            }
            for z in y + 1..n {
                let k = (xy & g.col(y, z) & g.col(x, z)).len();
                if !found || k > best.0 {
                    best = (k, [x, y, z]);
                    found = true;
                    if k == ceiling {
                        return Some(best);
                    }
                }
            }
        }
    }
    Some(best)
}

/// Plain triple loop over colour membership, for cross-checking.
pub fn max_common_triangle_naive(g: &ColoredCompleteGraph) -> Option<(usize, [usize; 3])> {
    let n = g.n();
    let mut best: Option<(usize, [usize; 3])> = None;
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let k = (1..=g.r())
                    .filter(|&c| g.col(x, y).contains(c) && g.col(y, z).contains(c) && g.col(x, z).contains(c))
                    .count();
                if best.is_none_or(|(b, _)| k > b) {
                    best = Some((k, [x, y, z]));
                }
            }
        }
    }
    best
}

/// A triangle-case cover and the colour bookkeeping behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleOutcome {
    pub case: TriangleCase,
    pub partition: TrianglePartition,
    pub cover: ComponentCover,
}

/// Covers `g` when `r = 4t - 1` and every pair has exactly `t` colours, from a
/// triangle `xyz` whose edges share `k` colours, `k` being the maximum over all triangles.
pub fn triangle_case_cover(g: &ColoredCompleteGraph, t: usize, k: usize, xyz: [usize; 3]) -> Result<TriangleOutcome> {
    const OP: &str = "triangle_case_cover";
    let (n, r) = (g.n(), g.r());
    if t == 0 || r + 1 != 4 * t {
        return Err(Error::precondition(OP, format!("need r = 4t - 1, got t = {t}, r = {r}")));
    }
    check_exactly_t(OP, g, t)?;
    let [x, y, z] = xyz;
    if x == y || y == z || x == z || xyz.iter().any(|&v| v >= n) {
        return Err(Error::precondition(OP, format!("{xyz:?} is not a triangle")));
    }
    let mut partition = TrianglePartition::new(g, xyz);
    if partition.k != k {
        return Err(Error::precondition(
            OP,
            format!("triangle {xyz:?} shares {} colours, not k = {k}", partition.k),
        ));
    }
    let (case, cover) = if k == 0 {
        if n > r + 1 {
            return Err(Error::HypothesisViolated {
                op: OP,
                diagnostic: format!("no triangle shares a colour, yet n = {n} > r + 1 = {}", r + 1),
            });
        }
        let mut parts = Vec::new();
        let index = g.components();
        for pair in (0..n).collect::<Vec<_>>().chunks(2) {
            let (u, c) = match *pair {
                [u, v] => (u, g.col(u, v).min().expect("complete graph")),
                [u] => (u, g.col(u - 1, u).min().expect("complete graph")),
                _ => unreachable!(),
            };
            parts.push(CoverPart {
                color: c,
                vertices: index.component_of(u, c).to_vec(),
            });
        }
        (TriangleCase::Pairing, ComponentCover::new(n, parts))
    } else if 3 * k <= t {
        partition.choose(t + k - 1, [false, true, true]);
        let p = &partition;
        let cover = g
            .components_of(x, p.k_colors | p.y_colors | p.z_colors)?
            .union(&g.components_of(y, p.y_chosen)?)
            .union(&g.components_of(z, p.z_chosen)?);
        (TriangleCase::FewShared, cover)
    } else {
        partition.choose((2 * k - 1).min(3 * t - 3 * k), [true, true, true]);
        let p = &partition;
        let cover = g
            .components_of(x, p.k_colors | p.x_chosen | p.y_colors | p.z_colors)?
            .union(&g.components_of(y, p.y_chosen)?)
            .union(&g.components_of(z, p.x_colors | p.z_chosen)?);
        (TriangleCase::ManyShared, cover)
    };
    let extra = |w: usize| {
        let shared = (g.col(y, w) & g.col(z, w)).len();
        if shared > k {
            format!("; |col({y},{w}) ∩ col({z},{w})| = {shared} > k = {k}, so k was not maximal")
        } else {
            String::new()
        }
    };
    if case != TriangleCase::Pairing {
        require_cover(OP, g, &cover, &xyz, extra)?;
    } else if !cover.covers_all() {
        return Err(Error::InvariantViolated("pairing missed a vertex".into()));
    }
    Ok(TriangleOutcome { case, partition, cover })
}

/// Covers `g` by at most `r - t` monochromatic components.
///
/// Requires `g` colour-transitive, every pair with at least `t` colours and
/// `r - 1 >= t > r / 4`.
pub fn cover_t(g: &ColoredCompleteGraph, t: usize) -> Result<TCover> {
    const OP: &str = "cover_t";
    check_parameters(OP, g.r(), t)?;
    check_min_colors(OP, g, t)?;
    g.check_transitive()?;
    let mut trace = Vec::new();
    let cover = solve(g, t, &mut trace)?;
    if !cover.covers_all() {
        return Err(Error::HypothesisViolated {
            op: OP,
            diagnostic: format!("cover incomplete, missing {:?}", cover.uncovered()),
        });
    }
    if cover.len() > g.r() - t {
        return Err(Error::InvariantViolated(format!(
            "cover has {} parts, more than r - t = {}",
            cover.len(),
            g.r() - t
        )));
    }
    if !cover.parts_are_components_of(g) {
        return Err(Error::InvariantViolated("cover part is not a monochromatic component".into()));
    }
    Ok(TCover { cover, trace })
}

fn solve(g: &ColoredCompleteGraph, t: usize, trace: &mut Vec<Step>) -> Result<ComponentCover> {
    let (n, r) = (g.n(), g.r());
    if n <= 2 {
        trace.push(Step::Base { n });
        return match n {
            0 => Ok(ComponentCover::new(0, Vec::new())),
            1 => g.components_of(0, ColorSet::single(1)),
            _ => g.components_of(0, ColorSet::single(g.col(0, 1).min().expect("complete graph"))),
        };
    }
    if let Some(color) = (1..=r).find(|&c| g.components().k(c) == 1) {
        trace.push(Step::Spanning { color });
        return g.components_of(0, ColorSet::single(color));
    }
    let full = ColorSet::full(r);
    if g.pairs().any(|(_, _, c)| c == full) {
        let contraction = contract_full_color_classes(g)?;
        trace.push(Step::Contracted {
            from: n,
            to: contraction.graph.n(),
        });
        let sub = solve(&contraction.graph, t, trace)?;
        return Ok(contraction.lift(&sub));
    }
    if let Some((x, y, _)) = g.pairs().find(|&(_, _, c)| c.len() > t) {
        let (cover, plan) = lemma_cover(g, t, x, y)?;
        trace.push(Step::Lemma(plan));
        return Ok(cover);
    }
    if r + 2 <= 4 * t {
        let (cover, plan) = lemma_cover(g, t, 0, 1)?;
        trace.push(Step::Lemma(plan));
        return Ok(cover);
    }
    let (k, xyz) = max_common_triangle(g).expect("n >= 3");
    let out = triangle_case_cover(g, t, k, xyz)?;
    trace.push(Step::Triangle {
        case: out.case,
        partition: out.partition,
    });
    Ok(out.cover)
}
