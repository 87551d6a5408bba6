//! Affine planes, truncated projective planes and affine-plane blowups.
//!
//! Planes are built over GF(q) coordinates. The affine plane AG(2, q) has
//! points `(x,y)` and lines `y = m x + c` plus the verticals `x = c`; its
//! parallel classes are coloured `1..=q` by slope and `q + 1` for the
//! verticals.

mod field;

use crate::colored::{ColorSet, ColoredCompleteGraph};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, ValidationReport};
use crate::oracles::max_independent_set;

pub use field::{GaloisField, SUPPORTED_ORDERS};

/// Points `0..point_count` and lines given as sorted point lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    pub point_count: usize,
    pub lines: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Hypergraph view: points become vertices, lines become edges.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let r = self.lines.iter().map(Vec::len).max().unwrap_or(0);
        Hypergraph::from_indexed(r, self.point_count, self.lines.clone(), None)
    }
}

/// An affine plane together with its partition of lines into parallel classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePlane {
    order: usize,
    point_labels: Vec<String>,
    structure: IncidenceStructure,
    parallel_classes: Vec<Vec<usize>>,
    line_color: Vec<usize>,
}

impl AffinePlane {
    /// Assembles a plane from its parts and checks every axiom. Parallel
    /// class `i` gets colour `i + 1`.
    pub fn from_parts(
        order: usize,
        point_labels: Vec<String>,
        lines: Vec<Vec<usize>>,
        parallel_classes: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let structure = IncidenceStructure {
            point_count: point_labels.len(),
            lines,
        };
        let report = verify_affine_axioms(&structure, order);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvariantViolated(format!("not an affine plane: {v:?}")));
        }
        let mut line_color = vec![0; structure.lines.len()];
        for (i, class) in parallel_classes.iter().enumerate() {
            for &l in class {
                line_color[l] = i + 1;
            }
        }
        let classes_ok = parallel_classes.len() == order + 1
            && line_color.iter().all(|&c| c > 0)
            && parallel_classes.iter().all(|class| {
                class.iter().enumerate().all(|(i, &a)| {
                    class[i + 1..].iter().all(|&b| {
                        crate::hypergraph::intersection_size(&structure.lines[a], &structure.lines[b]) == 0
                    })
                })
            });
        if !classes_ok {
            return Err(Error::InvariantViolated(
                "parallel classes do not partition the lines into disjoint families".into(),
            ));
        }
        Ok(AffinePlane {
            order,
            point_labels,
            structure,
            parallel_classes,
            line_color,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn point_count(&self) -> usize {
        self.structure.point_count
    }

    pub fn point_label(&self, p: usize) -> &str {
        &self.point_labels[p]
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.structure.lines
    }

    pub fn structure(&self) -> &IncidenceStructure {
        &self.structure
    }

    pub fn parallel_classes(&self) -> &[Vec<usize>] {
        &self.parallel_classes
    }

    /// Colour (1-based parallel class) of a line.
    pub fn line_color(&self, line: usize) -> usize {
        self.line_color[line]
    }
}

/// AG(2, q) over GF(q).
pub fn affine_plane(q: usize) -> Result<AffinePlane> {
    let f = GaloisField::new(q)?;
    let point = |x: usize, y: usize| x * q + y;
    let labels = (0..q * q).map(|p| format!("({},{})", p / q, p % q)).collect();
    let mut lines = Vec::with_capacity(q * q + q);
    let mut classes = Vec::with_capacity(q + 1);
    for m in 0..q {
        let mut class = Vec::with_capacity(q);
        for c in 0..q {
            let mut line: Vec<usize> = (0..q).map(|x| point(x, f.add(f.mul(m, x), c))).collect();
            line.sort_unstable();
            class.push(lines.len());
            lines.push(line);
        }
        classes.push(class);
    }
    let mut verticals = Vec::with_capacity(q);
    for c in 0..q {
        verticals.push(lines.len());
        lines.push((0..q).map(|y| point(c, y)).collect());
    }
    classes.push(verticals);
    AffinePlane::from_parts(q, labels, lines, classes)
}

/// Normalized homogeneous coordinates: first nonzero entry is 1.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// PG(2, q) with the point `(0:1:0)` and its `q + 1` lines removed.
///
/// Vertices are the remaining points, edges the remaining `q^2` lines, and
/// class `i` holds the remaining points of the `i`-th removed line.
pub fn truncated_projective_plane(q: usize) -> Result<Hypergraph> {
    let f = GaloisField::new(q)?;
    let all = projective_points(q);
    let removed = [0, 1, 0];
    let incident = |line: &[usize; 3], p: &[usize; 3]| {
        let dot = (0..3).fold(0, |acc, i| f.add(acc, f.mul(line[i], p[i])));
        dot == 0
    };
    let points: Vec<[usize; 3]> = all.iter().copied().filter(|p| *p != removed).collect();
    let names = points
        .iter()
        .map(|p| format!("({}:{}:{})", p[0], p[1], p[2]))
        .collect();
    // Lines use the same normalized coordinates as points.
    let (through, kept): (Vec<[usize; 3]>, Vec<[usize; 3]>) =
        all.iter().copied().partition(|l| incident(l, &removed));
    let members = |line: &[usize; 3]| -> Vec<usize> {
        (0..points.len()).filter(|&i| incident(line, &points[i])).collect()
    };
    let edges = kept.iter().map(members).collect();
    let classes = through.iter().map(members).collect();
    Ok(Hypergraph::from_named(q + 1, names, edges, Some(classes)))
}

/// The point of each graph vertex in a blowup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupMap {
    pub b: usize,
    pub point_of: Vec<usize>,
}

impl BlowupMap {
    /// Vertices `p*b .. (p+1)*b` are the clones of point `p`.
    pub fn uniform(points: usize, b: usize) -> Self {
        BlowupMap {
            b,
            point_of: (0..points * b).map(|v| v / b).collect(),
        }
    }

    /// Every point has exactly `b` preimages.
    pub fn is_valid(&self, points: usize) -> bool {
        let mut count = vec![0; points];
        for &p in &self.point_of {
            if p >= points {
                return false;
            }
            count[p] += 1;
        }
        self.b > 0 && count.iter().all(|&c| c == self.b)
    }
}

/// Blowup with `b` clones per point: colour `i` is on `uv` iff the points of
/// `u` and `v` share a line of colour `i`. Clones of one point get every colour.
pub fn blowup_graph(plane: &AffinePlane, b: usize) -> Result<ColoredCompleteGraph> {
    if b == 0 {
        return Err(Error::precondition("blowup_graph", "b must be positive"));
    }
    blowup_graph_with_map(plane, &BlowupMap::uniform(plane.point_count(), b))
}

pub fn blowup_graph_with_map(plane: &AffinePlane, map: &BlowupMap) -> Result<ColoredCompleteGraph> {
    if !map.is_valid(plane.point_count()) {
        return Err(Error::precondition(
            "blowup_graph",
            "every point needs exactly b preimages",
        ));
    }
    let pts = plane.point_count();
    let mut shared = vec![ColorSet::EMPTY; pts * pts];
    for (l, line) in plane.lines().iter().enumerate() {
        let c = ColorSet::single(plane.line_color(l));
        for &p in line {
            for &p2 in line {
                shared[p * pts + p2] = shared[p * pts + p2] | c;
            }
        }
    }
    ColoredCompleteGraph::from_fn(map.point_of.len(), plane.order() + 1, |u, v| {
        shared[map.point_of[u] * pts + map.point_of[v]]
    })
}

/// A failed affine-plane axiom with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// (i) the two points lie on `lines` common lines instead of one.
    PairNotOnOneLine { a: usize, b: usize, lines: usize },
    /// (ii) `count` lines through `point` miss `line`, instead of one.
    ParallelNotUnique { point: usize, line: usize, count: usize },
    /// (iii)
    ShortLine { line: usize, size: usize },
    /// (iv)
    PointOnFewLines { point: usize, lines: usize },
    /// (v) the largest family of pairwise disjoint lines has the wrong size.
    ParallelCount { max: usize, expected: usize },
    /// (v) could not be decided: too many lines for the exact search and (ii) fails.
    ParallelCountUnchecked,
}

/// Checks the five affine-plane axioms for order `order` exhaustively.
pub fn verify_affine_axioms(s: &IncidenceStructure, order: usize) -> ValidationReport<AxiomViolation> {
    let mut report = ValidationReport::default();
    let n = s.point_count;
    let on_line: Vec<Vec<bool>> = s
        .lines
        .iter()
        .map(|l| {
            let mut m = vec![false; n];
            for &p in l {
                m[p] = true;
            }
            m
        })
        .collect();
    for a in 0..n {
        for b in a + 1..n {
            let lines = on_line.iter().filter(|m| m[a] && m[b]).count();
            if lines != 1 {
                report
                    .violations
                    .push(AxiomViolation::PairNotOnOneLine { a, b, lines });
            }
        }
    }
    let disjoint = |x: usize, y: usize| s.lines[x].iter().all(|&p| !on_line[y][p]);
    let mut playfair_ok = true;
    for point in 0..n {
        for (line, members) in on_line.iter().enumerate() {
            if members[point] {
                continue;
            }
            let count = (0..s.lines.len())
                .filter(|&l| on_line[l][point] && disjoint(l, line))
                .count();
            if count != 1 {
                playfair_ok = false;
                report
                    .violations
                    .push(AxiomViolation::ParallelNotUnique { point, line, count });
            }
        }
    }
    for (line, l) in s.lines.iter().enumerate() {
        if l.len() < 2 {
            report
                .violations
                .push(AxiomViolation::ShortLine { line, size: l.len() });
        }
    }
    for point in 0..n {
        let lines = on_line.iter().filter(|m| m[point]).count();
        if lines < 3 {
            report
                .violations
                .push(AxiomViolation::PointOnFewLines { point, lines });
        }
    }
    let m = s.lines.len();
    let max = if m <= 64 {
        let adj: Vec<u64> = (0..m)
            .map(|x| {
                (0..m)
                    .filter(|&y| y != x && !disjoint(x, y))
                    .fold(0, |acc, y| acc | (1u64 << y))
            })
            .collect();
        Some(max_independent_set(&adj).count_ones() as usize)
    } else if playfair_ok {
        // With unique parallels, parallelism is an equivalence relation and the
        // largest disjoint family is the largest class.
        Some(
            (0..m)
                .map(|x| (0..m).filter(|&y| y == x || disjoint(x, y)).count())
                .max()
                .unwrap_or(0),
        )
    } else {
        None
    };
    match max {
        Some(max) if max != order => report
            .violations
            .push(AxiomViolation::ParallelCount { max, expected: order }),
        Some(_) => {}
        None => report.violations.push(AxiomViolation::ParallelCountUnchecked),
    }
    report
}
