//! The acceptance suite: nine exact checks with runtime budgets, shared by the
//! `acceptance` test target and `ryser selftest`.

use std::fmt;
use std::time::{Duration, Instant};

use crate::colored::{gyarfas_graph, transitive_closure, ColoredCompleteGraph};
use crate::delta2::ryser_delta2;
use crate::error::Result;
use crate::generators::{gen_coarsened_blowup, gen_delta2, gen_t_intersecting_hypergraph, gen_transitive_colored, Delta2Mode};
use crate::hypergraph::{dual, Hypergraph};
use crate::oracles::{alpha_prime, max_partial_cover_distinct, min_component_cover, nu, parameters_exact, rho, tau, OracleLimits};
use crate::partial::{
    check_difference_identity, check_sharpness, color_stats, coverage_bound, coverage_bound_exact, is_affine_blowup,
    partial_cover_distinct,
};
use crate::planes::{affine_plane, blowup_graph, truncated_projective_plane};
use crate::t_cover::cover_t;

/// Result of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub checks: usize,
    /// The first few failure messages.
    pub failures: Vec<String>,
    pub failure_count: usize,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.elapsed <= self.budget
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {} {}: {} checks, {} failures, {:.2} s (budget {} s)",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.checks,
            self.failure_count,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )?;
        if self.elapsed > self.budget {
            write!(f, " over budget")?;
        }
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

const KEPT_FAILURES: usize = 5;

struct Tally {
    checks: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(msg);
        }
    }

    /// Unwraps `res`, recording an error as a failure.
    fn ok<T>(&mut self, res: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match res {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }
}

fn timed(id: u32, title: &'static str, budget_secs: u64, body: impl FnOnce(&mut Tally)) -> Outcome {
    let start = Instant::now();
    let mut tally = Tally::new();
    body(&mut tally);
    Outcome {
        id,
        title,
        checks: tally.checks,
        failures: tally.failures,
        failure_count: tally.failure_count,
        elapsed: start.elapsed(),
        budget: Duration::from_secs(budget_secs),
    }
}

fn limits() -> OracleLimits {
    OracleLimits {
        max_vertices: 64,
        max_components: 256,
        ..OracleLimits::default()
    }
}

/// Runs every criterion in order, calling `report` after each one.
pub fn run(mut report: impl FnMut(&Outcome)) -> Vec<Outcome> {
    let mut pool = Vec::new();
    let mut out = Vec::new();
    let mut push = |o: Outcome| {
        report(&o);
        out.push(o);
    };
    push(sharp_family());
    push(t_intersecting_covers(&mut pool));
    push(partial_cover_bound(&mut pool));
    push(blowups_are_sharp(&mut pool));
    push(coarsened_blowups_are_not(&mut pool));
    push(counting_identities(&pool));
    push(delta2_covers());
    push(dualities());
    push(closure_round_trip());
    out
}

/// Truncated projective planes attain `τ = (r-1) ν` with `ν = 1`.
pub fn sharp_family() -> Outcome {
    timed(1, "truncated projective planes have tau = q, nu = 1", 10, |tally| {
        for q in 2..=5 {
            let Some(h) = tally.ok(truncated_projective_plane(q), || format!("q = {q}")) else {
                continue;
            };
            if let Some(p) = tally.ok(parameters_exact(&h, &limits()), || format!("q = {q}")) {
                tally.check(p.tau == q && p.nu == 1 && p.tau == (h.r() - 1) * p.nu, || {
                    format!("q = {q}: tau = {}, nu = {}", p.tau, p.nu)
                });
            }
        }
    })
}

fn t_parameter_pairs() -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for r in 2..=7 {
        for t in 1..r {
            if 4 * t > r {
                pairs.push((r, t));
            }
        }
    }
    pairs
}

/// 200 random transitive colourings per `(r, t)` with `r <= 7`, `n <= 24`.
pub fn t_intersecting_covers(pool: &mut Vec<ColoredCompleteGraph>) -> Outcome {
    timed(2, "cover by r - t components on transitive colourings", 60, |tally| {
        for (r, t) in t_parameter_pairs() {
            for i in 0..200u64 {
                let n = 2 + (i % 23) as usize;
                let seed = 2_000_000 + 1000 * (r as u64 * 10 + t as u64) + i;
                let ctx = || format!("n = {n}, r = {r}, t = {t}, seed = {seed}");
                let Some(g) = tally.ok(gen_transitive_colored(n, r, t, seed), ctx) else {
                    continue;
                };
                if let Some(out) = tally.ok(cover_t(&g, t), ctx) {
                    let cover = &out.cover;
                    tally.check(
                        cover.covers_all() && cover.len() <= r - t && cover.parts_are_components_of(&g),
                        || format!("{}: {} parts, covers all = {}", ctx(), cover.len(), cover.covers_all()),
                    );
                    if n <= 12 {
                        if let Some(best) = tally.ok(min_component_cover(&g, &limits()), ctx) {
                            tally.check(best.len() <= cover.len(), || {
                                format!("{}: optimum {} above construction {}", ctx(), best.len(), cover.len())
                            });
                        }
                    }
                }
                pool.push(g);
            }
        }
    })
}

/// 200 random transitive colourings with `r <= 5`, `n <= 40`.
pub fn partial_cover_bound(pool: &mut Vec<ColoredCompleteGraph>) -> Outcome {
    timed(3, "r - 1 distinct-colour components reach the coverage bound", 30, |tally| {
        for i in 0..200u64 {
            let r = 2 + (i % 4) as usize;
            let n = 2 + (i * 7 % 39) as usize;
            let seed = 3_000_000 + i;
            let ctx = || format!("n = {n}, r = {r}, seed = {seed}");
            let Some(g) = tally.ok(gen_transitive_colored(n, r, 1, seed), ctx) else {
                continue;
            };
            if let Some(out) = tally.ok(partial_cover_distinct(&g), ctx) {
                let cover = &out.cover;
                let mut colors = cover.colors();
                colors.dedup();
                let common = cover
                    .common_vertex()
                    .is_some_and(|x| cover.parts().iter().all(|p| p.vertices.contains(&x)));
                tally.check(
                    cover.len() == r - 1 && colors.len() == r - 1 && common && cover.covered_count() >= coverage_bound(n, r),
                    || format!("{}: {} parts, {} covered, bound {}", ctx(), cover.len(), cover.covered_count(), coverage_bound(n, r)),
                );
            }
            pool.push(g);
        }
    })
}

/// Blowups of AG(2, q) attain the bound exactly and are recognized.
pub fn blowups_are_sharp(pool: &mut Vec<ColoredCompleteGraph>) -> Outcome {
    timed(4, "affine plane blowups attain the bound and are recognized", 60, |tally| {
        for q in 2..=4 {
            for b in 1..=3 {
                let ctx = || format!("q = {q}, b = {b}");
                let Some(g) = tally.ok(affine_plane(q).and_then(|p| blowup_graph(&p, b)), ctx) else {
                    continue;
                };
                let exact = coverage_bound_exact(g.n(), g.r());
                if let Some(best) = tally.ok(max_partial_cover_distinct(&g, &limits()), ctx) {
                    tally.check(exact.is_integer() && *exact.numer() == best.covered_count() as i128, || {
                        format!("{}: optimum {} vs bound {exact}", ctx(), best.covered_count())
                    });
                }
                let witness = is_affine_blowup(&g);
                tally.check(witness.as_ref().is_some_and(|w| w.b == b && w.plane.order() == q), || {
                    format!("{}: witness {:?}", ctx(), witness.as_ref().map(|w| (w.plane.order(), w.b)))
                });
                pool.push(g);
            }
        }
    })
}

/// Merging two components of one colour in a blowup breaks sharpness.
pub fn coarsened_blowups_are_not(pool: &mut Vec<ColoredCompleteGraph>) -> Outcome {
    timed(5, "coarsened blowups beat the bound and are not recognized", 60, |tally| {
        for i in 0..50u64 {
            let (q, b) = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3)][i as usize % 9];
            let seed = 5_000_000 + i;
            let ctx = || format!("q = {q}, b = {b}, seed = {seed}");
            let Some(g) = tally.ok(gen_coarsened_blowup(q, b, seed), ctx) else {
                continue;
            };
            if let Some(report) = tally.ok(check_sharpness(&g, &limits()), ctx) {
                tally.check(report.oracle_max > report.bound && !report.is_sharp, || {
                    format!("{}: optimum {} vs bound {}", ctx(), report.oracle_max, report.bound)
                });
                tally.check(report.witness.is_none(), || format!("{}: witness found", ctx()));
            }
            pool.push(g);
        }
    })
}

/// Component-difference identity and the pair-count lower bound on every
/// colouring generated by criteria 2 to 5.
pub fn counting_identities(pool: &[ColoredCompleteGraph]) -> Outcome {
    timed(6, "counting identities on all generated colourings", 30, |tally| {
        for (i, g) in pool.iter().enumerate() {
            let ctx = || format!("instance {i} (n = {}, r = {})", g.n(), g.r());
            for res in [color_stats(g).check(true), check_difference_identity(g)] {
                let msg = res.as_ref().err().map(|e| format!("{}: {e}", ctx()));
                tally.check(msg.is_none(), || msg.unwrap_or_default());
            }
        }
        tally.check(!pool.is_empty(), || "no instances collected".into());
    })
}

/// 300 random hypergraphs with maximum degree 2.
pub fn delta2_covers() -> Outcome {
    timed(7, "maximum degree 2 covers within (r - 1) nu", 60, |tally| {
        for i in 0..300u64 {
            let r = 3 + (i % 3) as usize;
            let m = 1 + (i / 3 % 12) as usize;
            let mode = [Delta2Mode::Mixed, Delta2Mode::Cycle, Delta2Mode::Disjoint, Delta2Mode::Mixed][(i / 36 % 4) as usize];
            let seed = 7_000_000 + i;
            let ctx = || format!("r = {r}, m = {m}, {mode:?}, seed = {seed}");
            let Some(h) = tally.ok(gen_delta2(r, m, seed, mode), ctx) else {
                continue;
            };
            let Some(out) = tally.ok(ryser_delta2(&h), ctx) else {
                continue;
            };
            let (Some(t), Some(v)) = (tally.ok(tau(&h, &limits()), ctx), tally.ok(nu(&h, &limits()), ctx)) else {
                continue;
            };
            let covers = h.edges().iter().all(|e| e.iter().any(|x| out.cover.binary_search(x).is_ok()));
            tally.check(covers && t <= out.cover.len() && out.cover.len() <= (r - 1) * v, || {
                format!("{}: |T| = {}, tau = {t}, nu = {v}, covers = {covers}", ctx(), out.cover.len())
            });
        }
    })
}

/// Checks that subsets of vertices cover `h` exactly when their stars cover
/// the Gyárfás graph, and that stars are exactly the components.
fn gyarfas_correspondence(h: &Hypergraph, tally: &mut Tally, ctx: &dyn Fn() -> String) {
    let Some(g) = tally.ok(gyarfas_graph(h), ctx).and_then(|g| g.complete()) else {
        return;
    };
    let class_map = h.class_map().expect("generated with classes");
    let stars = h.stars();
    let index = g.components();
    let mut star_count = 0;
    for (v, star) in stars.iter().enumerate() {
        let color = class_map[v].expect("every vertex has a class") + 1;
        tally.check(index.component_of(star[0], color) == star.as_slice(), || {
            format!("{}: star of {} is not a colour-{color} component", ctx(), h.vertex_name(v))
        });
        star_count += 1;
    }
    let component_count: usize = (1..=g.r()).map(|c| index.k(c)).sum();
    tally.check(component_count == star_count, || {
        format!("{}: {component_count} components vs {star_count} stars", ctx())
    });
    let nv = h.vertex_count();
    let full: u64 = if g.n() == 64 { u64::MAX } else { (1 << g.n()) - 1 };
    let star_masks: Vec<u64> = stars.iter().map(|s| s.iter().fold(0, |m, &e| m | 1 << e)).collect();
    let mut best = usize::MAX;
    for subset in 0u64..1 << nv {
        let covered = (0..nv).filter(|&v| subset >> v & 1 == 1).fold(0, |m, v| m | star_masks[v]);
        let covers_h = h.edges().iter().all(|e| e.iter().any(|&v| subset >> v & 1 == 1));
        tally.check(covers_h == (covered == full), || format!("{}: subset {subset:b} disagrees", ctx()));
        if covers_h {
            best = best.min(subset.count_ones() as usize);
        }
    }
    if let (Some(t), Some(c)) = (tally.ok(tau(h, &limits()), ctx), tally.ok(min_component_cover(&g, &limits()), ctx)) {
        tally.check(t == best && c.len() == t, || {
            format!("{}: tau = {t}, exhaustive = {best}, component cover = {}", ctx(), c.len())
        });
    }
}

/// Dual involution, `α'(H*) = ν(H)`, `τ(H) = ρ(H*)` and the Gyárfás
/// correspondence on 100 random hypergraphs.
pub fn dualities() -> Outcome {
    timed(8, "duality identities and the component correspondence", 30, |tally| {
        for i in 0..100u64 {
            let r = 2 + (i % 3) as usize;
            let m = 1 + (i / 3 % 8) as usize;
            let t = if i % 2 == 0 { 1 } else { 0 };
            let class_size = 2 + (i / 24 % 2) as usize;
            let seed = 8_000_000 + i;
            let ctx = || format!("r = {r}, t = {t}, m = {m}, class size = {class_size}, seed = {seed}");
            let Some((h, _)) = tally.ok(gen_t_intersecting_hypergraph(r, t, m, class_size, seed), ctx) else {
                continue;
            };
            let d = dual(&h);
            tally.check(dual(&d).is_isomorphic(&h), || format!("{}: double dual differs", ctx()));
            if let (Some(a), Some(v)) = (tally.ok(alpha_prime(&d, &limits()), ctx), tally.ok(nu(&h, &limits()), ctx)) {
                tally.check(a == v, || format!("{}: alpha' of dual = {a}, nu = {v}", ctx()));
            }
            if let (Some(t), Some(p)) = (tally.ok(tau(&h, &limits()), ctx), tally.ok(rho(&d, &limits()), ctx)) {
                tally.check(p == Some(t), || format!("{}: tau = {t}, rho of dual = {p:?}", ctx()));
            }
            if h.edges().len() <= 8 && crate::hypergraph::intersection_level(&h).is_ok_and(|l| l >= 1) {
                gyarfas_correspondence(&h, tally, &ctx);
            }
        }
    })
}

/// The closure of the Gyárfás graph of a truncated projective plane is the
/// blowup of the affine plane with `b = 1`.
pub fn closure_round_trip() -> Outcome {
    timed(9, "closure of the truncated plane's Gyarfas graph is the affine blowup", 10, |tally| {
        for q in 2..=5 {
            let ctx = || format!("q = {q}");
            let Some(h) = tally.ok(truncated_projective_plane(q), ctx) else {
                continue;
            };
            let Some(g) = tally.ok(gyarfas_graph(&h), ctx).and_then(|g| g.complete()) else {
                tally.fail(format!("q = {q}: Gyarfas graph is not complete"));
                continue;
            };
            let Some(blowup) = tally.ok(affine_plane(q).and_then(|p| blowup_graph(&p, 1)), ctx) else {
                continue;
            };
            tally.check(transitive_closure(&g).is_isomorphic(&blowup), || format!("q = {q}: not isomorphic"));
        }
    })
}
