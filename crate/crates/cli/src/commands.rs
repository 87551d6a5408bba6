use std::time::Instant;

use ryser_core::colored::{gyarfas_graph, transitive_closure, GyarfasGraph};
use ryser_core::delta2::{ryser_delta2, ComponentKind};
use ryser_core::format::{parse_cgf, parse_hgf, write_cgf, write_hgf};
use ryser_core::generators::{
    gen_coarsened_blowup, gen_delta2, gen_t_intersecting_hypergraph, gen_transitive_colored, Delta2Mode,
};
use ryser_core::hypergraph::validate;
use ryser_core::oracles::{
    alpha, alpha_prime, max_partial_cover_distinct, min_component_cover, min_vertex_cover, nu, parameters_exact, rho,
};
use ryser_core::partial::{
    check_sharpness, coverage_bound, coverage_bound_exact, is_affine_blowup, partial_cover_distinct, BlowupWitness,
    PartialStrategy, SharpnessStatus,
};
use ryser_core::planes::{affine_plane, blowup_graph, truncated_projective_plane};
use ryser_core::t_cover::cover_t;
use ryser_core::{acceptance, ColoredCompleteGraph, ComponentCover, Hypergraph};
use serde_json::{json, Value};

use crate::{CliError, Command, Ctx, GenCommand, ModeArg, OracleKind, Output};

enum Loaded {
    Hyper(Hypergraph),
    Colored(ColoredCompleteGraph),
}

fn is_cgf(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("colored"))
}

impl Ctx<'_> {
    fn hypergraph(&mut self, path: &str) -> Result<Hypergraph, CliError> {
        let text = self.read(path)?;
        Ok(self.timed(|| parse_hgf(&text))?)
    }

    fn colored(&mut self, path: &str) -> Result<ColoredCompleteGraph, CliError> {
        let text = self.read(path)?;
        let closure = self.closure;
        Ok(self.timed(|| parse_cgf(&text).map(|g| if closure { transitive_closure(&g) } else { g }))?)
    }

    fn any(&mut self, path: &str) -> Result<Loaded, CliError> {
        let text = self.read(path)?;
        let closure = self.closure;
        self.timed(|| {
            if is_cgf(&text) {
                let g = parse_cgf(&text)?;
                Ok(Loaded::Colored(if closure { transitive_closure(&g) } else { g }))
            } else {
                Ok(Loaded::Hyper(parse_hgf(&text)?))
            }
        })
    }
}

pub(crate) fn dispatch(command: &Command, ctx: &mut Ctx) -> Result<Output, CliError> {
    match command {
        Command::Analyze { input } => match ctx.any(input)? {
            Loaded::Hyper(h) => analyze_hypergraph(&h, ctx),
            Loaded::Colored(g) => Ok(analyze_colored(&g)),
        },
        Command::Gyarfas { input, .. } => gyarfas(&ctx.hypergraph(input)?),
        Command::Closure { input, .. } => {
            let closure = ctx.closure;
            ctx.closure = false;
            let g = ctx.colored(input)?;
            ctx.closure = closure;
            Ok(closure_of(&g))
        }
        Command::CoverT { input, t } => run_cover_t(&ctx.colored(input)?, *t),
        Command::CoverPartial { input } => cover_partial(&ctx.colored(input)?),
        Command::Sharp { input } => sharp(&ctx.colored(input)?, ctx),
        Command::Delta2 { input } => delta2(&ctx.hypergraph(input)?),
        Command::Oracle { which, input } => oracle(*which, input, ctx),
        Command::Gen { what, .. } => generate(what),
        Command::Selftest => unreachable!("selftest streams its output and is run directly"),
    }
}

fn parts_json(cover: &ComponentCover) -> Value {
    cover
        .parts()
        .iter()
        .map(|p| json!({"color": p.color, "vertices": p.vertices}))
        .collect()
}

fn names(h: &Hypergraph, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&v| h.vertex_name(v).to_string()).collect()
}

fn analyze_hypergraph(h: &Hypergraph, ctx: &Ctx) -> Result<Output, CliError> {
    let report = validate(h);
    let p = parameters_exact(h, &ctx.limits)?;
    let ryser = (h.r().saturating_sub(1)) * p.nu;
    Ok(Output::new(json!({
        "kind": "hypergraph",
        "r": h.r(),
        "vertices": h.vertex_count(),
        "edges": h.edge_count(),
        "partite": h.classes().is_some(),
        "valid": report.is_empty(),
        "violations": report.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "parameters": {
            "tau": p.tau,
            "nu": p.nu,
            "rho": p.rho,
            "delta": p.delta,
            "alpha": p.alpha,
            "alphaPrime": p.alpha_prime,
            "intersectionLevel": p.t_level,
        },
        "ryserBound": ryser,
        "meetsRyserBound": p.tau <= ryser,
    })))
}

fn witness_json(w: &BlowupWitness) -> Value {
    json!({
        "order": w.plane.order(),
        "b": w.b,
        "pointOf": w.map.point_of,
        "lines": w.plane.lines(),
    })
}

fn analyze_colored(g: &ColoredCompleteGraph) -> Output {
    let transitive = g.is_transitive();
    let index = g.components();
    let colors: Vec<Value> = (1..=g.r())
        .map(|c| json!({"color": c, "components": index.k(c), "sizes": index.gammas(c)}))
        .collect();
    let blowup = is_affine_blowup(g).map(|w| json!({"order": w.plane.order(), "b": w.b}));
    Output::new(json!({
        "kind": "colored",
        "n": g.n(),
        "r": g.r(),
        "transitive": transitive,
        "minColorsPerPair": g.min_colors_per_pair(),
        "colors": colors,
        "partialCoverBound": coverage_bound(g.n(), g.r()),
        "affineBlowup": blowup,
    }))
}

fn gyarfas(h: &Hypergraph) -> Result<Output, CliError> {
    match gyarfas_graph(h)? {
        GyarfasGraph::Complete(g) => {
            let mut out = Output::new(json!({"n": g.n(), "r": g.r(), "transitive": g.is_transitive()}));
            out.artifact = Some(("cgf", write_cgf(&g)));
            Ok(out)
        }
        GyarfasGraph::Partial(p) => {
            let missing = p.missing_pairs();
            let (a, b) = missing[0];
            Err(CliError::Usage(format!(
                "hypergraph is not intersecting: edges #{a} and #{b} are disjoint ({} disjoint pairs), so its Gyárfás graph is not complete",
                missing.len()
            )))
        }
    }
}

fn closure_of(g: &ColoredCompleteGraph) -> Output {
    let c = transitive_closure(g);
    let added: usize = g.pairs().map(|(u, v, col)| c.col(u, v).len() - col.len()).sum();
    let mut out = Output::new(json!({
        "n": c.n(),
        "r": c.r(),
        "wasTransitive": g.is_transitive(),
        "addedColors": added,
    }))
    .check("transitive", c.is_transitive());
    out.artifact = Some(("cgf", write_cgf(&c)));
    out
}

fn run_cover_t(g: &ColoredCompleteGraph, t: usize) -> Result<Output, CliError> {
    let result = cover_t(g, t)?;
    let bound = g.r() - t;
    Ok(Output::new(json!({
        "n": g.n(),
        "r": g.r(),
        "t": t,
        "bound": bound,
        "partCount": result.cover.len(),
        "parts": parts_json(&result.cover),
        "trace": result.trace.iter().map(ToString::to_string).collect::<Vec<_>>(),
    }))
    .check("coversAll", result.cover.covers_all())
    .check("withinBound", result.cover.len() <= bound)
    .check("partsAreComponents", result.cover.parts_are_components_of(g)))
}

fn strategy_json(s: PartialStrategy) -> Value {
    match s {
        PartialStrategy::NotSpanning => json!({"name": "notSpanning"}),
        PartialStrategy::TwoColors => json!({"name": "twoColors"}),
        PartialStrategy::SpanningColor { spanning } => json!({"name": "spanningColor", "spanning": spanning}),
        PartialStrategy::ComponentPair { many, few } => json!({"name": "componentPair", "many": many, "few": few}),
        PartialStrategy::FewestPrivate { d } => json!({"name": "fewestPrivate", "d": d}),
    }
}

fn cover_partial(g: &ColoredCompleteGraph) -> Result<Output, CliError> {
    let p = partial_cover_distinct(g)?;
    let cover = &p.cover;
    let mut colors = cover.colors();
    colors.dedup();
    let common = cover.common_vertex();
    let through_common = common.is_some_and(|x| cover.parts().iter().all(|part| part.vertices.contains(&x)));
    Ok(Output::new(json!({
        "n": g.n(),
        "r": g.r(),
        "bound": p.bound,
        "boundExact": coverage_bound_exact(g.n(), g.r()).to_string(),
        "covered": cover.covered_count(),
        "omittedColor": p.omitted,
        "commonVertex": common,
        "strategy": strategy_json(p.strategy),
        "parts": parts_json(cover),
    }))
    .check("distinctColors", colors.len() == cover.len() && cover.len() + 1 == g.r())
    .check("commonVertex", through_common)
    .check("meetsBound", cover.covered_count() >= p.bound)
    .check("partsAreComponents", cover.parts_are_components_of(g)))
}

fn sharp(g: &ColoredCompleteGraph, ctx: &Ctx) -> Result<Output, CliError> {
    let s = check_sharpness(g, &ctx.limits)?;
    let status = match s.status {
        SharpnessStatus::Sharp => "sharp",
        SharpnessStatus::NotSharp => "notSharp",
        SharpnessStatus::OutsideCharacterization => "outsideCharacterization",
    };
    Ok(Output::new(json!({
        "n": g.n(),
        "r": g.r(),
        "bound": s.bound,
        "boundExact": s.bound_exact.to_string(),
        "oracleMax": s.oracle_max,
        "isSharp": s.is_sharp,
        "status": status,
        "commonVertex": s.best.common_vertex(),
        "best": parts_json(&s.best),
        "witness": s.witness.as_ref().map(witness_json),
    }))
    .check("meetsBound", s.oracle_max >= s.bound))
}

fn kind_json(kind: ComponentKind) -> Value {
    match kind {
        ComponentKind::Cycle(l) => json!({"kind": "cycle", "order": l}),
        ComponentKind::Complete(m) => json!({"kind": "complete", "order": m}),
        ComponentKind::General => json!({"kind": "general"}),
    }
}

fn delta2(h: &Hypergraph) -> Result<Output, CliError> {
    let d = ryser_delta2(h)?;
    let is_cover = h.edges().iter().all(|e| e.iter().any(|v| d.cover.binary_search(v).is_ok()));
    let components: Vec<Value> = d
        .edge_cover
        .components
        .iter()
        .map(|c| {
            let mut v = kind_json(c.kind);
            let map = v.as_object_mut().unwrap();
            map.insert("dualVertices".into(), c.vertices.len().into());
            map.insert("coverSize".into(), c.cover.len().into());
            map.insert("alpha".into(), c.alpha.into());
            v
        })
        .collect();
    let forced: Vec<Value> = d
        .reduction
        .forced
        .iter()
        .map(|f| json!({"edge": f.dual_vertex, "vertex": h.vertex_name(f.hyperedge)}))
        .collect();
    Ok(Output::new(json!({
        "r": h.r(),
        "edges": h.edge_count(),
        "cover": names(h, &d.cover),
        "size": d.cover.len(),
        "nu": d.nu,
        "bound": d.bound,
        "forced": forced,
        "components": components,
    }))
    .check("isCover", is_cover)
    .check("withinBound", d.cover.len() <= d.bound))
}

fn oracle(which: OracleKind, input: &str, ctx: &mut Ctx) -> Result<Output, CliError> {
    let name = format!("{which:?}").to_lowercase();
    let limits = ctx.limits;
    let colored = matches!(which, OracleKind::Mincover | OracleKind::Maxpartial);
    let outputs = match (ctx.any(input)?, colored) {
        (Loaded::Colored(g), true) if which == OracleKind::Mincover => {
            let c = min_component_cover(&g, &limits)?;
            json!({"oracle": name, "value": c.len(), "parts": parts_json(&c)})
        }
        (Loaded::Colored(g), true) => {
            let c = max_partial_cover_distinct(&g, &limits)?;
            json!({
                "oracle": name,
                "value": c.covered_count(),
                "bound": coverage_bound(g.n(), g.r()),
                "parts": parts_json(&c),
            })
        }
        (Loaded::Hyper(h), false) => match which {
            OracleKind::Tau => {
                let cover = min_vertex_cover(&h, &limits)?;
                json!({"oracle": name, "value": cover.len(), "cover": names(&h, &cover)})
            }
            OracleKind::Nu => json!({"oracle": name, "value": nu(&h, &limits)?}),
            OracleKind::Rho => json!({"oracle": name, "value": rho(&h, &limits)?}),
            OracleKind::Alpha => json!({"oracle": name, "value": alpha(&h, &limits)?}),
            _ => json!({"oracle": name, "value": alpha_prime(&h, &limits)?}),
        },
        (_, colored) => {
            let wanted = if colored { "a coloured graph (CGF)" } else { "a hypergraph (HGF)" };
            return Err(CliError::Usage(format!("oracle {name} needs {wanted}")));
        }
    };
    Ok(Output::new(outputs))
}

fn hgf_artifact(outputs: Value, h: &Hypergraph) -> Result<Output, CliError> {
    let mut out = Output::new(outputs);
    out.artifact = Some(("hgf", write_hgf(h)?));
    Ok(out)
}

fn cgf_artifact(outputs: Value, g: &ColoredCompleteGraph) -> Output {
    let mut out = Output::new(outputs);
    out.artifact = Some(("cgf", write_cgf(g)));
    out
}

fn generate(what: &GenCommand) -> Result<Output, CliError> {
    match *what {
        GenCommand::Plane { q, affine, .. } => {
            let h = if affine {
                affine_plane(q)?.structure().to_hypergraph()
            } else {
                truncated_projective_plane(q)?
            };
            let kind = if affine { "affine" } else { "truncated" };
            hgf_artifact(
                json!({"plane": kind, "q": q, "r": h.r(), "vertices": h.vertex_count(), "edges": h.edge_count()}),
                &h,
            )
        }
        GenCommand::Blowup { q, b } => {
            let g = blowup_graph(&affine_plane(q)?, b)?;
            Ok(cgf_artifact(json!({"q": q, "b": b, "n": g.n(), "r": g.r()}), &g))
        }
        GenCommand::CoarsenedBlowup { q, b, seed } => {
            let g = gen_coarsened_blowup(q, b, seed)?;
            Ok(cgf_artifact(json!({"q": q, "b": b, "seed": seed, "n": g.n(), "r": g.r()}), &g))
        }
        GenCommand::RandomColored {
            n,
            r,
            min_colors,
            seed,
        } => {
            let g = gen_transitive_colored(n, r, min_colors, seed)?;
            Ok(cgf_artifact(json!({"n": n, "r": r, "minColors": min_colors, "seed": seed}), &g))
        }
        GenCommand::RandomHyp {
            r,
            t,
            m,
            class_size,
            seed,
        } => {
            let (h, short) = gen_t_intersecting_hypergraph(r, t, m, class_size, seed)?;
            hgf_artifact(
                json!({
                    "r": r,
                    "t": t,
                    "requestedEdges": m,
                    "edges": h.edge_count(),
                    "short": short,
                    "classSize": class_size,
                    "seed": seed,
                }),
                &h,
            )
        }
        GenCommand::RandomDelta2 { r, m, seed, mode } => {
            let (mode, name) = match mode {
                ModeArg::Mixed => (Delta2Mode::Mixed, "mixed"),
                ModeArg::Cycle => (Delta2Mode::Cycle, "cycle"),
                ModeArg::Disjoint => (Delta2Mode::Disjoint, "disjoint"),
            };
            let h = gen_delta2(r, m, seed, mode)?;
            hgf_artifact(
                json!({"r": r, "edges": m, "seed": seed, "mode": name, "vertices": h.vertex_count()}),
                &h,
            )
        }
    }
}

/// Runs the acceptance suite, passing each result line to `line` as soon as it is known.
pub(crate) fn selftest(mut line: impl FnMut(&str)) -> Output {
    let start = Instant::now();
    let outcomes = acceptance::run(|o| line(&o.to_string()));
    let criteria: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            json!({
                "id": o.id,
                "title": o.title,
                "passed": o.passed(),
                "checks": o.checks,
                "failures": o.failure_count,
                "failureSamples": o.failures,
                "elapsedMillis": o.elapsed.as_millis() as u64,
                "budgetMillis": o.budget.as_millis() as u64,
            })
        })
        .collect();
    let mut out = Output::new(json!({
        "criteria": criteria,
        "elapsedMillis": start.elapsed().as_millis() as u64,
    }));
    for o in &outcomes {
        out = out.check(&format!("criterion{}", o.id), o.passed());
    }
    out
}
