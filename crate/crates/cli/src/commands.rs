use serde::Serialize;
use serde_json::{json, Value};
use stybe_core::algebra::{brace_from_radical_ring, enumerate_near_braces, verify_structure, Level};
use stybe_core::quantum::{
    check_reflection_algebra, check_reflection_constant, check_reflection_equation, check_rtt_series,
    coproduct_check_reflection, coproduct_check_rtt, dress_reflection, Dressed, SeriesOperator, DEFAULT_DEPTH,
};
use stybe_core::reflection::{
    enumerate_reflections_with, verify_reflection, ReflectionFilter, ReflectionMode, DEFAULT_ALL_BOUND,
};
use stybe_core::rmatrix::{baxterize, build_and_check_twist, check_basic_properties, linearize, LinearSolution};
use stybe_core::ybe::{
    diagnostics, enumerate_solutions_in, reconstruct_addition, solution_from_structure, verify_braid, SearchMode,
    SolutionFilter,
};
use stybe_core::Error;

use crate::args::Command;
use crate::load::{Context, Operator};
use crate::{CliError, Produced};

const DEFAULT_MAX_ORDER: usize = 3;

type Out = Result<Produced, CliError>;

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("artifact serializes")
}

fn verdict<T: Serialize>(passed: bool, report: &T) -> Produced {
    Produced {
        passed,
        verdicts: to_value(report),
        result: None,
        stream: None,
    }
}

fn stream<T: Serialize>(items: &[T], verdicts: Value) -> Produced {
    Produced {
        passed: true,
        verdicts,
        result: None,
        stream: Some(items.iter().map(to_value).collect()),
    }
}

pub(crate) fn dispatch(cmd: Command, ctx: &mut Context) -> Out {
    match cmd {
        Command::VerifyStructure => verify_structure_cmd(ctx),
        Command::FromRadicalRing => from_radical_ring(ctx),
        Command::EnumerateBraces => enumerate_braces(ctx),
        Command::MakeSolution => make_solution(ctx),
        Command::VerifyBraid => {
            let sol = ctx.solution()?.solution;
            let r = verify_braid(&sol);
            Ok(verdict(r.passed, &r))
        }
        Command::Diagnose => {
            let loaded = ctx.solution()?;
            let group = ctx.group(&loaded)?;
            let d = diagnostics(&loaded.solution, group.as_ref())?;
            Ok(verdict(true, &d))
        }
        Command::ReconstructAdd => {
            let loaded = ctx.solution()?;
            let group = ctx
                .group(&loaded)?
                .ok_or_else(|| CliError::Usage("reconstruct-add needs --mul PATH or a structure input".into()))?;
            let r = reconstruct_addition(&loaded.solution, &group)?;
            Ok(verdict(r.group && r.distributivity_ok, &r))
        }
        Command::EnumerateSolutions => enumerate_solutions_cmd(ctx),
        Command::VerifyReflection => {
            let sol = ctx.solution()?.solution;
            let k = ctx.reflection_map()?;
            let mode: ReflectionMode = ctx.opts.mode.as_deref().unwrap_or("direct").parse()?;
            let r = verify_reflection(&sol, &k, mode)?;
            Ok(verdict(r.passed(), &r))
        }
        Command::EnumerateReflections => enumerate_reflections_cmd(ctx),
        Command::Linearize => {
            let lin = linear(ctx)?;
            let bax = baxterize(&lin);
            let involutive = &lin.r_check * &lin.r_check == lin.identity();
            Ok(Produced {
                passed: true,
                verdicts: json!({
                    "n": lin.n,
                    "nnz": lin.r_check.nnz(),
                    "involutive": involutive,
                }),
                result: Some(json!({ "linear": lin, "baxterized": bax })),
                stream: None,
            })
        }
        Command::CheckR => {
            let lin = linear(ctx)?;
            let r = check_basic_properties(&lin);
            Ok(verdict(r.passed(), &r))
        }
        Command::Twist => {
            let lin = linear(ctx)?;
            let (pair, report) = build_and_check_twist(&lin)?;
            Ok(Produced {
                passed: report.passed(),
                verdicts: to_value(&report),
                result: Some(to_value(&pair)),
                stream: None,
            })
        }
        Command::CheckRtt => check_rtt(ctx),
        Command::DressK => dress_k(ctx),
        Command::CheckRe => check_re(ctx),
        Command::CheckRa => check_ra(ctx),
    }
}

fn linear(ctx: &mut Context) -> Result<LinearSolution, CliError> {
    Ok(linearize(&ctx.solution()?.solution))
}

fn depth(ctx: &Context) -> usize {
    ctx.opts.depth.unwrap_or(DEFAULT_DEPTH)
}

fn verify_structure_cmd(ctx: &mut Context) -> Out {
    let nb = ctx.structure()?;
    let level = ctx.level()?.unwrap_or(nb.kind());
    let r = verify_structure(&nb, level);
    Ok(verdict(r.valid, &r))
}

fn from_radical_ring(ctx: &mut Context) -> Out {
    let ring = ctx.ring()?;
    match brace_from_radical_ring(&ring) {
        Ok(nb) => {
            let report = verify_structure(&nb, Level::LeftBrace);
            Ok(Produced {
                passed: report.valid,
                verdicts: json!({ "radical": true, "structure": report }),
                result: Some(to_value(&nb)),
                stream: None,
            })
        }
        Err(Error::NotRadical { element }) => Ok(Produced {
            passed: false,
            verdicts: json!({ "radical": false, "witness": [element] }),
            result: None,
            stream: None,
        }),
        Err(e) => Err(e.into()),
    }
}

fn enumerate_braces(ctx: &mut Context) -> Out {
    let n = ctx.bound()?;
    let level = ctx.level()?.unwrap_or(Level::LeftBrace);
    let all = enumerate_near_braces(n, level, ctx.opts.canonical)?;
    Ok(stream(
        &all,
        json!({
            "size": n,
            "level": level,
            "canonical": ctx.opts.canonical,
            "count": all.len(),
        }),
    ))
}

fn make_solution(ctx: &mut Context) -> Out {
    let nb = ctx.structure()?;
    let rule = ctx.rule_for(&nb)?;
    let sol = solution_from_structure(&nb, rule)?;
    let braid = verify_braid(&sol);
    Ok(Produced {
        passed: braid.passed,
        verdicts: json!({
            "rule": rule,
            "braid": braid,
            "involutive": sol.is_involutive(),
            "non_degenerate": sol.is_non_degenerate(),
        }),
        result: Some(to_value(&sol)),
        stream: None,
    })
}

fn enumerate_solutions_cmd(ctx: &mut Context) -> Out {
    let n = ctx.bound()?;
    let filter = SolutionFilter {
        involutive: ctx.opts.involutive,
        non_degenerate: ctx.opts.non_degenerate,
    };
    let mode = match ctx.opts.mode.as_deref().unwrap_or("exhaustive") {
        "exhaustive" => SearchMode::Exhaustive,
        "brace_generated" => SearchMode::BraceGenerated(ctx.level()?.unwrap_or(Level::LeftBrace)),
        other => {
            return Err(CliError::Usage(format!(
                "unknown search mode `{other}` (exhaustive|brace_generated)"
            )))
        }
    };
    let all = enumerate_solutions_in(n, filter, ctx.opts.canonical, mode)?;
    Ok(stream(
        &all,
        json!({
            "size": n,
            "mode": mode,
            "filter": filter,
            "canonical": ctx.opts.canonical,
            "count": all.len(),
        }),
    ))
}

fn enumerate_reflections_cmd(ctx: &mut Context) -> Out {
    let loaded = ctx.solution()?;
    let filter: ReflectionFilter = ctx.opts.mode.as_deref().unwrap_or("all").parse()?;
    let nb = ctx.structure_for_filter(&loaded)?;
    let bound = ctx.opts.bound.unwrap_or(DEFAULT_ALL_BOUND);
    let all = enumerate_reflections_with(&loaded.solution, filter, nb.as_ref(), bound)?;
    Ok(stream(
        &all,
        json!({
            "size": loaded.solution.size(),
            "filter": filter,
            "count": all.len(),
        }),
    ))
}

fn check_rtt(ctx: &mut Context) -> Out {
    let lin = linear(ctx)?;
    let l = match ctx.operator()? {
        None => SeriesOperator::fundamental(&lin, depth(ctx)),
        Some(Operator::Series(s)) => s,
        Some(Operator::Matrix(m)) => SeriesOperator::from_mu(&m, depth(ctx)),
        Some(Operator::Dressed(d)) => SeriesOperator::from_mu(&d.k, depth(ctx)),
    };
    let max_order = ctx.opts.max_order.unwrap_or(DEFAULT_MAX_ORDER);
    let r = if ctx.opts.coproduct {
        coproduct_check_rtt(&lin, &l, max_order)?
    } else {
        check_rtt_series(&lin, &l, max_order)?
    };
    Ok(verdict(r.passed, &r))
}

fn dressed(ctx: &mut Context, lin: &LinearSolution) -> Result<Dressed, CliError> {
    let params = ctx.params(lin.n)?;
    Ok(dress_reflection(lin, &params)?)
}

fn dress_k(ctx: &mut Context) -> Out {
    let lin = linear(ctx)?;
    let mut d = dressed(ctx, &lin)?;
    if ctx.opts.coproduct {
        d = stybe_core::quantum::dressed_coproduct(&lin, &d, &ctx.theta2()?)?;
    }
    let re = check_reflection_equation(&lin, &d.k)?;
    Ok(Produced {
        passed: re.passed(),
        verdicts: json!({
            "slots": d.k.slots(),
            "mu_degree": d.k.degree_in(stybe_core::matrix::Var::Mu),
            "reflection_equation": re,
        }),
        result: Some(to_value(&d)),
        stream: None,
    })
}

fn check_re(ctx: &mut Context) -> Out {
    let lin = linear(ctx)?;
    if ctx.opts.coproduct {
        let d = match ctx.operator()? {
            None => dressed(ctx, &lin)?,
            Some(Operator::Dressed(d)) => d,
            Some(Operator::Matrix(k)) => Dressed {
                k,
                normalization: Vec::new(),
            },
            Some(Operator::Series(_)) => {
                return Err(CliError::Usage(
                    "the reflection coproduct needs a matrix, not a series".into(),
                ))
            }
        };
        let r = coproduct_check_reflection(&lin, &d, &ctx.theta2()?)?;
        return Ok(verdict(r.passed(), &r));
    }
    let r = if ctx.has_k() {
        let k = ctx.reflection_map()?;
        check_reflection_constant(&lin, &k)?
    } else {
        let k = match ctx.operator()? {
            None => dressed(ctx, &lin)?.k,
            Some(Operator::Matrix(m)) => m,
            Some(Operator::Dressed(d)) => d.k,
            Some(Operator::Series(_)) => {
                return Err(CliError::Usage(
                    "check-re takes a matrix; use check-ra for series".into(),
                ))
            }
        };
        check_reflection_equation(&lin, &k)?
    };
    Ok(verdict(r.passed(), &r))
}

fn check_ra(ctx: &mut Context) -> Out {
    let lin = linear(ctx)?;
    let k = match ctx.operator()? {
        None => SeriesOperator::from_mu(&dressed(ctx, &lin)?.k, depth(ctx)),
        Some(Operator::Series(s)) => s,
        Some(Operator::Matrix(m)) => SeriesOperator::from_mu(&m, depth(ctx)),
        Some(Operator::Dressed(d)) => SeriesOperator::from_mu(&d.k, depth(ctx)),
    };
    let r = check_reflection_algebra(&lin, &k)?;
    Ok(verdict(r.passed, &r))
}
