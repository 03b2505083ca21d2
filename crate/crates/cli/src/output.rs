use serde_json::json;

use jpk::partitions::SymTermRepr;
use jpk::suites::{CaseOutcome, SuiteResult};
use jpk::{Context, DRat, Partition, SymPoly};

use crate::{Format, RunArgs};

pub fn poly(
    p: &SymPoly,
    label: Option<&str>,
    m: &Partition,
    jack_basis: Option<Vec<(Partition, DRat)>>,
    format: Format,
) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Latex => p.to_latex(),
        Format::Json => {
            let mut repr = p.to_repr();
            repr.jack_basis = jack_basis.map(|terms| {
                terms
                    .into_iter()
                    .map(|(k, coeff)| SymTermRepr {
                        partition: k.parts().to_vec(),
                        coeff,
                    })
                    .collect()
            });
            let mut v = serde_json::to_value(&repr).expect("polynomial serializes");
            if let Some(l) = label {
                v["of"] = json!({ "family": l, "partition": m.parts() });
            }
            v.to_string()
        }
    }
}

pub fn suites(results: &[SuiteResult], ctx: &Context, run: &RunArgs, format: Format) -> String {
    match format {
        Format::Json => json_report(results, ctx, run),
        Format::Text => text_report(results, ctx, run),
        Format::Latex => latex_report(results, ctx),
    }
}

fn header(ctx: &Context, run: &RunArgs) -> String {
    format!(
        "r={} d={} max-weight={} trunc={} seed={}",
        ctx.r(),
        ctx.mode().label(),
        run.max_weight,
        run.trunc,
        run.seed
    )
}

fn text_report(results: &[SuiteResult], ctx: &Context, run: &RunArgs) -> String {
    let mut out = vec![header(ctx, run)];
    for res in results {
        let c = res.counts();
        out.push(format!(
            "suite {}: pass={} fail={} skip={}{}",
            res.suite,
            c.pass,
            c.fail,
            c.skip,
            if c.error > 0 {
                format!(" error={}", c.error)
            } else {
                String::new()
            }
        ));
        for o in &res.outcomes {
            match o {
                CaseOutcome::Report(r) => {
                    out.push(format!("  {}", r.summary_line()));
                    out.extend(r.details.iter().map(|d| format!("      {d}")));
                }
                CaseOutcome::Skipped { case, reason } => {
                    out.push(format!("  SKIP {case}: {reason}"));
                }
                CaseOutcome::Error { case, error } => {
                    out.push(format!("  ERROR {case}: {error}"));
                }
            }
        }
    }
    out.join("\n")
}

fn json_report(results: &[SuiteResult], ctx: &Context, run: &RunArgs) -> String {
    let suites: Vec<_> = results
        .iter()
        .map(|res| {
            json!({
                "suite": res.suite,
                "counts": res.counts(),
                "outcomes": res.outcomes,
            })
        })
        .collect();
    json!({
        "r": ctx.r(),
        "d": ctx.mode().label(),
        "max_weight": run.max_weight,
        "trunc": run.trunc,
        "seed": run.seed,
        "passed": results.iter().all(|r| r.all_passed()),
        "suites": suites,
    })
    .to_string()
}

fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '_' | '{' | '}' | '&' | '%' | '#' | '$' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(ch),
        }
    }
    out
}

fn latex_report(results: &[SuiteResult], ctx: &Context) -> String {
    let mut out = vec![
        format!("% r={} d={}", ctx.r(), ctx.mode().label()),
        "\\begin{tabular}{lll}".to_string(),
        "identity & parameters & result \\\\".to_string(),
        "\\hline".to_string(),
    ];
    for res in results {
        for o in &res.outcomes {
            let (id, params, status) = match o {
                CaseOutcome::Report(r) => (
                    r.identity.clone(),
                    r.parameters.clone(),
                    if r.passed { "pass" } else { "fail" }.to_string(),
                ),
                CaseOutcome::Skipped { case, .. } => {
                    (res.suite.to_string(), case.clone(), "skip".into())
                }
                CaseOutcome::Error { case, .. } => {
                    (res.suite.to_string(), case.clone(), "error".into())
                }
            };
            out.push(format!(
                "\\texttt{{{}}} & \\texttt{{{}}} & {} \\\\",
                latex_escape(&id),
                latex_escape(&params),
                status
            ));
        }
    }
    out.push("\\end{tabular}".to_string());
    out.join("\n")
}
