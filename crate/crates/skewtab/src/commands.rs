//! One function per subcommand, each producing a [`Doc`] and an exit code.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use skewtab_core::asymptotics::{family_report, AsymptoticReport};
use skewtab_core::bounds::{bounds_report, compare_check, format_rational, BoundSide};
use skewtab_core::exact::{
    brute_force_count, hlf_count, jacobi_trudi_count, lr_coefficient, naive_hlf, ribbon_count,
};
use skewtab_core::excited::{
    border_strips, enumerate_excited, min_max_term, nhlf_count, paths_from_diagram,
    xi_determinant, ExcitedDiagram,
};
use skewtab_core::shapes::partitions_of;
use skewtab_core::{Cell, Error, Partition, ShapeFamily, SkewShape};

use crate::boundary::{BoundarySpec, Integrand};
use crate::render::{fixed, Doc, Format};
use crate::verify::{Case, Group, VerifySuite};
use crate::{diagnostic, exit_code, parse_target, Cli, Command};
use crate::{EXIT_CAP, EXIT_OK, EXIT_USAGE, EXIT_VERDICT};

/// An error already rendered for stderr.
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn from_error(e: &Error, input: &str) -> Failure {
        Failure {
            code: exit_code(e),
            message: diagnostic(e, input),
        }
    }

    fn usage(message: String) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: format!("error: {message}\n"),
        }
    }
}

type Outcome = Result<(Doc, i32), Failure>;

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VERDICT
    }
}

pub(crate) fn execute(cli: &Cli, extra: Vec<Case>) -> Outcome {
    match &cli.command {
        Command::Count { shape, check } => count(cli, shape, *check),
        Command::Bounds { shape } => bounds(cli, shape),
        Command::Excited { shape, paths } => excited(cli, shape, *paths),
        Command::Nhlf { shape } => nhlf(cli, shape),
        Command::Family { spec, k } => family(cli, spec, k),
        Command::Integrate { spec } => integrate(cli, spec),
        Command::Lr { shape, nu } => lr(cli, shape, nu.as_deref()),
        Command::Verify {
            max_size,
            max_k,
            groups,
        } => verify(cli, *max_size, *max_k, groups, extra),
    }
}

fn target(text: &str) -> Result<SkewShape, Failure> {
    parse_target(text).map_err(|e| Failure::from_error(&e, text))
}

fn cells(c: &[Cell]) -> Vec<[usize; 2]> {
    c.iter().map(|c| [c.row, c.col]).collect()
}

#[derive(Serialize)]
struct CountDoc {
    shape: String,
    n: usize,
    e: String,
    #[serde(rename = "F")]
    f: String,
    xi: String,
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<CountCheck>,
}

#[derive(Serialize)]
struct CountCheck {
    jacobi_trudi: String,
    brute_force: String,
    nhlf: String,
    agree: bool,
}

fn count(cli: &Cli, text: &str, check: bool) -> Outcome {
    let s = target(text)?;
    let fail = |e: Error| Failure::from_error(&e, text);
    let (e, method) = match ribbon_count(&s) {
        Some(e) => (e, "ribbon"),
        None => (jacobi_trudi_count(&s), "jacobi-trudi"),
    };
    let check = if check {
        let caps = cli.caps();
        let jt = jacobi_trudi_count(&s);
        let brute = brute_force_count(&s, &caps).map_err(fail)?;
        let nhlf = nhlf_count(&s, &caps).map_err(fail)?;
        Some(CountCheck {
            agree: jt == e && brute == e && nhlf == e,
            jacobi_trudi: jt.to_string(),
            brute_force: brute.to_string(),
            nhlf: nhlf.to_string(),
        })
    } else {
        None
    };
    let agree = check.as_ref().is_none_or(|c| c.agree);
    let doc = CountDoc {
        shape: s.to_string(),
        n: s.size(),
        e: e.to_string(),
        f: format_rational(&naive_hlf(&s)),
        xi: xi_determinant(&s).to_string(),
        method,
        check,
    };
    let row = vec![
        doc.shape.clone(),
        doc.n.to_string(),
        doc.e.clone(),
        doc.f.clone(),
        doc.xi.clone(),
        method.to_string(),
    ];
    let columns = ["shape", "n", "e", "F", "xi", "method"];
    Ok((Doc::new(&doc, &columns, vec![row]), verdict(agree)))
}

#[derive(Serialize)]
struct HpDoc {
    value: String,
    ceiling: String,
    from_rotation: bool,
}

#[derive(Serialize)]
struct BoundDoc {
    name: &'static str,
    side: &'static str,
    value: String,
    holds: bool,
    log_gap: f64,
}

#[derive(Serialize)]
struct BoundsDoc {
    shape: String,
    n: usize,
    e: String,
    #[serde(rename = "F")]
    f: String,
    xi: String,
    chain_lengths: Vec<usize>,
    hp: HpDoc,
    bounds: Vec<BoundDoc>,
    rank_comparison: &'static str,
    all_hold: bool,
}

fn bounds(_cli: &Cli, text: &str) -> Outcome {
    let s = target(text)?;
    let rep = bounds_report(&s);
    let comparison = match compare_check(&s).verdict() {
        None => "not-applicable",
        Some(true) => "holds",
        Some(false) => "fails",
    };
    let doc = BoundsDoc {
        shape: s.to_string(),
        n: rep.n,
        e: rep.exact.to_string(),
        f: format_rational(&rep.naive),
        xi: rep.xi.to_string(),
        chain_lengths: rep.chain_lengths.clone(),
        hp: HpDoc {
            value: format_rational(&rep.hp.value),
            ceiling: rep.hp.ceiling.to_string(),
            from_rotation: rep.hp.from_rotation,
        },
        bounds: rep
            .rows
            .iter()
            .map(|r| BoundDoc {
                name: r.name,
                side: match r.side {
                    BoundSide::Lower => "lower",
                    BoundSide::Upper => "upper",
                },
                value: format_rational(&r.value),
                holds: r.holds,
                log_gap: r.log_gap,
            })
            .collect(),
        rank_comparison: comparison,
        all_hold: rep.all_hold(),
    };
    let rows = doc
        .bounds
        .iter()
        .map(|b| {
            vec![
                b.name.to_string(),
                b.side.to_string(),
                b.value.clone(),
                b.holds.to_string(),
                fixed(b.log_gap),
            ]
        })
        .collect();
    let table = Doc::new(&doc, &["bound", "side", "value", "holds", "log_gap"], rows);
    let text = format!(
        "shape {}  n = {}  e = {}  F = {}  xi = {}\n\n{}\nrank comparison: {comparison}\n",
        doc.shape,
        doc.n,
        doc.e,
        doc.f,
        doc.xi,
        table.render(Format::Text)
    );
    let passed = doc.all_hold && comparison != "fails";
    Ok((table.with_text(text), verdict(passed)))
}

#[derive(Serialize)]
struct StripDoc {
    level: usize,
    cells: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct DiagramDoc {
    cells: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    paths: Option<Vec<Vec<[usize; 2]>>>,
}

#[derive(Serialize)]
struct ExcitedDoc {
    shape: String,
    xi: String,
    strips: Vec<StripDoc>,
    diagrams: Vec<DiagramDoc>,
}

/// `#` for cells of the diagram, `.` for the rest of `λ`.
fn grid(lambda: &Partition, d: &ExcitedDiagram) -> String {
    let mut out = String::new();
    for (i, &p) in lambda.parts().iter().enumerate() {
        let row: String = (1..=p)
            .map(|j| if d.contains(&Cell::new(i + 1, j)) { '#' } else { '.' })
            .collect();
        out.push_str(&row);
        out.push('\n');
    }
    out
}

fn excited(cli: &Cli, text: &str, with_paths: bool) -> Outcome {
    let s = target(text)?;
    let fail = |e: Error| Failure::from_error(&e, text);
    let diagrams = enumerate_excited(&s, &cli.caps()).map_err(fail)?;
    let mut docs = Vec::with_capacity(diagrams.len());
    for d in &diagrams {
        let paths = if with_paths {
            let fam = paths_from_diagram(&s, d).map_err(fail)?;
            Some(fam.paths.iter().map(|p| cells(&p.cells)).collect())
        } else {
            None
        };
        docs.push(DiagramDoc {
            cells: cells(d.cells()),
            paths,
        });
    }
    let doc = ExcitedDoc {
        shape: s.to_string(),
        xi: diagrams.len().to_string(),
        strips: border_strips(&s)
            .into_iter()
            .map(|st| StripDoc {
                level: st.level,
                cells: cells(&st.cells),
            })
            .collect(),
        diagrams: docs,
    };
    let rows = doc
        .diagrams
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let cs: Vec<String> = d.cells.iter().map(|[r, c]| format!("{r}:{c}")).collect();
            vec![(i + 1).to_string(), cs.join(" ")]
        })
        .collect();
    let mut text_out = format!("shape {}  xi = {}\n", doc.shape, doc.xi);
    for (i, d) in diagrams.iter().enumerate() {
        text_out.push_str(&format!("\ndiagram {}\n{}", i + 1, grid(s.outer(), d)));
    }
    let out = Doc::new(&doc, &["diagram", "cells"], rows).with_text(text_out);
    Ok((out, EXIT_OK))
}

#[derive(Serialize)]
struct NhlfDoc {
    shape: String,
    n: usize,
    e: String,
    xi: String,
    min_term: String,
    max_term: String,
    argmin: Vec<[usize; 2]>,
    argmax: Vec<[usize; 2]>,
}

fn nhlf(cli: &Cli, text: &str) -> Outcome {
    let s = target(text)?;
    let fail = |e: Error| Failure::from_error(&e, text);
    let caps = cli.caps();
    let e = nhlf_count(&s, &caps).map_err(fail)?;
    let ext = min_max_term(&s, &caps).map_err(fail)?;
    let doc = NhlfDoc {
        shape: s.to_string(),
        n: s.size(),
        e: e.to_string(),
        xi: xi_determinant(&s).to_string(),
        min_term: format_rational(&ext.min),
        max_term: format_rational(&ext.max),
        argmin: cells(ext.argmin.cells()),
        argmax: cells(ext.argmax.cells()),
    };
    let row = vec![
        doc.shape.clone(),
        doc.n.to_string(),
        doc.e.clone(),
        doc.xi.clone(),
        doc.min_term.clone(),
        doc.max_term.clone(),
    ];
    let columns = ["shape", "n", "e", "xi", "min_term", "max_term"];
    Ok((Doc::new(&doc, &columns, vec![row]), EXIT_OK))
}

/// Parses `5`, `2..12` or `2..12:2` (inclusive ranges).
fn k_values(items: &[String]) -> Result<Vec<usize>, String> {
    let int = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a nonnegative integer"))
    };
    let mut ks = Vec::new();
    for item in items {
        match item.split_once("..") {
            None => ks.push(int(item)?),
            Some((a, rest)) => {
                let (b, step) = match rest.split_once(':') {
                    Some((b, st)) => (b, int(st)?),
                    None => (rest, 1),
                };
                if step == 0 {
                    return Err(format!("zero step in '{item}'"));
                }
                ks.extend((int(a)?..=int(b)?).step_by(step));
            }
        }
    }
    Ok(ks)
}

#[derive(Serialize)]
struct FamilyRow {
    family: &'static str,
    spec: String,
    k: usize,
    n: usize,
    log_e_exact: f64,
    c_k: f64,
    #[serde(rename = "logF")]
    log_f: f64,
    #[serde(rename = "logXi")]
    log_xi: f64,
    band_lower: Option<f64>,
    band_upper: Option<f64>,
    limit: Option<f64>,
    verdict: &'static str,
}

#[derive(Serialize)]
struct FamilyDoc {
    rows: Vec<FamilyRow>,
}

fn family_row(rep: &AsymptoticReport) -> FamilyRow {
    FamilyRow {
        family: rep.family.name(),
        spec: rep.family.to_string(),
        k: rep.k,
        n: rep.n,
        log_e_exact: rep.ln_e,
        c_k: rep.c,
        log_f: rep.ln_f,
        log_xi: rep.ln_xi,
        band_lower: rep.band.map(|b| b.lower),
        band_upper: rep.band.map(|b| b.upper),
        limit: rep.band.and_then(|b| b.limit),
        verdict: if rep.sandwich { "holds" } else { "fails" },
    }
}

fn family(cli: &Cli, text: &str, k: &[String]) -> Outcome {
    let fam: ShapeFamily = text.parse().map_err(|e| Failure::from_error(&e, text))?;
    let ks = if k.is_empty() {
        vec![fam.k()]
    } else {
        k_values(k).map_err(Failure::usage)?
    };
    let pool = cli.pool().map_err(|e| Failure::usage(e.to_string()))?;
    let reports: Vec<_> = pool.install(|| ks.par_iter().map(|&k| family_report(&fam, k)).collect());
    let reports = reports
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::from_error(&e, text))?;
    let doc = FamilyDoc {
        rows: reports.iter().map(family_row).collect(),
    };
    let rows = doc
        .rows
        .iter()
        .map(|r| {
            vec![
                r.family.to_string(),
                r.k.to_string(),
                r.n.to_string(),
                fixed(r.log_e_exact),
                fixed(r.c_k),
                fixed(r.log_f),
                fixed(r.log_xi),
                r.verdict.to_string(),
            ]
        })
        .collect();
    let columns = ["family", "k", "n", "log_e_exact", "c_k", "logF", "logXi", "verdict"];
    let passed = reports.iter().all(|r| r.sandwich);
    Ok((Doc::new(&doc, &columns, rows), verdict(passed)))
}

#[derive(Serialize)]
struct IntegrateDoc {
    integrand: Integrand,
    area: f64,
    value: f64,
    coarse: f64,
    error_estimate: f64,
    grid: usize,
}

fn integrate(cli: &Cli, spec: &str) -> Outcome {
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| Failure::usage(format!("cannot read boundary spec '{spec}': {e}")))?
    };
    let fail = |e: Error| Failure::from_error(&e, &text);
    let parsed = BoundarySpec::parse(&text).map_err(fail)?;
    let (region, q) = parsed.integrate(cli.grid).map_err(fail)?;
    let doc = IntegrateDoc {
        integrand: parsed.integrand,
        area: region.area(),
        value: q.value,
        coarse: q.coarse,
        error_estimate: q.error_estimate(),
        grid: q.grid,
    };
    let row = vec![
        fixed(doc.area),
        fixed(doc.value),
        fixed(doc.coarse),
        fixed(doc.error_estimate),
        doc.grid.to_string(),
    ];
    let columns = ["area", "value", "coarse", "error_estimate", "grid"];
    Ok((Doc::new(&doc, &columns, vec![row]), EXIT_OK))
}

#[derive(Serialize)]
struct LrTerm {
    nu: String,
    c: String,
    f: String,
}

#[derive(Serialize)]
struct LrDoc {
    shape: String,
    e: String,
    terms: Vec<LrTerm>,
    sum: String,
    consistent: bool,
}

#[derive(Serialize)]
struct LrSingle {
    lambda: String,
    mu: String,
    nu: String,
    c: String,
}

fn lr(cli: &Cli, text: &str, nu: Option<&str>) -> Outcome {
    let s = target(text)?;
    let caps = cli.caps();
    let (lambda, mu) = (s.outer(), s.inner());
    if let Some(nu_text) = nu {
        let nu: Partition = nu_text.parse().map_err(|e| Failure::from_error(&e, nu_text))?;
        let c = lr_coefficient(lambda, mu, &nu, &caps).map_err(|e| Failure::from_error(&e, text))?;
        let doc = LrSingle {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
            nu: nu.to_string(),
            c: c.to_string(),
        };
        let row = vec![doc.lambda.clone(), doc.mu.clone(), doc.nu.clone(), doc.c.clone()];
        return Ok((Doc::new(&doc, &["lambda", "mu", "nu", "c"], vec![row]), EXIT_OK));
    }
    let mut terms = Vec::new();
    let mut sum = BigUint::from(0u8);
    for nu in partitions_of(s.size()) {
        let c = lr_coefficient(lambda, mu, &nu, &caps).map_err(|e| Failure::from_error(&e, text))?;
        if c == BigUint::from(0u8) {
            continue;
        }
        let f = hlf_count(&nu);
        sum += &c * &f;
        terms.push(LrTerm {
            nu: nu.to_string(),
            c: c.to_string(),
            f: f.to_string(),
        });
    }
    let e = jacobi_trudi_count(&s);
    let doc = LrDoc {
        shape: s.to_string(),
        consistent: sum == e,
        e: e.to_string(),
        sum: sum.to_string(),
        terms,
    };
    let rows = doc
        .terms
        .iter()
        .map(|t| vec![t.nu.clone(), t.c.clone(), t.f.clone()])
        .collect();
    let passed = doc.consistent;
    Ok((Doc::new(&doc, &["nu", "c", "f"], rows), verdict(passed)))
}

fn verify(cli: &Cli, max_size: usize, max_k: usize, groups: &[Group], extra: Vec<Case>) -> Outcome {
    let suite = VerifySuite {
        max_size,
        max_k,
        groups: if groups.is_empty() {
            Group::ALL.to_vec()
        } else {
            groups.to_vec()
        },
        caps: cli.caps(),
    };
    let pool = cli.pool().map_err(|e| Failure::usage(e.to_string()))?;
    let rep = suite.run(extra, &pool);
    let code = if rep.passed {
        EXIT_OK
    } else if rep.failures().all(|f| f.resource) {
        EXIT_CAP
    } else {
        EXIT_VERDICT
    };
    let rows = rep
        .groups
        .iter()
        .map(|g| vec![g.group.clone(), g.checked.to_string(), g.failed.to_string()])
        .collect();
    let table = Doc::new(&rep, &["group", "checked", "failed"], rows);
    let mut text = table.render(Format::Text);
    for f in rep.failures() {
        text.push_str(&format!("FAIL {}: {}\n", f.case, f.message));
    }
    Ok((table.with_text(text), code))
}
