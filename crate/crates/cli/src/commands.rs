use std::io::Write;

use hirzebruch::checks::{self, SuiteResult};
use hirzebruch::fibrations::{p_polynomial, q_series, table_p, table_p_text, Family, FibrationSpec};
use hirzebruch::genseries::{chi_all, chi_class, chi_q, BaseSpec};
use hirzebruch::rational::{rat, to_fraction_string};
use hirzebruch::{Rational, UniPoly};
use serde_json::json;

use crate::args::{Cli, Command, Format};
use crate::error::{CliError, CliResult};
use crate::input::{load_base, load_spec, parse_base_arg, resolve_target};
use crate::records::{emit, SeriesDocument};
use crate::render::{compact_poly, latex_series, text_rational, text_series};

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Q {
            target,
            wmax,
            qmax,
            format,
            closed,
        } => cmd_q(out, &target, wmax, qmax, format, closed),
        Command::Ptable { family, nmax, check } => cmd_ptable(out, &family, nmax, check),
        Command::Chi {
            target,
            base,
            base_file,
            q,
            class,
            verify,
            format,
        } => {
            let spec = resolve_target(&target)?;
            let base = match (base, base_file) {
                (Some(arg), _) => parse_base_arg(&arg)?,
                (None, Some(path)) => load_base(&path)?,
                (None, None) => return Err(CliError::Usage("one of --base, --base-file is required".into())),
            };
            cmd_chi(out, &spec, &base, &q, class, verify, format)
        }
        Command::Verify {
            family,
            wmax,
            qmax,
            spec,
        } => {
            let mut specs: Vec<FibrationSpec> = if family.eq_ignore_ascii_case("all") {
                Family::ALL.iter().map(|f| f.spec()).collect()
            } else {
                vec![Family::parse(&family)?.spec()]
            };
            if let Some(path) = spec {
                if specs.len() != 1 {
                    return Err(CliError::Usage("--spec needs a single --family to check against".into()));
                }
                let mut candidate = load_spec(&path)?;
                candidate.closed_q = specs[0].closed_q;
                candidate.validate()?;
                specs = vec![candidate];
            }
            cmd_verify(out, &specs, wmax, qmax)
        }
    }
}

pub fn cmd_q(
    out: &mut dyn Write,
    target: &str,
    wmax: u32,
    qmax: u32,
    format: Format,
    closed: bool,
) -> CliResult<()> {
    let spec = resolve_target(target)?;
    if closed {
        let family = spec
            .closed_q
            .ok_or_else(|| CliError::Usage(format!("{} has no closed form; drop --closed", spec.name)))?;
        match format {
            Format::Text => writeln!(out, "Q = {}", family.closed_form_text())?,
            Format::Latex => writeln!(out, "Q = {}", family.closed_form_latex())?,
            Format::Json => {
                let doc = json!({
                    "family": family.name(),
                    "closed_form": family.closed_form_text(),
                    "latex": family.closed_form_latex(),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))?;
            }
        }
        return Ok(());
    }
    let q = q_series(&spec, wmax, qmax)?;
    match format {
        Format::Text => {
            writeln!(out, "Q for {} (U = exp(-L), wmax {wmax}, qmax {qmax})", spec.name)?;
            write!(out, "{}", text_series(&q))?;
        }
        Format::Json => writeln!(out, "{}", emit(&q))?,
        Format::Latex => writeln!(out, "Q = {}", latex_series(&q))?,
    }
    Ok(())
}

fn p_text(n: u32, p: &UniPoly) -> String {
    if n == 0 && *p == UniPoly::from_ints(&[1, -1]) {
        "1-U".into()
    } else {
        compact_poly(p, "U")
    }
}

pub fn cmd_ptable(out: &mut dyn Write, family: &str, nmax: u32, check: bool) -> CliResult<()> {
    let family = Family::parse(family)?;
    let mut mismatch = None;
    for n in 0..=nmax {
        let p = p_polynomial(family, n);
        match table_p_text(family, n) {
            Some(factored) => writeln!(out, "P{n} = {factored} = {}", p_text(n, &p))?,
            None => writeln!(out, "P{n} = {}", p_text(n, &p))?,
        }
        if check && mismatch.is_none() && p != table_p(family, n) {
            mismatch = Some((n, table_p(family, n)));
        }
    }
    if check {
        match mismatch {
            None => writeln!(out, "check: PASS (P0..P{nmax} match the table)")?,
            Some((n, t)) => {
                writeln!(out, "check: FAIL at P{n}: table gives {}", compact_poly(&t, "U"))?;
                return Err(CliError::Verification);
            }
        }
    }
    Ok(())
}

fn alternating(values: &[(u32, Rational)]) -> Rational {
    values.iter().fold(rat(0), |acc, (q, v)| {
        if q % 2 == 0 {
            acc + v
        } else {
            acc - v
        }
    })
}

pub fn cmd_chi(
    out: &mut dyn Write,
    spec: &FibrationSpec,
    base: &BaseSpec,
    q: &str,
    class: bool,
    verify: bool,
    format: Format,
) -> CliResult<()> {
    let top = base.dim + spec.fiber_dim().max(0) as u32;
    let qs: Vec<u32> = if q.eq_ignore_ascii_case("all") {
        (0..=top).collect()
    } else {
        let q: u32 = q
            .parse()
            .map_err(|_| CliError::Usage(format!("--q expects a y-degree or `all`, got {q:?}")))?;
        vec![q]
    };
    let values: Vec<(u32, Rational)> = if verify || qs.len() == 1 {
        qs.iter()
            .map(|&q| Ok((q, chi_q(spec, base, q, verify)?)))
            .collect::<CliResult<_>>()?
    } else {
        qs.iter().copied().zip(chi_all(spec, base)?).collect()
    };
    let classes = if class {
        qs.iter()
            .map(|&q| chi_class(spec, base.dim, q))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let all = qs.len() as u32 == top + 1;
    match format {
        Format::Text | Format::Latex => {
            for (i, (q, v)) in values.iter().enumerate() {
                if let Some(c) = classes.get(i) {
                    let shown = match format {
                        Format::Latex => latex_series(c),
                        _ => c.to_string(),
                    };
                    writeln!(out, "class_{q} = {shown}")?;
                }
                writeln!(out, "chi_{q} = {}", text_rational(v))?;
            }
            if all {
                writeln!(out, "alternating sum = {}", text_rational(&alternating(&values)))?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = values
                .iter()
                .enumerate()
                .map(|(i, (q, v))| {
                    let mut row = json!({ "q": q, "value": to_fraction_string(v) });
                    if let Some(c) = classes.get(i) {
                        row["class"] = serde_json::to_value(SeriesDocument::from_series(c)).expect("plain data");
                    }
                    row
                })
                .collect();
            let mut doc = json!({ "fibration": spec.name, "base_dim": base.dim, "values": rows });
            if all {
                doc["alternating_sum"] = json!(to_fraction_string(&alternating(&values)));
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("plain data"))?;
        }
    }
    Ok(())
}

fn suite_line(r: &SuiteResult) -> String {
    match &r.outcome {
        Ok(detail) => format!("PASS  {}: {detail} ({} ms)", r.name, r.millis),
        Err(cex) => format!("FAIL  {}: {cex}", r.name),
    }
}

pub fn cmd_verify(out: &mut dyn Write, specs: &[FibrationSpec], wmax: u32, qmax: u32) -> CliResult<()> {
    let results = checks::run_all(specs, wmax, qmax);
    for r in &results {
        writeln!(out, "{}", suite_line(r))?;
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        writeln!(out, "PASS ({} suites)", results.len())?;
        Ok(())
    } else {
        writeln!(out, "FAIL ({failed} of {} suites)", results.len())?;
        Err(CliError::Verification)
    }
}
