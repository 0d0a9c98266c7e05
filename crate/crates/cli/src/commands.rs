use anyhow::{anyhow, bail, Result};
use syt_core::counting::{
    count_descent_class, count_syt_aitken, count_syt_backtrack_with, count_syt_dp_with,
    DESCENT_BRUTE_MAX,
};
use syt_core::formulas::{
    alpha_class, beta_class, count_3strip, count_4strip, count_5strip, count_strip, x_coeff,
    Strip3, Strip4,
};
use syt_core::numbers::{sequence, series_coefficients, SeqKind, SeriesName};
use syt_core::polytope::order_polytope_volume_with;
use syt_core::shapes::{make_skew, parse_shape, ShapeText};
use syt_core::spectral::{leading_modes, spectral_series_check, verify_modes, SeriesKind, VerifyOptions};
use syt_core::{BigInt, BigRat, Budget, Partition, SkewShape, StripSpec};

use crate::report::{fmt_float, render, Format, Report};
use crate::{verify, Cli, Command, Global, Method};

pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn reports(reports: &[Report], format: Format) -> Self {
        Output { text: render(reports, format), ok: reports.iter().all(Report::ok) }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Seq { name, max } => seq(name, *max, g.format),
        Command::Count { lambda, mu, shape, method } => {
            let text = match (lambda, shape) {
                (Some(l), _) => {
                    let lam = Partition::new(l.clone())?;
                    let mu = Partition::new(mu.clone().unwrap_or_default())?;
                    ShapeText::Skew(make_skew(&lam, &mu)?)
                }
                (None, Some(s)) => s.parse::<ShapeText>()?,
                (None, None) => bail!("either --lambda or --shape is required"),
            };
            let r = count_report(&text, *method, g)?;
            Ok(Output::reports(&[r], g.format))
        }
        Command::Strip { m, n, head, tail, all_methods } => {
            let spec = StripSpec::from_parts(*m, *n, &parse_list(head)?, &parse_list(tail)?)?;
            let method = if *all_methods { Method::All } else { Method::Auto };
            let r = count_report(&ShapeText::Strip(spec), method, g)?;
            Ok(Output::reports(&[r], g.format))
        }
        Command::Ribbon { size, descents, all_methods } => {
            let text = ShapeText::Ribbon { size: *size, descents: parse_list(descents)? };
            let method = if *all_methods { Method::All } else { Method::Auto };
            let r = count_report(&text, method, g)?;
            Ok(Output::reports(&[r], g.format))
        }
        Command::Volume { shape } => volume(shape, g),
        Command::Series { name, order, n } => series(name, *order, *n, g.format),
        Command::Spectral { m, modes, grid, tol, samples, seed } => {
            let opts = VerifyOptions { order: *grid, samples: *samples, seed: *seed, tol: *tol };
            let reports = spectral_reports(*m, *modes, &opts)?;
            Ok(Output::reports(&reports, g.format))
        }
        Command::Verify { suite, max_cells, json } => {
            let mut reports = verify::run_suite(*suite, *max_cells, g)?;
            reports.sort_by(|a, b| a.instance.cmp(&b.instance));
            if let Some(path) = json {
                std::fs::write(path, serde_json::to_string_pretty(&reports)? + "\n")?;
            }
            let failed = reports.iter().filter(|r| !r.ok()).count();
            let mut out = Output::reports(&reports, g.format);
            if g.format == Format::Table {
                out.text.push_str(&format!("{} checks, {failed} failed\n", reports.len()));
            }
            Ok(out)
        }
    }
}

pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| anyhow!("`{t}` is not a nonnegative integer")))
        .collect()
}

/// JSON arrays of integers are written as bare numbers of any size; any
/// fraction turns the whole array into decimal strings.
fn rat_array_json(values: &[BigRat]) -> String {
    let all_int = values.iter().all(BigRat::is_integer);
    let items: Vec<String> = values
        .iter()
        .map(|v| if all_int { v.numer().to_string() } else { format!("\"{v}\"") })
        .collect();
    format!("[{}]\n", items.join(","))
}

fn indexed(values: &[BigRat], first: usize, format: Format) -> String {
    match format {
        Format::Json => rat_array_json(values),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("{},{v}\n", i + first));
            }
            out
        }
        Format::Table => values.iter().enumerate().map(|(i, v)| format!("{:>4}  {v}\n", i + first)).collect(),
    }
}

fn seq(name: &str, max: usize, format: Format) -> Result<Output> {
    let kind: SeqKind = name.parse()?;
    let values = sequence(kind, max);
    Ok(Output { text: indexed(&values, kind.first_index(), format), ok: true })
}

fn closed_form(spec: &StripSpec) -> Option<(&'static str, syt_core::Result<BigInt>)> {
    let n = spec.n();
    match spec.m() {
        3 => [Strip3::A, Strip3::B, Strip3::C]
            .into_iter()
            .find(|v| v.spec(n).as_ref() == Ok(spec))
            .map(|v| ("closed_form", count_3strip(v, n))),
        4 => [Strip4::F, Strip4::G]
            .into_iter()
            .find(|v| v.spec(n).as_ref() == Ok(spec))
            .map(|v| ("closed_form", count_4strip(v, n))),
        5 if StripSpec::from_parts(5, n, &[0, 0], &[0, 0]).as_ref() == Ok(spec) && n >= 2 => {
            Some(("closed_form", count_5strip(n)))
        }
        _ => None,
    }
}

/// The `(n, p, q)` whose alpha or beta class is this descent set, if any.
fn thm5_class(size: u32, descents: &[u32]) -> Option<BigInt> {
    for n in 1..=size / 2 {
        for p in 0..=size {
            for q in 0..=size {
                if 2 * n + p + q > size {
                    break;
                }
                if alpha_class(n, p, q) == (size, descents.to_vec()) {
                    return x_coeff(2 * n as i64 - 1, p, q).ok().map(|x| scaled(x, size));
                }
                if beta_class(n, p, q) == (size, descents.to_vec()) {
                    return x_coeff(2 * n as i64, p, q).ok().map(|x| scaled(x, size));
                }
            }
        }
    }
    None
}

fn scaled(x: BigRat, size: u32) -> BigInt {
    let v = x * BigRat::from_integer(syt_core::arith::factorial(size as u64));
    v.to_integer()
}

fn backtrack_or_skip(r: &mut Report, shape: &SkewShape, g: &Global, budget: &Budget) -> Result<()> {
    if shape.n_cells() <= budget.max_backtrack_cells {
        r.timed(g.timings, "backtrack", || Ok(count_syt_backtrack_with(shape, budget)?))
    } else {
        r.note("backtrack", format!("skipped: {} cells", shape.n_cells()));
        Ok(())
    }
}

pub fn count_report(text: &ShapeText, method: Method, g: &Global) -> Result<Report> {
    let budget = g.budget();
    let shape = text.to_shape()?;
    let mut r = Report::new(text.to_string());
    let t = g.timings;
    match method {
        Method::Dp => r.timed(t, "dp", || Ok(count_syt_dp_with(&shape, &budget)?))?,
        Method::Backtrack => r.timed(t, "backtrack", || Ok(count_syt_backtrack_with(&shape, &budget)?))?,
        Method::Aitken => r.timed(t, "aitken", || Ok(count_syt_aitken(&shape)))?,
        Method::Auto => match text {
            ShapeText::Strip(spec) => r.timed(t, "thm4", || Ok(count_strip(spec)?))?,
            _ => r.timed(t, "aitken", || Ok(count_syt_aitken(&shape)))?,
        },
        Method::All => {
            r.timed(t, "dp", || Ok(count_syt_dp_with(&shape, &budget)?))?;
            r.timed(t, "aitken", || Ok(count_syt_aitken(&shape)))?;
            backtrack_or_skip(&mut r, &shape, g, &budget)?;
            match text {
                ShapeText::Strip(spec) => {
                    r.timed(t, "thm4", || Ok(count_strip(spec)?))?;
                    if let Some((name, v)) = closed_form(spec) {
                        r.timed(t, name, || Ok(v?))?;
                    }
                }
                ShapeText::Ribbon { size, descents } => {
                    if *size <= DESCENT_BRUTE_MAX {
                        r.timed(t, "permutations", || Ok(count_descent_class(*size, descents)?))?;
                    }
                    if let Some(v) = thm5_class(*size, descents) {
                        r.timed(t, "thm5", || Ok(v))?;
                    }
                }
                ShapeText::Skew(_) => {}
            }
        }
    }
    Ok(r)
}

fn volume(text: &str, g: &Global) -> Result<Output> {
    let shape = parse_shape(text)?;
    let v = order_polytope_volume_with(&shape, &g.budget())?;
    let frac = format!("{}/{}", v.numer(), v.denom());
    match g.format {
        Format::Table => Ok(Output { text: frac + "\n", ok: true }),
        format => {
            let mut r = Report::new(text.parse::<ShapeText>()?.to_string());
            r.note("volume", frac);
            Ok(Output::reports(&[r], format))
        }
    }
}

fn series(name: &str, order: usize, n: Option<u32>, format: Format) -> Result<Output> {
    if let Ok(kind) = name.parse::<SeriesKind>() {
        let n = n.ok_or_else(|| anyhow!("--n is required for `{name}`"))?;
        let c = spectral_series_check(kind, n, order)?;
        let mut r = Report::new(format!("{kind}:n={n};terms={order}"));
        r.float("approx", c.approx);
        r.note("exact", &c.exact);
        r.float("relerr", c.relerr);
        return Ok(Output::reports(&[r], format));
    }
    let name: SeriesName = name.parse()?;
    let s = series_coefficients(name, order);
    Ok(Output { text: indexed(s.coeffs(), 0, format), ok: true })
}

pub fn spectral_reports(m: u32, modes: usize, opts: &VerifyOptions) -> Result<Vec<Report>> {
    let modes = leading_modes(m, modes)?;
    let rep = verify_modes(m, &modes, opts)?;
    let mut out = Vec::new();
    for mr in &rep.modes {
        let idx: Vec<String> = mr.mode.indices().iter().map(|j| j.to_string()).collect();
        let mut r = Report::new(format!("spectral:m={m};mode={}", idx.join(",")));
        r.float("eigenvalue", mr.eigenvalue);
        r.float("residual", mr.residual);
        r.tolerance(mr.residual <= rep.tol);
        out.push(r);
    }
    let mut r = Report::new(format!("spectral:m={m};gram"));
    r.float("deviation", rep.gram_deviation);
    r.note("grid", rep.order);
    r.note("tol", fmt_float(rep.tol));
    r.tolerance(rep.gram_deviation <= rep.tol);
    out.push(r);
    Ok(out)
}
