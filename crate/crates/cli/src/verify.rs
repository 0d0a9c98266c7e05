use anyhow::Result;
use syt_core::arith::{factorial, int_rat, pow2};
use syt_core::counting::count_descent_class;
use syt_core::formulas::{alpha_beta, alpha_class, beta_class, x_coeff};
use syt_core::numbers::{bernoulli_numbers, euler_tangent_numbers, series_coefficients, zigzag_numbers, SeriesName};
use syt_core::polytope::{elkies_inner, schur_bialternant, schur_branching, schur_recursion_check};
use syt_core::shapes::ShapeText;
use syt_core::spectral::{
    i_integral_check, principal_product_check, spectral_series_check, x_series_check, SeriesKind,
    VerifyOptions,
};
use syt_core::{BigRat, Partition, StripSpec};

use crate::commands::{count_report, spectral_reports};
use crate::report::Report;
use crate::{Global, Method, Suite};

pub fn run_suite(suite: Suite, max_cells: usize, g: &Global) -> Result<Vec<Report>> {
    Ok(match suite {
        Suite::Numbers => numbers()?,
        Suite::Strips => strips(max_cells, g)?,
        Suite::Thm5 => thm5()?,
        Suite::Schur => schur()?,
        Suite::Elkies => elkies()?,
        Suite::Spectral => spectral()?,
        Suite::All => {
            let mut all = numbers()?;
            all.extend(strips(max_cells, g)?);
            all.extend(thm5()?);
            all.extend(schur()?);
            all.extend(elkies()?);
            all.extend(spectral()?);
            all
        }
    })
}

fn numbers() -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let a = zigzag_numbers(100);
    for n in 1..=10u32 {
        // up-down permutations: descents exactly at the even positions
        let evens: Vec<u32> = (1..n).filter(|d| d % 2 == 0).collect();
        let mut r = Report::new(format!("zigzag:n={n:02}"));
        r.exact("seidel", &a[n as usize]);
        r.exact("permutations", count_descent_class(n, &evens)?);
        out.push(r);
    }
    let et = euler_tangent_numbers(50);
    let b = bernoulli_numbers(100);
    let sec_tan = series_coefficients(SeriesName::TanPlusSec, 100);
    for n in 1..=50u32 {
        let nn = n as usize;
        let mut r = Report::new(format!("euler_tangent:n={n:02}"));
        let sign = if n % 2 == 0 { 1 } else { -1 };
        r.exact("euler", int_rat(et.euler(nn).clone()));
        r.exact("signed_zigzag", int_rat(a[2 * nn].clone() * sign));
        let mut s = Report::new(format!("tangent_bernoulli:n={n:02}"));
        let four = int_rat(pow2(2 * n));
        let mut t = four.clone() * (four - BigRat::from_integer(1.into())) * &b[2 * nn]
            / BigRat::from_integer((2 * n).into());
        if n % 2 == 0 {
            t = -t;
        }
        s.exact("tangent", int_rat(et.tangent(nn).clone()));
        s.exact("bernoulli", t);
        s.exact("series", sec_tan.coeff(2 * nn - 1) * int_rat(factorial(2 * n as u64 - 1)));
        out.push(r);
        out.push(s);
    }
    Ok(out)
}

fn strips(max_cells: usize, g: &Global) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for m in 2..=5u32 {
        let k = (m / 2) as usize;
        for n in 1..=6u32 {
            for head in boxed_partitions(k, 1) {
                for tail in boxed_partitions(k, 1) {
                    let Ok(spec) = StripSpec::from_parts(m, n, &head, &tail) else { continue };
                    if spec.expected_cells() as usize > max_cells {
                        continue;
                    }
                    out.push(count_report(&ShapeText::Strip(spec), Method::All, g)?);
                }
            }
        }
    }
    Ok(out)
}

pub fn boxed_partitions(k: usize, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                let cap = p.last().copied().unwrap_or(max_part);
                (0..=cap).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn thm5() -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 1..=4u32 {
        for p in 0..=9u32 {
            for q in 0..=9u32 {
                if 2 * n + p + q > 9 {
                    continue;
                }
                let (alpha, beta) = alpha_beta(n, p, q)?;
                let (sa, da) = alpha_class(n, p, q);
                let mut r = Report::new(format!("thm5:alpha;n={n},p={p},q={q}"));
                r.exact("thm5", &alpha);
                r.exact("permutations", count_descent_class(sa, &da)?);
                out.push(r);
                if 2 * n + 1 + p + q <= 10 {
                    let (sb, db) = beta_class(n, p, q);
                    let mut r = Report::new(format!("thm5:beta;n={n},p={p},q={q}"));
                    r.exact("thm5", &beta);
                    r.exact("permutations", count_descent_class(sb, &db)?);
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

fn partitions_up_to(size: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for parts in boxed_partitions(max_len, size) {
        let total: u32 = parts.iter().sum();
        if total <= size {
            out.push(parts);
        }
    }
    out
}

fn schur() -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let point = [BigRat::new(1.into(), 2.into()), BigRat::from_integer((-3).into()), BigRat::new(2.into(), 7.into())];
    for k in 1..=3usize {
        for parts in partitions_up_to(4, k) {
            let lam = Partition::new(parts.clone())?;
            let list: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            let mut r = Report::new(format!("schur:k={k};lambda={}", list.join(",")));
            let ok = schur_recursion_check(&lam, k)?;
            r.note("recursion", if ok { "pass" } else { "fail" });
            r.verdict(ok);
            r.exact("bialternant", schur_bialternant(&lam, &point[..k])?);
            r.exact("branching", schur_branching(&lam, &point[..k])?);
            out.push(r);
        }
    }
    Ok(out)
}

fn elkies() -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for n in 0..=8u32 {
        for p in 0..=4 {
            for q in 0..=4 {
                let mut r = Report::new(format!("elkies:N={n},p={p},q={q}"));
                r.exact("operator", elkies_inner(n, p, q)?);
                r.exact("x_coeff", x_coeff(n as i64, p, q)?);
                out.push(r);
            }
        }
    }
    Ok(out)
}

fn spectral() -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (m, modes, order, samples) in [(2, 6, 32, 8), (3, 6, 32, 8), (4, 4, 32, 8), (5, 3, 16, 4)] {
        let opts = VerifyOptions { order, samples, seed: 1, tol: 1e-8 };
        out.extend(spectral_reports(m, modes, &opts)?);
    }
    for n in 2..=8u32 {
        let c = spectral_series_check(SeriesKind::UpdownEq9, n, 1000)?;
        let mut r = Report::new(format!("series:updown_eq9;n={n}"));
        r.float("approx", c.approx);
        r.note("exact", &c.exact);
        r.float("relerr", c.relerr);
        r.tolerance(c.relerr <= 1e-6);
        out.push(r);
    }
    for (kind, n, terms, tol) in [
        (SeriesKind::Strip3Zeta, 2, 100_000, 1e-10),
        (SeriesKind::Strip3Zeta, 3, 1000, 1e-10),
        (SeriesKind::Strip4Euler, 1, 1000, 1e-8),
        (SeriesKind::Strip4Euler, 2, 1000, 1e-10),
    ] {
        let c = spectral_series_check(kind, n, terms)?;
        let mut r = Report::new(format!("series:{kind};n={n}"));
        r.float("approx", c.approx);
        r.note("exact", &c.exact);
        r.float("relerr", c.relerr);
        r.tolerance(c.relerr <= tol);
        out.push(r);
    }
    for (a, j) in [(0, 1), (1, 1), (2, 2), (3, 2), (4, 3)] {
        let (closed, quad) = i_integral_check(a, j);
        let mut r = Report::new(format!("cosine_moment:a={a},j={j}"));
        r.float("closed", closed);
        r.float("quadrature", quad);
        r.tolerance((closed - quad).abs() <= 1e-12);
        out.push(r);
    }
    for (n, p, q, terms, tol) in [(3, 0, 0, 10_000, 1e-8), (5, 2, 0, 1000, 1e-9), (2, 1, 1, 100_000, 1e-6)] {
        let err = x_series_check(n, p, q, terms)?;
        let mut r = Report::new(format!("x_series:N={n},p={p},q={q}"));
        r.float("relerr", err);
        r.tolerance(err <= tol);
        out.push(r);
    }
    for k in 1..=3 {
        let dev = principal_product_check(k, 20, 7);
        let mut r = Report::new(format!("principal_product:k={k}"));
        r.float("deviation", dev);
        r.tolerance(dev <= 1e-12);
        out.push(r);
    }
    Ok(out)
}
