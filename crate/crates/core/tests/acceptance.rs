//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use syt_core::arith::{factorial, int_rat, next_permutation, pow2, rat};
use syt_core::counting::{
    count_descent_class, count_syt_aitken, count_syt_backtrack_with, count_syt_dp,
};
use syt_core::formulas::{
    alpha_beta, alpha_class, beta_class, count_3strip, count_4strip, count_5strip, count_strip,
    x_coeff, Strip3, Strip4,
};
use syt_core::numbers::{
    bernoulli_numbers, euler_tangent_numbers, series_coefficients, zigzag_numbers, ScaledTable,
    SeriesName,
};
use syt_core::polytope::{elkies_inner, order_polytope_volume, schur_recursion_check};
use syt_core::shapes::{make_skew, ribbon_from_descents, strip_shape};
use syt_core::spectral::{
    i_integral_check, leading_modes, spectral_series_check, verify_modes, x_series_check,
    SeriesKind, VerifyOptions,
};
use syt_core::{BigInt, Budget, Partition, SkewShape, StripSpec};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn strip(m: u32, n: u32, head: &[u32], tail: &[u32]) -> StripSpec {
    StripSpec::from_parts(m, n, head, tail).unwrap()
}

fn dp_of(spec: &StripSpec) -> BigInt {
    count_syt_dp(&strip_shape(spec).unwrap()).unwrap()
}

fn boxed_partitions(k: usize, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for p in &out {
            let cap = p.last().copied().unwrap_or(max_part);
            for v in 0..=cap {
                let mut q: Vec<u32> = p.clone();
                q.push(v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Every valid strip with `m`, `n` in range and head and tail parts at most `max_part`.
fn strips(ms: impl Iterator<Item = u32>, ns: impl Fn(u32) -> Vec<u32>, max_part: u32) -> Vec<StripSpec> {
    let mut out = Vec::new();
    for m in ms {
        let k = (m / 2) as usize;
        for n in ns(m) {
            for h in boxed_partitions(k, max_part) {
                for t in boxed_partitions(k, max_part) {
                    if let Ok(s) = StripSpec::from_parts(m, n, &h, &t) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

fn updown_brute(n: usize) -> u64 {
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut count = 0;
    loop {
        // sigma_1 < sigma_2 > sigma_3 < ...
        if perm.windows(2).enumerate().all(|(i, w)| (w[0] < w[1]) == (i % 2 == 0)) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

fn c1_zigzag() -> Outcome {
    let a = zigzag_numbers(100);
    for n in 0..=10 {
        let brute = updown_brute(n);
        ensure(a[n] == BigInt::from(brute), || format!("A_{n} = {} but brute force gives {brute}", a[n]))?;
    }
    let et = euler_tangent_numbers(50);
    let b = bernoulli_numbers(100);
    for n in 1..=50usize {
        let sign: i32 = if n % 2 == 0 { 1 } else { -1 };
        ensure(et.euler(n) == &(a[2 * n].clone() * sign), || format!("E_{} != (-1)^n A_{}", 2 * n, 2 * n))?;
        ensure(et.tangent(n) == &a[2 * n - 1], || format!("T_{n} != A_{}", 2 * n - 1))?;
        let four = int_rat(pow2(2 * n as u32));
        let mut t = four.clone() * (four - int_rat(BigInt::one())) * &b[2 * n] / int_rat(BigInt::from(2 * n));
        if n % 2 == 0 {
            t = -t;
        }
        ensure(t == int_rat(a[2 * n - 1].clone()), || format!("tangent-Bernoulli relation fails at n = {n}"))?;
    }
    Ok("A_n brute force for n <= 10; Euler, tangent and Bernoulli relations for n <= 50".into())
}

fn random_shape(rng: &mut SmallRng) -> SkewShape {
    loop {
        let rows = rng.gen_range(1..=5);
        let mut lam: Vec<u32> = (0..rows).map(|_| rng.gen_range(1..=6)).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let mut mu: Vec<u32> = lam.iter().map(|&l| rng.gen_range(0..=l)).collect();
        for i in 1..mu.len() {
            mu[i] = mu[i].min(mu[i - 1]);
        }
        let s = make_skew(&Partition::new(lam).unwrap(), &Partition::new(mu).unwrap()).unwrap();
        if (1..=11).contains(&s.n_cells()) {
            return s;
        }
    }
}

fn c2_three_way() -> Outcome {
    let mut rng = SmallRng::seed_from_u64(2024);
    for _ in 0..300 {
        let s = random_shape(&mut rng);
        let dp = count_syt_dp(&s).unwrap();
        let bt = count_syt_backtrack_with(&s, &Budget::default()).unwrap();
        let ai = count_syt_aitken(&s);
        ensure(dp == bt && dp == ai, || format!("{s}: dp {dp}, backtrack {bt}, aitken {ai}"))?;
    }
    // backtracking visits every tableau, so it is run where the count is small
    let open = Budget { max_backtrack_cells: usize::MAX, ..Budget::default() };
    let specs = strips(2..=5, |_| (1..=6).collect(), 1);
    let mut backtracked = 0;
    for spec in &specs {
        let s = strip_shape(spec).unwrap();
        let dp = count_syt_dp(&s).unwrap();
        let ai = count_syt_aitken(&s);
        ensure(dp == ai, || format!("{spec}: dp {dp}, aitken {ai}"))?;
        if dp <= BigInt::from(2_000_000) {
            let bt = count_syt_backtrack_with(&s, &open).unwrap();
            ensure(dp == bt, || format!("{spec}: dp {dp}, backtrack {bt}"))?;
            backtracked += 1;
        }
    }
    Ok(format!(
        "300 random shapes three ways; {} strips dp = aitken, {backtracked} of them also by backtracking",
        specs.len()
    ))
}

fn c3_three_strip() -> Outcome {
    for v in [Strip3::A, Strip3::B, Strip3::C] {
        for n in 1..=8 {
            let spec = v.spec(n).unwrap();
            let f = count_3strip(v, n).unwrap();
            let dp = dp_of(&spec);
            let t4 = count_strip(&spec).unwrap();
            ensure(f == dp && f == t4, || format!("{v:?} n={n}: closed {f}, dp {dp}, det {t4}"))?;
        }
    }
    ensure(count_3strip(Strip3::C, 2).unwrap() == BigInt::from(14), || "C at n=2 is not 14".into())?;
    Ok("variants A, B, C for n = 1..8".into())
}

fn c4_four_strip() -> Outcome {
    for v in [Strip4::F, Strip4::G] {
        for n in 1..=6 {
            let f = count_4strip(v, n).unwrap();
            let dp = dp_of(&v.spec(n).unwrap());
            ensure(f == dp, || format!("{v:?} n={n}: closed {f}, dp {dp}"))?;
        }
    }
    ensure(count_4strip(Strip4::F, 2).unwrap() == BigInt::from(5), || "F at n=2 is not 5".into())?;
    Ok("variants F, G for n = 1..6".into())
}

fn c5_five_strip() -> Outcome {
    for n in 2..=6 {
        let spec = strip(5, n, &[0, 0], &[0, 0]);
        let f = count_5strip(n).unwrap();
        let dp = dp_of(&spec);
        let t4 = count_strip(&spec).unwrap();
        ensure(f == dp && f == t4, || format!("n={n}: closed {f}, dp {dp}, det {t4}"))?;
    }
    Ok("n = 2..6".into())
}

fn c6_strip_determinant() -> Outcome {
    let specs = strips(2..=7, |m| (m / 2 * 2..=m / 2 * 2 + 4).collect(), 2);
    for spec in &specs {
        let t4 = count_strip(spec).map_err(|e| format!("{spec}: {e}"))?;
        ensure(!t4.is_negative(), || format!("{spec}: negative"))?;
        let dp = dp_of(spec);
        ensure(t4 == dp, || format!("{spec}: det {t4}, dp {dp}"))?;
    }
    Ok(format!("{} strips, m = 2..7, n in [2k, 2k+4], parts <= 2", specs.len()))
}

fn c7_descent_classes() -> Outcome {
    let mut brute = 0;
    let mut ribbons = 0;
    for n in 1..=8u32 {
        for p in 0..=14u32 {
            for q in 0..=14u32 {
                let (sa, da) = alpha_class(n, p, q);
                let (sb, db) = beta_class(n, p, q);
                if sa > 16 {
                    continue;
                }
                let (alpha, beta) = alpha_beta(n, p, q).unwrap();
                if 2 * n + p + q <= 9 {
                    let ca = count_descent_class(sa, &da).unwrap();
                    let cb = count_descent_class(sb, &db).unwrap();
                    ensure(alpha == ca && beta == cb, || format!("n={n} p={p} q={q}: {alpha}/{beta} vs {ca}/{cb}"))?;
                    brute += 1;
                }
                let ra = count_syt_dp(&ribbon_from_descents(&da, sa).unwrap()).unwrap();
                ensure(alpha == ra, || format!("alpha n={n} p={p} q={q}: {alpha} vs ribbon {ra}"))?;
                ribbons += 1;
                if sb <= 16 {
                    let rb = count_syt_dp(&ribbon_from_descents(&db, sb).unwrap()).unwrap();
                    ensure(beta == rb, || format!("beta n={n} p={p} q={q}: {beta} vs ribbon {rb}"))?;
                    ribbons += 1;
                }
            }
        }
    }
    Ok(format!("{brute} (n,p,q) against permutations, {ribbons} ribbons up to 16 cells"))
}

fn c8_worked_matrix() -> Outcome {
    let t = ScaledTable::new(20);
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    for n in 2..=6usize {
        let nn = 2 * n as i64 - 3;
        let (a0, a1, a2) = (t.abar(2 * n - 2), t.abar(2 * n), t.abar(2 * n + 2));
        ensure(x_coeff(nn, 0, 0).unwrap() == *a0, || format!("X(0,0) at n={n}"))?;
        ensure(x_coeff(nn, 0, 2).unwrap() == &half * a0 - a1, || format!("X(0,2) at n={n}"))?;
        ensure(x_coeff(nn, 2, 2).unwrap() == &quarter * a0 - a1 + a2, || format!("X(2,2) at n={n}"))?;
    }
    Ok("X_{2n-3}(0,0), (0,2), (2,2) for n = 2..6".into())
}

fn c9_polytope() -> Outcome {
    let specs = strips(2..=5, |_| (1..=6).collect(), 1);
    for spec in &specs {
        let s = strip_shape(spec).unwrap();
        let v = order_polytope_volume(&s).map_err(|e| format!("{spec}: {e}"))?;
        let dp = count_syt_dp(&s).unwrap();
        ensure(v * int_rat(factorial(s.n_cells() as u64)) == int_rat(dp.clone()), || format!("{spec}: volume mismatch"))?;
    }
    for n in 0..=8 {
        for p in 0..=4 {
            for q in 0..=4 {
                ensure(elkies_inner(n, p, q).unwrap() == x_coeff(n as i64, p, q).unwrap(), || {
                    format!("Elkies N={n} p={p} q={q}")
                })?;
            }
        }
    }
    let mut schur = 0;
    for k in 1..=3 {
        for parts in boxed_partitions(k, 4) {
            if parts.iter().sum::<u32>() > 4 {
                continue;
            }
            let lam = Partition::new(parts.clone()).unwrap();
            ensure(schur_recursion_check(&lam, k).unwrap(), || format!("Schur recursion {parts:?}, k={k}"))?;
            schur += 1;
        }
    }
    Ok(format!("{} strip volumes, 225 Elkies coefficients, {schur} Schur recursions", specs.len()))
}

fn c10_generating_function() -> Outcome {
    let gf = series_coefficients(SeriesName::Strip3Gf, 16);
    for n in 1..=8u32 {
        let f = count_3strip(Strip3::C, n).unwrap();
        let want = int_rat(f) / int_rat(factorial(3 * n as u64));
        ensure(gf.coeff(2 * n as usize) == &want, || format!("coefficient of x^{}", 2 * n))?;
        ensure(gf.coeff(2 * n as usize - 1).is_zero(), || format!("odd coefficient {}", 2 * n - 1))?;
    }
    Ok("coefficients of x^{2n} for n <= 8".into())
}

fn c11_spectral() -> Outcome {
    let mut worst: f64 = 0.0;
    for (m, modes, order, samples) in [(3, 6, 32, 8), (4, 4, 32, 8), (5, 3, 16, 4)] {
        let opts = VerifyOptions { order, samples, seed: 11, tol: 1e-8 };
        let rep = verify_modes(m, &leading_modes(m, modes).unwrap(), &opts).unwrap();
        for r in &rep.modes {
            worst = worst.max(r.residual);
        }
        worst = worst.max(rep.gram_deviation);
        ensure(rep.passed, || format!("m={m}: {rep:?}"))?;
    }
    for n in 2..=8 {
        let c = spectral_series_check(SeriesKind::UpdownEq9, n, 1000).unwrap();
        ensure(c.relerr <= 1e-6, || format!("A_{n} series relerr {}", c.relerr))?;
    }
    for (a, j) in [(0, 1), (1, 1), (1, 2), (2, 1), (3, 2), (4, 3), (5, 2)] {
        let (closed, quad) = i_integral_check(a, j);
        ensure((closed - quad).abs() <= 1e-12, || format!("I({a},{j}): {closed} vs {quad}"))?;
    }
    for (n, p, q, terms, tol) in [(3, 0, 0, 10_000, 1e-8), (5, 2, 0, 1000, 1e-9), (2, 1, 1, 100_000, 1e-6)] {
        let e = x_series_check(n, p, q, terms).unwrap();
        ensure(e <= tol, || format!("X_{n}({p},{q}) series relerr {e}"))?;
    }
    Ok(format!("m = 3, 4, 5; worst residual or Gram deviation {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 11] = [
        (1, "zig-zag sanity", Duration::from_secs(1), c1_zigzag),
        (2, "three-way oracle agreement", Duration::from_secs(30), c2_three_way),
        (3, "3-strip closed forms", Duration::from_secs(5), c3_three_strip),
        (4, "4-strip closed forms", Duration::from_secs(5), c4_four_strip),
        (5, "5-strip closed form", Duration::from_secs(30), c5_five_strip),
        (6, "determinant formula sweep", Duration::from_secs(300), c6_strip_determinant),
        (7, "descent classes", Duration::from_secs(60), c7_descent_classes),
        (8, "worked matrix entries", Duration::from_secs(5), c8_worked_matrix),
        (9, "polytope engine", Duration::from_secs(120), c9_polytope),
        (10, "3-strip generating function", Duration::from_secs(5), c10_generating_function),
        (11, "spectral checks", Duration::from_secs(120), c11_spectral),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed <= limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(msg) => println!("criterion {id:>2} PASS  {name} ({elapsed:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} ({elapsed:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        println!("all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 11 criteria failed");
        ExitCode::FAILURE
    }
}
