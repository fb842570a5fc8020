//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Wall-time limits are part of each criterion.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::{adjacent, small_instances, Naive};
use toticay::domsolve::{check_set, Budget, DomMode, DomResult, Outcome, VertexSet};
use toticay::graph::build_graph;
use toticay::numtheory::consecutive_runs;
use toticay::paperlab::{
    run_verification, verify_witness_table, witness_checks, Computed, ParamField, TableId,
    Verdict, VerificationReport,
};

/// Expected values; `None` for gamma_c means "does not exist".
struct Expect {
    p: u64,
    m: u64,
    n: usize,
    gamma: usize,
    gamma_t: usize,
    gamma_c: Option<usize>,
    diam: usize,
}

/// Instance with its exact gamma, gamma_t and gamma_c; the inner `None` of
/// gamma_c means "does not exist".
type Triple = ((u64, u64), Option<usize>, Option<usize>, Option<Option<usize>>);

#[derive(Default)]
struct Ctx {
    /// Every instance built during the run.
    instances: Vec<(u64, u64)>,
    exact: Vec<Triple>,
    passed: usize,
    failed: Vec<usize>,
}

impl Ctx {
    fn record(&mut self, r: &VerificationReport) {
        let key = (r.instance.p, r.instance.m);
        if !self.instances.contains(&key) {
            self.instances.push(key);
        }
        let ex = |mode| r.result(mode).exact();
        let c = match r.result(DomMode::Connected).outcome {
            Outcome::Nonexistent => Some(None),
            Outcome::Exact { value, .. } => Some(Some(value)),
            Outcome::Interval { .. } => None,
        };
        self.exact.push((key, ex(DomMode::Dominating), ex(DomMode::Total), c));
    }

    fn line(&mut self, n: usize, ok: bool, detail: &str, elapsed: Duration, limit: Duration) {
        let in_time = elapsed < limit;
        let pass = ok && in_time;
        let status = if pass { "PASS" } else { "FAIL" };
        let timing = format!("{:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs());
        println!("criterion {n:02} {status}  {detail}  [{timing}]");
        if !in_time {
            println!("             over the time limit");
        }
        std::io::stdout().flush().ok();
        if pass {
            self.passed += 1;
        } else {
            self.failed.push(n);
        }
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn show(c: Computed) -> String {
    match c {
        Computed::Exact { value } => value.to_string(),
        Computed::Interval { lower, upper } => format!("[{lower},{upper}]"),
        Computed::Nonexistent => "none".into(),
    }
}

/// Witness of a solve, re-checked by the crate and by the gcd oracle.
fn witness_ok(naive: &Naive, r: &DomResult) -> bool {
    let Some(w) = r.witness() else { return false };
    let g = build_graph(naive.p, naive.m).unwrap();
    let pairs: Vec<(u64, u64)> = w.vertices().iter().map(|x| (x.u, x.v)).collect();
    let code = match r.mode {
        DomMode::Dominating => 'd',
        DomMode::Total => 't',
        DomMode::Connected => 'c',
    };
    check_set(&g, w, r.mode) && naive.dominates(&pairs, code)
}

fn exact_instance(ctx: &mut Ctx, e: &Expect, budget: Duration) -> (bool, String) {
    let r = run_verification(e.p, e.m, Budget::with_time(budget)).unwrap();
    ctx.record(&r);
    let naive = Naive::new(e.p, e.m);
    let c = |f| r.field(f).computed;
    let gamma_c = match e.gamma_c {
        Some(value) => Computed::Exact { value },
        None => Computed::Nonexistent,
    };
    let witnesses = r
        .results
        .iter()
        .filter(|x| x.outcome != Outcome::Nonexistent)
        .all(|x| witness_ok(&naive, x));
    let ok = r.instance.n == e.n
        && c(ParamField::Gamma) == Computed::Exact { value: e.gamma }
        && c(ParamField::GammaT) == Computed::Exact { value: e.gamma_t }
        && c(ParamField::GammaC) == gamma_c
        && c(ParamField::Diam) == Computed::Exact { value: e.diam }
        && witnesses;
    let detail = format!(
        "({},{}) n={} gamma={} gamma_t={} gamma_c={} diam={}",
        e.p,
        e.m,
        r.instance.n,
        show(c(ParamField::Gamma)),
        show(c(ParamField::GammaT)),
        show(c(ParamField::GammaC)),
        show(c(ParamField::Diam)),
    );
    (ok, detail)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn expect(p: u64, m: u64, gamma: usize, gamma_t: usize, gamma_c: Option<usize>, diam: usize) -> Expect {
    Expect { p, m, n: (p * m) as usize, gamma, gamma_t, gamma_c, diam }
}

fn criteria_1_to_8(ctx: &mut Ctx) {
    let single = [
        (1, expect(2, 2, 2, 4, None, 1), 1),
        (2, expect(2, 16, 4, 4, None, 2), 1),
    ];
    for (n, e, limit) in single {
        let ((ok, d), t) = timed(|| exact_instance(ctx, &e, secs(limit)));
        ctx.line(n, ok, &d, t, secs(limit));
    }

    let ((ok, d), t) = timed(|| {
        let a = exact_instance(ctx, &expect(3, 9, 3, 3, Some(3), 2), secs(1));
        let b = exact_instance(ctx, &expect(3, 3, 3, 3, Some(3), 2), secs(1));
        (a.0 && b.0, format!("{}; {}", a.1, b.1))
    });
    ctx.line(3, ok, &d, t, secs(1));

    let ((ok, d), t) = timed(|| exact_instance(ctx, &expect(3, 15, 4, 5, Some(5), 2), secs(10)));
    ctx.line(4, ok, &d, t, secs(10));

    let ((ok, d), t) = timed(|| {
        let a = exact_instance(ctx, &expect(2, 12, 8, 8, None, 3), secs(10));
        let b = exact_instance(ctx, &expect(2, 18, 8, 8, None, 3), secs(10));
        let r = run_verification(2, 36, Budget::with_time(secs(10))).unwrap();
        ctx.record(&r);
        let remark = r.remark.as_ref().map(|x| (x.bound, x.gamma, x.gamma_t));
        let bound_ok = remark == Some((8, Verdict::Consistent, Verdict::Consistent));
        let bd = format!(
            "(2,36) gamma={} gamma_t={} vs 4k+4=8: {}",
            show(r.field(ParamField::Gamma).computed),
            show(r.field(ParamField::GammaT).computed),
            if bound_ok { "holds" } else { "not shown" }
        );
        (a.0 && b.0 && bound_ok, format!("{}; {}; {}", a.1, b.1, bd))
    });
    ctx.line(5, ok, &d, t, secs(30));

    let ((ok, d), t) = timed(|| exact_instance(ctx, &expect(3, 18, 6, 6, Some(7), 3), secs(60)));
    ctx.line(6, ok, &d, t, secs(60));

    let ((ok, d), t) = timed(|| {
        let (ok, d) = exact_instance(ctx, &expect(5, 35, 4, 4, Some(4), 2), secs(120));
        let g = build_graph(5, 35).unwrap();
        let cert = VertexSet::from_pairs(5, 35, &[(0, 0), (1, 1), (2, 2), (3, 3)]).unwrap();
        let naive = Naive::new(5, 35);
        let pairs = [(0, 0), (1, 1), (2, 2), (3, 3)];
        let cert_ok = DomMode::ALL.iter().all(|&mode| check_set(&g, &cert, mode))
            && ['d', 't', 'c'].iter().all(|&c| naive.dominates(&pairs, c));
        let cd = if cert_ok { "certificate holds" } else { "certificate FAILS" };
        (ok && cert_ok, format!("{d}; {cd}"))
    });
    ctx.line(7, ok, &d, t, secs(120));

    let ((ok, d), t) = timed(|| exact_instance(ctx, &expect(2, 30, 8, 12, None, 3), secs(120)));
    ctx.line(8, ok, &d, t, secs(120));
}

fn criterion_9(ctx: &mut Ctx) {
    let ((ok, d), t) = timed(|| {
        let got: Vec<(u64, u64)> =
            [15, 105, 30].iter().map(|&m| (m, consecutive_runs(m).unwrap().lambda)).collect();
        let ok = got == vec![(15, 2), (105, 4), (30, 5)];
        let d: Vec<String> = got.iter().map(|(m, l)| format!("lambda({m})={l}")).collect();
        (ok, d.join(" "))
    });
    ctx.line(9, ok, &d, t, secs(1));
}

fn criterion_10(ctx: &mut Ctx) {
    let ((ok, d), t) = timed(|| {
        let mut ok = true;
        let mut parts = Vec::new();
        for (p, m, table) in [(2, 30, TableId::Dia1), (2, 30, TableId::Dia2), (3, 105, TableId::Dia3)] {
            let g = build_graph(p, m).unwrap();
            let rep = verify_witness_table(&g, table).unwrap();
            let confirmed = witness_checks(&g, table).unwrap().iter().filter(|c| c.valid).all(|c| {
                c.path.windows(2).all(|h| adjacent(p, m, (h[0].u, h[0].v), (h[1].u, h[1].v)))
                    && g.distance(c.a, c.b).unwrap().is_some_and(|d| (d as usize) < c.path.len())
            });
            let covered = rep.coverage() >= 0.95;
            ok &= covered && confirmed;
            let bad_rows: Vec<String> =
                rep.rows.iter().filter(|r| r.invalid > 0).map(|r| r.row.to_string()).collect();
            parts.push(format!(
                "{table} ({p},{m}) classified {}/{} ({:.1}%){} valid confirmed={} failures={} rows [{}]",
                rep.classified,
                rep.eligible,
                100.0 * rep.coverage(),
                if covered { "" } else { " below 95%" },
                confirmed,
                rep.failure_count,
                bad_rows.join(",")
            ));
        }
        (ok, parts.join("; "))
    });
    ctx.line(10, ok, &d, t, secs(60));
}

fn criterion_11(ctx: &mut Ctx) {
    let ((ok, d), t) = timed(|| {
        let r = run_verification(3, 30, Budget::with_time(secs(600))).unwrap();
        ctx.record(&r);
        let certs = r.certificates.iter().all(|c| c.holds());
        let mut ok = r.field(ParamField::Diam).computed == Computed::Exact { value: 3 };
        let mut parts = vec![format!("(3,30) diam={}", show(r.field(ParamField::Diam).computed))];
        for (field, want) in [(ParamField::Gamma, 8), (ParamField::GammaT, 10), (ParamField::GammaC, 12)] {
            let c = r.field(field).computed;
            let good = match c {
                Computed::Exact { value } => value == want,
                Computed::Interval { lower, upper } => lower <= want && want <= upper && certs,
                Computed::Nonexistent => false,
            };
            ok &= good;
            parts.push(format!("{}={} (expected {want})", field.label(), show(c)));
        }
        parts.push(format!("certificates {}", if certs { "hold" } else { "FAIL" }));
        (ok, parts.join(" "))
    });
    ctx.line(11, ok, &d, t, secs(3 * 600 + 60));
}

fn criterion_12(ctx: &mut Ctx) {
    const BUDGET: u64 = 120;
    let ((ok, d), t) = timed(|| {
        let r = run_verification(3, 105, Budget::with_time(secs(BUDGET))).unwrap();
        ctx.record(&r);
        let naive = Naive::new(3, 105);
        let mut ok = r.field(ParamField::Diam).computed == Computed::Exact { value: 2 };
        let mut parts = vec![format!("(3,105) diam={}", show(r.field(ParamField::Diam).computed))];
        for mode in DomMode::ALL {
            let res = r.result(mode);
            let (lo, hi) = res.bounds().expect("connected graph");
            let cert = hi <= 8 && witness_ok(&naive, res);
            let lower = if lo >= 6 { "lower bound reached" } else { "lower bound inconclusive" };
            ok &= cert && lo >= 6;
            parts.push(format!("{}=[{lo},{hi}] {lower}", mode.symbol()));
        }
        (ok, parts.join(" "))
    });
    ctx.line(12, ok, &d, t, secs(3 * BUDGET + 60));
}

fn criterion_13(ctx: &mut Ctx) {
    let ((ok, d), t) = timed(|| {
        let mut bad = Vec::new();
        let instances = small_instances(24);
        for &(p, m) in &instances {
            let r = run_verification(p, m, Budget::default()).unwrap();
            ctx.record(&r);
            let naive = Naive::new(p, m);
            for (mode, code) in DomMode::ALL.iter().zip(['d', 't', 'c']) {
                let got = r.result(*mode).exact();
                let want = naive.domination_number(code);
                let agree = match r.result(*mode).outcome {
                    Outcome::Nonexistent => want.is_none(),
                    _ => got.is_some() && got == want,
                };
                if !agree {
                    bad.push(format!("({p},{m}) {}", mode.symbol()));
                }
            }
        }
        let d = format!("{} instances x 3 modes, {} disagreements [{}]", instances.len(), bad.len(), bad.join(" "));
        (bad.is_empty(), d)
    });
    ctx.line(13, ok, &d, t, secs(120));
}

fn criterion_14(ctx: &mut Ctx) {
    let ((ok, d), t) = timed(|| {
        let mut bad = Vec::new();
        for &(p, m) in &ctx.instances {
            let g = build_graph(p, m).unwrap();
            let deg = g.degree();
            let mut good = (0..g.n()).all(|a| {
                let x = g.vertex(a);
                !g.adjacent(a, a)
                    && g.neighbor_ids(a).count() == deg
                    && (0..g.n()).all(|b| {
                        let y = g.vertex(b);
                        g.adjacent(a, b) == g.adjacent(b, a)
                            && g.adjacent(a, b) == adjacent(p, m, (x.u, x.v), (y.u, y.v))
                    })
            });
            let ecc = g.eccentricities();
            good &= ecc.windows(2).all(|w| w[0] == w[1]);
            let want = if p == 2 && m % 2 == 0 { 2 } else { 1 };
            good &= g.components().count == want;
            if !good {
                bad.push(format!("({p},{m})"));
            }
        }
        (bad.is_empty(), format!("{} instances checked, failing: [{}]", ctx.instances.len(), bad.join(" ")))
    });
    ctx.line(14, ok, &d, t, secs(120));
}

fn criterion_15(ctx: &mut Ctx) {
    let ((ok, d), t) = timed(|| {
        let mut bad = Vec::new();
        let mut checked = 0;
        for &(key, d, tt, c) in &ctx.exact {
            if let (Some(d), Some(tt)) = (d, tt) {
                checked += 1;
                if !(d <= tt && tt <= 2 * d) {
                    bad.push(format!("{key:?} gamma={d} gamma_t={tt}"));
                }
            }
            if let (Some(d), Some(Some(c))) = (d, c) {
                if d > c {
                    bad.push(format!("{key:?} gamma={d} gamma_c={c}"));
                }
            }
        }
        (bad.is_empty(), format!("{checked} exact results, violations: [{}]", bad.join("; ")))
    });
    ctx.line(15, ok, &d, t, secs(1));
}

fn main() {
    // `cargo test` passes harness flags; a name filter that does not match
    // "acceptance" skips the run.
    let args: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if args.iter().any(|a| !"acceptance".contains(a.as_str())) {
        return;
    }
    let mut ctx = Ctx::default();
    criteria_1_to_8(&mut ctx);
    criterion_9(&mut ctx);
    criterion_10(&mut ctx);
    criterion_11(&mut ctx);
    criterion_12(&mut ctx);
    criterion_13(&mut ctx);
    criterion_14(&mut ctx);
    criterion_15(&mut ctx);
    println!("acceptance: {} passed, {} failed {:?}", ctx.passed, ctx.failed.len(), ctx.failed);
    if !ctx.failed.is_empty() {
        std::process::exit(1);
    }
}
