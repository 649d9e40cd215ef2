//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
//! criterion is red. Run with `cargo test -p kirchhoff --test acceptance`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kirchhoff::spectral::rational::{ratio, to_f64};
use kirchhoff::spectral::{
    kf_resistance, kf_spectral, resistance_matrix, tree_count_checked, CrossCheck,
};
use kirchhoff::verify::random::{random_connected, random_connected_any, rng};
use kirchhoff::verify::{check_identity, verify_theorem, Identity, Status, TheoremParams, VerificationReport};
use kirchhoff::FamilySpec;
use rand::Rng;

struct Verdict {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Verdict {
    Verdict { ok: true, detail: detail.into() }
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Runs verifiers and requires PASS from each; details name the failures.
fn all_pass(runs: &[(&str, TheoremParams)]) -> Verdict {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (id, params) in runs {
        match verify_theorem(id, params) {
            Ok(report) => {
                checked += report.checked_count;
                if report.status != Status::Pass {
                    bad.push(describe(&report));
                }
            }
            Err(e) => bad.push(format!("{id}: {e}")),
        }
    }
    if bad.is_empty() {
        pass(format!("{} runs, {checked} instances", runs.len()))
    } else {
        verdict(false, bad.join("; "))
    }
}

fn describe(report: &VerificationReport) -> String {
    let params: Vec<String> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let first = report
        .counterexamples
        .first()
        .map(|c| format!(", e.g. {} vs expected {}", c.observed, c.expected))
        .unwrap_or_default();
    format!(
        "{} {} -> {} ({} counterexamples{first})",
        report.theorem_id,
        params.join(" "),
        report.status,
        report.counterexamples.len()
    )
}

fn starlike(n: usize, mut branches: Vec<usize>) -> FamilySpec {
    branches.sort_unstable_by(|a, b| b.cmp(a));
    FamilySpec::Starlike { n, branches }
}

fn catalogued(n: usize) -> Vec<FamilySpec> {
    let mut specs = vec![FamilySpec::Path(n), FamilySpec::Cycle(n), FamilySpec::Complete(n), FamilySpec::Q3(n), FamilySpec::R3(n)];
    specs.extend((3..=n).map(|k| FamilySpec::Lollipop { n, k }));
    if n >= 5 {
        specs.push(starlike(n, vec![n - 4, 2, 1]));
        specs.push(starlike(n, vec![n - 4, 1, 1, 1]));
        specs.push(FamilySpec::TriPath { n, k: [1, n - 4] });
    }
    if n >= 6 {
        specs.push(starlike(n, vec![n - 5, 3, 1]));
        specs.push(FamilySpec::TriPath { n, k: [2, n - 5] });
        specs.push(FamilySpec::Dumbbell { p: 3, q: 3, l: n - 5 });
    }
    if n >= 7 {
        specs.push(starlike(n, vec![n - 6, 4, 1]));
    }
    specs.push(FamilySpec::DoubleBranch { n, first: vec![1, 1], second: vec![2, 1] });
    specs.extend((1..=n / 2).map(|p| FamilySpec::KnMinusMatching { n, p }));
    specs.extend((1..=n.saturating_sub(2)).map(|p| FamilySpec::KnMinusStar { n, p }));
    specs.extend((1..=9).map(|i| FamilySpec::Catalog { n, i }));
    specs.retain(|s| s.validate().is_ok());
    specs
}

/// Family kind with the order-dependent parameters abstracted, for summaries.
fn kind_of(spec: &FamilySpec) -> String {
    match spec {
        FamilySpec::TriPath { k, .. } if k.contains(&1) => "tri-path (1,n-4)".to_string(),
        FamilySpec::TriPath { .. } => "tri-path (2,n-5)".to_string(),
        other => other.name().to_string(),
    }
}

fn criterion_1() -> Verdict {
    let mut checked = 0;
    let mut failures: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for n in 2..=40 {
        for spec in catalogued(n) {
            let Some(closed) = spec.closed_form_kf().expect("validated") else { continue };
            let numeric = kf_spectral(&spec.build().expect("validated")).expect("connected");
            checked += 1;
            if relative(numeric, to_f64(&closed)) > 1e-8 {
                failures.entry(kind_of(&spec)).or_default().push(n);
            }
        }
    }
    if failures.is_empty() {
        return pass(format!("{checked} family instances"));
    }
    let detail: Vec<String> = failures
        .iter()
        .map(|(kind, ns)| format!("{kind} at {} orders ({}..={})", ns.len(), ns[0], ns[ns.len() - 1]))
        .collect();
    verdict(false, format!("{checked} instances; mismatches: {}", detail.join(", ")))
}

fn bound_runs(id: &'static str) -> Vec<(&'static str, TheoremParams)> {
    let mut runs = Vec::new();
    for n in 6..=8 {
        for p in 2..=n / 2 {
            runs.push((id, TheoremParams::with_np(n, p)));
        }
    }
    runs
}

fn criterion_2() -> Verdict {
    all_pass(&bound_runs("lower-bound"))
}

fn criterion_3() -> Verdict {
    let mut runs = bound_runs("upper-bound");
    runs.extend(bound_runs("tree-count-bound"));
    all_pass(&runs)
}

fn criterion_4() -> Verdict {
    all_pass(&[11, 12, 13].map(|n| ("min-ordering", TheoremParams::with_n(n))))
}

fn criterion_5() -> Verdict {
    all_pass(&[9, 10].map(|n| ("tree-ordering", TheoremParams::with_n(n))))
}

fn criterion_6() -> Verdict {
    for n in [7i64, 8] {
        let lollipop = FamilySpec::Lollipop { n: n as usize, k: 3 }.closed_form_kf().unwrap().unwrap();
        if lollipop != ratio(n * n * n - 11 * n + 18, 6) {
            return verdict(false, format!("lollipop form at k = 3 differs from (n^3-11n+18)/6 at n = {n}"));
        }
    }
    let mut runs: Vec<(&str, TheoremParams)> = [7, 8].map(|n| ("unicyclic-max", TheoremParams::with_n(n))).to_vec();
    for n in [7, 8] {
        for k in 3..=5 {
            runs.push(("unicyclic-max", TheoremParams { girth: Some(k), ..TheoremParams::with_n(n) }));
        }
    }
    all_pass(&runs)
}

fn criterion_7() -> Verdict {
    let dumbbell = FamilySpec::Dumbbell { p: 3, q: 3, l: 3 }.closed_form_kf().unwrap().unwrap();
    if dumbbell != ratio(512 - 168 + 36, 6) {
        return verdict(false, "dumbbell form differs from (512-168+36)/6");
    }
    all_pass(&[("bicyclic-max", TheoremParams::with_n(8))])
}

fn criterion_8() -> Verdict {
    let runs: Vec<_> = (28..=40).map(|n| ("max-ordering", TheoremParams::with_n(n))).collect();
    let mut v = all_pass(&runs);
    if !v.ok {
        // one line per order is too long; keep the first
        v.detail = v.detail.split("; ").next().unwrap_or_default().to_string()
            + &format!(" (and {} more orders)", v.detail.matches("; ").count());
    }
    v
}

fn criterion_9() -> Verdict {
    let mut r = rng(20_240_901);
    let mut worst = BTreeMap::<&str, f64>::new();
    let mut bump = |key: &'static str, value: f64| {
        let slot = worst.entry(key).or_insert(0.0);
        *slot = slot.max(value);
    };
    let mut problems = Vec::new();
    let mut cross_checks = 0;
    for i in 0..1000 {
        let g = random_connected_any(&mut r, 2, 20);
        let n = g.order();
        let spectral = kf_spectral(&g).unwrap();
        bump("dual-route", relative(kf_resistance(&g).unwrap(), spectral));

        let res = resistance_matrix(&g).unwrap();
        let mut metric: f64 = 0.0;
        let mut path_gap: f64 = 0.0;
        let mut tree_gap: f64 = 0.0;
        for a in 0..n {
            metric = metric.max(res.get(a, a).abs());
            let d = g.shortest_paths(a).unwrap();
            for b in 0..n {
                metric = metric.max((res.get(a, b) - res.get(b, a)).abs());
                if a != b && res.get(a, b) <= 0.0 {
                    problems.push(format!("graph {i}: r({a},{b}) <= 0"));
                }
                for c in 0..n {
                    metric = metric.max(res.get(a, c) - res.get(a, b) - res.get(b, c));
                }
                let dist = d.dist[b].finite().unwrap() as f64;
                path_gap = path_gap.max(res.get(a, b) - dist);
                if g.is_tree() {
                    tree_gap = tree_gap.max((res.get(a, b) - dist).abs());
                }
            }
        }
        bump("metric axioms", metric);
        bump("r <= d", path_gap);
        bump("r = d on trees", tree_gap);

        let out = check_identity(&Identity::ComplementSpectrum { g: g.clone() }).unwrap();
        bump("complement spectrum", out.residual);

        let absent: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        if !absent.is_empty() {
            let edge = absent[r.gen_range(0..absent.len())];
            let out = check_identity(&Identity::Interlacing { g: g.clone(), edge }).unwrap();
            bump("interlacing", out.residual);
        }

        match tree_count_checked(&g).unwrap().check {
            CrossCheck::Agreed => cross_checks += 1,
            CrossCheck::Disagreed { spectral } => problems.push(format!("graph {i}: tree count vs spectral {spectral}")),
            CrossCheck::Skipped => {}
        }
        if i < 200 {
            let nh = r.gen_range(2..=10);
            let mh = r.gen_range(nh - 1..=nh * (nh - 1) / 2);
            let h = random_connected(&mut r, nh, mh);
            let (x1, x2) = (r.gen_range(0..n), r.gen_range(0..nh));
            let out = check_identity(&Identity::CutVertex { g1: g.clone(), x1, g2: h, x2 }).unwrap();
            bump("cut-vertex", out.residual / spectral.max(1.0));
        }
    }
    let limits = [
        ("dual-route", 1e-9),
        ("metric axioms", 1e-9),
        ("r <= d", 1e-9),
        ("r = d on trees", 1e-9),
        ("complement spectrum", 1e-8),
        ("interlacing", 1e-8),
        ("cut-vertex", 1e-8),
    ];
    for (key, limit) in limits {
        if worst.get(key).copied().unwrap_or(0.0) > limit {
            problems.push(format!("{key} residual {:.2e} > {limit:e}", worst[key]));
        }
    }
    let summary: Vec<String> = worst.iter().map(|(k, v)| format!("{k} {v:.1e}")).collect();
    let mut detail = format!("{}; {cross_checks} tree-count cross-checks", summary.join(", "));
    for p in &problems {
        detail.push_str("; ");
        detail.push_str(p);
    }
    verdict(problems.is_empty(), detail)
}

fn criterion_10() -> Verdict {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [10usize, 20, 28] {
        let numeric = kf_spectral(&FamilySpec::R3(n).build().unwrap()).unwrap();
        let ni = n as i64;
        let form = to_f64(&ratio(ni * ni * ni - 23 * ni + 66, 6));
        let gap = relative(numeric, form);
        ok &= gap <= 1e-8;
        detail.push(format!("n={n} gap {gap:.1e}"));
    }
    verdict(ok, detail.join(", "))
}

fn main() -> ExitCode {
    type Check = fn() -> Verdict;
    let criteria: [(u32, &str, Duration, Check); 10] = [
        (1, "closed-form regression, n <= 40", Duration::from_secs(30), criterion_1),
        (2, "lower bound exhaustive, n in 6..=8", Duration::from_secs(120), criterion_2),
        (3, "upper and spanning-tree bounds exhaustive", Duration::from_secs(180), criterion_3),
        (4, "minimal ordering G1..G9, n in 11..=13", Duration::from_secs(60), criterion_4),
        (5, "tree ordering, n in {9, 10}", Duration::from_secs(300), criterion_5),
        (6, "unicyclic maximum, n in {7, 8}", Duration::from_secs(120), criterion_6),
        (7, "bicyclic maximum, n = 8", Duration::from_secs(600), criterion_7),
        (8, "maximal ordering chain, n in 28..=40", Duration::from_secs(30), criterion_8),
        (9, "identity suite on random graphs", Duration::from_secs(120), criterion_9),
        (10, "R3 closed form at n in {10, 20, 28}", Duration::from_secs(30), criterion_10),
    ];
    let mut red = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let mut v = check();
        let elapsed = start.elapsed();
        if elapsed > limit {
            v.ok = false;
            v.detail = format!("over the {} s limit; {}", limit.as_secs(), v.detail);
        }
        red += usize::from(!v.ok);
        let status = if v.ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {id:>2}: {title} [{:.1} s] {}", elapsed.as_secs_f64(), v.detail);
    }
    println!("acceptance: {} of 10 criteria pass", 10 - red);
    if red == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
