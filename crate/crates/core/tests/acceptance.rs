//! Acceptance criteria, one line of output per criterion.
//!
//! Runs without the libtest harness so that every line is printed even when
//! all criteria pass. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use rank2_roots::oracle::{self, OrbitRoot};
use rank2_roots::verify::{self, SubsystemChecker, Tally, VerifyConfig};
use rank2_roots::{
    Family, IndexSets, Length, PhiKind, Progression, RealRoot, RootSystem, RootVector, Simple, SumLength,
};

/// Systems with `4 ≤ ab ≤ GRID_AB_MAX`.
const GRID_AB_MAX: u64 = 30;
const TABLE_SYSTEMS: [(i64, i64); 6] = [(5, 1), (4, 1), (3, 2), (2, 2), (7, 3), (5, 5)];
const NORM_INDEX_BOUND: i64 = 200;
const SUM_INDEX_BOUND: u64 = 60;
const NEIGHBOR_SYSTEMS: [i64; 4] = [4, 5, 6, 9];
const SUBSYSTEM_SAMPLES: usize = 500;
const SUBSYSTEM_GEN_INDEX: i64 = 12;
const SUBSYSTEM_WINDOW: u64 = 40;
const FULL_SPAN_SAMPLES: usize = 200;
const SEED: u64 = 0x5eed_2026;

/// Coefficients in `t = ab`, lowest degree first, for `j = 0..=8`.
const GAMMA_POLY: [&[i64]; 9] = [
    &[0],
    &[1],
    &[-2, 1],
    &[3, -4, 1],
    &[-4, 10, -6, 1],
    &[5, -20, 21, -8, 1],
    &[-6, 35, -56, 36, -10, 1],
    &[7, -56, 126, -120, 55, -12, 1],
    &[-8, 84, -252, 330, -220, 78, -14, 1],
];
const ETA_POLY: [&[i64]; 9] = [
    &[1],
    &[-1, 1],
    &[1, -3, 1],
    &[-1, 6, -5, 1],
    &[1, -10, 15, -7, 1],
    &[-1, 15, -35, 28, -9, 1],
    &[1, -21, 70, -84, 45, -11, 1],
    &[-1, 28, -126, 210, -165, 66, -13, 1],
    &[1, -36, 210, -462, 495, -286, 91, -15, 1],
];
/// `d = 1..=6`
const DELTA_POLY: [&[i64]; 6] = [
    &[-2, 1],
    &[2, -4, 1],
    &[-2, 9, -6, 1],
    &[2, -16, 20, -8, 1],
    &[-2, 25, -50, 35, -10, 1],
    &[2, -36, 105, -112, 54, -12, 1],
];
/// `d = 0..=6`
const EPSILON_POLY: [&[i64]; 7] = [
    &[1],
    &[-3, 1],
    &[5, -5, 1],
    &[-7, 14, -7, 1],
    &[9, -30, 27, -9, 1],
    &[-11, 55, -77, 44, -11, 1],
    &[13, -91, 182, -156, 65, -13, 1],
];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_tally(t: Tally) -> Self {
        let detail = match &t.failure {
            None => format!("{} checks", t.checks),
            Some(f) => format!("{} checks, first failure: {f}", t.checks),
        };
        Self {
            passed: t.failure.is_none(),
            detail,
        }
    }
}

fn poly(coeffs: &[i64], t: i64) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * t + c)
}

fn grid() -> Vec<RootSystem> {
    verify::grid(GRID_AB_MAX)
        .into_iter()
        .map(RootSystem::from_params)
        .collect()
}

fn sequence_tables() -> Outcome {
    let mut t = Tally::new();
    for (a, b) in TABLE_SYSTEMS {
        let sys = RootSystem::new(a, b).unwrap();
        let seq = sys.seq();
        let ab = a * b;
        for j in 0..=8 {
            t.check(seq.gamma(j as i64) == poly(GAMMA_POLY[j], ab), || format!("γ_{j} in H({a},{b})"));
            t.check(seq.eta(j as i64) == poly(ETA_POLY[j], ab), || format!("η_{j} in H({a},{b})"));
        }
        for d in 1..=6 {
            t.check(seq.delta(d as i64).unwrap() == poly(DELTA_POLY[d - 1], ab), || {
                format!("δ_{d} in H({a},{b})")
            });
        }
        for d in 0..=6 {
            t.check(seq.epsilon(d as i64).unwrap() == poly(EPSILON_POLY[d], ab), || {
                format!("ε_{d} in H({a},{b})")
            });
        }
    }
    Outcome::from_tally(t)
}

fn orbit_norms() -> Outcome {
    let mut t = Tally::new();
    for sys in grid() {
        let p = *sys.params();
        let (a, b) = (BigInt::from(p.a()), BigInt::from(p.b()));
        for f in Family::ALL {
            for j in -NORM_INDEX_BOUND..=NORM_INDEX_BOUND {
                let r = RealRoot::new(f, j);
                let n = sys.norm(&sys.coords(&r));
                let want = if f.in_long_orbit() { &a } else { &b };
                t.check(&n == want, || format!("N({r}) = {n} in {p}"));
            }
        }
    }
    Outcome::from_tally(t)
}

fn no_real_sums() -> Outcome {
    let mut t = Tally::new();
    for sys in grid().into_iter().filter(|s| s.params().b() > 1) {
        let p = *sys.params();
        let table = oracle::brute_sum_table(&p, SUM_INDEX_BOUND);
        t.check(table.is_empty(), || format!("{p}: {} real sums, first {:?}", table.len(), table[0]));
    }
    Outcome::from_tally(t)
}

type SumTriple = (RealRoot, RealRoot, RealRoot);

/// The four finite neighbor sets for `b = 1`, as coordinate vectors.
fn claimed_neighbors(a: i64, i: Simple, plus: bool) -> BTreeSet<RootVector> {
    let v = |x: i64, y: i64| RootVector::new(x, y);
    match (i, plus) {
        (Simple::One, true) => [v(0, 1)].into(),
        (Simple::One, false) => [v(1, 1)].into(),
        (Simple::Two, true) => [v(1, 0), v(1, a - 1)].into(),
        (Simple::Two, false) => [v(1, 1), v(1, a)].into(),
    }
}

fn neighbor_sets(triples: &mut Vec<(RootSystem, SumTriple)>) -> Outcome {
    let mut t = Tally::new();
    let mut failing = Vec::new();
    for a in NEIGHBOR_SYSTEMS {
        let sys = RootSystem::new(a, 1).unwrap();
        let p = *sys.params();
        let mut ok = true;
        for i in [Simple::One, Simple::Two] {
            for plus in [true, false] {
                let found = oracle::brute_simple_neighbors(&p, i, plus, SUM_INDEX_BOUND);
                let found_coords: BTreeSet<_> = found.iter().map(|r| OrbitRoot::from_label(*r).coords(&p)).collect();
                let claimed = claimed_neighbors(a, i, plus);
                let same = found_coords == claimed;
                ok &= same;
                t.check(same, || {
                    let extra: Vec<_> = found.iter().take(4).map(|r| r.to_string()).collect();
                    format!(
                        "H({a},1) β {} α{}: {} roots found ({}...), {} claimed",
                        if plus { "+" } else { "−" },
                        if i == Simple::One { 1 } else { 2 },
                        found.len(),
                        extra.join(", "),
                        claimed.len()
                    )
                });
                // α₁ = LL:0 and α₂ = SU:0
                let simple = RealRoot::new(if i == Simple::One { Family::LL } else { Family::SU }, 0);
                let mirror = if plus { simple } else { simple.negate() };
                for beta in found {
                    if let rank2_roots::RootClass::Real(s) =
                        sys.classify(&(&sys.coords(&beta) + &sys.coords(&mirror)))
                    {
                        triples.push((sys.clone(), (mirror, beta, s)));
                    }
                }
            }
        }
        if !ok {
            failing.push(format!("H({a},1)"));
        }
        for triple in oracle::brute_sum_table(&p, SUM_INDEX_BOUND) {
            triples.push((sys.clone(), triple));
        }
    }
    let mut out = Outcome::from_tally(t);
    if !failing.is_empty() {
        out.detail = format!("fails for {}; {}", failing.join(", "), out.detail);
    }
    out
}

struct SubsystemRun {
    closure: Outcome,
    cartan: Outcome,
    delta: Outcome,
    closure_time: Duration,
    delta_time: Duration,
}

fn random_subsystems() -> SubsystemRun {
    let (mut tc, mut tk, mut td) = (Tally::new(), Tally::new(), Tally::new());
    let (mut closure_time, mut delta_time) = (Duration::ZERO, Duration::ZERO);
    let full = IndexSets::full();
    let mut classified = 0u64;
    for sys in grid() {
        let p = *sys.params();
        let checker = SubsystemChecker::new(&sys, SUBSYSTEM_WINDOW);
        let seed = SEED ^ (p.a() << 32) ^ (p.b() << 16);
        let sets = verify::random_generator_sets(seed, SUBSYSTEM_SAMPLES, SUBSYSTEM_GEN_INDEX);
        let start = Instant::now();
        let closures: Vec<_> = sets.iter().map(|g| checker.phi(g, &mut tc)).collect();
        closure_time += start.elapsed();
        for ix in &closures {
            if checker.cartan(ix, &mut tk).is_some() {
                classified += 1;
            }
        }
        let start = Instant::now();
        for g in &sets {
            checker.delta(g, &mut td);
        }
        delta_time += start.elapsed();
    }

    // a > 4, b = 1: the short roots generate everything
    let h51 = RootSystem::new(5, 1).unwrap();
    let checker = SubsystemChecker::new(&h51, SUBSYSTEM_WINDOW);
    let gens = [RealRoot::new(Family::SU, 0), RealRoot::new(Family::SL, 0)];
    let (ix, same) = checker.delta(&gens, &mut td);
    let window = oracle::brute_delta_re(h51.params(), &gens, SUBSYSTEM_WINDOW).roots;
    td.check(ix == full && !same && window.len() == 4 * (2 * SUBSYSTEM_WINDOW as usize + 1), || {
        format!("Δ^re(SU:0, SL:0) in H(5,1) = {ix} ({} roots in window)", window.len())
    });

    // a = 4, b = 1: II_S with odd d picks up long roots
    let h41 = RootSystem::new(4, 1).unwrap();
    let checker = SubsystemChecker::new(&h41, SUBSYSTEM_WINDOW);
    for d in [1i64, 3, 5, 7, 9] {
        let e = (d - 1) / 2;
        for r in 0..d {
            let gens = [RealRoot::new(Family::SU, r), RealRoot::new(Family::SL, d - r - 1)];
            let phi = checker.phi(&gens, &mut tc);
            td.check(
                phi == IndexSets {
                    long: None,
                    short: Some(Progression::new(r, d as u64)),
                },
                || format!("Φ({gens:?}) in H(4,1) = {phi}"),
            );
            let (ix, same) = checker.delta(&gens, &mut td);
            let mut s = (e - r).rem_euclid(d);
            if s > e {
                s -= d;
            }
            let sub = h41.phi_classify(&ix);
            let want_base = vec![RealRoot::new(Family::LL, s), RealRoot::new(Family::SU, e - s)];
            td.check(
                !same
                    && sub.as_ref().is_ok_and(|sub| {
                        sub.kind == PhiKind::ILS { r: s, d: e as u64 } && sub.base == want_base
                    }),
                || format!("Δ^re of II_S({r},{d}) in H(4,1) = {ix}, classified {sub:?}"),
            );
        }
    }
    let mut cartan = Outcome::from_tally(tk);
    cartan.detail = format!("{classified} subsystems, {}", cartan.detail);
    SubsystemRun {
        closure: Outcome::from_tally(tc),
        cartan,
        delta: Outcome::from_tally(td),
        closure_time,
        delta_time,
    }
}

fn growing_subsystems() -> Outcome {
    let mut t = Tally::new();
    let sys = RootSystem::new(5, 1).unwrap();
    let seq = sys.seq();
    let expect_s = [(1, 3), (2, 7), (3, 18)];
    let expect_ls = [(1, 10, 2), (2, 25, 5), (3, 65, 13)];
    let h = |p: i64, q: i64| vec![vec![BigInt::from(2), BigInt::from(-q)], vec![BigInt::from(-p), BigInt::from(2)]];
    for (d, delta) in expect_s {
        let gens = [RealRoot::new(Family::SU, 0), RealRoot::new(Family::SL, d - 1)];
        let sub = sys.phi_classify(&sys.phi_closure(&gens).unwrap()).unwrap();
        t.check(sub.kind == PhiKind::IIS { r: 0, d: d as u64 }, || format!("{gens:?} gives {:?}", sub.kind));
        t.check(sub.cartan == h(delta, delta), || format!("II_S d={d} Cartan {:?}", sub.cartan));
        t.check(sys.direct_cartan(&sub.base).unwrap() == h(delta, delta), || format!("II_S d={d} pairing"));
    }
    for (d, p, q) in expect_ls {
        let gens = [RealRoot::new(Family::LL, 0), RealRoot::new(Family::SU, d)];
        let sub = sys.phi_classify(&sys.phi_closure(&gens).unwrap()).unwrap();
        t.check(sub.kind == PhiKind::ILS { r: 0, d: d as u64 }, || format!("{gens:?} gives {:?}", sub.kind));
        t.check(sub.cartan == h(p, q), || format!("II_LS d={d} Cartan {:?}", sub.cartan));
        t.check(sys.direct_cartan(&sub.base).unwrap() == h(p, q), || format!("II_LS d={d} pairing"));
    }
    for d in 1..10 {
        t.check(seq.delta(d).unwrap() < seq.delta(d + 1).unwrap(), || format!("δ_{d} ≥ δ_{}", d + 1));
        t.check(seq.epsilon(d).unwrap() < seq.epsilon(d + 1).unwrap(), || format!("ε_{d} ≥ ε_{}", d + 1));
    }
    Outcome::from_tally(t)
}

fn identity_lemmas() -> Outcome {
    let cfg = VerifyConfig {
        bound: 40,
        ..VerifyConfig::default()
    };
    let mut t = Tally::new();
    for sys in grid() {
        let report = verify::divisibility(&sys, &cfg);
        t.checks += report.checks;
        if let (None, Some(f)) = (&t.failure, report.failure) {
            t.failure = Some(format!("{}: {f}", report.system));
        }
    }
    Outcome::from_tally(t)
}

fn length_rules(triples: &[(RootSystem, SumTriple)]) -> Outcome {
    let mut t = Tally::new();
    t.check(!triples.is_empty(), || "no real-sum triples to check".into());
    for (sys, (x, y, s)) in triples {
        let want = match sys.length_class(s) {
            Length::Long => SumLength::Long,
            Length::Short => SumLength::Short,
        };
        let rule = sys.sum_length_rule(x, y);
        t.check(rule == Ok(want), || format!("{}: length rule {x} + {y} = {s} gives {rule:?}", sys.params()));
        let norm = sys.norm_of_sum_check(x, y);
        t.check(norm == Ok(true), || format!("{}: norm of {x} + {y}: {norm:?}", sys.params()));
    }
    Outcome::from_tally(t)
}

fn generating_sets() -> Outcome {
    let mut t = Tally::new();
    let full = IndexSets::full();
    let short_only = IndexSets {
        long: None,
        short: Some(Progression::new(0, 1)),
    };
    let mut sets = 0usize;
    for sys in grid() {
        let p = *sys.params();
        let checker = SubsystemChecker::new(&sys, SUBSYSTEM_WINDOW);
        let seed = SEED.wrapping_mul(31) ^ (p.a() << 32) ^ (p.b() << 16);
        let gens = verify::full_span_generator_sets(&sys, seed, FULL_SPAN_SAMPLES, SUBSYSTEM_GEN_INDEX);
        t.check(gens.len() == FULL_SPAN_SAMPLES, || format!("{p}: only {} full-span sets", gens.len()));
        for g in &gens {
            sets += 1;
            let (delta, _) = checker.delta(g, &mut t);
            t.check(delta == full, || format!("{p}: Δ^re({g:?}) = {delta}"));
            let phi = checker.phi(g, &mut t);
            let all_short = g.iter().all(|r| !r.family.in_long_orbit());
            let ok = if phi == full {
                true
            } else {
                p.b() == 1 && all_short && phi == short_only
            };
            t.check(ok, || format!("{p}: Φ({g:?}) = {phi}"));
        }
    }
    let mut out = Outcome::from_tally(t);
    out.detail = format!("{sets} generator sets, {}", out.detail);
    out
}

struct Line {
    number: u32,
    name: &'static str,
    limit: Duration,
    elapsed: Duration,
    outcome: Outcome,
}

fn timed(number: u32, name: &'static str, limit_secs: u64, f: impl FnOnce() -> Outcome) -> Line {
    let start = Instant::now();
    let outcome = f();
    Line {
        number,
        name,
        limit: Duration::from_secs(limit_secs),
        elapsed: start.elapsed(),
        outcome,
    }
}

fn main() -> ExitCode {
    let mut lines = vec![
        timed(1, "sequence tables", 1, sequence_tables),
        timed(2, "orbit norms", 5, orbit_norms),
        timed(3, "no real sums when b > 1", 60, no_real_sums),
    ];
    let mut triples = Vec::new();
    lines.push(timed(4, "neighbor sets when b = 1", 30, || neighbor_sets(&mut triples)));

    let run = random_subsystems();
    lines.push(Line {
        number: 5,
        name: "Φ-closure against oracle",
        limit: Duration::from_secs(120),
        elapsed: run.closure_time,
        outcome: run.closure,
    });
    lines.push(Line {
        number: 6,
        name: "table Cartan against pairing",
        // checked alongside criterion 5; no separate budget
        limit: Duration::MAX,
        elapsed: Duration::ZERO,
        outcome: run.cartan,
    });
    lines.push(Line {
        number: 7,
        name: "Δ^re subsystems against oracle",
        limit: Duration::from_secs(120),
        elapsed: run.delta_time,
        outcome: run.delta,
    });
    lines.push(timed(8, "growing hyperbolic subsystems", 1, growing_subsystems));
    lines.push(timed(9, "identity and divisibility lemmas", 30, identity_lemmas));
    lines.push(timed(10, "length and norm rules on sums", 30, || length_rules(&triples)));
    lines.push(timed(11, "full-span generating sets", 30, generating_sets));

    let mut all = true;
    for l in &lines {
        let in_time = l.elapsed <= l.limit;
        let passed = l.outcome.passed && in_time;
        all &= passed;
        let budget = if l.limit == Duration::MAX {
            String::new()
        } else {
            format!(" / {}s", l.limit.as_secs())
        };
        println!(
            "criterion {:>2} {}: {} ({:.2}s{budget}) {}{}",
            l.number,
            l.name,
            if passed { "PASS" } else { "FAIL" },
            l.elapsed.as_secs_f64(),
            l.outcome.detail,
            if in_time { "" } else { " [over time budget]" },
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
