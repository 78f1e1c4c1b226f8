//! Property suites that compare the closed-form modules against [`crate::oracle`].
//!
//! Each suite runs on one system and returns how many individual checks ran
//! and the first counterexample, if any. Suites are deterministic for a fixed
//! seed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{RootVector, Simple, SystemParams};
use crate::oracle::{self, OrbitRoot};
use crate::roots::{Family, Length, RealRoot, RootClass, RootSystem};
use crate::sequences::{self, Identity};
use crate::subsystems::{sublattice_basis, IndexSets, PhiKind, Progression, SubsystemClass};
use crate::sums::{Sign, SumLength};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Staircase,
    Sums,
    Subsystems,
    Divisibility,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Staircase, Suite::Sums, Suite::Subsystems, Suite::Divisibility];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Staircase => "staircase",
            Suite::Sums => "sums",
            Suite::Subsystems => "subsystems",
            Suite::Divisibility => "divisibility",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Tunables shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Index window for root scans and subsystem comparisons.
    pub bound: u64,
    pub seed: u64,
    /// Random generator sets per system in the subsystem suite.
    pub samples: usize,
    /// Largest generator index drawn at random.
    pub gen_index: i64,
    /// Full-span generator sets per system in the subsystem suite.
    pub full_span_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            bound: 40,
            seed: 0,
            samples: 500,
            gen_index: 12,
            full_span_samples: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub system: SystemParams,
    pub checks: u64,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check counter that remembers the first failure.
#[derive(Debug, Default)]
pub struct Tally {
    pub checks: u64,
    pub failure: Option<String>,
}

impl Tally {
    pub fn new() -> Self {
        Self {
            checks: 0,
            failure: None,
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn finish(self, suite: Suite, system: SystemParams) -> SuiteReport {
        SuiteReport {
            suite,
            system,
            checks: self.checks,
            failure: self.failure,
        }
    }
}

/// All systems with `a ≥ b ≥ 1` and `4 ≤ ab ≤ ab_max`, ordered by `(a, b)`.
pub fn grid(ab_max: u64) -> Vec<SystemParams> {
    let mut out = Vec::new();
    for a in 1..=ab_max {
        for b in 1..=a {
            if a * b >= 4 && a * b <= ab_max {
                out.push(SystemParams::new(a as i64, b as i64).expect("grid parameters are valid"));
            }
        }
    }
    out
}

pub fn run_suite(sys: &RootSystem, suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    match suite {
        Suite::Staircase => staircase(sys, cfg),
        Suite::Sums => sums(sys, cfg),
        Suite::Subsystems => subsystems(sys, cfg),
        Suite::Divisibility => divisibility(sys, cfg),
    }
}

/// Sequence recurrences, staircase inequalities and root coordinates.
pub fn staircase(sys: &RootSystem, cfg: &VerifyConfig) -> SuiteReport {
    let p = *sys.params();
    let seq = sys.seq();
    let ab = BigInt::from(p.ab());
    let b = cfg.bound as i64;
    let mut t = Tally::new();

    // forward recurrence from the seeds, independent of the cache
    let (mut g0, mut g1) = (BigInt::zero(), BigInt::one());
    let (mut e0, mut e1) = (BigInt::one(), &ab - 1);
    let trace = &ab - 2;
    for j in 0..=b {
        t.check(seq.gamma(j) == g0 && seq.eta(j) == e0, || format!("γ/η mismatch at j={j}"));
        let g2 = &trace * &g1 - &g0;
        let e2 = &trace * &e1 - &e0;
        (g0, g1) = (g1, g2);
        (e0, e1) = (e1, e2);
    }
    // backward recurrence for negative indices
    let (mut g_hi, mut g_lo) = (BigInt::one(), BigInt::zero());
    let (mut e_hi, mut e_lo) = (&ab - 1, BigInt::one());
    for j in (-b..0).rev() {
        let g = &trace * &g_lo - &g_hi;
        let e = &trace * &e_lo - &e_hi;
        t.check(seq.gamma(j) == g && seq.eta(j) == e, || format!("γ/η mismatch at j={j}"));
        (g_hi, g_lo) = (g_lo, g);
        (e_hi, e_lo) = (e_lo, e);
    }
    for j in -b..=b {
        let (g, e) = (seq.gamma(j), seq.eta(j));
        t.check(g == seq.eta(j - 1) - seq.gamma(j - 1), || format!("γ_j = η_(j-1) − γ_(j-1) fails at j={j}"));
        t.check(e == &ab * &g - seq.eta(j - 1), || format!("η_j = abγ_j − η_(j-1) fails at j={j}"));
        let sign = if j.is_even() { BigInt::one() } else { -BigInt::one() };
        t.check((e - sign).is_multiple_of(&ab), || format!("η_j ≢ (−1)^j mod ab at j={j}"));
    }

    let (a_big, b_big) = (BigInt::from(p.a()), BigInt::from(p.b()));
    if p.is_hyperbolic() && p.b() > 1 {
        for (scale, name) in [(&b_big, "b"), (&a_big, "a")] {
            for j in 0..b {
                let chain = [
                    scale * seq.gamma(j),
                    seq.eta(j),
                    scale * seq.gamma(j + 1),
                    seq.eta(j + 1),
                ];
                t.check(chain.windows(2).all(|w| w[0] < w[1]), || {
                    format!("{name}γ/η interleaving fails at j={j}")
                });
            }
        }
    }
    if p.a() > 4 && p.b() == 1 {
        t.check(seq.gamma(0) < seq.eta(0) && seq.eta(0) == seq.gamma(1), || {
            "γ₀ < η₀ = γ₁ fails".into()
        });
        for j in 1..b {
            t.check(seq.gamma(j + 1) < seq.eta(j) && seq.eta(j) < seq.gamma(j + 2), || {
                format!("γ_(j+1) < η_j < γ_(j+2) fails at j={j}")
            });
            t.check(seq.eta(j) < &a_big * seq.gamma(j) && &a_big * seq.gamma(j) < seq.eta(j + 1), || {
                format!("η_j < aγ_j < η_(j+1) fails at j={j}")
            });
        }
        t.check(seq.eta(0) < seq.eta(1), || "η₀ < η₁ fails".into());
    }
    for d in 1..b.max(2) {
        let (dd, dn) = (seq.delta(d).unwrap(), seq.delta(d + 1).unwrap());
        let (ed, en) = (seq.epsilon(d - 1).unwrap(), seq.epsilon(d).unwrap());
        if p.is_affine() {
            t.check(dd == BigInt::from(2) && ed.is_one(), || format!("affine δ/ε not constant at d={d}"));
        } else {
            t.check(dd < dn && ed < en, || format!("δ/ε not increasing at d={d}"));
        }
    }

    // root coordinates against oracle generation, norms, negation, round trip
    for (r, v) in oracle::window_roots(&p, cfg.bound) {
        let c = sys.coords(&r);
        t.check(c == v, || format!("{r}: closed form {c}, reflections give {v}"));
        let expected = if r.family.in_long_orbit() { &a_big } else { &b_big };
        t.check(&sys.norm(&c) == expected, || format!("N({r}) = {}", sys.norm(&c)));
        t.check(sys.coords(&r.negate()) == -&c, || format!("coords(−{r}) ≠ −coords({r})"));
        t.check(sys.classify(&c) == RootClass::Real(r), || format!("classify(coords({r})) ≠ {r}"));
        if t.failed() {
            break;
        }
    }
    t.finish(Suite::Staircase, p)
}

/// Real sums of real roots against the exhaustive pair scan.
pub fn sums(sys: &RootSystem, cfg: &VerifyConfig) -> SuiteReport {
    let p = *sys.params();
    let mut t = Tally::new();
    let brute = oracle::brute_sum_table(&p, cfg.bound);
    if p.b() > 1 {
        t.check(brute.is_empty(), || format!("{} has real sums, e.g. {:?}", p, brute[0]));
    }
    let fast = sys.real_sum_pairs(cfg.bound);
    t.check(fast == brute, || format!("real_sum_pairs differs from brute scan ({} vs {})", fast.len(), brute.len()));
    check_triples(sys, &brute, &mut t);

    if p.b() == 1 {
        for i in [Simple::One, Simple::Two] {
            for sign in [Sign::Plus, Sign::Minus] {
                let claimed: BTreeSet<_> = sys.simple_sum_neighbors(i, sign, cfg.bound).into_iter().collect();
                let found = oracle::brute_simple_neighbors(&p, i, sign == Sign::Plus, cfg.bound);
                t.check(claimed == found, || {
                    format!("neighbors of {i:?} {sign:?}: claimed {claimed:?}, found {found:?}")
                });
            }
        }
    }
    t.finish(Suite::Sums, p)
}

/// Length rule and norm-of-sum checks on real-sum triples.
pub fn check_triples(sys: &RootSystem, triples: &[(RealRoot, RealRoot, RealRoot)], t: &mut Tally) {
    for (x, y, s) in triples {
        let rule = sys.sum_length_rule(x, y);
        let actual = match sys.length_class(s) {
            Length::Long => SumLength::Long,
            Length::Short => SumLength::Short,
        };
        t.check(rule.as_ref() == Ok(&actual), || format!("length rule for {x} + {y} = {s}: {rule:?}"));
        let norm = sys.norm_of_sum_check(x, y);
        t.check(norm == Ok(true), || format!("norm of {x} + {y} = {s}: {norm:?}"));
    }
}

fn random_root(rng: &mut impl Rng, max_index: i64) -> RealRoot {
    let family = Family::ALL[rng.gen_range(0..4)];
    RealRoot::new(family, rng.gen_range(-max_index..=max_index))
}

/// Random generator sets of one to four roots with `|index| ≤ max_index`.
pub fn random_generator_sets(seed: u64, count: usize, max_index: i64) -> Vec<Vec<RealRoot>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            (0..n).map(|_| random_root(&mut rng, max_index)).collect()
        })
        .collect()
}

/// Random generator sets whose coordinates span the whole lattice.
pub fn full_span_generator_sets(sys: &RootSystem, seed: u64, count: usize, max_index: i64) -> Vec<Vec<RealRoot>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < 1000 * count.max(1) {
        attempts += 1;
        let n = rng.gen_range(2..=4);
        let gens: Vec<_> = (0..n).map(|_| random_root(&mut rng, max_index)).collect();
        let coords: Vec<_> = gens.iter().map(|g| sys.coords(g)).collect();
        if sublattice_basis(&coords).is_full_lattice() {
            out.push(gens);
        }
    }
    out
}

/// Window the oracle closure runs in so that it is exact on `bound`.
pub fn oracle_window(bound: u64, max_gen_index: i64) -> u64 {
    bound + 4 * max_gen_index.unsigned_abs() + 8
}

fn system_seed(seed: u64, p: &SystemParams) -> u64 {
    seed ^ (p.a() << 32) ^ (p.b() << 16)
}

/// Per-system subsystem checks, shared with the acceptance tests.
pub struct SubsystemChecker<'a> {
    sys: &'a RootSystem,
    bound: u64,
    window: Vec<(RealRoot, RootVector)>,
}

impl<'a> SubsystemChecker<'a> {
    pub fn new(sys: &'a RootSystem, bound: u64) -> Self {
        Self {
            sys,
            bound,
            window: oracle::window_roots(sys.params(), bound),
        }
    }

    /// Closure against the oracle; returns the closure's index sets.
    pub fn phi(&self, gens: &[RealRoot], t: &mut Tally) -> IndexSets {
        let ix = self.sys.phi_closure(gens).expect("nonempty generators");
        let max_gen = gens.iter().map(|g| g.index.abs()).max().unwrap_or(0);
        let brute = oracle::brute_phi_closure(self.sys.params(), gens, oracle_window(self.bound, max_gen));
        let brute: BTreeSet<_> = brute.roots.into_iter().filter(|r| r.index.unsigned_abs() <= self.bound).collect();
        let fast = ix.roots_in_window(self.bound);
        t.check(fast == brute, || {
            format!(
                "Φ({}) = {ix}: {} roots in window, oracle has {}",
                show(gens),
                fast.len(),
                brute.len()
            )
        });
        ix
    }

    /// Table Cartan and inner products against the pairing on the base.
    pub fn cartan(&self, ix: &IndexSets, t: &mut Tally) -> Option<SubsystemClass> {
        let sub = match self.sys.phi_classify(ix) {
            Ok(s) => s,
            Err(e) => {
                t.check(false, || format!("classify {ix}: {e}"));
                return None;
            }
        };
        let direct = self.sys.direct_cartan(&sub.base);
        t.check(direct.as_ref() == Ok(&sub.cartan), || {
            format!("{ix}: table Cartan {:?}, pairing gives {direct:?}", sub.cartan)
        });
        let inner = self.sys.direct_inner_product(&sub.base);
        t.check(inner == sub.inner_product, || format!("{ix}: inner products differ"));
        t.check(sub.base.iter().all(|r| ix.contains(r)), || format!("{ix}: base outside subsystem"));
        if let PhiKind::ILS { r, d } = sub.kind {
            let (m, d) = (2 * d as i64 + 1, d as i64);
            let rs = ix.short.map(|s| s.rep).unwrap_or(0);
            t.check((2 * r + 2 * rs + 1).mod_floor(&m) == 0, || format!("{ix}: 2r_L + 2r_S + 1 ≢ 0"));
            t.check((d - r - rs).mod_floor(&m) == 0, || format!("{ix}: short rep ≢ d − r"));
            t.check((-d..=d).contains(&r), || format!("{ix}: r outside [−d, d]"));
        }
        Some(self.sys.subsystem_class(&sub))
    }

    /// `ℤΓ ∩ Δ^re` against the oracle span scan.
    pub fn delta(&self, gens: &[RealRoot], t: &mut Tally) -> (IndexSets, bool) {
        let (ix, same) = self.sys.delta_re_subsystem(gens).expect("nonempty generators");
        let brute = oracle::brute_delta_re_in(self.sys.params(), &self.window, gens, self.bound).roots;
        let fast = ix.roots_in_window(self.bound);
        t.check(fast == brute, || {
            format!("Δ^re({}) = {ix}: {} roots in window, oracle has {}", show(gens), fast.len(), brute.len())
        });
        (ix, same)
    }
}

fn show(gens: &[RealRoot]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(";")
}

/// Φ- and Δ-subsystems of random generator sets against the oracles.
pub fn subsystems(sys: &RootSystem, cfg: &VerifyConfig) -> SuiteReport {
    let p = *sys.params();
    let mut t = Tally::new();
    let checker = SubsystemChecker::new(sys, cfg.bound);
    let seed = system_seed(cfg.seed, &p);
    for gens in random_generator_sets(seed, cfg.samples, cfg.gen_index) {
        let ix = checker.phi(&gens, &mut t);
        checker.cartan(&ix, &mut t);
        checker.delta(&gens, &mut t);
        if t.failed() {
            return t.finish(Suite::Subsystems, p);
        }
    }

    let full = IndexSets::full();
    let full_sets = full_span_generator_sets(sys, seed.wrapping_add(1), cfg.full_span_samples, cfg.gen_index);
    t.check(!full_sets.is_empty(), || "no full-span generator sets found".into());
    for gens in &full_sets {
        let (delta, _) = checker.delta(gens, &mut t);
        t.check(delta == full, || format!("Δ^re({}) = {delta} for a full-span set", show(gens)));
        let phi = checker.phi(gens, &mut t);
        let all_short = gens.iter().all(|g| !g.family.in_long_orbit());
        let short_only = IndexSets {
            long: None,
            short: Some(Progression::new(0, 1)),
        };
        let ok = phi == full || (p.b() == 1 && all_short && phi == short_only);
        t.check(ok, || format!("Φ({}) = {phi} for a full-span set", show(gens)));
    }

    if p.b() == 1 {
        let odd_d: &[i64] = if p.a() == 4 { &[1, 3, 5, 7, 9] } else { &[1] };
        for &d in odd_d {
            let gens = [RealRoot::new(Family::SU, 0), RealRoot::new(Family::SL, d - 1)];
            let phi = checker.phi(&gens, &mut t);
            t.check(phi.short == Some(Progression::new(0, d as u64)) && phi.long.is_none(), || {
                format!("Φ({}) = {phi}", show(&gens))
            });
            let (delta, same) = checker.delta(&gens, &mut t);
            let expected = if p.a() > 4 {
                full
            } else {
                let e = (d - 1) / 2;
                IndexSets {
                    long: Some(Progression::new(e, d as u64)),
                    short: Some(Progression::new(0, d as u64)),
                }
            };
            t.check(delta == expected && !same, || format!("Δ^re({}) = {delta}, expected {expected}", show(&gens)));
        }
    }

    if p.is_hyperbolic() {
        let seq = sys.seq();
        for d in 1..=5i64 {
            let gens = [RealRoot::new(Family::SU, 0), RealRoot::new(Family::SL, d - 1)];
            let ix = checker.phi(&gens, &mut t);
            let delta = seq.delta(d).expect("d ≥ 1");
            let class = checker.cartan(&ix, &mut t);
            t.check(
                class == Some(SubsystemClass::Hyperbolic { p: delta.clone(), q: delta.clone() }),
                || format!("II_S(0,{d}) classified as {class:?}"),
            );
            let gens = [RealRoot::new(Family::LL, 0), RealRoot::new(Family::SU, d)];
            let ix = checker.phi(&gens, &mut t);
            let eps = seq.epsilon(d).expect("d ≥ 0");
            let class = checker.cartan(&ix, &mut t);
            let want = SubsystemClass::Hyperbolic {
                p: BigInt::from(p.a()) * &eps,
                q: BigInt::from(p.b()) * &eps,
            };
            t.check(class.as_ref() == Some(&want), || format!("II_LS(0,{d}) classified as {class:?}"));
        }
    }
    t.finish(Suite::Subsystems, p)
}

/// Identity lemmas and divisibility criteria against direct computation.
pub fn divisibility(sys: &RootSystem, cfg: &VerifyConfig) -> SuiteReport {
    let p = *sys.params();
    let seq = sys.seq();
    let mut t = Tally::new();
    let jb = cfg.bound as i64;
    for which in Identity::ALL {
        for d in 0..=10u64 {
            for j in -jb.min(20)..=jb.min(20) {
                t.check(sequences::divrec_identity_check(seq, which, d, j), || {
                    format!("identity {which:?} fails at d={d}, j={j}")
                });
            }
        }
    }
    let divides = |m: &BigInt, n: &BigInt| if m.is_zero() { n.is_zero() } else { n.is_multiple_of(m) };
    for d in 0..=12u64 {
        let (gd, ed) = (seq.gamma(d as i64), seq.eta(d as i64));
        for j in -jb..=jb {
            let (gj, ej) = (seq.gamma(j), seq.eta(j));
            let cases = [
                ("γ_d | γ_j", sequences::div_gamma_gamma(&p, d, j), divides(&gd, &gj)),
                ("η_d | γ_j", sequences::div_eta_gamma(&p, d, j), divides(&ed, &gj)),
                ("η_d | η_j", sequences::div_eta_eta(&p, d, j), divides(&ed, &ej)),
                ("γ_d | η_j", sequences::div_gamma_eta(&p, d, j), divides(&gd, &ej)),
            ];
            for (name, claimed, actual) in cases {
                t.check(claimed == actual, || {
                    format!("{name} at d={d}, j={j}: criterion {claimed}, direct {actual}")
                });
            }
        }
    }
    // gcd(a, η_j) = gcd(b, η_j) = 1
    for j in -jb..=jb {
        let e = seq.eta(j).abs();
        t.check(e.gcd(&BigInt::from(p.ab())).is_one(), || format!("gcd(ab, η_{j}) ≠ 1"));
    }
    t.finish(Suite::Divisibility, p)
}

/// Checks the oracle's own label conventions: `OrbitRoot` labels invert.
pub fn oracle_self_check(p: &SystemParams, bound: u64) -> bool {
    oracle::window_roots(p, bound)
        .iter()
        .all(|(r, v)| OrbitRoot::from_label(*r).label() == *r && oracle::classify_by_descent(p, v) == RootClass::Real(*r))
}
