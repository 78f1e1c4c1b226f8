use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use rank2_roots::oracle::{self, OrbitRoot, SpanTest};
use rank2_roots::verify::{self, oracle_window};
use rank2_roots::{sublattice_basis, Family, RealRoot, RootClass, RootSystem, RootVector};

fn system() -> impl Strategy<Value = RootSystem> {
    (1i64..=6, 1i64..=6)
        .prop_filter("a ≥ b, ab ≥ 4", |&(a, b)| a >= b && a * b >= 4)
        .prop_map(|(a, b)| RootSystem::new(a, b).unwrap())
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

fn root(max: i64) -> impl Strategy<Value = RealRoot> {
    (family(), -max..=max).prop_map(|(f, j)| RealRoot::new(f, j))
}

#[test]
fn classify_matches_descent_scan() {
    for p in verify::grid(12) {
        let sys = RootSystem::from_params(p);
        for (v, class) in oracle::brute_root_scan(&p, 40) {
            assert_eq!(sys.classify(&v), class, "{p} at {v:?}");
        }
    }
}

#[test]
fn closed_form_matches_oracle_labels() {
    for p in verify::grid(20) {
        let sys = RootSystem::from_params(p);
        for f in Family::ALL {
            for j in -60..=60 {
                let r = RealRoot::new(f, j);
                assert_eq!(sys.coords(&r), OrbitRoot::from_label(r).coords(&p), "{p} {r}");
            }
        }
    }
}

#[test]
fn enumerate_real_is_complete_and_sorted() {
    for p in verify::grid(20) {
        let sys = RootSystem::from_params(p);
        let roots = sys.enumerate_real(8);
        let coords: Vec<_> = roots.iter().map(|r| sys.coords(r)).collect();
        let distinct: BTreeSet<_> = coords.iter().cloned().collect();
        assert_eq!(distinct.len(), coords.len(), "{p}: duplicates");
        assert!(coords.iter().all(RootVector::is_positive));
        assert!(coords.windows(2).all(|w| w[0].height() <= w[1].height()));
        let from_window: BTreeSet<_> = oracle::window_roots(&p, 8)
            .into_iter()
            .filter(|(_, v)| v.is_positive())
            .map(|(_, v)| v)
            .collect();
        assert_eq!(distinct, from_window, "{p}");
    }
}

#[test]
fn oracle_window_is_large_enough() {
    for p in verify::grid(16) {
        let sys = RootSystem::from_params(p);
        for gens in verify::random_generator_sets(p.ab(), 20, 6) {
            let w = oracle_window(12, 6);
            let small = oracle::brute_phi_closure(&p, &gens, w).roots;
            let large = oracle::brute_phi_closure(&p, &gens, 2 * w).roots;
            let restrict = |s: &BTreeSet<RealRoot>| -> BTreeSet<RealRoot> {
                s.iter().filter(|r| r.index.abs() <= 12).copied().collect()
            };
            assert_eq!(restrict(&small), restrict(&large), "{p} {gens:?}");
            let ix = sys.phi_closure(&gens).unwrap();
            assert_eq!(ix.roots_in_window(12), restrict(&large), "{p} {gens:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn norms_follow_orbits(sys in system(), r in root(200)) {
        let n = sys.norm(&sys.coords(&r));
        let p = sys.params();
        let want = if r.family.in_long_orbit() { p.a() } else { p.b() };
        prop_assert_eq!(n, BigInt::from(want));
    }

    #[test]
    fn classify_inverts_coords(sys in system(), r in root(200)) {
        prop_assert_eq!(sys.classify(&sys.coords(&r)), RootClass::Real(r));
    }

    #[test]
    fn negation_negates_coordinates(sys in system(), r in root(200)) {
        prop_assert_eq!(sys.coords(&r.negate()), -&sys.coords(&r));
        prop_assert_eq!(r.negate().negate(), r);
    }

    #[test]
    fn label_reflection_matches_lattice(sys in system(), m in root(30), t in root(30)) {
        let p = sys.params();
        let direct = p.general_reflection(&sys.coords(&m), &sys.coords(&t)).unwrap();
        prop_assert_eq!(sys.coords(&sys.reflect(&m, &t)), direct);
    }

    #[test]
    fn simple_reflection_is_involution(sys in system(), x in -50i64..=50, y in -50i64..=50) {
        let p = sys.params();
        let v = RootVector::new(x, y);
        for i in [rank2_roots::Simple::One, rank2_roots::Simple::Two] {
            let w = p.simple_reflection(i, &v);
            prop_assert_eq!(p.norm(&w), p.norm(&v));
            prop_assert_eq!(p.simple_reflection(i, &w), v.clone());
        }
    }

    #[test]
    fn closure_is_idempotent(sys in system(), gens in prop::collection::vec(root(12), 1..=4)) {
        let ix = sys.phi_closure(&gens).unwrap();
        let members: Vec<RealRoot> = ix.roots_in_window(15).into_iter().collect();
        prop_assert_eq!(sys.phi_closure(&members).unwrap(), ix);
        for g in &gens {
            prop_assert!(ix.contains(g));
        }
    }

    #[test]
    fn delta_contains_phi(sys in system(), gens in prop::collection::vec(root(12), 1..=4)) {
        let phi = sys.phi_closure(&gens).unwrap();
        let (delta, same) = sys.delta_re_subsystem(&gens).unwrap();
        for r in phi.roots_in_window(20) {
            prop_assert!(delta.contains(&r));
        }
        prop_assert_eq!(same, delta == phi);
    }

    #[test]
    fn span_basis_matches_minors(
        gens in prop::collection::vec((-30i64..=30, -30i64..=30), 1..=4),
        probe in prop::collection::vec((-60i64..=60, -60i64..=60), 20),
    ) {
        let vs: Vec<_> = gens.iter().map(|&(x, y)| RootVector::new(x, y)).collect();
        let basis = sublattice_basis(&vs);
        let oracle = SpanTest::new(&vs);
        for v in &vs {
            prop_assert!(basis.contains(v));
        }
        for &(x, y) in &probe {
            let v = RootVector::new(x, y);
            prop_assert_eq!(basis.contains(&v), oracle.contains(&v), "{:?}", v);
        }
    }

    #[test]
    fn eta_is_alternating_mod_ab(sys in system(), j in -200i64..=200) {
        let seq = sys.seq();
        let ab = BigInt::from(sys.params().ab());
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        let r = (seq.eta(j) - sign) % &ab;
        prop_assert_eq!(r, BigInt::from(0));
    }
}
