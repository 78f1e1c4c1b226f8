//! Brute-force reference implementations.
//!
//! Nothing here uses the `γ`/`η` sequences, the label reflection formulas or
//! the gcd calculus. Roots are tracked as Weyl group elements applied to a
//! simple root, vectors are recognized by height-decreasing reflection
//! descent, and lattice spans are tested with determinants. Results are exact
//! inside the requested index window and say nothing about roots beyond it.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::lattice::{RootVector, Simple, SystemParams};
use crate::roots::{Family, RealRoot, RootClass};

/// An element `tᵏ·w₁^flip` of the infinite dihedral Weyl group, `t = w₁w₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub k: i64,
    pub flip: bool,
}

impl WeylElement {
    pub const IDENTITY: Self = Self { k: 0, flip: false };
    pub const W1: Self = Self { k: 0, flip: true };
    /// `w₂ = w₁·t`
    pub const W2: Self = Self { k: -1, flip: true };

    pub fn simple(i: Simple) -> Self {
        match i {
            Simple::One => Self::W1,
            Simple::Two => Self::W2,
        }
    }

    /// Uses `w₁·tᵏ = t⁻ᵏ·w₁`.
    pub fn mul(self, rhs: Self) -> Self {
        if self.flip {
            Self {
                k: self.k - rhs.k,
                flip: !rhs.flip,
            }
        } else {
            Self {
                k: self.k + rhs.k,
                flip: rhs.flip,
            }
        }
    }

    pub fn inverse(self) -> Self {
        if self.flip {
            self
        } else {
            Self {
                k: -self.k,
                flip: false,
            }
        }
    }

    /// Applies the element to a vector through the simple reflection matrices.
    pub fn apply(self, sys: &SystemParams, v: &RootVector) -> RootVector {
        let mut out = if self.flip {
            sys.simple_reflection(Simple::One, v)
        } else {
            v.clone()
        };
        for _ in 0..self.k.unsigned_abs() {
            out = if self.k > 0 {
                // t = w₁w₂
                let w = sys.simple_reflection(Simple::Two, &out);
                sys.simple_reflection(Simple::One, &w)
            } else {
                let w = sys.simple_reflection(Simple::One, &out);
                sys.simple_reflection(Simple::Two, &w)
            };
        }
        out
    }
}

/// A real root as `g·αᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitRoot {
    pub simple: Simple,
    pub element: WeylElement,
}

impl OrbitRoot {
    pub fn label(self) -> RealRoot {
        let WeylElement { k, flip } = self.element;
        match (self.simple, flip) {
            // tᵏα₁ = LLₖ, tᵏw₁α₁ = LU₋ₖ₋₁
            (Simple::One, false) => RealRoot::new(Family::LL, k),
            (Simple::One, true) => RealRoot::new(Family::LU, -k - 1),
            // tᵏα₂ = SU₋ₖ, tᵏw₁α₂ = SLₖ
            (Simple::Two, false) => RealRoot::new(Family::SU, -k),
            (Simple::Two, true) => RealRoot::new(Family::SL, k),
        }
    }

    pub fn from_label(r: RealRoot) -> Self {
        let (simple, k, flip) = match r.family {
            Family::LL => (Simple::One, r.index, false),
            Family::LU => (Simple::One, -r.index - 1, true),
            Family::SU => (Simple::Two, -r.index, false),
            Family::SL => (Simple::Two, r.index, true),
        };
        Self {
            simple,
            element: WeylElement { k, flip },
        }
    }

    pub fn coords(self, sys: &SystemParams) -> RootVector {
        self.element.apply(sys, &self.simple.vector())
    }

    /// `w_self(other)` with `w_{gαᵢ} = g·wᵢ·g⁻¹`.
    pub fn reflect(self, other: Self) -> Self {
        let g = self.element;
        let w = g.mul(WeylElement::simple(self.simple)).mul(g.inverse());
        Self {
            simple: other.simple,
            element: w.mul(other.element),
        }
    }
}

/// Real roots found by an oracle, restricted to `|index| ≤ index_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedRootSet {
    pub system: SystemParams,
    pub index_bound: u64,
    pub roots: BTreeSet<RealRoot>,
}

fn in_window(r: &RealRoot, bound: u64) -> bool {
    r.index.unsigned_abs() <= bound
}

/// Writes a positive vector as `g·αᵢ` by walking down in height, or returns
/// `None` when the walk gets stuck away from a simple root.
pub fn descend(sys: &SystemParams, v: &RootVector) -> Option<OrbitRoot> {
    if !v.is_positive() {
        return None;
    }
    let one = BigInt::from(1);
    let mut u = v.clone();
    let mut g = WeylElement::IDENTITY;
    loop {
        if u.y.is_zero() && u.x == one {
            return Some(OrbitRoot { simple: Simple::One, element: g });
        }
        if u.x.is_zero() && u.y == one {
            return Some(OrbitRoot { simple: Simple::Two, element: g });
        }
        let h = u.height();
        let step = [Simple::One, Simple::Two]
            .into_iter()
            .map(|i| (i, sys.simple_reflection(i, &u)))
            .find(|(_, w)| w.height() < h)?;
        if !step.1.is_positive() {
            return None;
        }
        u = step.1;
        g = g.mul(WeylElement::simple(step.0));
    }
}

/// Classifies a vector without using the closed-form root coordinates.
pub fn classify_by_descent(sys: &SystemParams, v: &RootVector) -> RootClass {
    if v.is_zero() {
        return RootClass::Zero;
    }
    let n = sys.norm(v);
    if !n.is_positive() {
        return RootClass::Imaginary;
    }
    if n != BigInt::from(sys.a()) && n != BigInt::from(sys.b()) {
        return RootClass::NotRoot;
    }
    if v.is_positive() {
        descend(sys, v).map_or(RootClass::NotRoot, |r| RootClass::Real(r.label()))
    } else if v.is_negative() {
        // v = g·wᵢ·αᵢ when −v = g·αᵢ
        descend(sys, &-v).map_or(RootClass::NotRoot, |r| {
            let element = r.element.mul(WeylElement::simple(r.simple));
            RootClass::Real(OrbitRoot { simple: r.simple, element }.label())
        })
    } else {
        RootClass::NotRoot
    }
}

/// Every real root with `|index| ≤ bound`, with coordinates generated by
/// repeated simple reflections.
pub fn window_roots(sys: &SystemParams, bound: u64) -> Vec<(RealRoot, RootVector)> {
    let b = bound as i64;
    let mut out = Vec::new();
    for simple in [Simple::One, Simple::Two] {
        for flip in [false, true] {
            let base = WeylElement { k: 0, flip }.apply(sys, &simple.vector());
            for direction in [1i64, -1] {
                let mut v = base.clone();
                for step in 0..=2 * b + 1 {
                    if step > 0 || direction == 1 {
                        let r = OrbitRoot {
                            simple,
                            element: WeylElement { k: direction * step, flip },
                        }
                        .label();
                        if in_window(&r, bound) {
                            out.push((r, v.clone()));
                        }
                    }
                    v = WeylElement { k: direction, flip: false }.apply(sys, &v);
                }
            }
        }
    }
    out.sort_by(|l, r| l.0.cmp(&r.0));
    out.dedup_by(|l, r| l.0 == r.0);
    out
}

/// Closure of `gens` under mutual reflections, discarding roots outside the
/// window.
///
/// The closure is the orbit of `gens` under the group generated by their
/// reflections (`w_{gγ} = g·w_γ·g⁻¹`), so only generator mirrors are applied.
/// Paths leave the window by at most twice the largest generator position,
/// so callers should pass a window with that much slack beyond the range they
/// compare.
pub fn brute_phi_closure(sys: &SystemParams, gens: &[RealRoot], index_bound: u64) -> BoundedRootSet {
    let mirrors: Vec<OrbitRoot> = gens.iter().map(|g| OrbitRoot::from_label(*g)).collect();
    let mut seen: HashSet<OrbitRoot> = HashSet::new();
    let mut queue: Vec<OrbitRoot> = mirrors
        .iter()
        .copied()
        .filter(|m| in_window(&m.label(), index_bound))
        .collect();
    while let Some(x) = queue.pop() {
        if !seen.insert(x) {
            continue;
        }
        for m in &mirrors {
            let z = m.reflect(x);
            if !seen.contains(&z) && in_window(&z.label(), index_bound) {
                queue.push(z);
            }
        }
    }
    BoundedRootSet {
        system: *sys,
        index_bound,
        roots: seen.into_iter().map(OrbitRoot::label).collect(),
    }
}

fn det(u: &RootVector, v: &RootVector) -> BigInt {
    &u.x * &v.y - &u.y * &v.x
}

/// Membership in `ℤ·gens` decided by determinantal divisors.
#[derive(Debug, Clone)]
pub struct SpanTest {
    gens: Vec<RootVector>,
    /// gcd of all 2×2 minors; the index of the span when it has rank 2.
    minors_gcd: BigInt,
    /// For rank 1: primitive direction and the gcd of the multiples.
    line: Option<(RootVector, BigInt)>,
}

impl SpanTest {
    pub fn new(gens: &[RootVector]) -> Self {
        let gens: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let mut minors_gcd = BigInt::zero();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                minors_gcd = minors_gcd.gcd(&det(&gens[i], &gens[j]));
            }
        }
        let line = if minors_gcd.is_zero() && !gens.is_empty() {
            let g0 = &gens[0];
            let c0 = g0.x.gcd(&g0.y);
            let dir = RootVector {
                x: &g0.x / &c0,
                y: &g0.y / &c0,
            };
            let mult = gens.iter().fold(BigInt::zero(), |acc, g| {
                let c = if dir.x.is_zero() { &g.y / &dir.y } else { &g.x / &dir.x };
                acc.gcd(&c)
            });
            Some((dir, mult))
        } else {
            None
        };
        Self {
            gens,
            minors_gcd,
            line,
        }
    }

    pub fn contains(&self, v: &RootVector) -> bool {
        if v.is_zero() {
            return true;
        }
        if !self.minors_gcd.is_zero() {
            let g = self
                .gens
                .iter()
                .fold(self.minors_gcd.clone(), |g, u| g.gcd(&det(u, v)));
            return g == self.minors_gcd;
        }
        match &self.line {
            None => false,
            Some((dir, mult)) => {
                if !det(dir, v).is_zero() {
                    return false;
                }
                let t = if dir.x.is_zero() { &v.y / &dir.y } else { &v.x / &dir.x };
                t.is_multiple_of(mult)
            }
        }
    }
}

/// Real roots in the window lying in the integer span of the generators.
pub fn brute_delta_re(sys: &SystemParams, gens: &[RealRoot], index_bound: u64) -> BoundedRootSet {
    brute_delta_re_in(sys, &window_roots(sys, index_bound), gens, index_bound)
}

/// [`brute_delta_re`] over a precomputed [`window_roots`] table.
pub fn brute_delta_re_in(
    sys: &SystemParams,
    window: &[(RealRoot, RootVector)],
    gens: &[RealRoot],
    index_bound: u64,
) -> BoundedRootSet {
    let coords: Vec<_> = gens
        .iter()
        .map(|g| OrbitRoot::from_label(*g).coords(sys))
        .collect();
    let span = SpanTest::new(&coords);
    let roots = window
        .iter()
        .filter(|(r, v)| in_window(r, index_bound) && span.contains(v))
        .map(|(r, _)| *r)
        .collect();
    BoundedRootSet {
        system: *sys,
        index_bound,
        roots,
    }
}

/// Every vector with `|x|, |y| ≤ coord_bound`, classified by descent.
pub fn brute_root_scan(sys: &SystemParams, coord_bound: i64) -> Vec<(RootVector, RootClass)> {
    let mut out = Vec::new();
    for x in -coord_bound..=coord_bound {
        for y in -coord_bound..=coord_bound {
            let v = RootVector::new(x, y);
            let c = classify_by_descent(sys, &v);
            out.push((v, c));
        }
    }
    out
}

/// All unordered pairs of window roots with a real sum, as sorted
/// `(α, β, α+β)` triples with `α ≤ β`.
pub fn brute_sum_table(sys: &SystemParams, index_bound: u64) -> Vec<(RealRoot, RealRoot, RealRoot)> {
    let roots = window_roots(sys, index_bound);
    let mut out = Vec::new();
    for i in 0..roots.len() {
        for j in i..roots.len() {
            let sum = &roots[i].1 + &roots[j].1;
            if let RootClass::Real(s) = classify_by_descent(sys, &sum) {
                out.push((roots[i].0, roots[j].0, s));
            }
        }
    }
    out.sort();
    out
}

/// Positive real roots `β` with index `≤ index_bound` such that `β + sign·αᵢ`
/// is real (`plus = false` subtracts).
pub fn brute_simple_neighbors(
    sys: &SystemParams,
    i: Simple,
    plus: bool,
    index_bound: u64,
) -> BTreeSet<RealRoot> {
    let simple = i.vector();
    window_roots(sys, index_bound)
        .into_iter()
        .filter(|(r, _)| r.index >= 0)
        .filter(|(_, v)| {
            let w = if plus { v + &simple } else { v - &simple };
            matches!(classify_by_descent(sys, &w), RootClass::Real(_))
        })
        .map(|(r, _)| r)
        .collect()
}
