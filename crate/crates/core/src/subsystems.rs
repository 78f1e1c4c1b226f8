//! Root subsystems generated by sets of real roots.
//!
//! A Φ-subsystem is the closure of a generator set `Γ` under its own
//! reflections. Writing `LUₘ` as long index `−m−1` and `SLₘ` as short index
//! `−m−1`, a Φ-subsystem is determined by a pair of index sets `(I^L, I^S)`,
//! each an arithmetic progression. Reflections act on indices by
//!
//! ```text
//! long  j by long  k:  j ↦ 2k − j        short j by short k:  j ↦ 2k − j
//! long  j by short k:  j ↦ −2k − j − 1   short j by long  k:  j ↦ −2k − j − 1
//! ```
//!
//! so placing long index `j` at `2j` and short index `k` at `−2k−1` turns all
//! of them into point reflections `p ↦ 2q − p` on one line. The closure of a
//! finite set under point reflections is the coset `p₀ + gℤ` with `g` the gcd
//! of all pairwise differences, which is what [`RootSystem::phi_closure`]
//! computes in one pass.
//!
//! A Δ-subsystem `ℤΓ ∩ Δ` agrees with the Φ-subsystem except in two families
//! when `b = 1`; see [`RootSystem::delta_re_subsystem`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::RootVector;
use crate::roots::{Family, RealRoot, RootSystem};

/// The set `rep + modulus·ℤ`, or the singleton `{rep}` when `modulus = 0`.
///
/// Equality is equality of sets, so any representative may be used.
#[derive(Debug, Clone, Copy)]
pub struct Progression {
    pub rep: i64,
    pub modulus: u64,
}

impl Progression {
    pub fn new(rep: i64, modulus: u64) -> Self {
        Self { rep, modulus }
    }

    pub fn contains(&self, j: i64) -> bool {
        if self.modulus == 0 {
            j == self.rep
        } else {
            (j as i128 - self.rep as i128).mod_floor(&(self.modulus as i128)) == 0
        }
    }

    /// Members in `[lo, hi]`, ascending.
    pub fn members_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        if self.modulus == 0 {
            return if (lo..=hi).contains(&self.rep) {
                vec![self.rep]
            } else {
                vec![]
            };
        }
        let m = self.modulus as i64;
        let start = lo + (self.rep - lo).mod_floor(&m);
        (start..=hi).step_by(m as usize).collect()
    }
}

impl PartialEq for Progression {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.contains(other.rep)
    }
}

impl Eq for Progression {}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{{{}}}", self.rep)
        } else {
            write!(f, "{}+{}Z", self.rep, self.modulus)
        }
    }
}

/// The long and short index sets of a Φ-subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexSets {
    pub long: Option<Progression>,
    pub short: Option<Progression>,
}

impl IndexSets {
    /// Every real root of the ambient system.
    pub fn full() -> Self {
        Self {
            long: Some(Progression::new(0, 1)),
            short: Some(Progression::new(0, 1)),
        }
    }

    pub fn contains(&self, r: &RealRoot) -> bool {
        let (long, j) = r.orbit_index();
        let set = if long { self.long } else { self.short };
        set.is_some_and(|p| p.contains(j))
    }

    /// Member roots with `|label index| ≤ bound`.
    pub fn roots_in_window(&self, bound: u64) -> BTreeSet<RealRoot> {
        let b = bound as i64;
        let mut out = BTreeSet::new();
        let mut add = |p: Option<Progression>, up: Family, down: Family| {
            if let Some(p) = p {
                for j in p.members_in(-b, b) {
                    out.insert(RealRoot::new(up, j));
                }
                // down_m has orbit index −m−1
                for j in p.members_in(-b - 1, b - 1) {
                    out.insert(RealRoot::new(down, -j - 1));
                }
            }
        };
        add(self.long, Family::LL, Family::LU);
        add(self.short, Family::SU, Family::SL);
        out
    }
}

impl fmt::Display for IndexSets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: Option<Progression>| p.map_or("-".to_string(), |p| p.to_string());
        write!(f, "I^L={} I^S={}", show(self.long), show(self.short))
    }
}

/// Row of the subsystem table describing a Φ-subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiKind {
    IL { r: i64 },
    IS { r: i64 },
    IIL { r: i64, d: u64 },
    IIS { r: i64, d: u64 },
    ILS { r: i64, d: u64 },
}

impl PhiKind {
    pub fn tag(&self) -> &'static str {
        match self {
            PhiKind::IL { .. } => "I_L",
            PhiKind::IS { .. } => "I_S",
            PhiKind::IIL { .. } => "II_L",
            PhiKind::IIS { .. } => "II_S",
            PhiKind::ILS { .. } => "II_LS",
        }
    }

    pub fn r(&self) -> i64 {
        match *self {
            PhiKind::IL { r }
            | PhiKind::IS { r }
            | PhiKind::IIL { r, .. }
            | PhiKind::IIS { r, .. }
            | PhiKind::ILS { r, .. } => r,
        }
    }

    pub fn d(&self) -> Option<u64> {
        match *self {
            PhiKind::IL { .. } | PhiKind::IS { .. } => None,
            PhiKind::IIL { d, .. } | PhiKind::IIS { d, .. } | PhiKind::ILS { d, .. } => Some(d),
        }
    }
}

/// A classified Φ-subsystem: its row, simple roots, Cartan matrix and the
/// matrix of inner products `(αᵢ, αⱼ)` of the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSubsystem {
    pub kind: PhiKind,
    pub base: Vec<RealRoot>,
    pub cartan: Vec<Vec<BigInt>>,
    pub inner_product: Vec<Vec<BigRational>>,
}

/// Finite, affine or hyperbolic type of a subsystem.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SubsystemClass {
    FiniteA1,
    AffineA1Tilde,
    AffineA2Tilde2,
    /// Cartan matrix `H(p, q)` with `pq ≥ 5`.
    Hyperbolic { p: BigInt, q: BigInt },
}

impl SubsystemClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SubsystemClass::FiniteA1 => "FiniteA1",
            SubsystemClass::AffineA1Tilde => "AffineA1tilde",
            SubsystemClass::AffineA2Tilde2 => "AffineA2tilde2",
            SubsystemClass::Hyperbolic { .. } => "Hyperbolic",
        }
    }
}

/// Triangular basis of the integer span of a set of lattice vectors.
///
/// Rank 2: `[(p, q), (0, r)]` with `p, r > 0` and `0 ≤ q < r`. Rank 1: a single
/// row whose leading nonzero entry is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublatticeBasis {
    pub rows: Vec<RootVector>,
}

impl SublatticeBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_lattice(&self) -> bool {
        self.rows == [RootVector::new(1, 0), RootVector::new(0, 1)]
    }

    /// Membership by back-substitution.
    pub fn contains(&self, v: &RootVector) -> bool {
        let mut rest = v.clone();
        for row in &self.rows {
            let (lead, target) = if !row.x.is_zero() {
                (&row.x, &rest.x)
            } else {
                (&row.y, &rest.y)
            };
            let (t, rem) = target.div_rem(lead);
            if !rem.is_zero() {
                return false;
            }
            rest = &rest - &(row * &t);
        }
        rest.is_zero()
    }
}

/// Computes the canonical triangular basis of `ℤ·gens`.
pub fn sublattice_basis(gens: &[RootVector]) -> SublatticeBasis {
    let mut pivot: Option<RootVector> = None;
    let mut tail = BigInt::zero();
    for g in gens {
        if g.x.is_zero() {
            tail = tail.gcd(&g.y);
            continue;
        }
        pivot = Some(match pivot {
            None => g.clone(),
            Some(p) => {
                // unimodular combination of p and g clearing the first column
                let e = p.x.extended_gcd(&g.x);
                let combined = RootVector {
                    x: e.gcd.clone(),
                    y: &e.x * &p.y + &e.y * &g.y,
                };
                let cleared = (&g.x / &e.gcd) * &p.y - (&p.x / &e.gcd) * &g.y;
                tail = tail.gcd(&cleared);
                combined
            }
        });
    }
    let mut rows = Vec::new();
    if let Some(mut p) = pivot {
        if p.x.is_negative() {
            p = -p;
        }
        if !tail.is_zero() {
            p.y = p.y.mod_floor(&tail);
        }
        rows.push(p);
    }
    if !tail.is_zero() {
        rows.push(RootVector::new(0, tail));
    }
    SublatticeBasis { rows }
}

fn gcd_of_differences(values: &BTreeSet<i64>) -> u64 {
    let first = match values.first() {
        Some(&f) => f,
        None => return 0,
    };
    values
        .iter()
        .fold(0u64, |g, &v| g.gcd(&(v - first).unsigned_abs()))
}

fn single_progression(values: &BTreeSet<i64>) -> Option<Progression> {
    let first = *values.first()?;
    let modulus = gcd_of_differences(values);
    let rep = if modulus == 0 {
        first
    } else {
        first.mod_floor(&(modulus as i64))
    };
    Some(Progression::new(rep, modulus))
}

/// `H(p, q) = ((2, −q), (−p, 2))`.
fn cartan_h(p: &BigInt, q: &BigInt) -> Vec<Vec<BigInt>> {
    let two = BigInt::from(2);
    vec![vec![two.clone(), -q], vec![-p, two]]
}

fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

impl RootSystem {
    /// Long and short orbit indices of the generators.
    pub fn generator_indices(&self, gens: &[RealRoot]) -> Result<(BTreeSet<i64>, BTreeSet<i64>)> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut long = BTreeSet::new();
        let mut short = BTreeSet::new();
        for g in gens {
            match g.orbit_index() {
                (true, j) => long.insert(j),
                (false, k) => short.insert(k),
            };
        }
        Ok((long, short))
    }

    /// Index sets of the Φ-subsystem generated by `gens`.
    pub fn phi_closure(&self, gens: &[RealRoot]) -> Result<IndexSets> {
        let (long, short) = self.generator_indices(gens)?;
        if short.is_empty() || long.is_empty() {
            return Ok(IndexSets {
                long: single_progression(&long),
                short: single_progression(&short),
            });
        }
        let mut g = gcd_of_differences(&long).gcd(&gcd_of_differences(&short));
        for &j in &long {
            for &k in &short {
                g = g.gcd(&(2 * j + 2 * k + 1).unsigned_abs());
            }
        }
        // g divides an odd number, so it is odd and at least 1
        let d = ((g - 1) / 2) as i64;
        let m = g as i64;
        let mut r = long.first().unwrap().mod_floor(&m);
        if r > d {
            r -= m;
        }
        let ix = IndexSets {
            long: Some(Progression::new(r, g)),
            short: Some(Progression::new(d - r, g)),
        };
        debug_assert!(short.iter().all(|&k| ix.short.unwrap().contains(k)));
        Ok(ix)
    }

    pub fn phi_membership(&self, ix: &IndexSets, r: &RealRoot) -> bool {
        ix.contains(r)
    }

    /// Identifies the table row of a Φ-subsystem and its simple roots, Cartan
    /// matrix and inner-product matrix.
    pub fn phi_classify(&self, ix: &IndexSets) -> Result<PhiSubsystem> {
        let seq = self.seq();
        let a = self.params().a_big();
        let b = self.params().b_big();
        let a_over_b = BigRational::new(a.clone(), b.clone());
        let invalid = || Error::PreconditionFailed(format!("invalid index sets {ix}"));
        let out = match (ix.long, ix.short) {
            (None, None) => return Err(invalid()),
            (Some(p), None) | (None, Some(p)) => {
                let long = ix.long.is_some();
                let (up, down) = if long {
                    (Family::LL, Family::LU)
                } else {
                    (Family::SU, Family::SL)
                };
                let scale = if long {
                    a_over_b.clone()
                } else {
                    BigRational::one()
                };
                if p.modulus == 0 {
                    let r = p.rep;
                    PhiSubsystem {
                        kind: if long { PhiKind::IL { r } } else { PhiKind::IS { r } },
                        base: vec![RealRoot::new(up, r)],
                        cartan: vec![vec![BigInt::from(2)]],
                        inner_product: vec![vec![scale * rational(BigInt::from(2))]],
                    }
                } else {
                    let d = p.modulus;
                    let r = p.rep.mod_floor(&(d as i64));
                    let delta = seq.delta(d as i64)?;
                    let cartan = cartan_h(&delta, &delta);
                    let inner = cartan
                        .iter()
                        .map(|row| row.iter().map(|c| &scale * rational(c.clone())).collect())
                        .collect();
                    PhiSubsystem {
                        kind: if long {
                            PhiKind::IIL { r, d }
                        } else {
                            PhiKind::IIS { r, d }
                        },
                        base: vec![RealRoot::new(up, r), RealRoot::new(down, d as i64 - r - 1)],
                        cartan,
                        inner_product: inner,
                    }
                }
            }
            (Some(l), Some(s)) => {
                let g = l.modulus;
                if g != s.modulus || g % 2 == 0 {
                    return Err(invalid());
                }
                let d = (g - 1) / 2;
                let di = d as i64;
                let mut r = l.rep.mod_floor(&(g as i64));
                if r > di {
                    r -= g as i64;
                }
                if !s.contains(di - r) {
                    return Err(invalid());
                }
                let eps = seq.epsilon(di)?;
                let p = &a * &eps;
                let q = &b * &eps;
                let inner = vec![
                    vec![rational(BigInt::from(2)) * &a_over_b, rational(-&p)],
                    vec![rational(-&p), rational(BigInt::from(2))],
                ];
                PhiSubsystem {
                    kind: PhiKind::ILS { r, d },
                    base: vec![RealRoot::new(Family::LL, r), RealRoot::new(Family::SU, di - r)],
                    cartan: cartan_h(&p, &q),
                    inner_product: inner,
                }
            }
        };
        Ok(out)
    }

    /// `cᵢⱼ = 2P(αᵢ, αⱼ)/P(αᵢ, αᵢ)` evaluated on the coordinates of `base`.
    pub fn direct_cartan(&self, base: &[RealRoot]) -> Result<Vec<Vec<BigInt>>> {
        let coords: Vec<_> = base.iter().map(|r| self.coords(r)).collect();
        let p = self.params();
        coords
            .iter()
            .map(|u| {
                let uu = p.pairing(u, u);
                coords
                    .iter()
                    .map(|v| {
                        let (c, rem) = (p.pairing(u, v) * BigInt::from(2)).div_rem(&uu);
                        if rem.is_zero() {
                            Ok(c)
                        } else {
                            Err(Error::PreconditionFailed(format!(
                                "non-integral Cartan entry for {u}, {v}"
                            )))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `(u, v) = P(u, v)/b` on the coordinates of `base`.
    pub fn direct_inner_product(&self, base: &[RealRoot]) -> Vec<Vec<BigRational>> {
        let coords: Vec<_> = base.iter().map(|r| self.coords(r)).collect();
        let p = self.params();
        coords
            .iter()
            .map(|u| {
                coords
                    .iter()
                    .map(|v| BigRational::new(p.pairing(u, v), p.b_big()))
                    .collect()
            })
            .collect()
    }

    pub fn subsystem_class(&self, t: &PhiSubsystem) -> SubsystemClass {
        if t.cartan.len() == 1 {
            return SubsystemClass::FiniteA1;
        }
        // H(p, q) stores −q at (0,1) and −p at (1,0)
        let p = -&t.cartan[1][0];
        let q = -&t.cartan[0][1];
        let two = BigInt::from(2);
        match (&p * &q).cmp(&BigInt::from(4)) {
            std::cmp::Ordering::Equal if p == two && q == two => SubsystemClass::AffineA1Tilde,
            std::cmp::Ordering::Equal => SubsystemClass::AffineA2Tilde2,
            _ => SubsystemClass::Hyperbolic { p, q },
        }
    }

    /// Index sets of `ℤΓ ∩ Δ^re`, and whether they coincide with `Φ(Γ)`.
    pub fn delta_re_subsystem(&self, gens: &[RealRoot]) -> Result<(IndexSets, bool)> {
        let phi = self.phi_closure(gens)?;
        let params = self.params();
        if params.b() == 1 && phi.long.is_none() {
            let short = phi.short.expect("nonempty generators");
            if params.a() > 4 && short.modulus == 1 {
                return Ok((IndexSets::full(), false));
            }
            if params.a() == 4 && short.modulus % 2 == 1 {
                let d = short.modulus as i64;
                let e = (d - 1) / 2;
                let mut s = (e - short.rep).mod_floor(&d);
                if s > e {
                    s -= d;
                }
                let ix = IndexSets {
                    long: Some(Progression::new(s, short.modulus)),
                    short: Some(Progression::new(e - s, short.modulus)),
                };
                return Ok((ix, false));
            }
        }
        Ok((phi, true))
    }

    /// Membership of `v` in `Δ(Γ) = ℤΓ ∩ Δ`, real or imaginary.
    pub fn delta_membership(&self, gens: &[RealRoot], v: &RootVector) -> Result<bool> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let coords: Vec<_> = gens.iter().map(|g| self.coords(g)).collect();
        Ok(sublattice_basis(&coords).contains(v) && self.classify(v).is_root())
    }
}
