//! Real roots in canonical form `(family, index)`.
//!
//! ```text
//! LLⱼ = (w₁w₂)ʲ α₁          = ( ηⱼ,   a·γⱼ   )
//! LUⱼ = (w₂w₁)ʲ w₂ α₁       = ( ηⱼ,   a·γⱼ₊₁ )
//! SUⱼ = (w₂w₁)ʲ α₂          = ( b·γⱼ,   ηⱼ )
//! SLⱼ = (w₁w₂)ʲ w₁ α₂       = ( b·γⱼ₊₁, ηⱼ )
//! ```
//!
//! Every real root has exactly one such label, and it is positive iff `j ≥ 0`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::{RootVector, SystemParams};
use crate::sequences::SeqCache;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    LL,
    LU,
    SU,
    SL,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::LL, Family::LU, Family::SU, Family::SL];

    /// `LL` and `LU` make up the orbit `Wα₁`; `SU` and `SL` the orbit `Wα₂`.
    pub fn in_long_orbit(self) -> bool {
        matches!(self, Family::LL | Family::LU)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::LL => "LL",
            Family::LU => "LU",
            Family::SU => "SU",
            Family::SL => "SL",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "LL" => Ok(Family::LL),
            "LU" => Ok(Family::LU),
            "SU" => Ok(Family::SU),
            "SL" => Ok(Family::SL),
            _ => Err(Error::BadLiteral(s.to_string())),
        }
    }
}

/// A real root `α^{family}_{index}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealRoot {
    pub family: Family,
    pub index: i64,
}

impl RealRoot {
    pub const fn new(family: Family, index: i64) -> Self {
        Self { family, index }
    }

    pub fn is_positive(&self) -> bool {
        self.index >= 0
    }

    /// `−LLⱼ = LU₋ⱼ₋₁` and `−SUⱼ = SL₋ⱼ₋₁` (and back).
    pub fn negate(self) -> Self {
        let family = match self.family {
            Family::LL => Family::LU,
            Family::LU => Family::LL,
            Family::SU => Family::SL,
            Family::SL => Family::SU,
        };
        Self::new(family, -self.index - 1)
    }

    /// Index of this root in the long (`LL`) or short (`SU`) progression used by
    /// subsystem index sets: `LUₘ` and `SLₘ` map to `−m−1`.
    pub fn orbit_index(&self) -> (bool, i64) {
        match self.family {
            Family::LL => (true, self.index),
            Family::LU => (true, -self.index - 1),
            Family::SU => (false, self.index),
            Family::SL => (false, -self.index - 1),
        }
    }

    /// Writes this root as `±LLⱼ` or `±SUⱼ`.
    fn signed_base(self) -> (bool, Family, i64) {
        match self.family {
            Family::LL | Family::SU => (true, self.family, self.index),
            Family::LU | Family::SL => {
                let n = self.negate();
                (false, n.family, n.index)
            }
        }
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.index)
    }
}

impl FromStr for RealRoot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadLiteral(s.to_string());
        let (fam, idx) = s.split_once(':').ok_or_else(bad)?;
        let family = fam.parse::<Family>().map_err(|_| bad())?;
        let index = idx.trim().parse::<i64>().map_err(|_| bad())?;
        Ok(Self::new(family, index))
    }
}

/// A root given either by label (`"SU:-2"`) or by coordinates (`"1,4"`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLiteral {
    Label(RealRoot),
    Coords(RootVector),
}

impl FromStr for RootLiteral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains(':') {
            return s.parse().map(RootLiteral::Label);
        }
        let bad = || Error::BadLiteral(s.to_string());
        let (x, y) = s.split_once(',').ok_or_else(bad)?;
        let x = x.trim().parse::<BigInt>().map_err(|_| bad())?;
        let y = y.trim().parse::<BigInt>().map_err(|_| bad())?;
        Ok(RootLiteral::Coords(RootVector { x, y }))
    }
}

impl fmt::Display for RootLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootLiteral::Label(r) => write!(f, "{r}"),
            RootLiteral::Coords(v) => write!(f, "{},{}", v.x, v.y),
        }
    }
}

/// Classification of an arbitrary lattice vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    Real(RealRoot),
    Imaginary,
    NotRoot,
    Zero,
}

impl RootClass {
    pub fn tag(&self) -> &'static str {
        match self {
            RootClass::Real(_) => "Real",
            RootClass::Imaginary => "Imaginary",
            RootClass::NotRoot => "NotRoot",
            RootClass::Zero => "Zero",
        }
    }

    pub fn real(&self) -> Option<RealRoot> {
        match self {
            RootClass::Real(r) => Some(*r),
            _ => None,
        }
    }

    pub fn is_root(&self) -> bool {
        matches!(self, RootClass::Real(_) | RootClass::Imaginary)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Long,
    Short,
}

impl Length {
    pub fn as_str(self) -> &'static str {
        match self {
            Length::Long => "long",
            Length::Short => "short",
        }
    }
}

/// A validated system together with its sequence cache.
#[derive(Debug, Clone)]
pub struct RootSystem {
    params: SystemParams,
    seq: SeqCache,
}

impl RootSystem {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        Ok(Self::from_params(SystemParams::new(a, b)?))
    }

    pub fn from_params(params: SystemParams) -> Self {
        Self {
            params,
            seq: SeqCache::new(params),
        }
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn seq(&self) -> &SeqCache {
        &self.seq
    }

    pub fn norm(&self, v: &RootVector) -> BigInt {
        self.params.norm(v)
    }

    pub fn coords(&self, r: &RealRoot) -> RootVector {
        let j = r.index;
        let s = &self.seq;
        match r.family {
            Family::LL => RootVector {
                x: s.eta(j),
                y: self.params.a_big() * s.gamma(j),
            },
            Family::LU => RootVector {
                x: s.eta(j),
                y: self.params.a_big() * s.gamma(j + 1),
            },
            Family::SU => RootVector {
                x: self.params.b_big() * s.gamma(j),
                y: s.eta(j),
            },
            Family::SL => RootVector {
                x: self.params.b_big() * s.gamma(j + 1),
                y: s.eta(j),
            },
        }
    }

    pub fn height(&self, r: &RealRoot) -> BigInt {
        self.coords(r).height()
    }

    /// Total classification of lattice vectors by norm and sequence inversion.
    pub fn classify(&self, v: &RootVector) -> RootClass {
        if v.is_zero() {
            return RootClass::Zero;
        }
        let n = self.norm(v);
        if !n.is_positive() {
            return RootClass::Imaginary;
        }
        if !v.is_positive() && !v.is_negative() {
            return RootClass::NotRoot;
        }
        let negative = v.is_negative();
        let u = if negative { -v } else { v.clone() };
        let mut found = None;
        if n == self.params.a_big() {
            found = self.invert_long(&u);
        }
        if found.is_none() && n == self.params.b_big() {
            found = self.invert_short(&u);
        }
        match found {
            Some(r) if negative => RootClass::Real(r.negate()),
            Some(r) => RootClass::Real(r),
            None => RootClass::NotRoot,
        }
    }

    fn invert_long(&self, u: &RootVector) -> Option<RealRoot> {
        let j = self.seq.eta_index_of(&u.x)? as i64;
        let a = self.params.a_big();
        if u.y == &a * self.seq.gamma(j) {
            Some(RealRoot::new(Family::LL, j))
        } else if u.y == &a * self.seq.gamma(j + 1) {
            Some(RealRoot::new(Family::LU, j))
        } else {
            None
        }
    }

    fn invert_short(&self, u: &RootVector) -> Option<RealRoot> {
        let j = self.seq.eta_index_of(&u.y)? as i64;
        let b = self.params.b_big();
        if u.x == &b * self.seq.gamma(j) {
            Some(RealRoot::new(Family::SU, j))
        } else if u.x == &b * self.seq.gamma(j + 1) {
            Some(RealRoot::new(Family::SL, j))
        } else {
            None
        }
    }

    /// `w_mirror(target)` computed on labels.
    pub fn reflect(&self, mirror: &RealRoot, target: &RealRoot) -> RealRoot {
        // w_{−α} = w_α, so only the orbit index of the mirror matters.
        let (mirror_long, k) = mirror.orbit_index();
        let (positive, fam, j) = target.signed_base();
        // w_k(±X_j) = ∓X'_n
        let (fam, n) = match (mirror_long, fam) {
            (true, Family::LL) => (Family::LL, 2 * k - j),
            (false, Family::SU) => (Family::SU, 2 * k - j),
            (true, Family::SU) => (Family::SU, -2 * k - j - 1),
            (false, Family::LL) => (Family::LL, -2 * k - j - 1),
            _ => unreachable!("signed_base returns LL or SU"),
        };
        let base = RealRoot::new(fam, n);
        if positive {
            base.negate()
        } else {
            base
        }
    }

    /// All roots are long in a symmetric system.
    pub fn length_class(&self, r: &RealRoot) -> Length {
        if r.family.in_long_orbit() || self.params.is_symmetric() {
            Length::Long
        } else {
            Length::Short
        }
    }

    /// Positive real roots with index `0..=max_index` in all four families,
    /// sorted by height, then family, then index.
    pub fn enumerate_real(&self, max_index: u64) -> Vec<RealRoot> {
        let mut seen = BTreeSet::new();
        let mut roots = Vec::new();
        for family in Family::ALL {
            for j in 0..=max_index as i64 {
                let r = RealRoot::new(family, j);
                if seen.insert(self.coords(&r)) {
                    roots.push(r);
                }
            }
        }
        self.sort_by_height(&mut roots);
        roots
    }

    /// Real roots with `|index| ≤ bound` in all four families, positive and
    /// negative.
    pub fn real_roots_in_window(&self, bound: u64) -> Vec<RealRoot> {
        let b = bound as i64;
        Family::ALL
            .iter()
            .flat_map(|&f| (-b..=b).map(move |j| RealRoot::new(f, j)))
            .collect()
    }

    pub fn sort_by_height(&self, roots: &mut [RealRoot]) {
        roots.sort_by_cached_key(|r| (self.height(r), *r));
    }

    /// Vectors with `x, y ≥ 0`, `0 < x + y ≤ height_bound` and `N ≤ 0`, sorted
    /// by height then `x`; optionally followed by their negatives.
    pub fn enumerate_imaginary(&self, height_bound: u64, include_negatives: bool) -> Vec<RootVector> {
        let h = height_bound as i64;
        let mut out = Vec::new();
        for height in 1..=h {
            for x in 0..=height {
                let v = RootVector::new(x, height - x);
                if !self.norm(&v).is_positive() {
                    out.push(v);
                }
            }
        }
        if include_negatives {
            let neg: Vec<_> = out.iter().map(|v| -v).collect();
            out.extend(neg);
        }
        out
    }

    /// Resolves a literal to a real root, rejecting coordinates that are not real.
    pub fn resolve(&self, lit: &RootLiteral) -> Result<RealRoot> {
        match lit {
            RootLiteral::Label(r) => Ok(*r),
            RootLiteral::Coords(v) => self
                .classify(v)
                .real()
                .ok_or_else(|| Error::NotReal(lit.to_string())),
        }
    }

    /// Orders roots by height then label, the canonical output order.
    pub fn cmp_roots(&self, l: &RealRoot, r: &RealRoot) -> Ordering {
        (self.height(l), l).cmp(&(self.height(r), r))
    }
}
