//! System parameters, lattice vectors and the integral bilinear form.
//!
//! Vectors are written in the simple-root basis `{α₁, α₂}`. The symmetric
//! form `B(a,b)` has the non-integral entry `2a/b`, so everything here works
//! with the scaled form `P = b·B`:
//!
//! ```text
//! P(u, v) = 2a·xᵤxᵥ − ab·(xᵤyᵥ + xᵥyᵤ) + 2b·yᵤyᵥ
//! N(v)    = P(v, v) / 2 = a·x² − ab·xy + b·y²
//! ```
//!
//! `N(α₁) = a` and `N(α₂) = b`, so the long orbit `Wα₁` lies on `N = a` and the
//! short orbit `Wα₂` on `N = b`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// The pair `(a, b)` defining the generalized Cartan matrix `H(a,b) = ((2,−b),(−a,2))`.
///
/// Always satisfies `a ≥ b ≥ 1` and `ab ≥ 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemParams {
    a: u64,
    b: u64,
}

impl SystemParams {
    /// Validates `(a, b)`. Finite systems (`ab < 4`) and `a < b` are rejected;
    /// the pair is never swapped since that would permute the simple roots.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < 1 || a < b || a.checked_mul(b).map_or(true, |ab| ab < 4) {
            return Err(Error::InvalidParams { a, b });
        }
        Ok(Self {
            a: a as u64,
            b: b as u64,
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn ab(&self) -> u64 {
        self.a * self.b
    }

    pub fn is_affine(&self) -> bool {
        self.ab() == 4
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.ab() > 4
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
    }

    pub(crate) fn a_big(&self) -> BigInt {
        BigInt::from(self.a)
    }

    pub(crate) fn b_big(&self) -> BigInt {
        BigInt::from(self.b)
    }

    pub(crate) fn ab_big(&self) -> BigInt {
        BigInt::from(self.ab())
    }

    /// The generalized Cartan matrix `H(a,b)`.
    pub fn cartan(&self) -> [[i64; 2]; 2] {
        [[2, -(self.b as i64)], [-(self.a as i64), 2]]
    }

    pub fn gram(&self) -> GramData {
        let a = self.a_big();
        let b = self.b_big();
        let ab = &a * &b;
        GramData {
            entries: [[&a * 2, -ab.clone()], [-ab, &b * 2]],
        }
    }

    /// `N(v) = a·x² − ab·xy + b·y²`, i.e. `(b/2)·‖v‖²`.
    pub fn norm(&self, v: &RootVector) -> BigInt {
        let a = self.a_big();
        let b = self.b_big();
        &a * &v.x * &v.x - &a * &b * &v.x * &v.y + &b * &v.y * &v.y
    }

    /// `P(u, v) = b·(u, v)`. Symmetric, integral, and `P(v, v) = 2·N(v)`.
    pub fn pairing(&self, u: &RootVector, v: &RootVector) -> BigInt {
        let a = self.a_big();
        let b = self.b_big();
        BigInt::from(2) * &a * &u.x * &v.x - &a * &b * (&u.x * &v.y + &v.x * &u.y)
            + BigInt::from(2) * &b * &u.y * &v.y
    }

    /// `w₁(x,y) = (−x + by, y)` and `w₂(x,y) = (x, ax − y)`.
    pub fn simple_reflection(&self, i: Simple, v: &RootVector) -> RootVector {
        match i {
            Simple::One => RootVector {
                x: &v.y * self.b_big() - &v.x,
                y: v.y.clone(),
            },
            Simple::Two => RootVector {
                x: v.x.clone(),
                y: &v.x * self.a_big() - &v.y,
            },
        }
    }

    /// Reflection in the mirror `m`: `v − (2P(m,v)/P(m,m))·m`.
    ///
    /// The mirror must lie on one of the real-root conics `N = a` or `N = b`.
    pub fn general_reflection(&self, mirror: &RootVector, v: &RootVector) -> Result<RootVector> {
        let n = self.norm(mirror);
        if n != self.a_big() && n != self.b_big() {
            return Err(Error::NotRealMirror(mirror.clone()));
        }
        // 2P(m,v)/P(m,m) = P(m,v)/N(m)
        let (coeff, rem) = self.pairing(mirror, v).div_rem(&n);
        if !rem.is_zero() {
            return Err(Error::NotRealMirror(mirror.clone()));
        }
        Ok(v - &(mirror * &coeff))
    }
}

impl fmt::Display for SystemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{})", self.a, self.b)
    }
}

/// One of the two simple reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Simple {
    One,
    Two,
}

impl Simple {
    pub fn vector(self) -> RootVector {
        match self {
            Simple::One => RootVector::new(1, 0),
            Simple::Two => RootVector::new(0, 1),
        }
    }
}

/// Entries of the scaled pairing matrix `b·B = ((2a, −ab), (−ab, 2b))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramData {
    pub entries: [[BigInt; 2]; 2],
}

impl GramData {
    pub fn determinant(&self) -> BigInt {
        let e = &self.entries;
        &e[0][0] * &e[1][1] - &e[0][1] * &e[1][0]
    }
}

/// An integer vector `x·α₁ + y·α₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootVector {
    pub x: BigInt,
    pub y: BigInt,
}

impl RootVector {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Both coordinates `≥ 0` and not both zero.
    pub fn is_positive(&self) -> bool {
        !self.x.is_negative() && !self.y.is_negative() && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.x.is_positive() && !self.y.is_positive() && !self.is_zero()
    }

    pub fn height(&self) -> BigInt {
        &self.x + &self.y
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
        }
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
        }
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl Mul<&BigInt> for &RootVector {
    type Output = RootVector;
    fn mul(self, k: &BigInt) -> RootVector {
        RootVector {
            x: &self.x * k,
            y: &self.y * k,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(a: i64, b: i64) -> SystemParams {
        SystemParams::new(a, b).unwrap()
    }

    #[test]
    fn constructor_validates() {
        assert_eq!(h(5, 1).a(), 5);
        assert!(h(2, 2).is_affine());
        assert!(h(4, 1).is_affine());
        assert!(h(3, 2).is_hyperbolic());
        for (a, b) in [(1, 3), (3, 1), (1, 1), (0, 0), (-5, -1), (2, 1), (5, 0)] {
            assert_eq!(SystemParams::new(a, b), Err(Error::InvalidParams { a, b }));
        }
    }

    #[test]
    fn norm_values() {
        assert_eq!(h(5, 1).norm(&RootVector::new(1, 0)), BigInt::from(5));
        assert_eq!(h(5, 1).norm(&RootVector::new(0, 1)), BigInt::from(1));
        // 5·16 − 5·20 + 25
        assert_eq!(h(5, 1).norm(&RootVector::new(4, 5)), BigInt::from(5));
        assert_eq!(h(3, 2).norm(&RootVector::new(1, 1)), BigInt::from(-1));
    }

    #[test]
    fn pairing_values() {
        let s = h(5, 1);
        let e1 = RootVector::new(1, 0);
        assert_eq!(s.pairing(&e1, &RootVector::new(0, 1)), BigInt::from(-5));
        // 2·5·4 − 5·15
        assert_eq!(s.pairing(&e1, &RootVector::new(4, 15)), BigInt::from(-35));
        assert_eq!(s.pairing(&e1, &e1), BigInt::from(10));
    }

    #[test]
    fn positivity_and_height() {
        let v = RootVector::new(1, 4);
        assert!(v.is_positive() && !v.is_negative());
        assert_eq!(v.height(), BigInt::from(5));
        assert!(RootVector::new(-1, -5).is_negative());
        let m = RootVector::new(1, -1);
        assert!(!m.is_positive() && !m.is_negative());
        assert!(!RootVector::zero().is_positive() && !RootVector::zero().is_negative());
    }

    #[test]
    fn simple_reflections() {
        let e1 = RootVector::new(1, 0);
        assert_eq!(h(5, 1).simple_reflection(Simple::Two, &e1), RootVector::new(1, 5));
        assert_eq!(h(5, 1).simple_reflection(Simple::One, &e1), RootVector::new(-1, 0));
        assert_eq!(
            h(3, 2).simple_reflection(Simple::One, &RootVector::new(0, 1)),
            RootVector::new(2, 1)
        );
    }

    #[test]
    fn general_reflection_examples() {
        let s = h(5, 1);
        let e1 = RootVector::new(1, 0);
        assert_eq!(
            s.general_reflection(&RootVector::new(0, 1), &e1).unwrap(),
            RootVector::new(1, 5)
        );
        assert_eq!(
            s.general_reflection(&RootVector::new(1, 5), &e1).unwrap(),
            // w₂w₁w₂α₁; coefficient 2P(m,v)/P(m,m) = −30/10
            RootVector::new(4, 15)
        );
        // (1,1) has N = 1 = b
        let m = RootVector::new(1, 1);
        assert_eq!(s.general_reflection(&m, &m).unwrap(), RootVector::new(-1, -1));
        assert!(matches!(
            s.general_reflection(&RootVector::new(1, 2), &e1),
            Err(Error::NotRealMirror(_))
        ));
    }

    #[test]
    fn gram_determinant() {
        for (a, b) in [(5, 1), (4, 1), (2, 2), (3, 2), (7, 3), (5, 5)] {
            let s = h(a, b);
            let det = s.gram().determinant();
            assert_eq!(det, BigInt::from(4 * a * b - a * a * b * b));
            assert_eq!(det.is_zero(), s.is_affine());
        }
    }

    #[test]
    fn simple_mirrors_match_simple_reflections() {
        for (a, b) in [(5, 1), (2, 2), (7, 3)] {
            let s = h(a, b);
            for x in -100..=100 {
                for y in (-100..=100).step_by(7) {
                    let v = RootVector::new(x, y);
                    for i in [Simple::One, Simple::Two] {
                        assert_eq!(
                            s.general_reflection(&i.vector(), &v).unwrap(),
                            s.simple_reflection(i, &v)
                        );
                    }
                }
            }
        }
    }

    fn system() -> impl Strategy<Value = SystemParams> {
        (1i64..6, 1i64..12).prop_filter_map("valid", |(b, a)| SystemParams::new(a.max(b), b).ok())
    }

    proptest! {
        #[test]
        fn reflections_preserve_norm_and_are_involutions(
            s in system(), x in -10_000i64..10_000, y in -10_000i64..10_000,
        ) {
            let v = RootVector::new(x, y);
            for i in [Simple::One, Simple::Two] {
                let w = s.simple_reflection(i, &v);
                prop_assert_eq!(s.norm(&w), s.norm(&v));
                prop_assert_eq!(s.simple_reflection(i, &w), v.clone());
            }
        }

        #[test]
        fn pairing_symmetric(s in system(), ux in -500i64..500, uy in -500i64..500, vx in -500i64..500, vy in -500i64..500) {
            let u = RootVector::new(ux, uy);
            let v = RootVector::new(vx, vy);
            prop_assert_eq!(s.pairing(&u, &v), s.pairing(&v, &u));
            prop_assert_eq!(s.pairing(&v, &v), s.norm(&v) * 2);
        }
    }
}
