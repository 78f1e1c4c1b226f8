//! Sums of real roots.
//!
//! When `a ≥ b > 1` no sum of two real roots is real. When `b = 1` the
//! positive real `β` with `β ± αᵢ` real are listed by
//! [`RootSystem::simple_sum_neighbors`]: finitely many for `a > 4`, periodic
//! families in the affine `H(4,1)`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::{RootVector, Simple};
use crate::roots::{Family, Length, RealRoot, RootClass, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumVerdict {
    RealSum(RealRoot),
    ImaginarySum,
    NotRootSum,
    ZeroSum,
}

impl SumVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            SumVerdict::RealSum(_) => "RealSum",
            SumVerdict::ImaginarySum => "ImaginarySum",
            SumVerdict::NotRootSum => "NotRootSum",
            SumVerdict::ZeroSum => "ZeroSum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Predicted length of `α + β` when it is real.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumLength {
    Long,
    Short,
    NotReal,
}

impl SumLength {
    pub fn as_str(self) -> &'static str {
        match self {
            SumLength::Long => "long",
            SumLength::Short => "short",
            SumLength::NotReal => "not-real",
        }
    }
}

impl fmt::Display for SumLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A pair of real roots together with their real sum.
pub type SumTriple = (RealRoot, RealRoot, RealRoot);

impl RootSystem {
    pub fn sum_coords(&self, alpha: &RealRoot, beta: &RealRoot) -> RootVector {
        &self.coords(alpha) + &self.coords(beta)
    }

    pub fn sum_classify(&self, alpha: &RealRoot, beta: &RealRoot) -> SumVerdict {
        match self.classify(&self.sum_coords(alpha, beta)) {
            RootClass::Real(r) => SumVerdict::RealSum(r),
            RootClass::Imaginary => SumVerdict::ImaginarySum,
            RootClass::NotRoot => SumVerdict::NotRootSum,
            RootClass::Zero => SumVerdict::ZeroSum,
        }
    }

    /// The positive real `β` with index `≤ max_index` such that `β + sign·αᵢ`
    /// is real.
    ///
    /// For `a > 4` the sets are finite and independent of `max_index ≥ 1`.
    /// In the affine `H(4,1)` every such `β` is translated by the null root
    /// `(1, 2)` to another one, so the sets are infinite and get truncated.
    pub fn simple_sum_neighbors(&self, i: Simple, sign: Sign, max_index: u64) -> Vec<RealRoot> {
        let p = self.params();
        if p.b() != 1 {
            return Vec::new();
        }
        use Family::*;
        let mut roots: Vec<RealRoot> = if p.a() > 4 {
            let finite: &[RealRoot] = match (i, sign) {
                // α₂
                (Simple::One, Sign::Plus) => &[RealRoot::new(SU, 0)],
                // α₁ + α₂
                (Simple::One, Sign::Minus) => &[RealRoot::new(SL, 0)],
                // α₁, α₁ + (a−1)α₂
                (Simple::Two, Sign::Plus) => &[RealRoot::new(LL, 0), RealRoot::new(SU, 1)],
                // α₁ + α₂, α₁ + aα₂
                (Simple::Two, Sign::Minus) => &[RealRoot::new(SL, 0), RealRoot::new(LU, 0)],
            };
            finite
                .iter()
                .copied()
                .filter(|r| r.index as u64 <= max_index)
                .collect()
        } else {
            // SLⱼ − SUⱼ = α₁ and LLⱼ₊₁ − LLⱼ = (2, 4) for every j
            let picks = |f: Family, keep: fn(i64) -> bool| {
                (0..=max_index as i64)
                    .filter(move |&j| keep(j))
                    .map(move |j| RealRoot::new(f, j))
            };
            let all = |_: i64| true;
            let odd = |j: i64| j % 2 == 1;
            let even = |j: i64| j % 2 == 0;
            match (i, sign) {
                (Simple::One, Sign::Plus) => picks(SU, all).collect(),
                (Simple::One, Sign::Minus) => picks(SL, all).collect(),
                (Simple::Two, Sign::Plus) => picks(LL, all).chain(picks(SU, odd)).collect(),
                (Simple::Two, Sign::Minus) => picks(LU, all).chain(picks(SL, even)).collect(),
            }
        };
        self.sort_by_height(&mut roots);
        roots
    }

    /// Every unordered pair of real roots with `|index| ≤ max_index` whose sum
    /// is real, as `(α, β, α+β)` with `α ≤ β`, sorted.
    pub fn real_sum_pairs(&self, max_index: u64) -> Vec<SumTriple> {
        let roots = self.real_roots_in_window(max_index);
        let coords: Vec<_> = roots.iter().map(|r| self.coords(r)).collect();
        let mut out = Vec::new();
        for i in 0..roots.len() {
            for j in i..roots.len() {
                if let RootClass::Real(s) = self.classify(&(&coords[i] + &coords[j])) {
                    let (x, y) = if roots[i] <= roots[j] {
                        (roots[i], roots[j])
                    } else {
                        (roots[j], roots[i])
                    };
                    out.push((x, y, s));
                }
            }
        }
        out.sort();
        out
    }

    /// Length of `α + β` predicted from the lengths of `α` and `β`:
    /// short+short is long, short+long is short, long+long is never real.
    pub fn sum_length_rule(&self, alpha: &RealRoot, beta: &RealRoot) -> Result<SumLength> {
        if self.sum_coords(alpha, beta).is_zero() {
            return Err(Error::DegenerateSum);
        }
        Ok(match (self.length_class(alpha), self.length_class(beta)) {
            (Length::Short, Length::Short) => SumLength::Long,
            (Length::Long, Length::Long) => SumLength::NotReal,
            _ => SumLength::Short,
        })
    }

    /// Checks the norm of a real sum: equal norms give an integer multiple,
    /// unequal norms give the minimum.
    pub fn norm_of_sum_check(&self, alpha: &RealRoot, beta: &RealRoot) -> Result<bool> {
        let sum = self.sum_coords(alpha, beta);
        if self.classify(&sum).real().is_none() {
            return Err(Error::PreconditionFailed(format!("{alpha} + {beta} is not a real root")));
        }
        let na = self.norm(&self.coords(alpha));
        let nb = self.norm(&self.coords(beta));
        let ns = self.norm(&sum);
        Ok(if na == nb {
            ns > BigInt::from(0) && &ns % &na == BigInt::from(0)
        } else {
            ns == na.min(nb)
        })
    }

    /// All `(m, n)` with `1 ≤ m, n ≤ coeff_bound` and `mα + nβ` real, sorted by
    /// `(m, n)`.
    pub fn positive_combinations(
        &self,
        alpha: &RealRoot,
        beta: &RealRoot,
        coeff_bound: u64,
    ) -> Vec<(u64, u64, RealRoot)> {
        let ca = self.coords(alpha);
        let cb = self.coords(beta);
        let mut out = Vec::new();
        for m in 1..=coeff_bound {
            let ma = &ca * &BigInt::from(m);
            for n in 1..=coeff_bound {
                let v = &ma + &(&cb * &BigInt::from(n));
                if let RootClass::Real(r) = self.classify(&v) {
                    out.push((m, n, r));
                }
            }
        }
        out
    }
}
