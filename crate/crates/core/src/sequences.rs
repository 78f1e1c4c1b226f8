//! The integer sequences `γⱼ`, `ηⱼ` whose values are the coordinates of the
//! real roots, and the difference sequences `δ_d = η_d − η_{d−1}`,
//! `ε_d = γ_{d+1} − γ_d` that parametrize rank 2 subsystems.
//!
//! Non-negative indices come from the coupled recurrence
//! `γⱼ = η_{j−1} − γ_{j−1}`, `ηⱼ = ab·γⱼ − η_{j−1}` with `γ₀ = 0`, `η₀ = 1`.
//! Negative indices use `γ_{−j} = −γⱼ` and `η_{−j} = −η_{j−1}`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::SystemParams;

#[derive(Debug, Default, Clone)]
struct Tables {
    gamma: Vec<BigInt>,
    eta: Vec<BigInt>,
}

/// Memoized `γⱼ`, `ηⱼ` for one system.
///
/// Values are computed on demand and shared between threads; results are
/// identical to evaluating the recurrence from scratch.
#[derive(Debug)]
pub struct SeqCache {
    params: SystemParams,
    tables: RwLock<Tables>,
}

impl Clone for SeqCache {
    fn clone(&self) -> Self {
        Self {
            params: self.params,
            tables: RwLock::new(self.read().clone()),
        }
    }
}

impl SeqCache {
    pub fn new(params: SystemParams) -> Self {
        let ab = BigInt::from(params.ab());
        Self {
            params,
            tables: RwLock::new(Tables {
                gamma: vec![BigInt::zero(), BigInt::one()],
                eta: vec![BigInt::one(), ab - 1],
            }),
        }
    }

    pub fn params(&self) -> SystemParams {
        self.params
    }

    fn read(&self) -> std::sync::RwLockReadGuard<'_, Tables> {
        self.tables.read().unwrap_or_else(|e| e.into_inner())
    }

    /// Makes sure indices `0..=n` are cached.
    fn ensure(&self, n: usize) {
        if self.read().gamma.len() > n {
            return;
        }
        let mut t = self.tables.write().unwrap_or_else(|e| e.into_inner());
        let ab = self.params.ab_big();
        while t.gamma.len() <= n {
            let k = t.gamma.len();
            let g = &t.eta[k - 1] - &t.gamma[k - 1];
            let e = &ab * &g - &t.eta[k - 1];
            t.gamma.push(g);
            t.eta.push(e);
        }
    }

    fn gamma_nonneg(&self, j: usize) -> BigInt {
        self.ensure(j);
        self.read().gamma[j].clone()
    }

    fn eta_nonneg(&self, j: usize) -> BigInt {
        self.ensure(j);
        self.read().eta[j].clone()
    }

    /// `γⱼ` for any `j ∈ ℤ`.
    pub fn gamma(&self, j: i64) -> BigInt {
        if j >= 0 {
            self.gamma_nonneg(j as usize)
        } else {
            -self.gamma_nonneg(j.unsigned_abs() as usize)
        }
    }

    /// `ηⱼ` for any `j ∈ ℤ`.
    pub fn eta(&self, j: i64) -> BigInt {
        if j >= 0 {
            self.eta_nonneg(j as usize)
        } else {
            // η_{−m} = −η_{m−1}
            -self.eta_nonneg((j.unsigned_abs() - 1) as usize)
        }
    }

    /// `δ_d = η_d − η_{d−1}`, defined for `d ≥ 1`.
    pub fn delta(&self, d: i64) -> Result<BigInt> {
        if d < 1 {
            return Err(Error::InvalidIndex { name: "delta", index: d });
        }
        Ok(self.delta_ext(d))
    }

    /// `ε_d = γ_{d+1} − γ_d`, defined for `d ≥ 0`.
    pub fn epsilon(&self, d: i64) -> Result<BigInt> {
        if d < 0 {
            return Err(Error::InvalidIndex { name: "epsilon", index: d });
        }
        Ok(self.epsilon_ext(d))
    }

    /// `η_n − η_{n−1}` extended to all `n ∈ ℤ`.
    pub(crate) fn delta_ext(&self, n: i64) -> BigInt {
        self.eta(n) - self.eta(n - 1)
    }

    /// `γ_{n+1} − γ_n` extended to all `n ∈ ℤ`.
    pub(crate) fn epsilon_ext(&self, n: i64) -> BigInt {
        self.gamma(n + 1) - self.gamma(n)
    }

    /// The unique `j ≥ 0` with `ηⱼ = target`, if any. Relies on `ηⱼ` being
    /// strictly increasing for `j ≥ 0`, which holds whenever `ab ≥ 4`.
    pub fn eta_index_of(&self, target: &BigInt) -> Option<usize> {
        if *target < BigInt::one() {
            return None;
        }
        loop {
            {
                let t = self.read();
                if t.eta.last().is_some_and(|last| last >= target) {
                    return t.eta.binary_search(target).ok();
                }
            }
            let len = self.read().eta.len();
            self.ensure(len * 2);
        }
    }
}

/// `γ_d ∣ γⱼ` by the closed-form criterion `j ∈ dℤ` (for `d = 0`: `j = 0`).
pub fn div_gamma_gamma(_sys: &SystemParams, d: u64, j: i64) -> bool {
    in_class(j, 0, d)
}

/// `η_d ∣ γⱼ` iff `j ∈ (2d+1)ℤ`.
pub fn div_eta_gamma(_sys: &SystemParams, d: u64, j: i64) -> bool {
    in_class(j, 0, 2 * d + 1)
}

/// `η_d ∣ ηⱼ` iff `j ∈ d + (2d+1)ℤ`.
pub fn div_eta_eta(_sys: &SystemParams, d: u64, j: i64) -> bool {
    in_class(j, d as i64, 2 * d + 1)
}

/// `γ_d ∣ ηⱼ`: for hyperbolic systems iff `d = 1`; for affine systems iff
/// `d = 2e+1` is odd and `j ∈ e + (2e+1)ℤ`.
pub fn div_gamma_eta(sys: &SystemParams, d: u64, j: i64) -> bool {
    if sys.is_hyperbolic() {
        d == 1
    } else {
        d % 2 == 1 && in_class(j, ((d - 1) / 2) as i64, d)
    }
}

/// `j ≡ r (mod m)`, where modulus 0 means equality.
fn in_class(j: i64, r: i64, m: u64) -> bool {
    if m == 0 {
        j == r
    } else {
        (j as i128 - r as i128).mod_floor(&(m as i128)) == 0
    }
}

/// The four product identities relating the sequences to their shifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `γ_d·δ_{j−d} = γⱼ − γ_{j−2d}`
    GammaDelta,
    /// `η_d·ε_{j−d−1} = γⱼ − γ_{j−2d−1}`
    EtaEpsilon,
    /// `η_d·δ_{j−d} = ηⱼ − η_{j−2d−1}`
    EtaDelta,
    /// `ab·γ_d·ε_{j−d} = ηⱼ − η_{j−2d}`
    AbGammaEpsilon,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::GammaDelta,
        Identity::EtaEpsilon,
        Identity::EtaDelta,
        Identity::AbGammaEpsilon,
    ];

    /// Numbered 1 to 4 in the order above.
    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }
}

/// Evaluates both sides of `which` exactly and reports whether they agree.
pub fn divrec_identity_check(seq: &SeqCache, which: Identity, d: u64, j: i64) -> bool {
    let d = d as i64;
    let (lhs, rhs) = match which {
        Identity::GammaDelta => (
            seq.gamma(d) * seq.delta_ext(j - d),
            seq.gamma(j) - seq.gamma(j - 2 * d),
        ),
        Identity::EtaEpsilon => (
            seq.eta(d) * seq.epsilon_ext(j - d - 1),
            seq.gamma(j) - seq.gamma(j - 2 * d - 1),
        ),
        Identity::EtaDelta => (
            seq.eta(d) * seq.delta_ext(j - d),
            seq.eta(j) - seq.eta(j - 2 * d - 1),
        ),
        Identity::AbGammaEpsilon => (
            seq.params().ab_big() * seq.gamma(d) * seq.epsilon_ext(j - d),
            seq.eta(j) - seq.eta(j - 2 * d),
        ),
    };
    lhs == rhs
}
