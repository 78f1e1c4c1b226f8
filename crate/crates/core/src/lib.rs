//! Real roots of the rank 2 Kac–Moody algebras `H(a, b)`.
//!
//! `H(a, b)` has Cartan matrix `((2, −b), (−a, 2))` with `a ≥ b ≥ 1` and
//! `ab ≥ 4`. Every real root is named by a family label (`LL`, `LU`, `SU`,
//! `SL`) and an integer index, and its coordinates are given in closed form by
//! two integer sequences `γⱼ` and `ηⱼ`. On top of that the crate answers:
//!
//! * membership and coordinates of real roots ([`RootSystem`]),
//! * which sums of real roots are real ([`sums`]),
//! * the closure of a set of real roots under mutual reflections and the
//!   real roots in its integer span ([`subsystems`]),
//! * brute-force cross checks of all of the above ([`oracle`], [`verify`]).
//!
//! ```
//! use rank2_roots::{Family, RealRoot, RootClass, RootSystem, RootVector};
//!
//! let h = RootSystem::new(5, 1)?;
//! let ll1 = RealRoot::new(Family::LL, 1);
//! assert_eq!(h.coords(&ll1), RootVector::new(4, 5));
//! assert_eq!(h.classify(&RootVector::new(4, 5)), RootClass::Real(ll1));
//! # Ok::<(), rank2_roots::Error>(())
//! ```

pub mod error;
pub mod lattice;
pub mod oracle;
pub mod roots;
pub mod sequences;
pub mod subsystems;
pub mod sums;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{GramData, RootVector, Simple, SystemParams};
pub use roots::{Family, Length, RealRoot, RootClass, RootLiteral, RootSystem};
pub use sequences::{Identity, SeqCache};
pub use subsystems::{
    sublattice_basis, IndexSets, PhiKind, PhiSubsystem, Progression, SublatticeBasis,
    SubsystemClass,
};
pub use sums::{Sign, SumLength, SumTriple, SumVerdict};

pub use num_bigint;
pub use num_rational;
pub use num_traits;
