//! Exact computation of Hilbert series of invariant rings `C[W]^G` for the
//! classical groups `Sp(2k)`, `O(n)` and `SO(n)` acting on polynomial
//! `GL(n)`-modules `W`, together with the exterior-algebra invariants of
//! `Λ(S²V)` and `Λ(Λ²V)`.
//!
//! The crate is `no_std` (it needs `alloc`). All arithmetic is exact; the
//! coefficient ring is [`num_bigint::BigInt`].
//!
//! Layout:
//!
//! * [`partition`]: partitions, Frobenius coordinates, rim-hook removal.
//! * [`symfunc`]: sparse polynomials, Schur polynomials, Kostka and
//!   Littlewood–Richardson coefficients.
//! * [`branching`]: restriction from `GL(n)` to `Sp`, `O`, `SO`.
//! * [`hilbert`]: multiplicity tables of `S(W)` and the invariant series.
//! * [`exterior`]: Hilbert polynomials of `Λ(S²V)^G` and `Λ(Λ²V)^G`.
//! * [`oracle`]: Weyl constant-term integration and a product-based LR count.
//! * [`rational`]: expansion of closed-form rational series.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod branching;
mod error;
pub mod exterior;
pub mod group;
pub mod hilbert;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod series;
pub mod symfunc;

pub use error::{Error, Result};
pub use group::{GroupId, GroupKind};
pub use hilbert::{ModuleSpec, MultiplicityTable};
pub use partition::{FrobeniusCoords, HookRemoval, Partition};
pub use series::TruncatedSeries;
pub use symfunc::{SchurCache, SchurExpansion, SymPoly};
