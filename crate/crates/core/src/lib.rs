//! Exact screening of accidental coincidences between qubit symmetry groups
//! `SU(2^n)` and rotation groups `SO(N)`.
//!
//! The crate is `no_std` (it needs `alloc`) and is organized bottom-up:
//!
//! - [`cartan`]: Cartan class, rank, dimension and exponents of the classical
//!   compact simple groups, plus parsing of `SU(m)` / `SO(m)` / `Sp(r)` names.
//! - [`poincare`]: exact Poincaré polynomials as products of `(1 + t^(2a+1))`
//!   over the exponents, with Betti-number extraction and comparison.
//! - [`homotopy`]: Bott-periodic stable homotopy tables for `U`, `O`, `Sp`,
//!   gated by the stable ranges of `SU(m)` and `SO(m)`.
//! - [`diophantine`]: the Ramanujan–Nagell sweep, the qubit/rotation dimension
//!   match, and the orbits of `8d^2 = k^2 + 7`.
//! - [`screener`]: the three-stage comparison pipeline and the class scans.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cartan;
pub mod diophantine;
pub mod homotopy;
pub mod poincare;
pub mod screener;

pub use cartan::{parse_group, CartanClass, CartanGroup, GroupError};
pub use diophantine::{PellSolution, QubitMatch, RnSolution, SeedSign};
pub use homotopy::{FgAbelianGroup, HomotopyError, StableFamily};
pub use poincare::{IntPolynomial, PolyComparison};
pub use screener::{ScreeningReport, Verdict};
