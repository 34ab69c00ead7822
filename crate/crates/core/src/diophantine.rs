//! Exact integer solvers behind the dimension argument.
//!
//! `dim SU(2^n) = 2^(2n) - 1` equals `dim SO(N) = N(N-1)/2` exactly when
//! `N^2 - N = 2(2^(2n) - 1)`, whose discriminant condition is
//! `2^(2n+3) = k^2 + 7` with `N = (k+1)/2`. That is the Ramanujan–Nagell
//! equation `2^b = k^2 + 7` at odd `b = 2n + 3`. Replacing `2^n` by an
//! arbitrary `d` gives `8d^2 = k^2 + 7`, whose solutions come in two orbits
//! of a linear recurrence.
//!
//! No floating point is used anywhere; perfect squares are detected with an
//! exact integer square root.

use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive};

use crate::cartan::{CartanGroup, GroupError};

/// `sqrt(x)` when `x` is a perfect square.
pub fn exact_sqrt(x: &BigUint) -> Option<BigUint> {
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e
}

/// A solution of `2^b = k^2 + 7`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RnSolution {
    pub b: u32,
    pub k: BigUint,
}

impl RnSolution {
    pub fn verify(&self) -> bool {
        pow2(self.b) == &self.k * &self.k + 7u32
    }
}

/// Every solution of `2^b = k^2 + 7` with `b` in `bs`, ascending by `b`.
///
/// Partitions of a larger range can be solved independently and concatenated
/// in order; the result does not depend on the partition.
pub fn solve_rn_range(bs: RangeInclusive<u32>) -> Vec<RnSolution> {
    let mut out = Vec::new();
    for b in bs {
        // 2^b - 7 < 0 for b < 3
        if b < 3 {
            continue;
        }
        let target = pow2(b) - 7u32;
        if let Some(k) = exact_sqrt(&target) {
            let sol = RnSolution { b, k };
            debug_assert!(sol.verify());
            out.push(sol);
        }
    }
    out
}

/// Exhaustive sweep over `1 <= b <= max_b`.
pub fn solve_rn_bruteforce(max_b: u32) -> Vec<RnSolution> {
    solve_rn_range(1..=max_b)
}

/// `n` qubits whose group `SU(2^n)` has the dimension of `SO(N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QubitMatch {
    pub qubits: u32,
    pub rotation_dim: BigUint,
    /// Square root of the discriminant, `k = 2N - 1`.
    pub k: BigUint,
}

impl QubitMatch {
    /// Checks all three defining identities directly.
    pub fn verify(&self) -> bool {
        let n_rot = &self.rotation_dim;
        let lhs = n_rot * n_rot - n_rot;
        let rhs = (pow2(2 * self.qubits) - 1u32) * 2u32;
        let disc = &self.k * &self.k + 7u32 == pow2(2 * self.qubits + 3);
        let root = n_rot * 2u32 == &self.k + 1u32;
        lhs == rhs && disc && root
    }

    /// The corresponding Ramanujan–Nagell solution, `b = 2n + 3`.
    pub fn rn_solution(&self) -> RnSolution {
        RnSolution { b: 2 * self.qubits + 3, k: self.k.clone() }
    }

    /// `SU(2^n)`.
    pub fn qubit_group(&self) -> Result<CartanGroup, GroupError> {
        let size = 1u64.checked_shl(self.qubits).ok_or(GroupError::RankTooLarge(u64::MAX))?;
        CartanGroup::special_unitary(size)
    }

    /// `SO(N)`.
    pub fn rotation_group(&self) -> Result<CartanGroup, GroupError> {
        let m = self.rotation_dim.to_u64().ok_or(GroupError::RankTooLarge(u64::MAX))?;
        CartanGroup::special_orthogonal(m)
    }
}

/// Qubit counts `1 <= n <= max_n` for which `SU(2^n)` and some `SO(N)` have
/// equal dimension.
pub fn qubit_rotation_matches(max_n: u32) -> Vec<QubitMatch> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let disc = pow2(2 * n + 3) - 7u32;
        let Some(k) = exact_sqrt(&disc) else { continue };
        let m = QubitMatch { qubits: n, rotation_dim: (&k + 1u32) >> 1u32, k };
        if m.verify() {
            out.push(m);
        }
    }
    out
}

/// Sign of the seed `k_0 = +-1` of a `8d^2 = k^2 + 7` orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeedSign {
    Plus,
    Minus,
}

impl SeedSign {
    pub fn as_i32(self) -> i32 {
        match self {
            SeedSign::Plus => 1,
            SeedSign::Minus => -1,
        }
    }
}

impl fmt::Display for SeedSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeedSign::Plus => "+",
            SeedSign::Minus => "-",
        })
    }
}

/// A solution of `8d^2 = k^2 + 7`, `step` iterations from its seed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PellSolution {
    pub d: BigUint,
    /// `|k|`; only the seed itself can carry a negative `k`.
    pub k: BigUint,
    pub seed: SeedSign,
    pub step: u32,
}

impl PellSolution {
    pub fn verify(&self) -> bool {
        &self.d * &self.d * 8u32 == &self.k * &self.k + 7u32
    }

    /// `N = (k+1)/2`, the rotation dimension with `dim SO(N) = dim SU(d)`.
    pub fn rotation_dim(&self) -> BigUint {
        (&self.k + 1u32) >> 1u32
    }
}

/// The orbit of `(d, k) -> (3d + k, 8d + 3k)` from `(1, +-1)`, excluding the
/// seed. Infinite; take what you need.
#[derive(Clone, Debug)]
pub struct PellOrbit {
    d: BigInt,
    k: BigInt,
    seed: SeedSign,
    step: u32,
}

impl PellOrbit {
    pub fn new(seed: SeedSign) -> Self {
        PellOrbit { d: BigInt::one(), k: BigInt::from(seed.as_i32()), seed, step: 0 }
    }

    /// Signed state `(d, k)` of the last emitted element (the seed before the
    /// first call to `next`).
    pub fn state(&self) -> (&BigInt, &BigInt) {
        (&self.d, &self.k)
    }
}

impl Iterator for PellOrbit {
    type Item = PellSolution;

    fn next(&mut self) -> Option<PellSolution> {
        let d = &self.d * 3 + &self.k;
        let k = &self.d * 8 + &self.k * 3;
        self.d = d;
        self.k = k;
        self.step += 1;
        // 8d^2 - k^2 is invariant under the step, so it stays 7
        debug_assert_eq!(&self.d * &self.d * 8 - &self.k * &self.k, BigInt::from(7));
        debug_assert_eq!(self.d.sign(), Sign::Plus);
        Some(PellSolution {
            d: self.d.magnitude().clone(),
            k: self.k.magnitude().clone(),
            seed: self.seed,
            step: self.step,
        })
    }
}

/// The first `count` solutions after the seed `(1, seed)`.
pub fn pell_enumerate(seed: SeedSign, count: usize) -> Vec<PellSolution> {
    PellOrbit::new(seed).take(count).collect()
}

impl fmt::Display for RnSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{} = {}^2 + 7", self.b, self.k)
    }
}
