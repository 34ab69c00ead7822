//! Classical compact simple Lie groups by Cartan class and rank.
//!
//! Only the four classical series are representable. A group is identified
//! with its Cartan data; covers (`SO(m)` versus `Spin(m)`) are not tracked.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

/// Largest rank accepted at construction. Keeps dimensions inside `u64`.
pub const MAX_RANK: u32 = 1 << 20;

/// The classical Cartan series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanClass {
    /// `SU(n+1)`
    A,
    /// `SO(2n+1)`
    B,
    /// `Sp(n)`
    C,
    /// `SO(2n)`
    D,
}

impl CartanClass {
    pub const ALL: [CartanClass; 4] = [CartanClass::A, CartanClass::B, CartanClass::C, CartanClass::D];

    /// Smallest rank at which the series is simple.
    pub const fn min_rank(self) -> u32 {
        match self {
            CartanClass::D => 3,
            _ => 1,
        }
    }

    pub const fn letter(self) -> char {
        match self {
            CartanClass::A => 'A',
            CartanClass::B => 'B',
            CartanClass::C => 'C',
            CartanClass::D => 'D',
        }
    }

    /// Dimension of the rank-`rank` member, computed in `u64`.
    pub const fn dimension_at(self, rank: u32) -> u64 {
        let n = rank as u64;
        match self {
            CartanClass::A => (n + 1) * (n + 1) - 1,
            CartanClass::B | CartanClass::C => n * (2 * n + 1),
            CartanClass::D => n * (2 * n - 1),
        }
    }
}

impl fmt::Display for CartanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for CartanClass {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" => Ok(CartanClass::A),
            "B" => Ok(CartanClass::B),
            "C" => Ok(CartanClass::C),
            "D" => Ok(CartanClass::D),
            "E" | "F" | "G" => Err(GroupError::Exceptional(s.trim().to_string())),
            _ => Err(GroupError::Malformed(s.to_string())),
        }
    }
}

/// Errors from constructing or parsing a [`CartanGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed group name `{0}`: expected SU(m), SO(m), Sp(r) or a Cartan label such as A63")]
    Malformed(String),
    #[error("exceptional group `{0}` is not supported")]
    Exceptional(String),
    #[error("{name} is not simple: {reason}")]
    NotSimple { name: String, reason: &'static str },
    #[error("{class}{rank}: rank must be at least {min}")]
    RankTooSmall { class: CartanClass, rank: u64, min: u32 },
    #[error("rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(u64),
}

/// A classical compact simple Lie group, `class` of rank `rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanGroup {
    class: CartanClass,
    rank: u32,
}

impl CartanGroup {
    pub fn new(class: CartanClass, rank: u64) -> Result<Self, GroupError> {
        if rank > u64::from(MAX_RANK) {
            return Err(GroupError::RankTooLarge(rank));
        }
        if class == CartanClass::D && (rank == 1 || rank == 2) {
            let (name, reason) = if rank == 1 { ("SO(2)", "it is abelian") } else { ("SO(4)", "D2 splits as A1 x A1") };
            return Err(GroupError::NotSimple { name: name.to_string(), reason });
        }
        if rank < u64::from(class.min_rank()) {
            return Err(GroupError::RankTooSmall { class, rank, min: class.min_rank() });
        }
        Ok(CartanGroup { class, rank: rank as u32 })
    }

    /// `SU(m)`, class `A` of rank `m - 1`.
    pub fn special_unitary(m: u64) -> Result<Self, GroupError> {
        if m == 0 {
            return Err(GroupError::RankTooSmall { class: CartanClass::A, rank: 0, min: 1 });
        }
        Self::new(CartanClass::A, m - 1)
    }

    /// `SO(m)`: class `B` for odd `m`, class `D` for even `m`.
    pub fn special_orthogonal(m: u64) -> Result<Self, GroupError> {
        if m % 2 == 1 {
            Self::new(CartanClass::B, m / 2)
        } else {
            Self::new(CartanClass::D, m / 2)
        }
    }

    /// `Sp(r)`, class `C` of rank `r`.
    pub fn symplectic(r: u64) -> Result<Self, GroupError> {
        Self::new(CartanClass::C, r)
    }

    pub fn class(&self) -> CartanClass {
        self.class
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Real dimension: `m^2 - 1` for `SU(m)`, `m(m-1)/2` for `SO(m)`,
    /// `r(2r+1)` for `Sp(r)`.
    pub fn dimension(&self) -> u64 {
        self.class.dimension_at(self.rank)
    }

    /// Exponents in ascending order, one per unit of rank.
    ///
    /// `A_n`: `1..=n`. `B_n`, `C_n`: the odd numbers `1, 3, .., 2n-1`.
    /// `D_n`: the odd numbers `1, 3, .., 2n-3` together with `n-1`.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.rank;
        match self.class {
            CartanClass::A => (1..=n).collect(),
            CartanClass::B | CartanClass::C => (0..n).map(|i| 2 * i + 1).collect(),
            CartanClass::D => {
                let mut exps: Vec<u32> = (0..n - 1).map(|i| 2 * i + 1).collect();
                let pos = exps.partition_point(|&e| e < n - 1);
                exps.insert(pos, n - 1);
                exps
            }
        }
    }

    /// Size of the defining matrices: `m` in `SU(m)`, `SO(m)`, and `r` in `Sp(r)`.
    pub fn matrix_size(&self) -> u64 {
        let n = u64::from(self.rank);
        match self.class {
            CartanClass::A => n + 1,
            CartanClass::B => 2 * n + 1,
            CartanClass::C => n,
            CartanClass::D => 2 * n,
        }
    }

    /// Physics-style name, e.g. `SU(64)`, `SO(91)`, `Sp(3)`.
    pub fn name(&self) -> String {
        let m = self.matrix_size();
        match self.class {
            CartanClass::A => format!("SU({m})"),
            CartanClass::B | CartanClass::D => format!("SO({m})"),
            CartanClass::C => format!("Sp({m})"),
        }
    }

    /// Cartan label, e.g. `A63`.
    pub fn cartan_label(&self) -> String {
        format!("{}{}", self.class, self.rank)
    }
}

impl fmt::Display for CartanGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CartanGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group(s)
    }
}

fn parse_size(digits: &str, whole: &str) -> Result<u64, GroupError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(GroupError::Malformed(whole.to_string()));
    }
    digits.parse::<u64>().map_err(|_| GroupError::RankTooLarge(u64::MAX))
}

fn parenthesized<'a>(s: &'a str, prefix: &str) -> Option<&'a str> {
    s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')
}

/// Parses `SU(m)`, `SO(m)`, `Sp(r)` or a Cartan label such as `B45`.
pub fn parse_group(name: &str) -> Result<CartanGroup, GroupError> {
    let s = name.trim();
    if let Some(inner) = parenthesized(s, "SU") {
        return CartanGroup::special_unitary(parse_size(inner, s)?);
    }
    if let Some(inner) = parenthesized(s, "SO") {
        return CartanGroup::special_orthogonal(parse_size(inner, s)?);
    }
    if let Some(inner) = parenthesized(s, "Sp") {
        return CartanGroup::symplectic(parse_size(inner, s)?);
    }
    let mut chars = s.chars();
    let class = match chars.next() {
        Some('A') => CartanClass::A,
        Some('B') => CartanClass::B,
        Some('C') => CartanClass::C,
        Some('D') => CartanClass::D,
        Some('E' | 'F' | 'G') if s.len() > 1 && s[1..].bytes().all(|b| b.is_ascii_digit()) => {
            return Err(GroupError::Exceptional(s.to_string()));
        }
        _ => return Err(GroupError::Malformed(s.to_string())),
    };
    CartanGroup::new(class, parse_size(chars.as_str(), s)?)
}
