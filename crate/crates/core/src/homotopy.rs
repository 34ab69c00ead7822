//! Stable homotopy groups of the classical families via Bott periodicity.
//!
//! The fibrations `SU(m-1) -> SU(m) -> S^(2m-1)` and
//! `SO(m-1) -> SO(m) -> S^(m-1)` put `pi_k(SU(m))` in the stable range for
//! `k <= 2m - 1` and `pi_k(SO(m))` for `k <= m - 2`. Inside those ranges the
//! groups are read off fixed tables of period 2 (`U`) and 8 (`O`, `Sp`).
//! Nothing outside the stable range is ever returned.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::cartan::{CartanClass, CartanGroup};

/// A finitely generated abelian group `Z^free_rank + Z_t1 + Z_t2 + ..`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    free_rank: u32,
    // invariant factors, each >= 2 and dividing the next
    torsion: Vec<u64>,
}

impl FgAbelianGroup {
    pub const fn trivial() -> Self {
        FgAbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub const fn integers() -> Self {
        FgAbelianGroup { free_rank: 1, torsion: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Self {
        match order {
            0 => Self::integers(),
            1 => Self::trivial(),
            n => FgAbelianGroup { free_rank: 0, torsion: alloc::vec![n] },
        }
    }

    /// Builds a group from invariant factors. Returns `None` if a factor is
    /// below 2 or the list is not a divisibility chain.
    pub fn new(free_rank: u32, torsion: Vec<u64>) -> Option<Self> {
        let chain = torsion.iter().all(|&t| t >= 2) && torsion.windows(2).all(|w| w[1] % w[0] == 0);
        chain.then_some(FgAbelianGroup { free_rank, torsion })
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Renders as `0`, `Z`, `Z_2`, or a sum such as `Z^2 + Z_2`.
impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut sep = "";
        match self.free_rank {
            0 => {}
            1 => {
                f.write_str("Z")?;
                sep = " + ";
            }
            r => {
                write!(f, "Z^{r}")?;
                sep = " + ";
            }
        }
        for t in &self.torsion {
            write!(f, "{sep}Z_{t}")?;
            sep = " + ";
        }
        Ok(())
    }
}

/// The stable classical groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StableFamily {
    U,
    O,
    Sp,
}

impl StableFamily {
    pub const fn period(self) -> u64 {
        match self {
            StableFamily::U => 2,
            StableFamily::O | StableFamily::Sp => 8,
        }
    }
}

impl fmt::Display for StableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StableFamily::U => "U",
            StableFamily::O => "O",
            StableFamily::Sp => "Sp",
        })
    }
}

#[derive(Clone, Copy)]
enum Entry {
    Zero,
    Z,
    Z2,
}

impl Entry {
    fn group(self) -> FgAbelianGroup {
        match self {
            Entry::Zero => FgAbelianGroup::trivial(),
            Entry::Z => FgAbelianGroup::integers(),
            Entry::Z2 => FgAbelianGroup::cyclic(2),
        }
    }
}

use Entry::{Zero, Z, Z2};

const PI_U: [Entry; 2] = [Zero, Z];
const PI_O: [Entry; 8] = [Z2, Z2, Zero, Z, Zero, Zero, Zero, Z];
const PI_SP: [Entry; 8] = [Zero, Zero, Zero, Z, Z2, Z2, Zero, Z];

/// `pi_k` of the stable group `family`.
pub fn stable_pi(family: StableFamily, k: u64) -> FgAbelianGroup {
    let table: &[Entry] = match family {
        StableFamily::U => &PI_U,
        StableFamily::O => &PI_O,
        StableFamily::Sp => &PI_SP,
    };
    table[(k % table.len() as u64) as usize].group()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("pi_{k} is outside the stable range k <= {bound}")]
    OutsideStableRange { k: u64, bound: u64 },
    #[error("no stable-range bound is available for class {0}")]
    UnsupportedClass(CartanClass),
}

/// Largest `k` for which `pi_k(g)` is stable: `2m - 1` for `SU(m)` and
/// `m - 2` for `SO(m)`. Class `C` has no bound here.
pub fn stable_range_bound(g: &CartanGroup) -> Result<u64, HomotopyError> {
    let m = g.matrix_size();
    match g.class() {
        CartanClass::A => Ok(2 * m - 1),
        CartanClass::B | CartanClass::D => Ok(m - 2),
        CartanClass::C => Err(HomotopyError::UnsupportedClass(CartanClass::C)),
    }
}

/// The stable family whose homotopy `g` inherits in its stable range.
pub fn stable_family(g: &CartanGroup) -> Option<StableFamily> {
    match g.class() {
        CartanClass::A => Some(StableFamily::U),
        CartanClass::B | CartanClass::D => Some(StableFamily::O),
        CartanClass::C => None,
    }
}

/// `pi_k(g)` for `k` inside the stable range of `g`.
///
/// `SU(m)` is connected and simply connected, so `pi_0` and `pi_1` are `0`
/// even though the `U` table has `pi_1(U) = Z`; the `U` table agrees with
/// `SU` only from `k = 2` on. Likewise `SO(m)` is connected, so `pi_0` is `0`
/// rather than the `pi_0(O) = Z_2` of the full orthogonal group.
pub fn pi(g: &CartanGroup, k: u64) -> Result<FgAbelianGroup, HomotopyError> {
    let bound = stable_range_bound(g)?;
    if k > bound {
        return Err(HomotopyError::OutsideStableRange { k, bound });
    }
    match g.class() {
        CartanClass::A if k < 2 => Ok(FgAbelianGroup::trivial()),
        _ if k == 0 => Ok(FgAbelianGroup::trivial()),
        CartanClass::A => Ok(stable_pi(StableFamily::U, k)),
        _ => Ok(stable_pi(StableFamily::O, k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_group;

    fn grp(name: &str) -> CartanGroup {
        parse_group(name).unwrap()
    }

    #[test]
    fn rendering() {
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::integers().to_string(), "Z");
        assert_eq!(FgAbelianGroup::cyclic(2).to_string(), "Z_2");
        assert_eq!(FgAbelianGroup::new(2, alloc::vec![2, 4]).unwrap().to_string(), "Z^2 + Z_2 + Z_4");
        assert!(FgAbelianGroup::new(0, alloc::vec![4, 2]).is_none());
        assert!(FgAbelianGroup::new(0, alloc::vec![1]).is_none());
    }

    #[test]
    fn bounds() {
        assert_eq!(stable_range_bound(&grp("SU(64)")), Ok(127));
        assert_eq!(stable_range_bound(&grp("SO(91)")), Ok(89));
        assert_eq!(stable_range_bound(&grp("SO(6)")), Ok(4));
        assert_eq!(stable_range_bound(&grp("SO(3)")), Ok(1));
        assert_eq!(stable_range_bound(&grp("SU(2)")), Ok(3));
        assert_eq!(stable_range_bound(&grp("Sp(2)")), Err(HomotopyError::UnsupportedClass(CartanClass::C)));
    }

    #[test]
    fn stable_spot_values() {
        assert_eq!(stable_pi(StableFamily::U, 5), FgAbelianGroup::integers());
        assert_eq!(stable_pi(StableFamily::O, 5), FgAbelianGroup::trivial());
        assert_eq!(stable_pi(StableFamily::O, 3), FgAbelianGroup::integers());
    }

    #[test]
    fn pi_in_and_out_of_range() {
        assert_eq!(pi(&grp("SU(64)"), 5), Ok(FgAbelianGroup::integers()));
        assert_eq!(pi(&grp("SO(91)"), 5), Ok(FgAbelianGroup::trivial()));
        assert_eq!(pi(&grp("SO(6)"), 5), Err(HomotopyError::OutsideStableRange { k: 5, bound: 4 }));
        assert_eq!(pi(&grp("SO(3)"), 5), Err(HomotopyError::OutsideStableRange { k: 5, bound: 1 }));
        assert_eq!(pi(&grp("SU(2)"), 5), Err(HomotopyError::OutsideStableRange { k: 5, bound: 3 }));
        assert_eq!(pi(&grp("SU(64)"), 128), Err(HomotopyError::OutsideStableRange { k: 128, bound: 127 }));
        assert!(pi(&grp("SU(64)"), 127).is_ok());
        assert!(pi(&grp("Sp(3)"), 1).is_err());
    }

    #[test]
    fn special_unitary_low_degrees() {
        let su = grp("SU(8)");
        assert!(pi(&su, 0).unwrap().is_trivial());
        assert!(pi(&su, 1).unwrap().is_trivial());
        assert_eq!(pi(&su, 3), Ok(FgAbelianGroup::integers()));
        let so = grp("SO(91)");
        assert!(pi(&so, 0).unwrap().is_trivial());
        assert_eq!(pi(&so, 1), Ok(FgAbelianGroup::cyclic(2)));
    }
}
