//! Three-stage screening of two groups for a possible homeomorphism.
//!
//! Stages, each a necessary condition: equal dimension, equal Poincaré
//! polynomial, equal stable homotopy groups over the common stable range.
//! Every stage is recorded even when an earlier one already decides.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::cartan::{CartanClass, CartanGroup};
use crate::diophantine::{qubit_rotation_matches, QubitMatch};
use crate::homotopy::{pi, stable_range_bound, FgAbelianGroup};
use crate::poincare::{compare_groups, PolyComparison};

/// Lowest homotopy degree compared; `pi_0`, `pi_1` of `SU(m)` do not follow
/// the `U` table.
pub const FIRST_COMPARED_DEGREE: u64 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    DimensionMismatch,
    TopologicallyDistinct,
    /// All necessary conditions hold. Not a proof of homeomorphism.
    CandidateHomeomorphism,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::DimensionMismatch => "DimensionMismatch",
            Verdict::TopologicallyDistinct => "TopologicallyDistinct",
            Verdict::CandidateHomeomorphism => "CandidateHomeomorphism",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Smallest degree in the common stable range where `pi_k` differs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyWitness {
    pub k: u64,
    pub value_a: FgAbelianGroup,
    pub value_b: FgAbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyStage {
    /// One of the groups has no stable-range bound (class `C`).
    NoStableRange,
    /// The common stable range ends below [`FIRST_COMPARED_DEGREE`].
    EmptyRange { common_bound: u64 },
    /// Degrees `2..=up_to` were compared.
    Compared { up_to: u64, witness: Option<HomotopyWitness> },
}

impl HomotopyStage {
    pub fn witness(&self) -> Option<&HomotopyWitness> {
        match self {
            HomotopyStage::Compared { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }

    /// Last degree compared, if the stage ran.
    pub fn checked_up_to(&self) -> Option<u64> {
        match self {
            HomotopyStage::Compared { up_to, .. } => Some(*up_to),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreeningReport {
    pub group_a: CartanGroup,
    pub group_b: CartanGroup,
    pub dim_a: u64,
    pub dim_b: u64,
    pub poly: PolyComparison,
    pub homotopy: HomotopyStage,
    pub verdict: Verdict,
}

impl ScreeningReport {
    pub fn dims_match(&self) -> bool {
        self.dim_a == self.dim_b
    }

    pub fn poly_equal(&self) -> bool {
        self.poly.is_equal()
    }
}

fn compare_homotopy(a: &CartanGroup, b: &CartanGroup) -> HomotopyStage {
    let (Ok(bound_a), Ok(bound_b)) = (stable_range_bound(a), stable_range_bound(b)) else {
        return HomotopyStage::NoStableRange;
    };
    let up_to = bound_a.min(bound_b);
    if up_to < FIRST_COMPARED_DEGREE {
        return HomotopyStage::EmptyRange { common_bound: up_to };
    }
    let witness = (FIRST_COMPARED_DEGREE..=up_to).find_map(|k| {
        // both in range by construction
        let value_a = pi(a, k).ok()?;
        let value_b = pi(b, k).ok()?;
        (value_a != value_b).then_some(HomotopyWitness { k, value_a, value_b })
    });
    HomotopyStage::Compared { up_to, witness }
}

/// Runs all three stages on `a` and `b`.
pub fn screen(a: &CartanGroup, b: &CartanGroup) -> ScreeningReport {
    let dim_a = a.dimension();
    let dim_b = b.dimension();
    let poly = compare_groups(a, b);
    let homotopy = compare_homotopy(a, b);
    let verdict = if dim_a != dim_b {
        Verdict::DimensionMismatch
    } else if !poly.is_equal() || homotopy.witness().is_some() {
        Verdict::TopologicallyDistinct
    } else {
        Verdict::CandidateHomeomorphism
    };
    ScreeningReport { group_a: *a, group_b: *b, dim_a, dim_b, poly, homotopy, verdict }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("class scan needs two distinct classes, got {0} twice")]
    SameClass(CartanClass),
    #[error(transparent)]
    Group(#[from] crate::cartan::GroupError),
}

/// Screens `SU(2^n)` against `SO(N)` for every dimension match with
/// `n <= max_n`.
pub fn scan_qubit_rotations(max_n: u32) -> Result<Vec<(QubitMatch, ScreeningReport)>, ScanError> {
    qubit_rotation_matches(max_n)
        .into_iter()
        .map(|m| {
            let report = screen(&m.qubit_group()?, &m.rotation_group()?);
            Ok((m, report))
        })
        .collect()
}

/// Rank pairs `(i, j)`, both at most `max_rank`, where `class_x` of rank `i`
/// and `class_y` of rank `j` have equal Poincaré polynomials.
///
/// Dimensions are matched first; equal polynomials have equal degree, which
/// is the dimension, so nothing is lost by the filter.
pub fn scan_class_pairs(
    class_x: CartanClass,
    class_y: CartanClass,
    max_rank: u32,
) -> Result<Vec<(u32, u32)>, ScanError> {
    if class_x == class_y {
        return Err(ScanError::SameClass(class_x));
    }
    let by_dim: BTreeMap<u64, u32> = (class_y.min_rank()..=max_rank).map(|j| (class_y.dimension_at(j), j)).collect();
    let mut out = Vec::new();
    for i in class_x.min_rank()..=max_rank {
        let Some(&j) = by_dim.get(&class_x.dimension_at(i)) else { continue };
        let gx = CartanGroup::new(class_x, u64::from(i))?;
        let gy = CartanGroup::new(class_y, u64::from(j))?;
        if compare_groups(&gx, &gy).is_equal() {
            out.push((i, j));
        }
    }
    Ok(out)
}

/// Same-dimension rank pairs of two classes, without the polynomial test.
pub fn dimension_coincidences(class_x: CartanClass, class_y: CartanClass, max_rank: u32) -> Vec<(u32, u32)> {
    let by_dim: BTreeMap<u64, u32> = (class_y.min_rank()..=max_rank).map(|j| (class_y.dimension_at(j), j)).collect();
    (class_x.min_rank()..=max_rank).filter_map(|i| by_dim.get(&class_x.dimension_at(i)).map(|&j| (i, j))).collect()
}
