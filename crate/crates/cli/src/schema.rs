//! JSON records emitted by `rotmatch --json`.
//!
//! Field names are stable. Integers that can outgrow 64 bits (Betti numbers,
//! Diophantine solutions) are carried as decimal strings.

use num_bigint::BigUint;
use rotmatch_core::diophantine::{PellSolution, QubitMatch, RnSolution};
use rotmatch_core::homotopy::{FgAbelianGroup, HomotopyError};
use rotmatch_core::poincare::{IntPolynomial, PolyComparison};
use rotmatch_core::screener::ScreeningReport;
use serde::{Deserialize, Serialize};

/// Polynomial as an array of decimal coefficient strings, index = degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolynomialJson(pub Vec<String>);

impl From<&IntPolynomial> for PolynomialJson {
    fn from(p: &IntPolynomial) -> Self {
        PolynomialJson(p.coefficients().iter().map(BigUint::to_string).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadCoefficient(pub String);

impl std::fmt::Display for BadCoefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "coefficient `{}` is not a nonnegative decimal integer", self.0)
    }
}

impl std::error::Error for BadCoefficient {}

impl TryFrom<&PolynomialJson> for IntPolynomial {
    type Error = BadCoefficient;

    fn try_from(json: &PolynomialJson) -> Result<Self, Self::Error> {
        let coeffs = json
            .0
            .iter()
            .map(|s| {
                if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(BadCoefficient(s.clone()));
                }
                s.parse::<BigUint>().map_err(|_| BadCoefficient(s.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coefficients(coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianJson {
    pub free_rank: u32,
    pub torsion: Vec<u64>,
}

impl From<&FgAbelianGroup> for AbelianJson {
    fn from(g: &FgAbelianGroup) -> Self {
        AbelianJson { free_rank: g.free_rank(), torsion: g.torsion().to_vec() }
    }
}

impl AbelianJson {
    pub fn to_group(&self) -> Option<FgAbelianGroup> {
        FgAbelianGroup::new(self.free_rank, self.torsion.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimOutput {
    pub group: String,
    pub cartan: String,
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentsOutput {
    pub group: String,
    pub cartan: String,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareOutput {
    pub group: String,
    pub cartan: String,
    pub degree: usize,
    /// Degrees `2a + 1` of the factors `(1 + t^(2a+1))`.
    pub factor_degrees: Vec<u32>,
    pub coefficients: PolynomialJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiOutput {
    pub group: String,
    pub cartan: String,
    pub q: usize,
    pub betti: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyOutput {
    pub group: String,
    pub cartan: String,
    pub k: u64,
    pub stable_range_bound: u64,
    pub value: AbelianJson,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RnRecord {
    pub b: u32,
    pub k: String,
}

impl From<&RnSolution> for RnRecord {
    fn from(s: &RnSolution) -> Self {
        RnRecord { b: s.b, k: s.k.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RnOutput {
    pub max_b: u32,
    pub solutions: Vec<RnRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitRecord {
    pub n: u32,
    #[serde(rename = "N")]
    pub rotation_dim: String,
    pub k: String,
}

impl From<&QubitMatch> for QubitRecord {
    fn from(m: &QubitMatch) -> Self {
        QubitRecord { n: m.qubits, rotation_dim: m.rotation_dim.to_string(), k: m.k.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellRecord {
    pub d: String,
    pub k: String,
    pub seed: i32,
    pub step: u32,
}

impl From<&PellSolution> for PellRecord {
    fn from(s: &PellSolution) -> Self {
        PellRecord { d: s.d.to_string(), k: s.k.to_string(), seed: s.seed.as_i32(), step: s.step }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellOutput {
    pub seed: i32,
    pub count: usize,
    pub solutions: Vec<PellRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDiffJson {
    pub degree: usize,
    pub coefficient_a: String,
    pub coefficient_b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub k: u64,
    pub value_a: AbelianJson,
    pub value_b: AbelianJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreeningReportJson {
    pub group_a: String,
    pub group_b: String,
    pub dims: [u64; 2],
    pub dims_match: bool,
    pub poly_equal: bool,
    pub poly_first_diff: Option<PolyDiffJson>,
    pub homotopy_witness: Option<WitnessJson>,
    /// Last degree of the homotopy comparison; `null` when the stage was skipped.
    pub homotopy_checked_up_to: Option<u64>,
    pub verdict: String,
}

impl From<&ScreeningReport> for ScreeningReportJson {
    fn from(r: &ScreeningReport) -> Self {
        let poly_first_diff = match &r.poly {
            PolyComparison::Equal => None,
            PolyComparison::Differ { degree, left, right } => Some(PolyDiffJson {
                degree: *degree,
                coefficient_a: left.to_string(),
                coefficient_b: right.to_string(),
            }),
        };
        ScreeningReportJson {
            group_a: r.group_a.name(),
            group_b: r.group_b.name(),
            dims: [r.dim_a, r.dim_b],
            dims_match: r.dims_match(),
            poly_equal: r.poly_equal(),
            poly_first_diff,
            homotopy_witness: r.homotopy.witness().map(|w| WitnessJson {
                k: w.k,
                value_a: (&w.value_a).into(),
                value_b: (&w.value_b).into(),
            }),
            homotopy_checked_up_to: r.homotopy.checked_up_to(),
            verdict: r.verdict.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitScanEntry {
    #[serde(rename = "match")]
    pub qubit_match: QubitRecord,
    pub report: ScreeningReportJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitScanOutput {
    pub max_n: u32,
    pub matches: Vec<QubitScanEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassScanOutput {
    pub class_x: String,
    pub class_y: String,
    pub max_rank: u32,
    pub pairs: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperOutput {
    pub rn: RnOutput,
    pub qubit_scan: QubitScanOutput,
    pub screens: Vec<ScreeningReportJson>,
    pub class_scans: Vec<ClassScanOutput>,
    pub checks: Vec<CheckJson>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOutput {
    pub error: ErrorBody,
}

impl From<&HomotopyError> for ErrorOutput {
    fn from(e: &HomotopyError) -> Self {
        let (kind, k, bound) = match e {
            HomotopyError::OutsideStableRange { k, bound } => ("OutsideStableRange", Some(*k), Some(*bound)),
            HomotopyError::UnsupportedClass(_) => ("UnsupportedClass", None, None),
        };
        ErrorOutput { error: ErrorBody { kind: kind.to_string(), message: e.to_string(), k, bound } }
    }
}
