//! Argument parsing, dispatch and rendering for the `rotmatch` binary.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use rotmatch_core::cartan::{parse_group, CartanClass, CartanGroup, MAX_RANK};
use rotmatch_core::diophantine::{pell_enumerate, solve_rn_bruteforce, SeedSign};
use rotmatch_core::homotopy::{pi, stable_range_bound, HomotopyError};
use rotmatch_core::poincare::{factor_degrees, factored_form, poincare_polynomial};
use rotmatch_core::screener::{
    scan_class_pairs, scan_qubit_rotations, screen, HomotopyStage, ScanError, ScreeningReport, Verdict,
};
use serde::Serialize;

use crate::schema::*;

/// Exit code for usage and argument-parse errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for domain errors such as a query outside the stable range.
pub const EXIT_DOMAIN: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "rotmatch", version, about = "Screen qubit groups SU(2^n) against rotation groups SO(N)")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of a group.
    Dim {
        #[arg(value_parser = group_arg)]
        group: CartanGroup,
    },
    /// Exponents of a group.
    Exponents {
        #[arg(value_parser = group_arg)]
        group: CartanGroup,
    },
    /// Expanded Poincaré polynomial.
    Poincare {
        #[arg(value_parser = group_arg)]
        group: CartanGroup,
    },
    /// Betti number b_q.
    Betti {
        #[arg(value_parser = group_arg)]
        group: CartanGroup,
        q: usize,
    },
    /// Stable homotopy group pi_k.
    Homotopy {
        #[arg(value_parser = group_arg)]
        group: CartanGroup,
        k: u64,
    },
    /// Solutions of 2^b = k^2 + 7 for b <= max-b.
    Rn {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1 << 20))]
        max_b: u32,
    },
    /// Qubit counts n <= max-n where SU(2^n) matches some SO(N) in dimension, screened.
    QubitScan {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=1 << 16))]
        max_n: u32,
    },
    /// Solutions of 8d^2 = k^2 + 7 along the orbit of (1, seed).
    Pell {
        #[arg(long, allow_hyphen_values = true, value_parser = seed_arg)]
        seed: SeedSign,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=100_000))]
        count: u64,
    },
    /// Three-stage screening of two groups.
    Screen {
        #[arg(value_parser = group_arg)]
        group_a: CartanGroup,
        #[arg(value_parser = group_arg)]
        group_b: CartanGroup,
    },
    /// Rank pairs of two Cartan classes with equal Poincaré polynomials.
    ClassScan {
        #[arg(value_parser = class_arg)]
        class_x: CartanClass,
        #[arg(value_parser = class_arg)]
        class_y: CartanClass,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=i64::from(MAX_RANK)))]
        max_rank: u32,
    },
    /// Full reproduction of the qubit/rotation argument.
    Paper,
}

fn group_arg(s: &str) -> Result<CartanGroup, String> {
    parse_group(s).map_err(|e| e.to_string())
}

fn class_arg(s: &str) -> Result<CartanClass, String> {
    s.parse::<CartanClass>().map_err(|e| e.to_string())
}

fn seed_arg(s: &str) -> Result<SeedSign, String> {
    match s {
        "+" | "+1" | "1" => Ok(SeedSign::Plus),
        "-" | "-1" => Ok(SeedSign::Minus),
        _ => Err(format!("seed must be + or -, got `{s}`")),
    }
}

/// Exit code plus everything written to stdout and stderr.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

#[derive(Debug)]
enum DomainError {
    Homotopy(HomotopyError),
    Scan(ScanError),
    Inconsistent(usize),
}

impl DomainError {
    fn to_json(&self) -> ErrorOutput {
        match self {
            DomainError::Homotopy(e) => ErrorOutput::from(e),
            DomainError::Scan(e) => {
                let kind = match e {
                    ScanError::SameClass(_) => "SameClass",
                    ScanError::Group(_) => "InvalidGroup",
                };
                ErrorOutput { error: ErrorBody { kind: kind.into(), message: e.to_string(), k: None, bound: None } }
            }
            DomainError::Inconsistent(n) => ErrorOutput {
                error: ErrorBody {
                    kind: "ReproductionMismatch".into(),
                    message: format!("{n} check(s) failed"),
                    k: None,
                    bound: None,
                },
            },
        }
    }

    fn message(&self) -> String {
        match self {
            DomainError::Homotopy(e) => e.to_string(),
            DomainError::Scan(e) => e.to_string(),
            DomainError::Inconsistent(n) => format!("{n} reproduction check(s) failed"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(&cli)
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(&cli.command, cli.json) {
        Ok(stdout) => Outcome::ok(stdout),
        // `paper` still prints its report when checks fail
        Err((stdout, err)) => {
            let stderr = if cli.json { to_json(&err.to_json()) } else { format!("error: {}\n", err.message()) };
            Outcome { code: EXIT_DOMAIN, stdout, stderr }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("schema types serialize");
    s.push('\n');
    s
}

type Dispatch = Result<String, (String, DomainError)>;

fn fail(e: DomainError) -> Dispatch {
    Err((String::new(), e))
}

fn dispatch(command: &Command, json: bool) -> Dispatch {
    match command {
        Command::Dim { group } => Ok(render_dim(group, json)),
        Command::Exponents { group } => Ok(render_exponents(group, json)),
        Command::Poincare { group } => Ok(render_poincare(group, json)),
        Command::Betti { group, q } => Ok(render_betti(group, *q, json)),
        Command::Homotopy { group, k } => match pi(group, *k) {
            Ok(value) => {
                let bound = stable_range_bound(group).expect("pi succeeded, so a bound exists");
                let out = HomotopyOutput {
                    group: group.name(),
                    cartan: group.cartan_label(),
                    k: *k,
                    stable_range_bound: bound,
                    value: (&value).into(),
                    display: value.to_string(),
                };
                Ok(if json {
                    to_json(&out)
                } else {
                    format!("pi_{k}({}) = {value}    (stable range k <= {bound})\n", group.name())
                })
            }
            Err(e) => fail(DomainError::Homotopy(e)),
        },
        Command::Rn { max_b } => {
            let out = rn_output(*max_b);
            Ok(if json { to_json(&out) } else { render_rn(&out) })
        }
        Command::QubitScan { max_n } => {
            let out = qubit_scan_output(*max_n).map_err(|e| (String::new(), DomainError::Scan(e)))?;
            Ok(if json { to_json(&out) } else { render_qubit_scan(&out) })
        }
        Command::Pell { seed, count } => {
            let solutions = pell_enumerate(*seed, *count as usize);
            let out = PellOutput {
                seed: seed.as_i32(),
                count: *count as usize,
                solutions: solutions.iter().map(PellRecord::from).collect(),
            };
            if json {
                return Ok(to_json(&out));
            }
            let mut s = format!("8d^2 = k^2 + 7, orbit of (1, {seed}1)\n");
            for (sol, rec) in solutions.iter().zip(&out.solutions) {
                let _ = writeln!(s, "step {:>3}: d = {}, k = {}, N = {}", rec.step, rec.d, rec.k, sol.rotation_dim());
            }
            Ok(s)
        }
        Command::Screen { group_a, group_b } => {
            let report = screen(group_a, group_b);
            Ok(if json { to_json(&ScreeningReportJson::from(&report)) } else { render_report(&report) })
        }
        Command::ClassScan { class_x, class_y, max_rank } => {
            let out =
                class_scan_output(*class_x, *class_y, *max_rank).map_err(|e| (String::new(), DomainError::Scan(e)))?;
            Ok(if json { to_json(&out) } else { render_class_scan(&out) })
        }
        Command::Paper => {
            let out = paper_output().map_err(|e| (String::new(), DomainError::Scan(e)))?;
            let rendered = if json { to_json(&out) } else { render_paper(&out) };
            let failed = out.checks.iter().filter(|c| !c.holds).count();
            if failed == 0 {
                Ok(rendered)
            } else {
                Err((rendered, DomainError::Inconsistent(failed)))
            }
        }
    }
}

fn render_dim(g: &CartanGroup, json: bool) -> String {
    let out = DimOutput { group: g.name(), cartan: g.cartan_label(), dimension: g.dimension() };
    if json {
        to_json(&out)
    } else {
        format!("dim {} ({}) = {}\n", out.group, out.cartan, out.dimension)
    }
}

fn render_exponents(g: &CartanGroup, json: bool) -> String {
    let out = ExponentsOutput { group: g.name(), cartan: g.cartan_label(), exponents: g.exponents() };
    if json {
        return to_json(&out);
    }
    let list: Vec<String> = out.exponents.iter().map(u32::to_string).collect();
    format!("exponents {} ({}) = [{}]\n", out.group, out.cartan, list.join(", "))
}

fn render_poincare(g: &CartanGroup, json: bool) -> String {
    let p = poincare_polynomial(g);
    if json {
        return to_json(&PoincareOutput {
            group: g.name(),
            cartan: g.cartan_label(),
            degree: p.degree().unwrap_or(0),
            factor_degrees: factor_degrees(g),
            coefficients: (&p).into(),
        });
    }
    format!("P({}, t) = {}\n  = {}\n", g.name(), factored_form(g), p)
}

fn render_betti(g: &CartanGroup, q: usize, json: bool) -> String {
    let b = poincare_polynomial(g).coefficient(q);
    let out = BettiOutput { group: g.name(), cartan: g.cartan_label(), q, betti: b.to_string() };
    if json {
        to_json(&out)
    } else {
        format!("b_{q}({}) = {}\n", out.group, out.betti)
    }
}

pub fn rn_output(max_b: u32) -> RnOutput {
    RnOutput { max_b, solutions: solve_rn_bruteforce(max_b).iter().map(RnRecord::from).collect() }
}

fn render_rn(out: &RnOutput) -> String {
    let mut s = format!("2^b = k^2 + 7, b <= {}: {} solution(s)\n", out.max_b, out.solutions.len());
    for r in &out.solutions {
        let _ = writeln!(s, "b = {:>3}, k = {}", r.b, r.k);
    }
    s
}

pub fn qubit_scan_output(max_n: u32) -> Result<QubitScanOutput, ScanError> {
    let matches = scan_qubit_rotations(max_n)?
        .iter()
        .map(|(m, r)| QubitScanEntry { qubit_match: m.into(), report: r.into() })
        .collect();
    Ok(QubitScanOutput { max_n, matches })
}

fn render_qubit_scan(out: &QubitScanOutput) -> String {
    let mut s = format!("dim SU(2^n) = dim SO(N), n <= {}: {} match(es)\n", out.max_n, out.matches.len());
    for e in &out.matches {
        let m = &e.qubit_match;
        let _ = writeln!(
            s,
            "n = {:>2}, N = {:>3}, k = {:>4}: {} vs {} -> {}",
            m.n, m.rotation_dim, m.k, e.report.group_a, e.report.group_b, e.report.verdict
        );
    }
    s
}

pub fn class_scan_output(x: CartanClass, y: CartanClass, max_rank: u32) -> Result<ClassScanOutput, ScanError> {
    let pairs = scan_class_pairs(x, y, max_rank)?;
    Ok(ClassScanOutput { class_x: x.to_string(), class_y: y.to_string(), max_rank, pairs })
}

fn render_class_scan(out: &ClassScanOutput) -> String {
    let pairs: Vec<String> =
        out.pairs.iter().map(|(i, j)| format!("({}{i}, {}{j})", out.class_x, out.class_y)).collect();
    format!(
        "equal Poincare polynomials, {} x {}, rank <= {}: {}\n",
        out.class_x,
        out.class_y,
        out.max_rank,
        if pairs.is_empty() { "none".to_string() } else { pairs.join(", ") }
    )
}

fn render_report(r: &ScreeningReport) -> String {
    let mut s =
        format!("{} ({}) vs {} ({})\n", r.group_a, r.group_a.cartan_label(), r.group_b, r.group_b.cartan_label());
    let _ =
        writeln!(s, "  dimension:  {} vs {} ({})", r.dim_a, r.dim_b, if r.dims_match() { "match" } else { "differ" });
    match &r.poly {
        rotmatch_core::PolyComparison::Equal => {
            let _ = writeln!(s, "  poincare:   equal");
        }
        rotmatch_core::PolyComparison::Differ { degree, left, right } => {
            let _ = writeln!(s, "  poincare:   differ, first at b_{degree}: {left} vs {right}");
        }
    }
    match &r.homotopy {
        HomotopyStage::NoStableRange => {
            let _ = writeln!(s, "  homotopy:   skipped (no stable-range bound for class C)");
        }
        HomotopyStage::EmptyRange { common_bound } => {
            let _ = writeln!(s, "  homotopy:   skipped (common stable range ends at k = {common_bound})");
        }
        HomotopyStage::Compared { up_to, witness: None } => {
            let _ = writeln!(s, "  homotopy:   pi_k agree for 2 <= k <= {up_to}");
        }
        HomotopyStage::Compared { up_to, witness: Some(w) } => {
            let _ = writeln!(
                s,
                "  homotopy:   pi_{} differ: {} vs {} (compared up to k = {up_to})",
                w.k, w.value_a, w.value_b
            );
        }
    }
    let _ = writeln!(s, "  verdict:    {}", r.verdict);
    s
}

const PAPER_PAIRS: [(&str, &str); 3] = [("SU(2)", "SO(3)"), ("SU(4)", "SO(6)"), ("SU(64)", "SO(91)")];

pub fn paper_output() -> Result<PaperOutput, ScanError> {
    let rn = rn_output(64);
    let qubit_scan = qubit_scan_output(20)?;
    let reports: Vec<ScreeningReport> = PAPER_PAIRS
        .iter()
        .map(|(a, b)| screen(&parse_group(a).expect("static name"), &parse_group(b).expect("static name")))
        .collect();
    let ab = class_scan_output(CartanClass::A, CartanClass::B, 100)?;
    let ad = class_scan_output(CartanClass::A, CartanClass::D, 100)?;

    let rn_pairs: Vec<(u32, &str)> = rn.solutions.iter().map(|r| (r.b, r.k.as_str())).collect();
    let qubit_pairs: Vec<(u32, &str)> =
        qubit_scan.matches.iter().map(|e| (e.qubit_match.n, e.qubit_match.rotation_dim.as_str())).collect();
    let verdicts: Vec<Verdict> = reports.iter().map(|r| r.verdict).collect();
    let big = &reports[2];
    let witness5 =
        big.homotopy.witness().is_some_and(|w| w.k == 5 && w.value_a.to_string() == "Z" && w.value_b.is_trivial());
    let first_diff5 = matches!(&big.poly, rotmatch_core::PolyComparison::Differ { degree: 5, .. });
    let outside = ["SU(2)", "SO(3)", "SO(6)"]
        .iter()
        .all(|n| matches!(pi(&parse_group(n).expect("static name"), 5), Err(HomotopyError::OutsideStableRange { .. })));

    let check = |claim: &str, holds: bool| CheckJson { claim: claim.to_string(), holds };
    let checks = vec![
        check(
            "2^b = k^2 + 7 has exactly the solutions b = 3, 4, 5, 7, 15 (k = 1, 3, 5, 11, 181) for b <= 64",
            rn_pairs == [(3, "1"), (4, "3"), (5, "5"), (7, "11"), (15, "181")],
        ),
        check(
            "dim SU(2^n) = dim SO(N) only for (n, N) = (1, 3), (2, 6), (6, 91) with n <= 20",
            qubit_pairs == [(1, "3"), (2, "6"), (6, "91")],
        ),
        check("dim SU(64) = dim SO(91) = 4095", big.dim_a == 4095 && big.dim_b == 4095),
        check(
            "SU(2)/SO(3) and SU(4)/SO(6) pass every screening stage",
            verdicts[..2] == [Verdict::CandidateHomeomorphism; 2],
        ),
        check("P(SU(64)) and P(SO(91)) first differ at b_5 = 1 vs 0", first_diff5),
        check("pi_5(SU(64)) = Z while pi_5(SO(91)) = 0", witness5),
        check("SU(64) and SO(91) are topologically distinct", verdicts[2] == Verdict::TopologicallyDistinct),
        check("pi_5 of SU(2), SO(3), SO(6) lies outside the stable range", outside),
        check("A_n/B_n: equal Poincare polynomials only at (A1, B1) for rank <= 100", ab.pairs == [(1, 1)]),
        check("A_n/D_n: equal Poincare polynomials only at (A3, D3) for rank <= 100", ad.pairs == [(3, 3)]),
    ];
    let consistent = checks.iter().all(|c| c.holds);
    Ok(PaperOutput {
        rn,
        qubit_scan,
        screens: reports.iter().map(ScreeningReportJson::from).collect(),
        class_scans: vec![ab, ad],
        checks,
        consistent,
    })
}

fn render_paper(out: &PaperOutput) -> String {
    let mut s = String::new();
    s.push_str(&render_rn(&out.rn));
    s.push('\n');
    s.push_str(&render_qubit_scan(&out.qubit_scan));
    s.push('\n');
    for (a, b) in PAPER_PAIRS {
        let r = screen(&parse_group(a).expect("static name"), &parse_group(b).expect("static name"));
        s.push_str(&render_report(&r));
    }
    s.push('\n');
    for scan in &out.class_scans {
        s.push_str(&render_class_scan(scan));
    }
    s.push('\n');
    for c in &out.checks {
        let _ = writeln!(s, "[{}] {}", if c.holds { "ok" } else { "FAIL" }, c.claim);
    }
    let _ = writeln!(
        s,
        "\n{}",
        if out.consistent {
            "Only SU(2) ~ SO(3) and SU(4) ~ SO(6) survive; SU(64) and SO(91) share a dimension but not a topology."
        } else {
            "Reproduction FAILED."
        }
    );
    s
}
