//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any
//! failure. Runs as a plain binary (`harness = false`).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rotmatch::run;
use rotmatch::schema::*;
use rotmatch_core::cartan::{parse_group, CartanClass, CartanGroup};
use rotmatch_core::diophantine::{pell_enumerate, SeedSign};
use rotmatch_core::homotopy::{pi, stable_pi, FgAbelianGroup, HomotopyError, StableFamily};
use rotmatch_core::poincare::{poincare_polynomial, IntPolynomial, PoincareTower, PolyComparison};
use serde::de::DeserializeOwned;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cli_json<T: DeserializeOwned>(args: &[&str]) -> Result<(T, Duration), String> {
    let start = Instant::now();
    let out = run(["rotmatch", "--json"].iter().chain(args));
    let elapsed = start.elapsed();
    ensure(out.code == 0, format!("{args:?} exited {}: {}", out.code, out.stderr))?;
    let parsed = serde_json::from_str(&out.stdout).map_err(|e| format!("{args:?}: bad JSON: {e}"))?;
    Ok((parsed, elapsed))
}

fn group(name: &str) -> CartanGroup {
    parse_group(name).expect("valid group name")
}

fn monomials(degrees: &[usize]) -> IntPolynomial {
    let mut c = vec![BigUint::from(0u32); degrees.iter().max().unwrap() + 1];
    for &d in degrees {
        c[d] += 1u32;
    }
    IntPolynomial::from_coefficients(c)
}

fn ramanujan_nagell() -> Check {
    let (out, elapsed): (RnOutput, _) = cli_json(&["rn", "--max-b", "1000"])?;
    let got: Vec<(u32, &str)> = out.solutions.iter().map(|r| (r.b, r.k.as_str())).collect();
    ensure(got == [(3, "1"), (4, "3"), (5, "5"), (7, "11"), (15, "181")], format!("got {got:?}"))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("5 solutions for b <= 1000 in {elapsed:.2?}"))
}

fn dimension_matches() -> Check {
    let (out, _): (QubitScanOutput, _) = cli_json(&["qubit-scan", "--max-n", "30"])?;
    let got: Vec<(u32, &str)> =
        out.matches.iter().map(|e| (e.qubit_match.n, e.qubit_match.rotation_dim.as_str())).collect();
    ensure(got == [(1, "3"), (2, "6"), (6, "91")], format!("got {got:?}"))?;
    Ok("(n, N) = (1, 3), (2, 6), (6, 91)".into())
}

fn shared_dimension() -> Check {
    let su = group("SU(64)").dimension();
    let so = group("SO(91)").dimension();
    ensure(su == (1 << 12) - 1, format!("dim SU(64) = {su}"))?;
    ensure(so == 91 * 90 / 2, format!("dim SO(91) = {so}"))?;
    ensure(su == 4095 && so == 4095, "not 4095")?;
    Ok("dim SU(64) = dim SO(91) = 4095".into())
}

fn polynomial_coincidences() -> Check {
    let one_t3 = monomials(&[0, 3]);
    let three = monomials(&[0, 3, 5, 7, 8, 10, 12, 15]);
    for (name, want) in [("SU(2)", &one_t3), ("SO(3)", &one_t3), ("SU(4)", &three), ("SO(6)", &three)] {
        let got = poincare_polynomial(&group(name));
        ensure(&got == want, format!("P({name}) = {got}"))?;
    }
    Ok("P(SU(2)) = P(SO(3)) = 1 + t^3; P(SU(4)) = P(SO(6)) = (1+t^3)(1+t^5)(1+t^7)".into())
}

fn polynomial_distinction() -> Check {
    let start = Instant::now();
    let cmp = poincare_polynomial(&group("SU(64)")).compare(&poincare_polynomial(&group("SO(91)")));
    let elapsed = start.elapsed();
    let want = PolyComparison::Differ { degree: 5, left: BigUint::from(1u32), right: BigUint::from(0u32) };
    ensure(cmp == want, format!("got {cmp:?}"))?;
    ensure(elapsed < Duration::from_millis(100), format!("took {elapsed:?}"))?;
    Ok(format!("first difference b_5 = 1 vs 0 in {elapsed:.2?}"))
}

fn homotopy_distinction() -> Check {
    ensure(pi(&group("SU(64)"), 5) == Ok(FgAbelianGroup::integers()), "pi_5(SU(64)) != Z")?;
    ensure(pi(&group("SO(91)"), 5) == Ok(FgAbelianGroup::trivial()), "pi_5(SO(91)) != 0")?;
    for name in ["SU(2)", "SO(3)", "SO(6)"] {
        let r = pi(&group(name), 5);
        ensure(matches!(r, Err(HomotopyError::OutsideStableRange { k: 5, .. })), format!("pi_5({name}) = {r:?}"))?;
    }
    let (report, _): (ScreeningReportJson, _) = cli_json(&["screen", "SU(64)", "SO(91)"])?;
    let w = report.homotopy_witness.ok_or("no homotopy witness")?;
    ensure(w.k == 5, format!("witness at k = {}", w.k))?;
    ensure(report.verdict == "TopologicallyDistinct", report.verdict)?;
    Ok("pi_5(SU(64)) = Z, pi_5(SO(91)) = 0; SU(2), SO(3), SO(6) outside stable range".into())
}

fn bott_tables() -> Check {
    use StableFamily::{Sp, O, U};
    for k in 0..=64u64 {
        ensure(stable_pi(U, k) == stable_pi(U, k + 2), format!("U period at {k}"))?;
        ensure(stable_pi(O, k) == stable_pi(O, k + 8), format!("O period at {k}"))?;
        ensure(stable_pi(Sp, k) == stable_pi(Sp, k + 8), format!("Sp period at {k}"))?;
        ensure(stable_pi(O, k) == stable_pi(Sp, k + 4), format!("O/Sp shift at {k}"))?;
        ensure(stable_pi(Sp, k) == stable_pi(O, k + 4), format!("Sp/O shift at {k}"))?;
    }
    let row = |f, n| (0..n).map(|k| stable_pi(f, k).to_string()).collect::<Vec<_>>().join(",");
    ensure(row(U, 2) == "0,Z", row(U, 2))?;
    ensure(row(Sp, 8) == "0,0,0,Z,Z_2,Z_2,0,Z", row(Sp, 8))?;
    ensure(row(O, 8) == "Z_2,Z_2,0,Z,0,0,0,Z", row(O, 8))?;
    Ok("periodicity and O/Sp shift for k <= 64; rows i = 0..7 match".into())
}

fn pell_orbits() -> Check {
    let minus = pell_enumerate(SeedSign::Minus, 2);
    ensure(
        minus[1].step == 2 && minus[1].d == BigUint::from(11u32) && minus[1].k == BigUint::from(31u32),
        format!("step 2 of seed -1 is {:?}", minus[1]),
    )?;
    ensure(minus[1].rotation_dim() == BigUint::from(16u32), "N != 16")?;
    for seed in [SeedSign::Plus, SeedSign::Minus] {
        for s in pell_enumerate(seed, 50) {
            let d = BigInt::from(s.d.clone());
            let k = BigInt::from(s.k.clone());
            ensure(&d * &d * 8 - &k * &k == BigInt::from(7), format!("seed {seed} step {}", s.step))?;
        }
    }
    Ok("(d, k, N) = (11, 31, 16) at step 2; 100 iterates satisfy 8d^2 - k^2 = 7".into())
}

fn uniqueness_scans() -> Check {
    let start = Instant::now();
    let (ab, _): (ClassScanOutput, _) = cli_json(&["class-scan", "A", "B", "--max-rank", "100"])?;
    let (ad, _): (ClassScanOutput, _) = cli_json(&["class-scan", "A", "D", "--max-rank", "100"])?;
    let elapsed = start.elapsed();
    ensure(ab.pairs == [(1, 1)], format!("A/B: {:?}", ab.pairs))?;
    ensure(ad.pairs == [(3, 3)], format!("A/D: {:?}", ad.pairs))?;
    ensure(elapsed < Duration::from_secs(30), format!("took {elapsed:?}"))?;
    Ok(format!("A/B -> (1,1) only, A/D -> (3,3) only, in {elapsed:.2?}"))
}

/// Sum over exponent subsets of t^(sum (2a + 1)).
fn subset_oracle(exponents: &[u32]) -> Vec<u64> {
    let top: u32 = exponents.iter().map(|a| 2 * a + 1).sum();
    let mut c = vec![0u64; top as usize + 1];
    for mask in 0u32..1 << exponents.len() {
        let d: u32 = (0..exponents.len()).filter(|i| mask >> i & 1 == 1).map(|i| 2 * exponents[i] + 1).sum();
        c[d as usize] += 1;
    }
    c
}

fn property_suite() -> Check {
    let minus_one = BigInt::from(-1);
    let mut groups = 0;
    for class in CartanClass::ALL {
        for (g, p) in PoincareTower::new(class).take_while(|(g, _)| g.rank() <= 200) {
            let sum: u64 = g.exponents().iter().map(|&a| u64::from(a)).sum();
            ensure(u64::from(g.rank()) + 2 * sum == g.dimension(), format!("{g}: dimension identity"))?;
            ensure(p.degree() == Some(g.dimension() as usize), format!("{g}: degree"))?;
            ensure(p.eval(&BigInt::from(1)) == BigInt::from(1) << g.rank(), format!("{g}: P(1)"))?;
            ensure(p.eval(&minus_one) == BigInt::from(0), format!("{g}: P(-1)"))?;
            ensure(p.is_palindromic(), format!("{g}: palindrome"))?;
            groups += 1;
        }
        for rank in class.min_rank()..=8 {
            let g = CartanGroup::new(class, u64::from(rank)).map_err(|e| e.to_string())?;
            let engine: Vec<u64> = poincare_polynomial(&g)
                .coefficients()
                .iter()
                .map(|c| u64::try_from(c).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            ensure(engine == subset_oracle(&g.exponents()), format!("{g}: subset oracle"))?;
        }
    }
    Ok(format!("{groups} groups up to rank 200; subset oracle agrees up to rank 8"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 Ramanujan-Nagell solutions", ramanujan_nagell),
        ("AC2 qubit/rotation dimension matches", dimension_matches),
        ("AC3 SU(64) and SO(91) dimension", shared_dimension),
        ("AC4 Poincare polynomial coincidences", polynomial_coincidences),
        ("AC5 Poincare polynomial distinction", polynomial_distinction),
        ("AC6 stable homotopy distinction", homotopy_distinction),
        ("AC7 Bott table invariants", bott_tables),
        ("AC8 Pell orbits", pell_orbits),
        ("AC9 class uniqueness scans", uniqueness_scans),
        ("AC10 polynomial property suite", property_suite),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
