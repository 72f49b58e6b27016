//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cmreg::families::FamilyInstance;
use cmreg::resolution::regularity;
use cmreg::verify::{self, Claim, Status, DEFAULT_GRID, DEFAULT_SEED, SATURATION_SEEDS};
use cmreg::PrimeField;
use common::*;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

type Outcome = Result<String, String>;

fn field() -> PrimeField {
    PrimeField::default()
}

fn instance(m: usize, n: usize, primed: bool) -> Result<FamilyInstance<PrimeField>, String> {
    FamilyInstance::build(field(), m, n, primed).map_err(|e| e.to_string())
}

fn reg_of(m: usize, n: usize, primed: bool) -> Result<i64, String> {
    regularity(instance(m, n, primed)?.almost_ci()).map_err(|e| e.to_string())
}

fn expect(what: String, ok: bool) -> Outcome {
    if ok {
        Ok(what)
    } else {
        Err(what)
    }
}

fn reg_2_2() -> Outcome {
    let r = reg_of(2, 2, false)?;
    expect(format!("reg = {r}"), r == 7)
}

fn reg_sharp_pair() -> Outcome {
    let (a, b) = (reg_of(2, 3, false)?, reg_of(3, 2, false)?);
    expect(
        format!("reg(2,3) = {a}, reg(3,2) = {b}"),
        a == 14 && b == 14,
    )
}

fn primed_ci_regularity() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for &(m, n, primed) in DEFAULT_GRID.iter().filter(|p| p.2) {
        let inst = instance(m, n, primed)?;
        let r = regularity(inst.ci()).map_err(|e| e.to_string())?;
        let want = (m * n) as i64 + (1 << (m - 1)) + 1;
        ok &= inst.ci_is_complete_intersection() && r == want;
        parts.push(format!("({m},{n}) {r}/{want}"));
    }
    expect(parts.join(", "), ok)
}

fn primed_curve_2_2() -> Outcome {
    let inst = instance(2, 2, true)?;
    let r = regularity(inst.curve()).map_err(|e| e.to_string())? - 1;
    expect(format!("reg(A'/b') = {r}"), r == 3)
}

fn primed_lower_bounds() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (m, n, bound) in [(1, 2, 4), (1, 3, 6), (2, 2, 9)] {
        let report = verify::check_primed_lower_bound(field(), m, n);
        let r = reg_of(m, n, true)?;
        ok &= report.passed() && r >= bound;
        parts.push(format!("({m},{n}) {r} >= {bound}"));
    }
    expect(parts.join(", "), ok)
}

fn decomposition_suite() -> Outcome {
    let set = verify::verify_grid(
        field(),
        &DEFAULT_GRID,
        &[Claim::Decomposition, Claim::PrimedDecomposition],
        DEFAULT_SEED,
    );
    let mut ok = set.passed() && set.reports.len() == DEFAULT_GRID.len();
    for r in &set.reports {
        for id in ["intersection", "double_saturation", "codim"] {
            ok &= r.subclaim(id).map(|s| s.status) == Some(Status::Pass);
        }
    }
    expect(
        format!(
            "{} instances, {} sub-claims passed",
            set.reports.len(),
            set.count(Status::Pass)
        ),
        ok,
    )
}

fn section_and_saturation_bounds() -> Outcome {
    let set = verify::verify_grid(
        field(),
        &DEFAULT_GRID,
        &[Claim::SectionBound, Claim::SaturationExponent],
        DEFAULT_SEED,
    );
    let mut ok = set.passed() && set.reports.len() == 2 * DEFAULT_GRID.len();
    let mut exponent_checks = 0;
    for r in &set.reports {
        match r.claim {
            Claim::SectionBound => {
                ok &= r.subclaim("upper").map(|s| s.status) == Some(Status::Pass);
                ok &= r.value("section_seeds").is_some();
            }
            _ => {
                for k in 0..SATURATION_SEEDS {
                    ok &= r.value(&format!("seed_{k}")).is_some();
                    exponent_checks += usize::from(
                        r.subclaim(&format!("exponent_{k}")).map(|s| s.status)
                            == Some(Status::Pass),
                    );
                }
            }
        }
    }
    let skipped = set.count(Status::Skipped);
    expect(
        format!(
            "{} reports, {exponent_checks} seeded exponent checks passed, {skipped} skipped",
            set.reports.len()
        ),
        ok,
    )
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<String, String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map(|_| format!("{name} x{cases}"))
        .map_err(|e| format!("{name}: {e}"))
}

fn property_suites() -> Outcome {
    use proptest::collection::vec;
    let done = [
        run_property(
            "order",
            1000,
            (
                orders(),
                monomial(NVARS, 5),
                monomial(NVARS, 5),
                monomial(NVARS, 5),
            ),
            |(o, a, b, c)| props::orders_are_multiplicative(o, a, b, c),
        )?,
        run_property(
            "reduce",
            1000,
            (poly(ring(), 6, 4), vec(poly(ring(), 3, 2), 1..4)),
            |(f, d)| props::reduction_is_idempotent(f, d),
        )?,
        run_property(
            "buchberger",
            1000,
            homogeneous_ideal(ring()),
            props::groebner_bases_certify,
        )?,
        run_property(
            "euler",
            1000,
            homogeneous_ideal(ring()),
            props::euler_characteristic_matches_hilbert_numerator,
        )?,
        run_property(
            "saturation",
            1000,
            (monomialish_ideal(), linear_form(small_ring())),
            |(i, l)| props::saturation_index_is_consistent(i, l),
        )?,
    ];
    Ok(done.join(", "))
}

fn sharpness_bounds() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for &(m, n, primed) in DEFAULT_GRID.iter().filter(|p| !p.2) {
        let inst = instance(m, n, primed)?;
        let reg = regularity(inst.almost_ci()).map_err(|e| e.to_string())?;
        let reg_b = regularity(inst.curve()).map_err(|e| e.to_string())?;
        let (m_, n_) = (m as i64, n as i64);
        let (nm, np1, two) = (
            n_.pow(m as u32),
            (n_ + 1).pow(m as u32 - 2),
            1i64 << (m - 2),
        );
        let coarse = 2 * m_ * m_ * n_ * np1 * (n_ + two) * (n_ + two);
        let curve = nm + n_ * np1 - 1;
        ok &= reg <= coarse && reg_b <= curve && verify::check_sharpness(field(), m, n).passed();
        parts.push(format!("({m},{n}) {reg} <= {coarse}, {reg_b} <= {curve}"));
    }
    expect(parts.join("; "), ok)
}

fn deterministic_reports() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cmreg"))
            .args(["verify", "all", "--seed", "1", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    let ok =
        a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    expect(
        format!("{} bytes, exit {:?}", a.stdout.len(), a.status.code()),
        ok,
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("reg of the (2,2) almost complete intersection", 10, reg_2_2),
        ("reg at (2,3) and (3,2)", 240, reg_sharp_pair),
        ("primed complete intersections", 30, primed_ci_regularity),
        ("primed (2,2) curve", 60, primed_curve_2_2),
        ("primed lower bounds", 360, primed_lower_bounds),
        ("decomposition suite", 120, decomposition_suite),
        (
            "section and saturation bounds",
            180,
            section_and_saturation_bounds,
        ),
        ("property suites", 120, property_suites),
        ("upper bounds on the unprimed grid", 30, sharpness_bounds),
        ("deterministic reports", 600, deterministic_reports),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let slow = took > Duration::from_secs(limit);
        let (tag, detail) = match (&outcome, slow) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {limit} s limit")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        failed += usize::from(tag == "FAIL");
        println!(
            "{tag} {:>2}. {name}: {detail} [{:.2} s]",
            k + 1,
            took.as_secs_f64()
        );
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
