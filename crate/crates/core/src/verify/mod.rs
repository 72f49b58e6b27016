//! Claim-by-claim verification: reproducible pass/fail reports for the
//! regularity statements about the two monomial-curve families, run over
//! a grid of parameters.

mod claims;
pub mod ideal_file;
pub mod report;

use rayon::prelude::*;

pub use claims::{build_failure, run_claim, Subject, SATURATION_SEEDS};
pub use ideal_file::{format_ideal, parse_ideal_file, read_ideal_file, ParsedIdeal};
pub use report::{
    Claim, Params, Quantity, Relation, ReportSet, Source, Status, SubClaim, VerifyReport, SCHEMA,
};

use crate::families::FamilyInstance;
use crate::groebner::Ideal;
use crate::ring::Field;

pub const DEFAULT_SEED: u64 = 1;

/// `(m, n, primed)`.
pub type GridPoint = (usize, usize, bool);

/// Unprimed `(2,2), (2,3), (2,4), (3,2)` and primed `(1,2), (1,3), (2,2)`.
pub const DEFAULT_GRID: [GridPoint; 7] = [
    (2, 2, false),
    (2, 3, false),
    (2, 4, false),
    (3, 2, false),
    (1, 2, true),
    (1, 3, true),
    (2, 2, true),
];

fn label(m: usize, n: usize, primed: bool) -> String {
    format!("{}({m},{n})", if primed { "primed" } else { "unprimed" })
}

/// The claims that make sense on an instance of the given family.
pub fn claims_for(primed: bool) -> Vec<Claim> {
    Claim::ALL
        .into_iter()
        .filter(|c| c.family().is_none_or(|p| p == primed))
        .collect()
}

/// Runs `claims` (restricted to those applicable) on one family instance;
/// the instance is built once and shared.
pub fn verify_instance<F: Field>(
    field: F,
    point: GridPoint,
    claims: &[Claim],
    seed: u64,
) -> Vec<VerifyReport> {
    let (m, n, primed) = point;
    let char = field.characteristic();
    let wanted: Vec<Claim> = claims
        .iter()
        .copied()
        .filter(|c| c.family().is_none_or(|p| p == primed))
        .collect();
    match FamilyInstance::build(field, m, n, primed) {
        Ok(inst) => {
            let subject = Subject::from_instance(inst);
            wanted
                .into_iter()
                .map(|c| run_claim(c, &subject, seed))
                .collect()
        }
        Err(e) => wanted
            .into_iter()
            .map(|c| build_failure(c, &label(m, n, primed), m, n, primed, char, seed, &e))
            .collect(),
    }
}

/// Runs `claims` over `grid`, instances in parallel, reports sorted by
/// `(claim, m, n, primed)`.
pub fn verify_grid<F: Field>(
    field: F,
    grid: &[GridPoint],
    claims: &[Claim],
    seed: u64,
) -> ReportSet {
    let char = field.characteristic();
    let reports: Vec<VerifyReport> = grid
        .par_iter()
        .flat_map_iter(|&p| verify_instance(field.clone(), p, claims, seed))
        .collect();
    ReportSet::new(char, seed, reports)
}

/// Every claim on the default grid.
pub fn verify_all<F: Field>(field: F, seed: u64) -> ReportSet {
    verify_grid(field, &DEFAULT_GRID, &Claim::ALL, seed)
}

pub fn check_lower_bound<F: Field>(field: F, m: usize, n: usize) -> VerifyReport {
    single(field, (m, n, false), Claim::LowerBound, DEFAULT_SEED)
}

pub fn check_primed_lower_bound<F: Field>(field: F, m: usize, n: usize) -> VerifyReport {
    single(field, (m, n, true), Claim::PrimedLowerBound, DEFAULT_SEED)
}

pub fn check_decomposition<F: Field>(field: F, m: usize, n: usize, primed: bool) -> VerifyReport {
    let claim = if primed {
        Claim::PrimedDecomposition
    } else {
        Claim::Decomposition
    };
    single(field, (m, n, primed), claim, DEFAULT_SEED)
}

pub fn check_sharpness<F: Field>(field: F, m: usize, n: usize) -> VerifyReport {
    single(field, (m, n, false), Claim::Sharpness, DEFAULT_SEED)
}

pub fn check_section_bound<F: Field>(i: &Ideal<F>, seed: u64) -> VerifyReport {
    run_claim(
        Claim::SectionBound,
        &Subject::from_ideal("input", i.clone()),
        seed,
    )
}

pub fn check_saturation_exponent<F: Field>(i: &Ideal<F>, seed: u64) -> VerifyReport {
    run_claim(
        Claim::SaturationExponent,
        &Subject::from_ideal("input", i.clone()),
        seed,
    )
}

pub fn check_degree_bound<F: Field>(i: &Ideal<F>) -> VerifyReport {
    run_claim(
        Claim::DegreeBound,
        &Subject::from_ideal("input", i.clone()),
        DEFAULT_SEED,
    )
}

fn single<F: Field>(field: F, point: GridPoint, claim: Claim, seed: u64) -> VerifyReport {
    verify_instance(field, point, &[claim], seed)
        .pop()
        .expect("claim applies to its own family")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PolyRing, PrimeField};

    #[test]
    fn smallest_instances() {
        let r = check_lower_bound(PrimeField::default(), 2, 2);
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.value("reg"), Some(&serde_json::json!(7)));
        let r = check_decomposition(PrimeField::default(), 1, 2, true);
        assert!(r.passed(), "{r:#?}");
    }

    #[test]
    fn bad_parameters_fail_without_panicking() {
        let r = check_lower_bound(PrimeField::default(), 1, 2);
        assert!(!r.passed());
        assert_eq!(r.subclaims[0].id, "build");
    }

    #[test]
    fn wrong_dimension_is_skipped() {
        let ring = PolyRing::standard(PrimeField::default(), 3);
        let r = check_section_bound(&Ideal::parse(&ring, &["X0", "X1"]).unwrap(), 1);
        assert!(r.passed());
        assert_eq!(r.subclaims[0].status, Status::Skipped);
        let c = check_degree_bound(&Ideal::parse(&ring, &["X0^2", "X1^3"]).unwrap());
        assert_eq!(c.subclaim("upper").unwrap().status, Status::Pass);
    }

    #[test]
    fn claims_partition_by_family() {
        assert_eq!(claims_for(true).len(), 5);
        assert_eq!(claims_for(false).len(), 6);
    }
}
