//! Independent oracles for derived values, and the values they pin down.

mod common;

use std::collections::HashMap;

use cmreg::families::{
    curve_exponents, curve_ideal, curve_ideal_by_elimination, monomials_of_degree, FamilyInstance,
};
use cmreg::hilbert::{dim_deg, hilbert_function};
use cmreg::idealops::{saturate_ideal_chain, saturation};
use cmreg::linalg::rank;
use cmreg::resolution::{a0, a1_via_sequence, minimal_resolution, regularity};
use cmreg::{Field, Ideal, PolyRing, PrimeField};
use common::*;
use proptest::prelude::*;

/// dim_k I_μ, from the span of all multiples of the given generators.
fn piece_dim<F: Field>(i: &Ideal<F>, mu: u32) -> usize {
    let ring = i.ring();
    let field = ring.field();
    let monos = monomials_of_degree(ring.nvars(), mu, ring.order());
    let index: HashMap<_, _> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut rows = Vec::new();
    for g in i.gens() {
        let Some(e) = g.degree() else { continue };
        if e > mu {
            continue;
        }
        for mult in monomials_of_degree(ring.nvars(), mu - e, ring.order()) {
            let mut row = vec![field.zero(); monos.len()];
            for (c, m) in g.terms() {
                row[index[&m.mul(&mult)]] = c.clone();
            }
            rows.push(row);
        }
    }
    rank(field, &rows)
}

fn hf_by_rank<F: Field>(i: &Ideal<F>, mu: u32) -> i128 {
    let all = monomials_of_degree(i.ring().nvars(), mu, i.ring().order()).len();
    (all - piece_dim(i, mu)) as i128
}

fn twisted_cubic() -> Ideal<PrimeField> {
    let ring = PolyRing::standard(PrimeField::default(), 4);
    Ideal::parse(&ring, &["X0*X2-X1^2", "X1*X3-X2^2", "X0*X3-X1*X2"]).unwrap()
}

fn embedded_point() -> Ideal<PrimeField> {
    let ring = PolyRing::standard(PrimeField::default(), 4);
    Ideal::parse(&ring, &["X0^2", "X0*X1", "X0*X2", "X0*X3", "X1^3-X2^2*X3"]).unwrap()
}

#[test]
fn hilbert_function_matches_rank() {
    let inst = FamilyInstance::build(PrimeField::default(), 2, 2, false).unwrap();
    for i in [
        twisted_cubic(),
        embedded_point(),
        inst.almost_ci().clone(),
        inst.residual().clone(),
    ] {
        for mu in 0..=9 {
            assert_eq!(
                hilbert_function(&i, mu as i64),
                hf_by_rank(&i, mu),
                "{:?} at {mu}",
                i.gens()
            );
        }
    }
}

#[test]
fn a0_matches_rank_difference() {
    let inst = FamilyInstance::build(PrimeField::default(), 2, 2, false).unwrap();
    for (i, expected) in [
        (embedded_point(), Some(1)),
        (twisted_cubic(), None),
        (inst.almost_ci().clone(), Some(6)),
    ] {
        let (sat, _) = saturate_ideal_chain(&i, &Ideal::irrelevant(i.ring())).unwrap();
        let top = (0..=12u32)
            .filter(|&mu| piece_dim(&sat, mu) > piece_dim(&i, mu))
            .max()
            .map(i64::from);
        assert_eq!(top, expected);
        assert_eq!(a0(&i).unwrap(), expected);
    }
}

#[test]
fn frame_and_minimal_betti_agree_on_scalar_ranks() {
    // the frame is not minimal, but cancelling a unit removes one summand
    // from two neighbouring steps in the same internal degree
    for (m, n, primed) in [(2, 2, false), (1, 2, true), (1, 3, true)] {
        let inst = FamilyInstance::build(PrimeField::default(), m, n, primed).unwrap();
        let res = minimal_resolution(inst.almost_ci()).unwrap();
        let (frame, min) = (res.frame_betti(), res.betti());
        for j in 0..40i64 {
            let alt = |b: &cmreg::resolution::BettiTable| {
                (0..=5)
                    .map(|i| (-1i64).pow(i as u32) * b.get(i, j) as i64)
                    .sum::<i64>()
            };
            assert_eq!(alt(frame), alt(&min), "degree {j}");
        }
        for ((i, j), b) in min.iter() {
            assert!(b <= frame.get(i, j));
        }
    }
}

#[test]
fn curve_routes_agree() {
    for (m, n, primed) in [(2, 2, false), (1, 2, true), (1, 3, true), (2, 2, true)] {
        let exps = curve_exponents(m, n, primed);
        let a = curve_ideal(PrimeField::default(), &exps).unwrap();
        let b = curve_ideal_by_elimination(PrimeField::default(), &exps).unwrap();
        assert!(a.same_as(&b), "{exps:?}");
        assert!(saturation(&a).unwrap().same_as(&a));
    }
}

#[test]
fn koszul_regularity_of_generic_complete_intersections() {
    let ring = ring();
    let cases: [(&[&str], i64); 3] = [
        (&["X0^2+X1*X2-X3^2", "X1^3-X0*X2*X3+X3^3"], 4),
        (&["X0^2-X1*X3", "X1^2+X2*X3", "X2^2-X0*X1+X3^2"], 4),
        (
            &[
                "X0^2-X1*X3",
                "X1^3+X2*X3^2",
                "X2^4-X0*X1^3+X3^4",
                "X0*X3+X1^2",
            ],
            8,
        ),
    ];
    for (gens, expected) in cases {
        let i = Ideal::parse(&ring, gens).unwrap();
        let degs = i.generator_degrees();
        assert_eq!(dim_deg(&i).0, Some(4 - degs.len()));
        assert_eq!(regularity(&i).unwrap(), expected);
        assert_eq!(
            expected,
            degs.iter().map(|&d| d as i64).sum::<i64>() - degs.len() as i64 + 1
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn hilbert_function_matches_rank_on_random_ideals(i in homogeneous_ideal(ring())) {
        for mu in 0..=6 {
            prop_assert_eq!(hilbert_function(&i, mu as i64), hf_by_rank(&i, mu));
        }
    }
}

struct Frozen {
    point: (usize, usize, bool),
    degrees: &'static [u32],
    extra: &'static str,
    reg: i64,
    a0: Option<i64>,
    a1: Option<i64>,
    curve_deg: i128,
    curve_reg: i64,
}

const FROZEN: [Frozen; 7] = [
    Frozen {
        point: (2, 2, false),
        degrees: &[3, 3, 4],
        extra: "X0^2*X2^2",
        reg: 7,
        a0: Some(6),
        a1: Some(2),
        curve_deg: 6,
        curve_reg: 4,
    },
    Frozen {
        point: (2, 3, false),
        degrees: &[4, 4, 6],
        extra: "X0^3*X2^3",
        reg: 14,
        a0: Some(13),
        a1: Some(7),
        curve_deg: 12,
        curve_reg: 9,
    },
    Frozen {
        point: (2, 4, false),
        degrees: &[5, 5, 8],
        extra: "X0^4*X2^4",
        reg: 23,
        a0: Some(22),
        a1: Some(14),
        curve_deg: 20,
        curve_reg: 16,
    },
    Frozen {
        point: (3, 2, false),
        degrees: &[3, 3, 4, 7],
        extra: "X0*X2^6",
        reg: 14,
        a0: Some(13),
        a1: Some(6),
        curve_deg: 18,
        curve_reg: 8,
    },
    Frozen {
        point: (1, 2, true),
        degrees: &[2, 3, 3],
        extra: "X0*X2^2",
        reg: 4,
        a0: None,
        a1: None,
        curve_deg: 3,
        curve_reg: 2,
    },
    Frozen {
        point: (1, 3, true),
        degrees: &[2, 4, 4],
        extra: "X0*X2^3",
        reg: 6,
        a0: Some(5),
        a1: Some(1),
        curve_deg: 4,
        curve_reg: 3,
    },
    Frozen {
        point: (2, 2, true),
        degrees: &[3, 3, 3, 6],
        extra: "X2^6",
        reg: 9,
        a0: Some(8),
        a1: Some(2),
        curve_deg: 9,
        curve_reg: 4,
    },
];

#[test]
fn frozen_family_values() {
    let mut bad = Vec::new();
    for f in &FROZEN {
        let (m, n, primed) = f.point;
        let inst = FamilyInstance::build(PrimeField::default(), m, n, primed).unwrap();
        let mut degrees = inst.almost_ci().generator_degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, {
            let mut e = inst.expected_degrees();
            e.sort_unstable();
            e
        });
        let got = (
            degrees,
            inst.extra().to_string(),
            regularity(inst.almost_ci()).unwrap(),
            a0(inst.almost_ci()).unwrap(),
            a1_via_sequence(&inst).unwrap(),
            dim_deg(inst.curve()).1,
            regularity(inst.curve()).unwrap(),
        );
        let want = (
            f.degrees.to_vec(),
            f.extra.to_string(),
            f.reg,
            f.a0,
            f.a1,
            f.curve_deg,
            f.curve_reg,
        );
        if got != want {
            bad.push(format!("{}: got {got:?}, want {want:?}", inst.label()));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}

#[test]
fn frozen_betti_table() {
    let inst = FamilyInstance::build(PrimeField::default(), 2, 2, false).unwrap();
    let b = minimal_resolution(inst.almost_ci()).unwrap().betti();
    assert_eq!(
        (0..5).map(|i| b.total(i)).collect::<Vec<_>>(),
        [1, 3, 5, 4, 1]
    );
    assert_eq!(b.regularity(), Some(6));
    let expected = [
        (1, 3, 2),
        (1, 4, 1),
        (2, 6, 1),
        (2, 7, 3),
        (2, 8, 1),
        (3, 8, 1),
        (3, 9, 3),
        (4, 10, 1),
    ];
    for (i, j, v) in expected {
        assert_eq!(b.get(i, j), v, "beta_{i},{j}");
    }
}
