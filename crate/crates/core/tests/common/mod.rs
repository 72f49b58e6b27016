//! Strategies shared by the property and acceptance suites.
#![allow(dead_code)]

use cmreg::ring::Term;
use cmreg::{Field, Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, RingRef};
use proptest::prelude::*;

pub mod props;

pub const NVARS: usize = 4;

pub fn ring() -> RingRef<PrimeField> {
    PolyRing::standard(PrimeField::default(), NVARS)
}

pub fn small_ring() -> RingRef<PrimeField> {
    PolyRing::standard(PrimeField::default(), 3)
}

pub fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, nvars)
        .prop_map(|e| Monomial::from_exponents(&e).unwrap())
}

pub fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Grevlex),
        Just(MonomialOrder::Lex),
        (1..NVARS).prop_map(MonomialOrder::Block),
        proptest::collection::vec(1u32..4, NVARS).prop_map(MonomialOrder::Weighted),
    ]
}

pub fn poly(
    ring: RingRef<PrimeField>,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let n = ring.nvars();
    proptest::collection::vec((1i64..32003, monomial(n, max_exp)), 0..=max_terms).prop_map(
        move |terms| {
            let t: Vec<Term<PrimeField>> = terms
                .into_iter()
                .map(|(c, m)| (ring.field().from_i64(c), m))
                .collect();
            Polynomial::from_terms(&ring, t)
        },
    )
}

/// A homogeneous form of degree `d` with a few terms and small coefficients.
pub fn form(
    ring: RingRef<PrimeField>,
    d: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let n = ring.nvars();
    proptest::collection::vec(
        (-3i64..=3, proptest::collection::vec(0..n, d as usize)),
        1..=max_terms,
    )
    .prop_map(move |terms| {
        let t: Vec<Term<PrimeField>> = terms
            .into_iter()
            .map(|(c, vars)| {
                let mut e = vec![0u32; n];
                for v in vars {
                    e[v] += 1;
                }
                (
                    ring.field().from_i64(c),
                    Monomial::from_exponents(&e).unwrap(),
                )
            })
            .collect();
        Polynomial::from_terms(&ring, t)
    })
}

/// A homogeneous ideal with one to three generators of degree 1 to 3.
pub fn homogeneous_ideal(ring: RingRef<PrimeField>) -> impl Strategy<Value = Ideal<PrimeField>> {
    let r = ring.clone();
    proptest::collection::vec(
        (1u32..=3).prop_flat_map(move |d| form(r.clone(), d, 3)),
        1..=3,
    )
    .prop_map(move |gens| Ideal::new(&ring, gens).unwrap())
    .prop_filter("proper nonzero ideal", |i| !i.is_zero() && !i.is_unit())
}

/// A homogeneous ideal in three variables whose generators are monomials
/// times binomials, so that saturations are non-trivial.
pub fn monomialish_ideal() -> impl Strategy<Value = Ideal<PrimeField>> {
    let ring = small_ring();
    let r = ring.clone();
    proptest::collection::vec((monomial(3, 3), form(r.clone(), 1, 2)), 1..=3)
        .prop_map(move |pairs| {
            let gens = pairs
                .into_iter()
                .map(|(m, l)| &Polynomial::monomial(&ring, ring.field().one(), m) * &l)
                .collect();
            Ideal::new(&ring, gens).unwrap()
        })
        .prop_filter("proper nonzero ideal", |i| !i.is_zero() && !i.is_unit())
}

pub fn linear_form(ring: RingRef<PrimeField>) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let n = ring.nvars();
    proptest::collection::vec(-5i64..=5, n)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(move |c| {
            let t = c
                .into_iter()
                .enumerate()
                .map(|(i, x)| (ring.field().from_i64(x), Monomial::var_power(n, i, 1)))
                .collect();
            Polynomial::from_terms(&ring, t)
        })
}
