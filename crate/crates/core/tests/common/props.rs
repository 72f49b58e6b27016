//! Property bodies shared by the proptest suite and the acceptance harness.

use cmreg::hilbert::HilbertData;
use cmreg::idealops::{
    colon, intersect, product, saturate, saturate_by_iteration, saturate_ideal_chain, saturation,
};
use cmreg::resolution::minimal_resolution;
use cmreg::ring::{is_groebner_set, normal_form, reduce};
use cmreg::{Ideal, Monomial, MonomialOrder, Polynomial, PrimeField};
use proptest::prelude::*;

use super::NVARS;

type P = Polynomial<PrimeField>;
type I = Ideal<PrimeField>;

pub fn orders_are_multiplicative(
    order: MonomialOrder,
    a: Monomial,
    b: Monomial,
    c: Monomial,
) -> Result<(), TestCaseError> {
    let one = Monomial::one(NVARS);
    prop_assert!(order.cmp(&one, &a).is_le());
    prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
    prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
    Ok(())
}

#[allow(clippy::eq_op)]
pub fn ring_axioms(a: P, b: P, c: P) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    prop_assert!((&a - &a).is_zero());
    Ok(())
}

pub fn reduction_is_idempotent(f: P, divisors: Vec<P>) -> Result<(), TestCaseError> {
    let r = normal_form(&f, &divisors);
    prop_assert_eq!(normal_form(&r, &divisors), r.clone());
    // f = Σ q_i g_i + r
    let red = reduce(&f, &divisors);
    let mut acc = red.remainder.clone();
    for (q, g) in red.quotients.iter().zip(&divisors) {
        acc = &acc + &(q * g);
    }
    prop_assert_eq!(acc, f);
    prop_assert_eq!(red.remainder, r);
    Ok(())
}

pub fn groebner_bases_certify(i: I) -> Result<(), TestCaseError> {
    let gb = i.groebner();
    prop_assert!(gb.certify());
    prop_assert!(is_groebner_set(gb.polys()));
    for g in gb.polys() {
        prop_assert!(i.contains(g));
        prop_assert!(
            gb.leading_monomials()
                .iter()
                .filter(|m| m.divides(g.leading_monomial().unwrap()))
                .count()
                == 1
        );
    }
    for g in i.gens() {
        prop_assert!(gb.normal_form(g).is_zero());
    }
    Ok(())
}

pub fn ideals_are_closed(i: I, h: P, k: P) -> Result<(), TestCaseError> {
    let g0 = &i.gens()[0];
    let g1 = i.gens().last().unwrap();
    prop_assert!(i.contains(&(&(g0 * &h) + &(g1 * &k))));
    let nf = i.groebner().normal_form(&h);
    prop_assert!(i.contains(&(&h - &nf)));
    Ok(())
}

pub fn intersection_laws(i: I, j: I, k: I) -> Result<(), TestCaseError> {
    let ij = intersect(&i, &j).unwrap();
    prop_assert!(ij.same_as(&intersect(&j, &i).unwrap()));
    prop_assert!(i.contains_ideal(&ij) && j.contains_ideal(&ij));
    prop_assert!(ij.contains_ideal(&product(&i, &j).unwrap()));
    let left = intersect(&ij, &k).unwrap();
    let right = intersect(&i, &intersect(&j, &k).unwrap()).unwrap();
    prop_assert!(left.same_as(&right));
    Ok(())
}

pub fn saturation_index_is_consistent(i: I, l: P) -> Result<(), TestCaseError> {
    let (sat, q) = saturate(&i, &l).unwrap();
    let (slow, q_slow) = saturate_by_iteration(&i, &l).unwrap();
    prop_assert!(sat.same_as(&slow));
    prop_assert_eq!(q, q_slow);
    // I : l^q is stable and, for q > 0, I : l^{q-1} is not
    let mut step = i.clone();
    for _ in 0..q {
        step = colon(&step, &l).unwrap();
    }
    prop_assert!(step.same_as(&sat));
    prop_assert!(colon(&step, &l).unwrap().same_as(&step));
    let (chain, _) = saturate_ideal_chain(&i, &Ideal::irrelevant(i.ring())).unwrap();
    prop_assert!(chain.same_as(&saturation(&i).unwrap()));
    Ok(())
}

pub fn euler_characteristic_matches_hilbert_numerator(i: I) -> Result<(), TestCaseError> {
    let res = minimal_resolution(&i).unwrap();
    prop_assert_eq!(
        res.betti().euler_polynomial(),
        HilbertData::of(&i).numerator().clone()
    );
    let cert = res.certify(&i).unwrap();
    prop_assert!(cert.ok(), "{:?}", cert);
    prop_assert!(res.length() <= NVARS);
    prop_assert_eq!(res.betti().total(0), 1);
    Ok(())
}
