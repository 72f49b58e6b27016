//! Multivariate division, normal forms and S-polynomials.

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{sub_mul, Polynomial, Term};
use super::RingRef;
use crate::error::{Error, Result};

/// Result of dividing `f` by a list `G`: `f = sum q_i g_i + remainder`.
#[derive(Clone, Debug)]
pub struct Reduction<F: Field> {
    pub remainder: Polynomial<F>,
    pub quotients: Vec<Polynomial<F>>,
}

/// Divisor table over borrowed term lists.
pub(crate) struct Reducer<'a, F: Field> {
    ring: RingRef<F>,
    polys: Vec<&'a [Term<F>]>,
    leads: Vec<Monomial>,
    masks: Vec<u32>,
    inv_lc: Vec<F::Elem>,
}

impl<'a, F: Field> Reducer<'a, F> {
    pub(crate) fn new(ring: &RingRef<F>) -> Self {
        Reducer {
            ring: ring.clone(),
            polys: Vec::new(),
            leads: Vec::new(),
            masks: Vec::new(),
            inv_lc: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, terms: &'a [Term<F>]) {
        assert!(!terms.is_empty(), "zero divisor in reducer");
        let lead = terms[0].1;
        self.polys.push(terms);
        self.masks.push(lead.support_mask());
        self.leads.push(lead);
        self.inv_lc
            .push(self.ring.field().inv(&terms[0].0).unwrap());
    }

    #[inline]
    pub(crate) fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mm = m.support_mask();
        (0..self.leads.len()).find(|&i| self.masks[i] & !mm == 0 && self.leads[i].divides(m))
    }

    /// Normal form. With `full == false` only the leading term is reduced
    /// until it becomes irreducible.
    pub(crate) fn normal_form(&self, terms: Vec<Term<F>>, full: bool) -> Vec<Term<F>> {
        self.run(terms, full, None)
    }

    fn run(
        &self,
        mut p: Vec<Term<F>>,
        full: bool,
        mut record: Option<&mut Vec<(usize, F::Elem, Monomial)>>,
    ) -> Vec<Term<F>> {
        let field = self.ring.field();
        let mut rem = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (c, m) = (&p[start].0, p[start].1);
            match self.find_divisor(&m) {
                Some(i) => {
                    let q = field.mul(c, &self.inv_lc[i]);
                    let qm = m.div(&self.leads[i]).unwrap();
                    let next = sub_mul(&self.ring, &p[start + 1..], &q, &qm, &self.polys[i][1..]);
                    if let Some(rec) = record.as_deref_mut() {
                        rec.push((i, q, qm));
                    }
                    p = next;
                    start = 0;
                }
                None => {
                    if !full {
                        rem.extend(p.drain(start..));
                        break;
                    }
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }
}

/// Full division of `f` by `divisors` with quotient record. Deterministic:
/// the highest reducible term is rewritten first, by the divisor of
/// smallest index whose leading monomial divides it. Zero divisors are
/// skipped (their quotient is zero).
pub fn reduce<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Reduction<F> {
    let ring = f.ring();
    let mut red = Reducer::new(ring);
    let mut index = Vec::new();
    for (k, g) in divisors.iter().enumerate() {
        assert!(g.same_ring(f), "divisor from a different ring");
        if !g.is_zero() {
            red.push(g.terms());
            index.push(k);
        }
    }
    let mut rec = Vec::new();
    let rem = red.run(f.terms().to_vec(), true, Some(&mut rec));
    let mut qterms: Vec<Vec<Term<F>>> = vec![Vec::new(); divisors.len()];
    for (i, c, m) in rec {
        qterms[index[i]].push((c, m));
    }
    Reduction {
        remainder: Polynomial::from_sorted(ring, rem),
        quotients: qterms
            .into_iter()
            .map(|t| Polynomial::from_terms(ring, t))
            .collect(),
    }
}

/// Remainder of full division, without quotients.
pub fn normal_form<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Polynomial<F> {
    let ring = f.ring();
    let mut red = Reducer::new(ring);
    for g in divisors.iter().filter(|g| !g.is_zero()) {
        red.push(g.terms());
    }
    Polynomial::from_sorted(ring, red.normal_form(f.terms().to_vec(), true))
}

/// `lcm/lt(f) * f - lcm/lt(g) * g`.
pub fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let (Some((cf, mf)), Some((cg, mg))) = (f.leading_term(), g.leading_term()) else {
        return Err(Error::ZeroPolynomial(
            "S-polynomial of a zero polynomial".into(),
        ));
    };
    if !f.same_ring(g) {
        return Err(Error::RingMismatch);
    }
    let field = f.ring().field();
    let l = mf.lcm(mg);
    let a = f.mul_term(&field.inv(cf).unwrap(), &l.div(mf).unwrap());
    let b = g.mul_term(&field.inv(cg).unwrap(), &l.div(mg).unwrap());
    a.try_sub(&b)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_set<F: Field>(basis: &[Polynomial<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (mi, mj) = (basis[i].leading_monomial(), basis[j].leading_monomial());
            if let (Some(a), Some(b)) = (mi, mj) {
                if a.is_coprime(b) {
                    continue;
                }
            }
            let s = match spoly(&basis[i], &basis[j]) {
                Ok(s) => s,
                Err(_) => continue,
            };
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}
