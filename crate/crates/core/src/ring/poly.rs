use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::Field;
use super::monomial::Monomial;
use super::RingRef;
use crate::error::{Error, Result};

/// A coefficient-monomial pair.
pub type Term<F> = (<F as Field>::Elem, Monomial);

/// Sparse polynomial; terms strictly decreasing in the ring's order, no
/// zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<Term<F>>,
}

/// The four basic arithmetic operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn monomial(ring: &RingRef<F>, c: F::Elem, m: Monomial) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(c, m)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates,
    /// drops zeros.
    pub fn from_terms(ring: &RingRef<F>, mut terms: Vec<Term<F>>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.1, &a.1));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !field.is_zero(c));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms must already satisfy the ordering invariant.
    pub(crate) fn from_sorted(ring: &RingRef<F>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.1.degree();
        self.terms.iter().all(|t| t.1.degree() == d).then_some(d)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn neg(&self) -> Self {
        let f = self.ring.field();
        let terms = self.terms.iter().map(|(c, m)| (f.neg(c), *m)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.ring.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(a, m)| (f.mul(a, c), *m)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if self.ring.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.ring.field().inv(lc).unwrap();
                self.scale(&inv)
            }
        }
    }

    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = self.ring.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, n)| (f.mul(a, c), n.mul(m)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.ring, &self.terms, &other.terms),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let one = self.ring.field().one();
        let unit = Monomial::one(self.ring.nvars());
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: sub_mul(&self.ring, &self.terms, &one, &unit, &other.terms),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let f = self.ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(small.len() * big.len());
        for (a, m) in &small.terms {
            for (b, n) in &big.terms {
                let prod = f.mul(a, b);
                let key = m.mul(n);
                match acc.get_mut(&key) {
                    Some(v) => *v = f.add(v, &prod),
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect::<Vec<_>>();
        let mut terms = terms;
        terms.sort_by(|a, b| self.ring.cmp(&b.1, &a.1));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        if g.is_zero() {
            return None;
        }
        let red = super::division::reduce(self, std::slice::from_ref(g));
        if red.remainder.is_zero() {
            red.quotients.into_iter().next()
        } else {
            None
        }
    }

    /// Re-expresses the polynomial in `target`, where variable `i` becomes
    /// variable `map[i]` of the target ring. Fails if an unmapped variable
    /// occurs.
    pub fn map_to(&self, target: &RingRef<F>, map: &[Option<usize>]) -> Result<Self> {
        let mut terms = Vec::with_capacity(self.len());
        for (c, m) in &self.terms {
            let mm = m
                .remap(map, target.nvars())
                .ok_or(Error::RingMismatch)?;
            terms.push((c.clone(), mm));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Same variables, possibly different monomial order.
    pub fn reorder(&self, target: &RingRef<F>) -> Self {
        assert_eq!(self.ring.nvars(), target.nvars());
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.cmp(&b.1, &a.1));
        Polynomial {
            ring: target.clone(),
            terms,
        }
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (polynomials
    /// in the target ring).
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Self {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let n = images.len();
        let identity: Vec<Option<usize>> = images
            .iter()
            .map(|img| match img.terms.as_slice() {
                [(c, m)] if target.field().is_one(c) && m.degree() == 1 => {
                    m.exponents().iter().position(|&e| e == 1)
                }
                _ => None,
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![Vec::new(); n];
        let mut acc = Polynomial::zero(&target);
        let mut chunk: Vec<Term<F>> = Vec::new();
        for (c, m) in &self.terms {
            let mut mono = Monomial::one(target.nvars());
            let mut prod = Polynomial::constant(&target, c.clone());
            for i in 0..n {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                if let Some(j) = identity[i] {
                    mono = mono.mul(&Monomial::var_power(target.nvars(), j, e));
                } else {
                    let pw = &mut powers[i];
                    if pw.is_empty() {
                        pw.push(Polynomial::one(&target));
                    }
                    while pw.len() <= e as usize {
                        let next = &pw[pw.len() - 1] * &images[i];
                        pw.push(next);
                    }
                    prod = &prod * &pw[e as usize];
                }
            }
            let one = target.field().one();
            let shifted = prod.mul_term(&one, &mono);
            chunk.extend(shifted.terms);
            if chunk.len() > 4096 {
                let part = Polynomial::from_terms(&target, std::mem::take(&mut chunk));
                acc = &acc + &part;
            }
        }
        let part = Polynomial::from_terms(&target, chunk);
        &acc + &part
    }

    /// Coefficients of a linear form, or `None` if not homogeneous of
    /// degree one.
    pub fn linear_coefficients(&self) -> Option<Vec<F::Elem>> {
        if self.homogeneous_degree() != Some(1) {
            return None;
        }
        let f = self.ring.field();
        let mut out = vec![f.zero(); self.ring.nvars()];
        for (c, m) in &self.terms {
            let i = m.exponents().iter().position(|&e| e == 1)?;
            out[i] = c.clone();
        }
        Some(out)
    }

    /// The largest power of variable `i` dividing every term.
    pub fn var_content(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.1.exp(i)).min().unwrap_or(0)
    }
}

/// `f op g` with ring checking.
pub fn poly_arith<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    op: ArithOp,
) -> Result<Polynomial<F>> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}

/// Merge of two sorted term lists.
pub(crate) fn merge_add<F: Field>(ring: &RingRef<F>, a: &[Term<F>], b: &[Term<F>]) -> Vec<Term<F>> {
    let f = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp(&a[i].1, &b[j].1) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let s = f.add(&a[i].0, &b[j].0);
                if !f.is_zero(&s) {
                    out.push((s, a[i].1));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `a - c * m * b` on sorted term lists.
pub(crate) fn sub_mul<F: Field>(
    ring: &RingRef<F>,
    a: &[Term<F>],
    c: &F::Elem,
    m: &Monomial,
    b: &[Term<F>],
) -> Vec<Term<F>> {
    let f = ring.field();
    let negc = f.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<(F::Elem, Monomial)> = None;
    loop {
        if bj.is_none() && j < b.len() {
            bj = Some((f.mul(&b[j].0, &negc), b[j].1.mul(m)));
        }
        match (i < a.len(), &bj) {
            (false, None) => break,
            (true, None) => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            (false, Some(_)) => {
                out.push(bj.take().unwrap());
                j += 1;
            }
            (true, Some((bc, bm))) => match ring.cmp(&a[i].1, bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bj.take().unwrap());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&a[i].0, bc);
                    if !f.is_zero(&s) {
                        out.push((s, a[i].1));
                    }
                    i += 1;
                    j += 1;
                    bj = None;
                }
            },
        }
    }
    out
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let names = self.ring.var_names();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let s = field.format(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", m.format_with(names))?;
            } else {
                write!(f, "{mag}*{}", m.format_with(names))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a, F: Field> Add<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<'a, F: Field> Sub<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<'a, F: Field> Mul<&'a Polynomial<F>> for &'a Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}
