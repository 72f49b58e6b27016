//! Reduced Gröbner bases (Buchberger with Gebauer–Möller pair elimination)
//! and ideals with a cached basis.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ring::{
    is_groebner_set, normal_form, sub_mul, Field, Monomial, MonomialOrder, Polynomial, RingRef,
    Term,
};

/// Counters from one Buchberger run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
}

/// A reduced Gröbner basis: monic, sorted by decreasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    polys: Vec<Polynomial<F>>,
    stats: GbStats,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| *p.leading_monomial().unwrap())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(f, &self.polys)
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_unit()
    }

    /// Re-checks Buchberger's criterion on the stored basis.
    pub fn certify(&self) -> bool {
        is_groebner_set(&self.polys)
    }
}

struct Elem<F: Field> {
    terms: Vec<Term<F>>,
    lead: Monomial,
    mask: u32,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<F: Field> {
    ring: RingRef<F>,
    basis: Vec<Elem<F>>,
    pairs: Vec<Pair>,
    stats: GbStats,
}

impl<F: Field> State<F> {
    fn reduce(&self, mut p: Vec<Term<F>>) -> Vec<Term<F>> {
        let ring = &self.ring;
        let mut rem = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let m = p[start].1;
            let mm = m.support_mask();
            let hit = self
                .basis
                .iter()
                .find(|e| e.active && e.mask & !mm == 0 && e.lead.divides(&m));
            match hit {
                Some(e) => {
                    // basis elements are monic
                    let c = p[start].0.clone();
                    let qm = m.div(&e.lead).unwrap();
                    p = sub_mul(ring, &p[start + 1..], &c, &qm, &e.terms[1..]);
                    start = 0;
                }
                None => {
                    rem.push(p[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    fn insert(&mut self, terms: Vec<Term<F>>, sugar: u32) {
        let lead = terms[0].1;
        let h = self.basis.len();
        self.basis.push(Elem {
            mask: lead.support_mask(),
            terms,
            lead,
            sugar,
            active: true,
        });

        // Gebauer–Möller: new pairs (h, g)
        let cands: Vec<(usize, Monomial)> = (0..h)
            .filter(|&g| self.basis[g].active)
            .map(|g| (g, lead.lcm(&self.basis[g].lead)))
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, &(g, l)) in cands.iter().enumerate() {
            let coprime = lead.is_coprime(&self.basis[g].lead);
            let dominated = !coprime
                && (cands[k + 1..].iter().any(|(_, l2)| l2.divides(&l))
                    || kept.iter().any(|(_, l2, _)| l2.divides(&l)));
            if !dominated {
                kept.push((g, l, coprime));
            }
        }

        // drop old pairs made redundant by h
        let basis = &self.basis;
        self.pairs.retain(|p| {
            !(lead.divides(&p.lcm)
                && basis[p.i].lead.lcm(&lead) != p.lcm
                && basis[p.j].lead.lcm(&lead) != p.lcm)
        });

        for (g, l, coprime) in kept {
            if coprime {
                continue;
            }
            let eg = &self.basis[g];
            let eh = &self.basis[h];
            let sugar = (eg.sugar + l.degree() - eg.lead.degree())
                .max(eh.sugar + l.degree() - eh.lead.degree());
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm: l,
                sugar,
            });
        }

        for g in 0..h {
            if self.basis[g].active && lead.divides(&self.basis[g].lead) {
                self.basis[g].active = false;
            }
        }
    }

    fn select(&self) -> usize {
        let ring = &self.ring;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then(a.sugar.cmp(&b.sugar))
                .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                .then(a.j.cmp(&b.j))
                .then(a.i.cmp(&b.i));
            if ord == Ordering::Less {
                best = k;
            }
        }
        best
    }

    fn spoly(&self, p: &Pair) -> Vec<Term<F>> {
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let one = self.ring.field().one();
        let ma = p.lcm.div(&a.lead).unwrap();
        let mb = p.lcm.div(&b.lead).unwrap();
        let ta: Vec<Term<F>> = a.terms[1..]
            .iter()
            .map(|(c, m)| (c.clone(), m.mul(&ma)))
            .collect();
        sub_mul(&self.ring, &ta, &one, &mb, &b.terms[1..])
    }
}

fn make_monic<F: Field>(ring: &RingRef<F>, mut t: Vec<Term<F>>) -> Vec<Term<F>> {
    if let Some((lc, _)) = t.first() {
        let f = ring.field();
        if !f.is_one(lc) {
            let inv = f.inv(lc).unwrap();
            for (c, _) in t.iter_mut() {
                *c = f.mul(c, &inv);
            }
        }
    }
    t
}

/// Mutual reduction of a generator list until no term of any element is
/// divisible by the leading monomial of another. Output is monic.
pub fn interreduce<F: Field>(ring: &RingRef<F>, polys: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut cur: Vec<Polynomial<F>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    loop {
        cur.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        cur.dedup();
        let mut changed = false;
        let mut i = 0;
        while i < cur.len() {
            let others: Vec<Polynomial<F>> = cur
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = normal_form(&cur[i], &others).monic();
            if r != cur[i] {
                changed = true;
                if r.is_zero() {
                    cur.remove(i);
                    continue;
                }
                cur[i] = r;
            }
            i += 1;
        }
        if !changed {
            return cur;
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under the ring's
/// order. Deterministic in `(gens, order)`.
pub fn groebner_basis<F: Field>(ring: &RingRef<F>, gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    let inputs = interreduce(ring, gens);
    let mut st = State {
        ring: ring.clone(),
        basis: Vec::new(),
        pairs: Vec::new(),
        stats: GbStats::default(),
    };
    if inputs.iter().any(|p| p.is_unit()) {
        return GroebnerBasis {
            ring: ring.clone(),
            polys: vec![Polynomial::one(ring)],
            stats: st.stats,
        };
    }
    for p in inputs {
        let sugar = p.degree().unwrap();
        st.insert(p.into_terms(), sugar);
    }
    while !st.pairs.is_empty() {
        let k = st.select();
        let pair = st.pairs.swap_remove(k);
        st.stats.pairs_processed += 1;
        let s = st.spoly(&pair);
        let r = st.reduce(s);
        if r.is_empty() {
            st.stats.zero_reductions += 1;
            continue;
        }
        let r = make_monic(ring, r);
        if r[0].1.is_one() {
            return GroebnerBasis {
                ring: ring.clone(),
                polys: vec![Polynomial::one(ring)],
                stats: st.stats,
            };
        }
        st.insert(r, pair.sugar);
    }

    // inter-reduce the minimal basis
    let active: Vec<usize> = (0..st.basis.len())
        .filter(|&i| st.basis[i].active)
        .collect();
    let mut out = Vec::with_capacity(active.len());
    for &i in &active {
        let lead = st.basis[i].lead;
        st.basis[i].active = false;
        let tail = st.reduce(st.basis[i].terms[1..].to_vec());
        st.basis[i].active = true;
        let mut terms = Vec::with_capacity(tail.len() + 1);
        terms.push((ring.field().one(), lead));
        terms.extend(tail);
        out.push(Polynomial::from_terms(ring, terms));
    }
    out.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    GroebnerBasis {
        ring: ring.clone(),
        polys: out,
        stats: st.stats,
    }
}

/// Buchberger's algorithm on the generators of `ideal` (uncached).
pub fn buchberger<F: Field>(ideal: &Ideal<F>) -> GroebnerBasis<F> {
    groebner_basis(&ideal.ring, &ideal.gens)
}

/// A homogeneous or inhomogeneous ideal given by generators, with its
/// reduced Gröbner basis (for the ring's order) computed on first use.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Arc<GroebnerBasis<F>>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if !(Arc::ptr_eq(g.ring(), ring) || **g.ring() == **ring) {
                return Err(Error::RingMismatch);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
            gb: OnceLock::new(),
        }
    }

    /// The ideal generated by the variables with the given indices.
    pub fn variables(ring: &RingRef<F>, idx: &[usize]) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: idx.iter().map(|&i| ring.var(i)).collect(),
            gb: OnceLock::new(),
        }
    }

    /// The irrelevant ideal `(X_0, ..., X_{N-1})`.
    pub fn irrelevant(ring: &RingRef<F>) -> Self {
        let idx: Vec<usize> = (0..ring.nvars()).collect();
        Self::variables(ring, &idx)
    }

    pub fn parse(ring: &RingRef<F>, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn groebner(&self) -> Arc<GroebnerBasis<F>> {
        self.gb.get_or_init(|| Arc::new(buchberger(self))).clone()
    }

    /// Ideal generated by its own reduced Gröbner basis (cache carried over).
    pub fn from_groebner(&self) -> Self {
        let gb = self.groebner();
        let out = Ideal {
            ring: self.ring.clone(),
            gens: gb.polys().to_vec(),
            gb: OnceLock::new(),
        };
        let _ = out.gb.set(gb);
        out
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        member(f, self)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (reduced Gröbner bases coincide).
    pub fn same_as(&self, other: &Ideal<F>) -> bool {
        let (a, b) = (self.groebner(), other.groebner());
        a.polys() == b.polys()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Degrees of the generators as given (homogeneous ideals).
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.gens.iter().filter_map(|g| g.degree()).collect()
    }

    /// The same generators in the same variables under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        let ring = self.ring.with_order(order)?;
        Ok(Ideal {
            gens: self.gens.iter().map(|g| g.reorder(&ring)).collect(),
            ring,
            gb: OnceLock::new(),
        })
    }

    /// Moves the ideal into `target` along a variable map (see
    /// [`Polynomial::map_to`]).
    pub fn map_to(&self, target: &RingRef<F>, map: &[Option<usize>]) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_to(target, map))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Ideal membership via the reduced Gröbner basis.
pub fn member<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> bool {
    if f.is_zero() {
        return true;
    }
    ideal.groebner().normal_form(f).is_zero()
}
