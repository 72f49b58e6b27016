//! Ideal arithmetic: sums, products, elimination, intersection, colon
//! ideals and saturation.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Field, Monomial, MonomialOrder, PolyRing, Polynomial, RingRef};

fn check_same<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<()> {
    if std::sync::Arc::ptr_eq(i.ring(), j.ring()) || **i.ring() == **j.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

pub fn sum<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same(i, j)?;
    let mut gens = i.gens().to_vec();
    gens.extend(j.gens().iter().cloned());
    Ideal::new(i.ring(), gens)
}

pub fn product<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same(i, j)?;
    let mut gens = Vec::with_capacity(i.gens().len() * j.gens().len());
    for a in i.gens() {
        for b in j.gens() {
            gens.push(a * b);
        }
    }
    Ideal::new(i.ring(), gens)
}

fn fresh_name(taken: &[String], stem: &str) -> String {
    let mut k = 0;
    loop {
        let name = format!("{stem}{k}");
        if !taken.contains(&name) {
            return name;
        }
        k += 1;
    }
}

/// `I ∩ k[remaining variables]`, returned in the ring of `i`.
pub fn eliminate<F: Field>(i: &Ideal<F>, vars: &[usize]) -> Result<Ideal<F>> {
    let ring = i.ring().clone();
    let n = ring.nvars();
    if vars.iter().any(|&v| v >= n) {
        return Err(Error::Arity(format!(
            "cannot eliminate a variable index >= {n}"
        )));
    }
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    for v in 0..n {
        if vars.contains(&v) {
            perm.push(v);
        }
    }
    let k = perm.len();
    for v in 0..n {
        if !vars.contains(&v) {
            perm.push(v);
        }
    }
    let names = perm.iter().map(|&v| ring.var_names()[v].clone()).collect();
    let elim_ring = ring.with_vars(names, MonomialOrder::Block(k))?;
    let mut fwd = vec![None; n];
    for (pos, &v) in perm.iter().enumerate() {
        fwd[v] = Some(pos);
    }
    let moved = i.map_to(&elim_ring, &fwd)?;
    let gb = moved.groebner();
    let mut back = vec![None; n];
    for (pos, &v) in perm.iter().enumerate() {
        back[pos] = Some(v);
    }
    let mut gens = Vec::new();
    for g in gb.polys() {
        if g.leading_monomial().unwrap().partial_degree(0..k) == 0 {
            gens.push(g.map_to(&ring, &back)?);
        }
    }
    Ideal::new(&ring, gens)
}

/// Eliminates `vars` and moves the result into `target`, whose variables
/// are the remaining ones in their original relative order.
pub fn eliminate_into<F: Field>(
    i: &Ideal<F>,
    vars: &[usize],
    target: &RingRef<F>,
) -> Result<Ideal<F>> {
    let e = eliminate(i, vars)?;
    let n = i.ring().nvars();
    let mut map = vec![None; n];
    let mut pos = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if !vars.contains(&v) {
            *slot = Some(pos);
            pos += 1;
        }
    }
    if pos != target.nvars() {
        return Err(Error::Arity(format!(
            "target ring has {} variables, expected {pos}",
            target.nvars()
        )));
    }
    e.map_to(target, &map)
}

/// Ring with one extra variable in front; returns it with the embedding map.
fn extend_front<F: Field>(
    ring: &RingRef<F>,
    stem: &str,
) -> Result<(RingRef<F>, Vec<Option<usize>>)> {
    let mut names = vec![fresh_name(ring.var_names(), stem)];
    names.extend(ring.var_names().iter().cloned());
    let big = ring.with_vars(names, MonomialOrder::Block(1))?;
    let map = (0..ring.nvars()).map(|v| Some(v + 1)).collect();
    Ok((big, map))
}

fn drop_front<F: Field>(big: &Ideal<F>, ring: &RingRef<F>) -> Result<Ideal<F>> {
    let gb = big.groebner();
    let mut map = vec![None; big.ring().nvars()];
    for (v, slot) in map.iter_mut().enumerate().skip(1) {
        *slot = Some(v - 1);
    }
    let mut gens = Vec::new();
    for g in gb.polys() {
        if g.leading_monomial().unwrap().exp(0) == 0 {
            gens.push(g.map_to(ring, &map)?);
        }
    }
    Ideal::new(ring, gens)
}

/// `I ∩ J` as `(tI + (1-t)J) ∩ A`.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same(i, j)?;
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if i.is_unit() {
        return Ok(j.clone());
    }
    if j.is_unit() {
        return Ok(i.clone());
    }
    let (big, map) = extend_front(ring, "T")?;
    let t = big.var(0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for g in i.gens() {
        gens.push(&t * &g.map_to(&big, &map)?);
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.map_to(&big, &map)?);
    }
    drop_front(&Ideal::new(&big, gens)?, ring)
}

/// Intersection of a non-empty list, skipping repeated components.
pub fn intersect_all<F: Field>(ideals: &[Ideal<F>]) -> Result<Ideal<F>> {
    let mut uniq: Vec<&Ideal<F>> = Vec::new();
    for i in ideals {
        if !uniq.iter().any(|u| u.same_as(i)) {
            uniq.push(i);
        }
    }
    let Some((first, rest)) = uniq.split_first() else {
        return Err(Error::Precondition(
            "intersection of an empty family".into(),
        ));
    };
    let mut acc = (*first).clone();
    for i in rest {
        if i.contains_ideal(&acc) {
            continue;
        }
        acc = if acc.contains_ideal(i) {
            (*i).clone()
        } else {
            intersect(&acc, i)?
        };
    }
    Ok(acc)
}

/// Linear automorphism `phi` with `phi(l) = X_{N-1}` and its inverse, as
/// variable images.
fn straighten<F: Field>(
    ring: &RingRef<F>,
    l: &Polynomial<F>,
) -> Option<(Vec<Polynomial<F>>, Vec<Polynomial<F>>)> {
    let c = l.linear_coefficients()?;
    let field = ring.field();
    let n = ring.nvars();
    let last = n - 1;
    let k = (0..n).rev().find(|&i| !field.is_zero(&c[i]))?;
    let mut phi: Vec<Polynomial<F>> = (0..n).map(|i| ring.var(i)).collect();
    let mut inv: Vec<Polynomial<F>> = phi.clone();
    let ck_inv = field.inv(&c[k]).unwrap();
    let mut img = ring.var(last);
    for i in (0..n).filter(|&i| i != k) {
        if !field.is_zero(&c[i]) {
            img = &img - &ring.var(i).scale(&c[i]);
        }
    }
    phi[k] = img.scale(&ck_inv);
    inv[last] = l.clone();
    if k != last {
        phi[last] = ring.var(k);
        inv[k] = ring.var(last);
    }
    Some((phi, inv))
}

/// Grevlex basis of `phi(I)` where `phi` sends the linear form `l` to the
/// last variable, with the images undoing `phi`.
#[allow(clippy::type_complexity)]
fn straightened_basis<F: Field>(
    i: &Ideal<F>,
    l: &Polynomial<F>,
) -> Result<
    Option<(
        RingRef<F>,
        std::sync::Arc<crate::groebner::GroebnerBasis<F>>,
        Vec<Polynomial<F>>,
    )>,
> {
    let ring = i.ring();
    if !i.is_homogeneous() {
        return Ok(None);
    }
    let Some((phi, inv)) = straighten(ring, l) else {
        return Ok(None);
    };
    let grev = if *ring.order() == MonomialOrder::Grevlex {
        ring.clone()
    } else {
        ring.with_order(MonomialOrder::Grevlex)?
    };
    let phi_g: Vec<Polynomial<F>> = phi.iter().map(|p| p.reorder(&grev)).collect();
    let moved = Ideal::new(
        &grev,
        i.gens()
            .iter()
            .map(|g| g.reorder(&grev).substitute(&phi_g))
            .collect(),
    )?;
    let gb = moved.groebner();
    Ok(Some((grev, gb, inv)))
}

/// For a homogeneous ideal and a linear form: the generators of `I : l^e`
/// (`e = None` meaning `l^∞`), read off a reverse-lexicographic basis after
/// moving `l` to the last variable.
fn colon_linear<F: Field>(
    i: &Ideal<F>,
    l: &Polynomial<F>,
    e: Option<u32>,
) -> Result<Option<Ideal<F>>> {
    let Some((grev, gb, inv)) = straightened_basis(i, l)? else {
        return Ok(None);
    };
    unstraighten(i.ring(), &grev, &gb, &inv, e).map(Some)
}

fn unstraighten<F: Field>(
    ring: &RingRef<F>,
    grev: &RingRef<F>,
    gb: &crate::groebner::GroebnerBasis<F>,
    inv: &[Polynomial<F>],
    e: Option<u32>,
) -> Result<Ideal<F>> {
    let last = ring.nvars() - 1;
    let mut gens = Vec::with_capacity(gb.len());
    for g in gb.polys() {
        let c = g.var_content(last);
        let take = e.map_or(c, |e| c.min(e));
        let q = if take == 0 {
            g.clone()
        } else {
            let m = Monomial::var_power(ring.nvars(), last, take);
            let terms = g
                .terms()
                .iter()
                .map(|(a, t)| (a.clone(), t.div(&m).unwrap()))
                .collect();
            Polynomial::from_terms(grev, terms)
        };
        gens.push(
            q.substitute(&inv.iter().map(|p| p.reorder(grev)).collect::<Vec<_>>())
                .reorder(ring),
        );
    }
    Ideal::new(ring, gens)
}

/// `I : f`.
pub fn colon<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    if !(std::sync::Arc::ptr_eq(f.ring(), ring) || **f.ring() == **ring) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || i.contains(f) {
        return Ok(Ideal::unit(ring));
    }
    if f.is_unit() {
        return Ok(i.clone());
    }
    if let Some(out) = colon_linear(i, f, Some(1))? {
        return Ok(out);
    }
    let cap = intersect(i, &Ideal::new(ring, vec![f.clone()])?)?;
    let mut gens = Vec::with_capacity(cap.gens().len());
    for g in cap.gens() {
        gens.push(
            g.div_exact(f)
                .ok_or_else(|| Error::Internal("colon: generator not divisible".into()))?,
        );
    }
    Ideal::new(ring, gens)
}

/// `I : J = ∩_j (I : g_j)`.
pub fn colon_ideal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same(i, j)?;
    if j.is_zero() {
        return Ok(Ideal::unit(i.ring()));
    }
    let parts = j
        .gens()
        .iter()
        .map(|g| colon(i, g))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(&parts)
}

/// `I : f^∞` together with the least `q` with `I : f^q = I : f^{q+1}`.
/// For a linear form and a homogeneous ideal both come from one
/// straightened basis: `{g / x^min(c_g, e)}` is a basis of `I : x^e`, so
/// `q` is the least `e` whose leading monomials already generate the
/// saturated initial ideal.
pub fn saturate<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<(Ideal<F>, u32)> {
    if !f.is_zero() && !f.is_unit() {
        if let Some((grev, gb, inv)) = straightened_basis(i, f)? {
            let last = i.ring().nvars() - 1;
            let lead = |e: u32| -> Vec<Monomial> {
                gb.polys()
                    .iter()
                    .map(|g| {
                        let m = *g.leading_monomial().unwrap();
                        let take = g.var_content(last).min(e);
                        m.div(&Monomial::var_power(m.nvars(), last, take)).unwrap()
                    })
                    .collect()
            };
            let top = gb
                .polys()
                .iter()
                .map(|g| g.var_content(last))
                .max()
                .unwrap_or(0);
            let full = lead(top);
            let q = (0..=top)
                .find(|&e| {
                    let part = lead(e);
                    full.iter().all(|m| part.iter().any(|p| p.divides(m)))
                })
                .unwrap_or(top);
            return Ok((unstraighten(i.ring(), &grev, &gb, &inv, None)?, q));
        }
    }
    saturate_by_iteration(i, f)
}

/// Same as [`saturate`], by iterating `colon` until it stabilises.
pub fn saturate_by_iteration<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<(Ideal<F>, u32)> {
    let mut cur = i.clone();
    let mut q = 0;
    loop {
        let next = colon(&cur, f)?;
        if next.same_as(&cur) {
            return Ok((cur, q));
        }
        cur = next;
        q += 1;
    }
}

/// `I : f^∞` in one step: straightening for linear forms of a homogeneous
/// ideal, `(I + (1 - y f)) ∩ A` otherwise.
pub fn saturate_infinity<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    let ring = i.ring();
    if f.is_zero() {
        return Ok(Ideal::unit(ring));
    }
    if f.is_unit() {
        return Ok(i.clone());
    }
    if let Some(out) = colon_linear(i, f, None)? {
        return Ok(out);
    }
    let (big, map) = extend_front(ring, "Y")?;
    let y = big.var(0);
    let mut gens: Vec<Polynomial<F>> = i
        .gens()
        .iter()
        .map(|g| g.map_to(&big, &map))
        .collect::<Result<_>>()?;
    gens.push(&Polynomial::one(&big) - &(&y * &f.map_to(&big, &map)?));
    drop_front(&Ideal::new(&big, gens)?, ring)
}

/// `I : J^∞ = ∩_j (I : g_j^∞)`.
pub fn saturate_ideal<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check_same(i, j)?;
    if j.is_zero() {
        return Ok(Ideal::unit(i.ring()));
    }
    let parts = j
        .gens()
        .iter()
        .map(|g| saturate_infinity(i, g))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(&parts)
}

/// `I : J^∞` as the stable value of `I ⊆ I:J ⊆ I:J^2 ⊆ ...`, with the
/// number of strict steps.
pub fn saturate_ideal_chain<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<(Ideal<F>, u32)> {
    let mut cur = i.clone();
    let mut q = 0;
    loop {
        let next = colon_ideal(&cur, j)?;
        if next.same_as(&cur) {
            return Ok((cur, q));
        }
        cur = next;
        q += 1;
    }
}

/// `I^sat = I : (X_0, ..., X_{N-1})^∞`.
pub fn saturation<F: Field>(i: &Ideal<F>) -> Result<Ideal<F>> {
    saturate_ideal(i, &Ideal::irrelevant(i.ring()))
}

/// True when `I = I^sat`.
pub fn is_saturated<F: Field>(i: &Ideal<F>) -> Result<bool> {
    Ok(saturation(i)?.same_as(i))
}

/// The quantities compared by the saturation exponent bound for a linear
/// form `l`: `q` is the least exponent with `I : l^q = I^sat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationExponentCheck {
    /// `I ≠ I : m` and `(I : l) / I` has finite length.
    pub hypotheses_hold: bool,
    pub q: u32,
    /// `None` stands for `-∞`.
    pub a0: Option<i64>,
    pub indeg_sat: Option<u32>,
    pub reg: i64,
}

impl SaturationExponentCheck {
    /// `a_0(A/I) - indeg(I^sat) + 1`.
    pub fn middle(&self) -> Option<i64> {
        Some(self.a0? - self.indeg_sat? as i64 + 1)
    }

    /// `reg(I) - indeg(I^sat)`.
    pub fn right(&self) -> Option<i64> {
        Some(self.reg - self.indeg_sat? as i64)
    }

    /// `q ≤ middle ≤ right`; vacuously true when the hypotheses fail.
    pub fn holds(&self) -> bool {
        if !self.hypotheses_hold {
            return true;
        }
        match (self.middle(), self.right()) {
            (Some(mid), Some(r)) => self.q as i64 <= mid && mid <= r,
            _ => false,
        }
    }
}

/// Computes `q`, `a_0(A/I)`, `indeg(I^sat)` and `reg(I)` for a homogeneous
/// ideal and a linear form.
pub fn saturation_exponent_bound_check<F: Field>(
    i: &Ideal<F>,
    l: &Polynomial<F>,
) -> Result<SaturationExponentCheck> {
    i.require_homogeneous()?;
    let a0 = crate::resolution::a0(i)?;
    let reg = crate::resolution::regularity(i)?;
    saturation_exponent_check_with(i, l, a0, reg)
}

/// As [`saturation_exponent_bound_check`] with `a_0(A/I)` and `reg(I)`
/// already known.
pub fn saturation_exponent_check_with<F: Field>(
    i: &Ideal<F>,
    l: &Polynomial<F>,
    a0: Option<i64>,
    reg: i64,
) -> Result<SaturationExponentCheck> {
    if l.linear_coefficients().is_none() || l.is_zero() {
        return Err(Error::Precondition(format!("{l} is not a linear form")));
    }
    let sat = saturation(i)?;
    let not_saturated = !sat.same_as(i);
    let finite_colon = crate::hilbert::finite_length(i, &colon(i, l)?).is_ok();
    let (by_l, q) = saturate(i, l)?;
    if finite_colon && !by_l.same_as(&sat) {
        return Err(Error::Internal(
            "I : l^∞ differs from I^sat although (I:l)/I has finite length".into(),
        ));
    }
    Ok(SaturationExponentCheck {
        hypotheses_hold: not_saturated && finite_colon,
        q,
        a0,
        indeg_sat: crate::hilbert::indeg(&sat),
        reg,
    })
}

/// Polynomial ring on `names` over the field of `ring`, grevlex.
pub fn sub_ring<F: Field>(ring: &RingRef<F>, names: Vec<String>) -> Result<RingRef<F>> {
    PolyRing::new(ring.field().clone(), names, MonomialOrder::Grevlex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rationals};

    fn ring(n: usize) -> RingRef<PrimeField> {
        PolyRing::standard(PrimeField::default(), n)
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = ring(3);
        let a = Ideal::parse(&r, &["X0"]).unwrap();
        let b = Ideal::parse(&r, &["X1"]).unwrap();
        let c = intersect(&a, &b).unwrap();
        assert!(c.same_as(&Ideal::parse(&r, &["X0*X1"]).unwrap()));
    }

    #[test]
    fn colon_by_variable_and_by_linear_form() {
        let r = ring(3);
        let i = Ideal::parse(&r, &["X0^2*X1", "X0*X1^2"]).unwrap();
        assert!(colon(&i, &r.var(0))
            .unwrap()
            .same_as(&Ideal::parse(&r, &["X0*X1", "X1^2"]).unwrap()));
        let l = r.parse("X0 + X1").unwrap();
        let i = Ideal::new(
            &r,
            vec![&l * &r.parse("X2^2").unwrap(), r.parse("X0^3").unwrap()],
        )
        .unwrap();
        let fast = colon(&i, &l).unwrap();
        let cap = intersect(&i, &Ideal::new(&r, vec![l.clone()]).unwrap()).unwrap();
        let slow = Ideal::new(
            &r,
            cap.gens()
                .iter()
                .map(|g| g.div_exact(&l).unwrap())
                .collect(),
        )
        .unwrap();
        assert!(fast.same_as(&slow));
    }

    #[test]
    fn saturating_an_embedded_point() {
        let r = ring(3);
        // (X0) ∩ (X0, X1, X2)^3 has saturation (X0)
        let i = Ideal::parse(&r, &["X0^2", "X0*X1", "X0*X2"]).unwrap();
        let sat = saturation(&i).unwrap();
        assert!(sat.same_as(&Ideal::parse(&r, &["X0"]).unwrap()));
        let (chain, q) = saturate_ideal_chain(&i, &Ideal::irrelevant(&r)).unwrap();
        assert!(chain.same_as(&sat));
        assert_eq!(q, 1);
    }

    #[test]
    fn rabinowitsch_matches_chain_for_quadric() {
        let r = PolyRing::standard(Rationals, 3);
        let f = r.parse("X0^2 + X1*X2").unwrap();
        let i = Ideal::new(&r, vec![&f.pow(2) * &r.var(1), &f * &r.var(2).pow(3)]).unwrap();
        let direct = saturate_infinity(&i, &f).unwrap();
        let (chain, q) = saturate(&i, &f).unwrap();
        assert_eq!(saturate_by_iteration(&i, &f).unwrap().1, q);
        assert!(direct.same_as(&chain));
        assert_eq!(q, 2);
        assert!(direct.same_as(&Ideal::parse(&r, &["X1", "X2^3"]).unwrap()));
    }

    #[test]
    fn elimination_of_the_twisted_cubic() {
        let r = PolyRing::new(
            PrimeField::default(),
            ["s", "t", "X0", "X1", "X2", "X3"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let i = Ideal::parse(&r, &["X0 - s^3", "X1 - s^2*t", "X2 - s*t^2", "X3 - t^3"]).unwrap();
        let target = ring(4);
        let e = eliminate_into(&i, &[0, 1], &target).unwrap();
        let minors =
            Ideal::parse(&target, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]).unwrap();
        assert!(e.same_as(&minors));
    }

    #[test]
    fn saturation_exponent_of_a_fat_embedded_point() {
        let r = PolyRing::standard(Rationals, 2);
        let i = Ideal::parse(&r, &["X0^2", "X0*X1"]).unwrap();
        let c = saturation_exponent_bound_check(&i, &r.var(1)).unwrap();
        assert!(c.hypotheses_hold);
        assert_eq!((c.q, c.a0, c.indeg_sat, c.reg), (1, Some(1), Some(1), 2));
        assert_eq!((c.middle(), c.right()), (Some(1), Some(1)));
        assert!(c.holds());
        let line = Ideal::parse(&r, &["X0"]).unwrap();
        let c = saturation_exponent_bound_check(&line, &r.parse("X0 + 3*X1").unwrap()).unwrap();
        assert!(!c.hypotheses_hold && c.holds());
        assert_eq!(c.q, 0);
    }

    #[test]
    fn linear_saturation_index_matches_iteration() {
        let r = ring(3);
        let l = r.parse("X0 + 2*X1 - X2").unwrap();
        let cases = [
            vec!["X0^2", "X0*X1", "X0*X2^2"],
            vec!["X0^3", "X0^2*X1", "X0*X1^2*X2"],
            vec!["X0*X1", "X1*X2"],
            vec!["X0 + 2*X1 - X2"],
        ];
        for gens in cases {
            let i = Ideal::parse(&r, &gens).unwrap();
            let (fast, q) = saturate(&i, &l).unwrap();
            let (slow, q_slow) = saturate_by_iteration(&i, &l).unwrap();
            assert!(fast.same_as(&slow), "{gens:?}");
            assert_eq!(q, q_slow, "{gens:?}");
        }
    }
}
