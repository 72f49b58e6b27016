//! Monomial curves `(1 : t : t^{a_2} : ...)`, the complete intersections
//! cut out by the binomials `X_i^{n+1} - X_0 X_{i+1}^n`, their residuals and
//! the almost complete intersections obtained by adding one extra form.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::dim_deg;
use crate::idealops::{eliminate_into, saturate_ideal, saturate_infinity, sum};
use crate::linalg::rref;
use crate::ring::{Field, Monomial, MonomialOrder, PolyRing, Polynomial, RingRef};

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponents `(0, 1, n^m, n^{m-1}(n+1), ..., (n+1)^m)`; without the last
/// entry when `primed` is false.
pub fn curve_exponents(m: usize, n: usize, primed: bool) -> Vec<u32> {
    let mut e = vec![0, 1];
    for i in 2..=m + 2 {
        e.push((n.pow((m + 2 - i) as u32) * (n + 1).pow((i - 2) as u32)) as u32);
    }
    if !primed {
        e.pop();
    }
    e
}

fn check_exponents(exps: &[u32]) -> Result<()> {
    if exps.len() < 2 || exps[0] != 0 || exps[1] != 1 {
        return Err(Error::Construction(
            "curve exponents must start with 0, 1".into(),
        ));
    }
    for (i, e) in exps.iter().enumerate() {
        if exps[..i].contains(e) {
            return Err(Error::Construction(format!("repeated curve exponent {e}")));
        }
    }
    if exps.len() > crate::ring::MAX_VARS {
        return Err(Error::Arity(format!(
            "{} variables exceed the supported maximum",
            exps.len()
        )));
    }
    Ok(())
}

/// Ideal of the curve `(s^D : s^{D-1} t : ... : s^{D-a_i} t^{a_i} : ...)` in
/// `X_0..X_{N-1}`, from the lattice basis `e_i - a_i e_1 + (a_i - 1) e_0`
/// of the relations, saturated by every variable.
pub fn curve_ideal<F: Field>(field: F, exps: &[u32]) -> Result<Ideal<F>> {
    check_exponents(exps)?;
    let ring = PolyRing::standard(field, exps.len());
    let mut gens = Vec::new();
    for (i, &a) in exps.iter().enumerate().skip(2) {
        let mut lhs = vec![0u32; exps.len()];
        lhs[i] = 1;
        lhs[0] = a - 1;
        let rhs = Monomial::var_power(exps.len(), 1, a);
        let one = ring.field().one();
        let p = &Polynomial::monomial(&ring, one.clone(), Monomial::from_exponents(&lhs)?)
            - &Polynomial::monomial(&ring, one, rhs);
        gens.push(p);
    }
    let mut cur = Ideal::new(&ring, gens)?;
    for v in 0..exps.len() {
        cur = saturate_infinity(&cur, &ring.var(v))?;
    }
    Ok(cur.from_groebner())
}

/// The same ideal by eliminating `s, t` from `X_i - s^{D-a_i} t^{a_i}`
/// and saturating by every variable.
pub fn curve_ideal_by_elimination<F: Field>(field: F, exps: &[u32]) -> Result<Ideal<F>> {
    check_exponents(exps)?;
    let n = exps.len();
    let dmax = *exps.iter().max().unwrap();
    let mut names = vec!["s".to_string(), "t".to_string()];
    names.extend((0..n).map(|i| format!("X{i}")));
    let big = PolyRing::new(field.clone(), names, MonomialOrder::Grevlex)?;
    let mut gens = Vec::new();
    for (i, &a) in exps.iter().enumerate() {
        let mut e = vec![0u32; n + 2];
        e[0] = dmax - a;
        e[1] = a;
        let one = big.field().one();
        gens.push(
            &big.var(i + 2) - &Polynomial::monomial(&big, one, Monomial::from_exponents(&e)?),
        );
    }
    let target = PolyRing::standard(field, n);
    let mut cur = eliminate_into(&Ideal::new(&big, gens)?, &[0, 1], &target)?;
    for v in 0..n {
        cur = saturate_infinity(&cur, &target.var(v))?;
    }
    Ok(cur.from_groebner())
}

/// `P_m = Π_{j even} X_{j+2}^{C(m,j)}`, `Q_m = Π_{j odd} X_{j+2}^{C(m,j)}`.
pub fn pq<F: Field>(ring: &RingRef<F>, m: usize) -> Result<(Polynomial<F>, Polynomial<F>)> {
    if m == 0 || m + 3 > ring.nvars() {
        return Err(Error::Range(format!(
            "P_m, Q_m need 1 <= m <= {}",
            ring.nvars().saturating_sub(3)
        )));
    }
    let mut p = vec![0u32; ring.nvars()];
    let mut q = vec![0u32; ring.nvars()];
    for j in 0..=m {
        let e = binom(m as u64, j as u64) as u32;
        if j % 2 == 0 {
            p[j + 2] = e;
        } else {
            q[j + 2] = e;
        }
    }
    let one = ring.field().one();
    Ok((
        Polynomial::monomial(ring, one.clone(), Monomial::from_exponents(&p)?),
        Polynomial::monomial(ring, one, Monomial::from_exponents(&q)?),
    ))
}

fn check_params(m: usize, n: usize, primed: bool) -> Result<()> {
    let min_m = if primed { 1 } else { 2 };
    if m < min_m || n < 2 {
        return Err(Error::Range(format!(
            "need m >= {min_m} and n >= 2 for the {} family, got m={m}, n={n}",
            if primed { "primed" } else { "unprimed" }
        )));
    }
    let nvars = if primed { m + 3 } else { m + 2 };
    if nvars > crate::ring::MAX_VARS {
        return Err(Error::Range(format!("m={m} needs {nvars} variables")));
    }
    (n as u64)
        .checked_add(1)
        .and_then(|b| b.checked_pow(m as u32))
        .filter(|&v| v < u16::MAX as u64)
        .ok_or_else(|| Error::Range(format!("(n+1)^m too large for m={m}, n={n}")))?;
    Ok(())
}

/// Generators of the complete intersection: `(F'_1, F_2, ..., F_{m+1})`
/// when primed, `(F_1, F_2, ..., F_m)` otherwise.
pub fn ci_forms<F: Field>(
    ring: &RingRef<F>,
    m: usize,
    n: usize,
    primed: bool,
) -> Result<Vec<Polynomial<F>>> {
    check_params(m, n, primed)?;
    let want = if primed { m + 3 } else { m + 2 };
    if ring.nvars() != want {
        return Err(Error::Arity(format!(
            "expected {want} variables, ring has {}",
            ring.nvars()
        )));
    }
    let x = |i: usize| ring.var(i);
    let nn = n as u32;
    let mut out = Vec::new();
    if primed {
        let (p, q) = pq(ring, m)?;
        out.push(if m.is_multiple_of(2) {
            &(&x(0) * &p) - &(&x(1) * &q)
        } else {
            &(&x(1) * &p) - &(&x(0) * &q)
        });
    } else {
        let (p, q) = pq(ring, m - 1)?;
        let (a, b) = (x(0).pow(nn), x(1).pow(nn));
        out.push(if m.is_multiple_of(2) {
            &(&b * &p) - &(&a * &q)
        } else {
            &(&a * &p) - &(&b * &q)
        });
    }
    let last = if primed { m + 1 } else { m };
    for i in 2..=last {
        out.push(&x(i).pow(nn + 1) - &(&x(0) * &x(i + 1).pow(nn)));
    }
    Ok(out)
}

/// `mn + 2^{m-1}` when primed, `mn + 2^{m-2} - 1` otherwise.
pub fn extra_degree(m: usize, n: usize, primed: bool) -> u32 {
    if primed {
        (m * n + (1 << (m - 1))) as u32
    } else {
        (m * n + (1 << (m - 2)) - 1) as u32
    }
}

/// All monomials of degree `d` in `nvars` variables, decreasing in `order`.
pub fn monomials_of_degree(nvars: usize, d: u32, order: &MonomialOrder) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur).unwrap());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// Echelon basis of the degree-`d` piece of a homogeneous ideal, rows
/// indexed by the degree-`d` monomials in decreasing order.
pub fn graded_piece_basis<F: Field>(i: &Ideal<F>, d: u32) -> Vec<Polynomial<F>> {
    let ring = i.ring();
    let field = ring.field();
    let monos = monomials_of_degree(ring.nvars(), d, ring.order());
    let index: std::collections::HashMap<Monomial, usize> =
        monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut rows = Vec::new();
    for g in i.groebner().polys() {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for mult in monomials_of_degree(ring.nvars(), d - e, ring.order()) {
            let mut row = vec![field.zero(); monos.len()];
            for (c, m) in g.terms() {
                row[index[&m.mul(&mult)]] = c.clone();
            }
            rows.push(row);
        }
    }
    rref(field, &mut rows);
    rows.into_iter()
        .map(|row| {
            let terms = row
                .into_iter()
                .zip(&monos)
                .filter(|(c, _)| !field.is_zero(c))
                .map(|(c, m)| (c, *m))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect()
}

/// First element of the echelon basis of `a_d` that is not in `b`.
pub fn extra_form<F: Field>(a: &Ideal<F>, b: &Ideal<F>, d: u32) -> Result<Polynomial<F>> {
    let basis = graded_piece_basis(a, d);
    for f in &basis {
        if !b.contains(f) {
            return Ok(f.clone());
        }
    }
    let cap = basis.iter().filter(|f| b.contains(f)).count();
    Err(Error::Construction(format!(
        "no form of degree {d} in the residual outside the curve ideal: dim a_d = {}, dim (a ∩ b)_d = {cap}",
        basis.len()
    )))
}

/// Every object attached to one parameter choice `(m, n, primed)`.
#[derive(Clone)]
pub struct FamilyInstance<F: Field> {
    m: usize,
    n: usize,
    primed: bool,
    ring: RingRef<F>,
    exponents: Vec<u32>,
    curve: Ideal<F>,
    ci: Ideal<F>,
    residual: Ideal<F>,
    extra: Polynomial<F>,
    almost_ci: Ideal<F>,
    d: u32,
}

impl<F: Field> FamilyInstance<F> {
    pub fn build(field: F, m: usize, n: usize, primed: bool) -> Result<Self> {
        check_params(m, n, primed)?;
        let exponents = curve_exponents(m, n, primed);
        let curve = curve_ideal(field, &exponents)?;
        let ring = curve.ring().clone();
        let forms = ci_forms(&ring, m, n, primed)?;
        for (k, f) in forms.iter().enumerate() {
            if !curve.contains(f) {
                return Err(Error::Construction(format!(
                    "generator {k} ({f}) does not vanish on the curve"
                )));
            }
        }
        let ci = Ideal::new(&ring, forms)?;
        let residual = saturate_ideal(&ci, &curve)?.from_groebner();
        let d = extra_degree(m, n, primed);
        let extra = extra_form(&residual, &curve, d)?;
        let almost_ci = sum(&ci, &Ideal::new(&ring, vec![extra.clone()])?)?;
        let inst = FamilyInstance {
            m,
            n,
            primed,
            ring,
            exponents,
            curve,
            ci,
            residual,
            extra,
            almost_ci,
            d,
        };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        let mut got = self.almost_ci.generator_degrees();
        got.sort_unstable();
        let mut want = self.expected_degrees();
        want.sort_unstable();
        if got != want {
            return Err(Error::Construction(format!(
                "generator degrees {got:?}, expected {want:?}"
            )));
        }
        if !self.residual.contains(&self.extra) || self.curve.contains(&self.extra) {
            return Err(Error::Construction(
                "extra form must lie in the residual and not in the curve ideal".into(),
            ));
        }
        Ok(())
    }

    /// Degrees of the generators of `ℐ`: the complete intersection, then
    /// the extra form.
    pub fn expected_degrees(&self) -> Vec<u32> {
        let (m, n) = (self.m, self.n);
        let mut v = if self.primed {
            let mut v = vec![(1u32 << (m - 1)) + 1];
            v.extend(std::iter::repeat_n(n as u32 + 1, m));
            v
        } else {
            let mut v = vec![(1u32 << (m - 2)) + n as u32];
            v.extend(std::iter::repeat_n(n as u32 + 1, m - 1));
            v
        };
        v.push(self.d);
        v
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn primed(&self) -> bool {
        self.primed
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The curve ideal `b`.
    pub fn curve(&self) -> &Ideal<F> {
        &self.curve
    }

    /// The complete intersection `I`.
    pub fn ci(&self) -> &Ideal<F> {
        &self.ci
    }

    /// The residual `a = I : b^∞`.
    pub fn residual(&self) -> &Ideal<F> {
        &self.residual
    }

    /// The extra form `F`.
    pub fn extra(&self) -> &Polynomial<F> {
        &self.extra
    }

    /// `ℐ = I + (F)`.
    pub fn almost_ci(&self) -> &Ideal<F> {
        &self.almost_ci
    }

    /// Degree of the extra form.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// The two primes supporting the residual: `(X_2, ..., X_{last})` and
    /// `(X_0, X_2, ..., X_{last-1})`.
    pub fn residual_primes(&self) -> (Ideal<F>, Ideal<F>) {
        let last = self.ring.nvars() - 1;
        let j: Vec<usize> = (2..=last).collect();
        let mut k = vec![0];
        k.extend(2..last);
        (
            Ideal::variables(&self.ring, &j),
            Ideal::variables(&self.ring, &k),
        )
    }

    /// `deg(A/b)`: `(n+1)^m` primed, `n(n+1)^{m-1}` otherwise.
    pub fn expected_curve_degree(&self) -> i128 {
        let (m, n) = (self.m as u32, self.n as i128);
        if self.primed {
            (n + 1).pow(m)
        } else {
            n * (n + 1).pow(m - 1)
        }
    }

    /// `codim I` equals the number of generators of `I`.
    pub fn ci_is_complete_intersection(&self) -> bool {
        let (dim, _) = dim_deg(&self.ci);
        dim.map(|d| self.ring.nvars() - d) == Some(self.ci.gens().len())
    }

    pub fn label(&self) -> String {
        format!(
            "{}({},{})",
            if self.primed { "primed" } else { "unprimed" },
            self.m,
            self.n
        )
    }
}

impl<F: Field> fmt::Debug for FamilyInstance<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilyInstance")
            .field("label", &self.label())
            .field("d", &self.d)
            .field("extra", &self.extra.to_string())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealops::intersect;
    use crate::ring::PrimeField;

    #[test]
    fn exponent_lists() {
        assert_eq!(curve_exponents(2, 2, false), vec![0, 1, 4, 6]);
        assert_eq!(curve_exponents(2, 2, true), vec![0, 1, 4, 6, 9]);
        assert_eq!(curve_exponents(1, 3, true), vec![0, 1, 3, 4]);
        assert_eq!(curve_exponents(3, 2, false), vec![0, 1, 8, 12, 18]);
    }

    #[test]
    fn p_and_q() {
        let r = PolyRing::standard(PrimeField::default(), 6);
        let show = |m| {
            let (p, q) = pq(&r, m).unwrap();
            (p.to_string(), q.to_string())
        };
        assert_eq!(show(1), ("X2".into(), "X3".into()));
        assert_eq!(show(2), ("X2*X4".into(), "X3^2".into()));
        assert_eq!(show(3), ("X2*X4^3".into(), "X3^3*X5".into()));
    }

    #[test]
    fn twisted_cubic_two_ways() {
        let f = PrimeField::default();
        let a = curve_ideal(f, &[0, 1, 2, 3]).unwrap();
        let r = a.ring().clone();
        let minors = Ideal::parse(&r, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]).unwrap();
        assert!(a.same_as(&minors));
        assert!(curve_ideal_by_elimination(f, &[0, 1, 2, 3])
            .unwrap()
            .same_as(&minors));
        assert!(curve_ideal(f, &[0, 2, 3]).is_err());
    }

    #[test]
    fn small_forms() {
        let f = PrimeField::default();
        let r = PolyRing::standard(f, 4);
        let forms: Vec<String> = ci_forms(&r, 1, 2, true)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(forms.len(), 2);
        assert_eq!(
            r.parse(&forms[0]).unwrap(),
            r.parse("X1*X2 - X0*X3").unwrap()
        );
        assert_eq!(
            r.parse(&forms[1]).unwrap(),
            r.parse("X2^3 - X0*X3^2").unwrap()
        );
        let forms = ci_forms(&r, 2, 2, false).unwrap();
        assert_eq!(forms[0], r.parse("X1^2*X2 - X0^2*X3").unwrap());
        assert_eq!(forms[1], r.parse("X2^3 - X0*X3^2").unwrap());
        assert!(ci_forms(&r, 1, 2, false).is_err());
    }

    #[test]
    fn instance_2_2() {
        let inst = FamilyInstance::build(PrimeField::default(), 2, 2, false).unwrap();
        assert_eq!(inst.d(), 4);
        let r = inst.ring();
        assert!(inst.curve().contains(&r.parse("X1^4 - X0^3*X2").unwrap()));
        assert_eq!(dim_deg(inst.curve()), (Some(2), 6));
        assert!(inst.ci_is_complete_intersection());
        let back = intersect(inst.curve(), inst.residual()).unwrap();
        assert!(back.same_as(inst.ci()));
        assert_eq!(dim_deg(inst.almost_ci()).0, Some(2));
    }
}
