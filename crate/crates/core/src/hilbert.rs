//! Hilbert series and the numerical invariants read off them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Field, Monomial};

/// Integer polynomial in `t`, coefficient `k` at index `k`, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<i128>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn from_coeffs(mut c: Vec<i128>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly(c)
    }

    /// `1 - t^e`.
    pub fn one_minus_power(e: u32) -> Self {
        let mut c = vec![0; e as usize + 1];
        c[0] += 1;
        c[e as usize] -= 1;
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> i128 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    /// `t^e * self`.
    pub fn shift(&self, e: u32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; e as usize];
        c.extend_from_slice(&self.0);
        IntPoly(c)
    }

    /// Exact quotient by `1 - t`, if it exists.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.eval_one() != 0 {
            return None;
        }
        let mut q = Vec::with_capacity(self.0.len());
        let mut acc = 0;
        for &c in &self.0[..self.0.len().saturating_sub(1)] {
            acc += c;
            q.push(acc);
        }
        Some(Self::from_coeffs(q))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}*t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}*t^{k}")?,
            }
        }
        Ok(())
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then(a.exponents().cmp(b.exponents()))
    });
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    out
}

struct Numerator {
    memo: HashMap<Vec<Monomial>, IntPoly>,
}

impl Numerator {
    fn run(&mut self, gens: Vec<Monomial>) -> IntPoly {
        let gens = minimalize(gens);
        if let Some(v) = self.memo.get(&gens) {
            return v.clone();
        }
        let v = self.compute(&gens);
        self.memo.insert(gens, v.clone());
        v
    }

    fn compute(&mut self, gens: &[Monomial]) -> IntPoly {
        let mut acc = 0u32;
        let mut coprime = true;
        for g in gens {
            let m = g.support_mask();
            if acc & m != 0 {
                coprime = false;
                break;
            }
            acc |= m;
        }
        if coprime {
            return gens.iter().fold(IntPoly::one(), |p, g| {
                p.mul(&IntPoly::one_minus_power(g.degree()))
            });
        }
        // pivot: most frequent variable among the mixed generators
        let n = gens[0].nvars();
        let mixed: Vec<&Monomial> = gens
            .iter()
            .filter(|g| g.support_mask().count_ones() > 1)
            .collect();
        let mut count = vec![0usize; n];
        for g in &mixed {
            for (i, c) in count.iter_mut().enumerate() {
                if g.exp(i) > 0 {
                    *c += 1;
                }
            }
        }
        let var = (0..n)
            .max_by(|&a, &b| count[a].cmp(&count[b]).then(b.cmp(&a)))
            .unwrap();
        let e = mixed
            .iter()
            .map(|g| g.exp(var))
            .filter(|&e| e > 0)
            .min()
            .unwrap();
        let pivot = Monomial::var_power(n, var, e);

        let mut plus: Vec<Monomial> = gens.to_vec();
        plus.push(pivot);
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| g.div(&g.gcd(&pivot)).unwrap())
            .collect();
        let a = self.run(plus);
        let b = self.run(colon);
        a.add(&b.shift(e))
    }
}

/// Numerator of `HS(A/M)` over `(1-t)^N` for a monomial ideal `M`.
pub fn monomial_numerator(gens: &[Monomial]) -> IntPoly {
    if gens.iter().any(|g| g.is_one()) {
        return IntPoly::zero();
    }
    Numerator {
        memo: HashMap::new(),
    }
    .run(gens.to_vec())
}

/// Numerator of `HS(A/I)` over `(1-t)^N`, from the initial ideal.
pub fn hilbert_numerator<F: Field>(i: &Ideal<F>) -> IntPoly {
    monomial_numerator(&i.groebner().leading_monomials())
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// `dim_k (A/I)_mu` from a numerator over `(1-t)^N`.
pub fn series_coefficient(num: &IntPoly, nvars: usize, mu: i64) -> i128 {
    let n = nvars as i128;
    num.coeffs()
        .iter()
        .enumerate()
        .map(|(k, &c)| c * binom(mu as i128 - k as i128 + n - 1, n - 1))
        .sum()
}

/// Hilbert series data of `A/I`.
pub struct HilbertData {
    nvars: usize,
    numerator: IntPoly,
    reduced: IntPoly,
    dim: Option<usize>,
    values: Mutex<BTreeMap<i64, i128>>,
}

impl HilbertData {
    pub fn from_numerator(numerator: IntPoly, nvars: usize) -> Self {
        let (reduced, dim) = if numerator.is_zero() {
            (IntPoly::zero(), None)
        } else {
            let mut h = numerator.clone();
            let mut pole = nvars;
            while let Some(q) = h.div_one_minus_t() {
                h = q;
                pole -= 1;
            }
            (h, Some(pole))
        };
        HilbertData {
            nvars,
            numerator,
            reduced,
            dim,
            values: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn of<F: Field>(i: &Ideal<F>) -> Self {
        Self::from_numerator(hilbert_numerator(i), i.ring().nvars())
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    /// Numerator over `(1-t)^dim`.
    pub fn h_polynomial(&self) -> &IntPoly {
        &self.reduced
    }

    /// Krull dimension of `A/I`; `None` for the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        self.dim
    }

    pub fn codimension(&self) -> Option<usize> {
        self.dim.map(|d| self.nvars - d)
    }

    /// Multiplicity; zero for the unit ideal.
    pub fn degree(&self) -> i128 {
        self.reduced.eval_one()
    }

    pub fn value(&self, mu: i64) -> i128 {
        if mu < 0 {
            return 0;
        }
        let mut memo = self.values.lock().unwrap();
        *memo
            .entry(mu)
            .or_insert_with(|| series_coefficient(&self.numerator, self.nvars, mu))
    }
}

impl fmt::Debug for HilbertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HilbertData")
            .field("numerator", &self.numerator)
            .field("dim", &self.dim)
            .field("degree", &self.degree())
            .finish()
    }
}

/// `(dim A/I, deg A/I)`; dimension `None` marks the unit ideal.
pub fn dim_deg<F: Field>(i: &Ideal<F>) -> (Option<usize>, i128) {
    let h = HilbertData::of(i);
    (h.dimension(), h.degree())
}

/// `dim_k (A/I)_mu`.
pub fn hilbert_function<F: Field>(i: &Ideal<F>, mu: i64) -> i128 {
    if mu < 0 {
        return 0;
    }
    series_coefficient(&hilbert_numerator(i), i.ring().nvars(), mu)
}

/// Least degree of a nonzero element; `None` for the zero ideal.
pub fn indeg<F: Field>(i: &Ideal<F>) -> Option<u32> {
    i.groebner().polys().iter().filter_map(|g| g.degree()).min()
}

/// Length and top nonzero degree of `I_big / I_small`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLength {
    pub length: i128,
    /// `None` when the quotient is zero.
    pub top_degree: Option<usize>,
    pub series: IntPoly,
}

/// `λ(I_big / I_small)` as an exact difference of Hilbert series.
pub fn finite_length<F: Field>(small: &Ideal<F>, big: &Ideal<F>) -> Result<FiniteLength> {
    if !big.contains_ideal(small) {
        return Err(Error::Precondition(
            "finite_length needs I_small ⊆ I_big".into(),
        ));
    }
    let n = small.ring().nvars();
    let mut diff = hilbert_numerator(small).sub(&hilbert_numerator(big));
    for _ in 0..n {
        diff = diff.div_one_minus_t().ok_or(Error::NotFiniteLength)?;
    }
    Ok(FiniteLength {
        length: diff.eval_one(),
        top_degree: diff.degree(),
        series: diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PolyRing, PrimeField};

    #[test]
    fn zero_ideal_and_complete_intersections() {
        let r = PolyRing::standard(PrimeField::default(), 4);
        assert_eq!(hilbert_numerator(&Ideal::zero(&r)), IntPoly::one());
        let ci = Ideal::parse(&r, &["X0*X2 - X1^2", "X3^3 - X0^2*X1"]).unwrap();
        let expect = IntPoly::one_minus_power(2).mul(&IntPoly::one_minus_power(3));
        assert_eq!(hilbert_numerator(&ci), expect);
        assert_eq!(dim_deg(&ci), (Some(2), 6));
        assert_eq!(hilbert_function(&Ideal::zero(&r), 3), 20);
    }

    #[test]
    fn twisted_cubic() {
        let r = PolyRing::standard(PrimeField::default(), 4);
        let i = Ideal::parse(&r, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]).unwrap();
        let h = HilbertData::of(&i);
        assert_eq!(h.dimension(), Some(2));
        assert_eq!(h.degree(), 3);
        for mu in 0..8 {
            assert_eq!(h.value(mu), 3 * mu as i128 + 1);
        }
        assert_eq!(indeg(&i), Some(2));
    }

    #[test]
    fn unit_ideal_is_empty() {
        let r = PolyRing::standard(PrimeField::default(), 2);
        assert_eq!(dim_deg(&Ideal::unit(&r)), (None, 0));
        assert_eq!(indeg(&Ideal::zero(&r)), None);
    }

    #[test]
    fn length_of_an_embedded_point() {
        let r = PolyRing::standard(PrimeField::default(), 2);
        let small = Ideal::parse(&r, &["X0^2", "X0*X1"]).unwrap();
        let big = Ideal::parse(&r, &["X0"]).unwrap();
        let fl = finite_length(&small, &big).unwrap();
        assert_eq!((fl.length, fl.top_degree), (1, Some(1)));
        let same = finite_length(&small, &small).unwrap();
        assert_eq!((same.length, same.top_degree), (0, None));
        let line = Ideal::parse(&r, &["X0*X1"]).unwrap();
        assert!(matches!(
            finite_length(&line, &big),
            Err(Error::NotFiniteLength)
        ));
    }

    #[test]
    fn display() {
        let p = IntPoly::from_coeffs(vec![1, 0, -3, 2]);
        assert_eq!(p.to_string(), "1 - 3*t^2 + 2*t^3");
    }
}
