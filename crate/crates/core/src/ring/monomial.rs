use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables (auxiliary elimination
/// variables included).
pub const MAX_VARS: usize = 16;

/// Exponent vector with cached total degree. Slots past `nvars` are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial {
            exps: [0; MAX_VARS],
            deg: 0,
            nvars: nvars as u8,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Arity(format!(
                "{} variables exceeds the limit of {MAX_VARS}",
                exps.len()
            )));
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e)
                .map_err(|_| Error::Overflow(format!("exponent {e} does not fit in 16 bits")))?;
        }
        m.deg = exps.iter().copied().sum();
        Ok(m)
    }

    /// The power `x_i^e` in a ring with `nvars` variables.
    pub fn var_power(nvars: usize, i: usize, e: u32) -> Self {
        assert!(i < nvars);
        let mut m = Monomial::one(nvars);
        m.exps[i] = u16::try_from(e).expect("exponent overflow");
        m.deg = e;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Degree restricted to the variables in `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        out.deg = self.deg + other.deg;
        Some(out)
    }

    /// Product; panics if an exponent leaves the 16-bit range.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i] - other.exps[i];
        }
        out.deg = self.deg - other.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.deg = deg;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.deg = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for i in 0..self.nvars as usize {
            if self.exps[i] != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Relabels variables: exponent of variable `i` moves to `map[i]` in a
    /// ring of `target_nvars` variables. Unmapped variables must not occur.
    pub fn remap(&self, map: &[Option<usize>], target_nvars: usize) -> Option<Monomial> {
        let mut out = Monomial::one(target_nvars);
        for (i, slot) in map.iter().enumerate() {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            let j = (*slot)?;
            out.exps[j] = out.exps[j].checked_add(e)?;
        }
        out.deg = self.deg;
        Some(out)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

/// Monomial orders on a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Lex on the first `k` variables, then grevlex on the rest. An
    /// elimination order for the first block.
    Block(usize),
    /// Weighted degree, grevlex tiebreak. Weights must be positive.
    Weighted(Vec<u32>),
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars();
        match self {
            MonomialOrder::Grevlex => grevlex(a, b, 0..n, a.deg, b.deg),
            MonomialOrder::Lex => lex(a, b, 0..n),
            MonomialOrder::Block(k) => {
                let k = (*k).min(n);
                lex(a, b, 0..k).then_with(|| {
                    grevlex(a, b, k..n, a.partial_degree(k..n), b.partial_degree(k..n))
                })
            }
            MonomialOrder::Weighted(w) => {
                let wa: u64 = a
                    .exponents()
                    .iter()
                    .zip(w)
                    .map(|(&e, &w)| e as u64 * w as u64)
                    .sum();
                let wb: u64 = b
                    .exponents()
                    .iter()
                    .zip(w)
                    .map(|(&e, &w)| e as u64 * w as u64)
                    .sum();
                wa.cmp(&wb).then_with(|| grevlex(a, b, 0..n, a.deg, b.deg))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block(k) => format!("block({k})"),
            MonomialOrder::Weighted(w) => format!("weighted({w:?})"),
        }
    }
}

#[inline]
fn lex(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
    for i in range {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex(
    a: &Monomial,
    b: &Monomial,
    range: std::ops::Range<usize>,
    da: u32,
    db: u32,
) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in range.rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Compares two monomials under `order`, rejecting mismatched arities.
pub fn mono_cmp(a: &Monomial, b: &Monomial, order: &MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Arity(format!(
            "monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    if let MonomialOrder::Weighted(w) = order {
        if w.len() != a.nvars() {
            return Err(Error::Arity(format!(
                "weight vector of length {} for {} variables",
                w.len(),
                a.nvars()
            )));
        }
    }
    Ok(order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_three_variables() {
        let o = MonomialOrder::Grevlex;
        let chain = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1])];
        for w in chain.windows(2) {
            assert_eq!(mono_cmp(&w[0], &w[1], &o).unwrap(), Ordering::Greater);
        }
        assert_eq!(o.cmp(&chain[1], &chain[1]), Ordering::Equal);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        // variables (s, t, X0)
        let o = MonomialOrder::Block(2);
        assert_eq!(o.cmp(&m(&[1, 0, 9]), &m(&[0, 3, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 5])), Ordering::Greater);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        assert!(mono_cmp(&m(&[1, 0]), &m(&[1, 0, 0]), &MonomialOrder::Lex).is_err());
    }

    #[test]
    fn exponent_overflow_detected() {
        assert!(Monomial::from_exponents(&[70000]).is_err());
        let a = m(&[60000]);
        assert!(a.checked_mul(&a).is_none());
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 1]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert_eq!(a.lcm(&b).div(&a), Some(m(&[0, 2, 1])));
        assert!(a.div(&b).is_none());
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 1])));
    }
}
