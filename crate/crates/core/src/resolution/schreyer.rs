//! Non-minimal free resolutions from iterated Schreyer syzygies.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ring::{Field, Monomial, RingRef};

/// `(coefficient, monomial, basis index)`.
pub(crate) type VTerm<F> = (<F as Field>::Elem, Monomial, usize);

#[derive(Clone, Debug)]
pub(crate) struct BasisElem {
    pub deg: u32,
    /// Image of the basis element's lead under the composed lead maps.
    pub total: Monomial,
    /// Position in the tie-break order; lower is greater.
    pub rank: usize,
}

/// A free module with its Schreyer order.
#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub basis: Vec<BasisElem>,
}

impl Level {
    pub fn base(nvars: usize) -> Self {
        Level {
            basis: vec![BasisElem {
                deg: 0,
                total: Monomial::one(nvars),
                rank: 0,
            }],
        }
    }

    #[inline]
    fn cmp<F: Field>(
        &self,
        ring: &RingRef<F>,
        a: (&Monomial, usize),
        b: (&Monomial, usize),
    ) -> Ordering {
        let ta = a.0.mul(&self.basis[a.1].total);
        let tb = b.0.mul(&self.basis[b.1].total);
        ring.cmp(&ta, &tb)
            .then_with(|| self.basis[b.1].rank.cmp(&self.basis[a.1].rank))
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.basis.iter().map(|b| b.deg).collect()
    }
}

/// `a - c*m*b`, both sorted decreasingly in `lvl`'s order.
fn vsub_mul<F: Field>(
    ring: &RingRef<F>,
    lvl: &Level,
    a: &[VTerm<F>],
    c: &F::Elem,
    m: &Monomial,
    b: &[VTerm<F>],
) -> Vec<VTerm<F>> {
    let f = ring.field();
    let negc = f.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = m.mul(&b[j].1);
        match lvl.cmp(ring, (&a[i].1, a[i].2), (&bm, b[j].2)) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((f.mul(&negc, &b[j].0), bm, b[j].2));
                j += 1;
            }
            Ordering::Equal => {
                let s = f.add(&a[i].0, &f.mul(&negc, &b[j].0));
                if !f.is_zero(&s) {
                    out.push((s, a[i].1, a[i].2));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push((f.mul(&negc, &t.0), m.mul(&t.1), t.2));
    }
    out
}

fn sort_vector<F: Field>(ring: &RingRef<F>, lvl: &Level, mut v: Vec<VTerm<F>>) -> Vec<VTerm<F>> {
    let f = ring.field();
    v.sort_by(|x, y| lvl.cmp(ring, (&y.1, y.2), (&x.1, x.2)));
    let mut out: Vec<VTerm<F>> = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(last) if last.1 == t.1 && last.2 == t.2 => last.0 = f.add(&last.0, &t.0),
            _ => out.push(t),
        }
    }
    out.retain(|t| !f.is_zero(&t.0));
    out
}

/// The frame: `levels[k]` is `F_k`, `maps[k-1]` the columns of
/// `d_k: F_k -> F_{k-1}` as vectors in `F_{k-1}`.
pub(crate) struct Frame<F: Field> {
    pub levels: Vec<Level>,
    pub maps: Vec<Vec<Vec<VTerm<F>>>>,
}

/// Resolves `coker(gb -> F_0)` for a Gröbner basis `gb` of vectors in the
/// base level. With the lead-exponent sort at each step the length is at
/// most `nvars + 1`.
pub(crate) fn schreyer_frame<F: Field>(
    ring: &RingRef<F>,
    gb: Vec<Vec<VTerm<F>>>,
) -> Result<Frame<F>> {
    let n = ring.nvars();
    let mut levels = vec![Level::base(n)];
    let mut maps = Vec::new();
    let mut gb = gb;
    let mut k = 0;
    while !gb.is_empty() {
        if k > n {
            return Err(Error::Internal(format!(
                "Schreyer frame longer than {} steps",
                n + 1
            )));
        }
        let prev = levels.last().unwrap();
        let var = k % n;
        gb.sort_by(|a, b| {
            a[0].2
                .cmp(&b[0].2)
                .then(b[0].1.exp(var).cmp(&a[0].1.exp(var)))
        });

        let mut order: Vec<usize> = (0..gb.len()).collect();
        order.sort_by_key(|&a| (prev.basis[gb[a][0].2].rank, a));
        let mut rank = vec![0; gb.len()];
        for (r, &a) in order.iter().enumerate() {
            rank[a] = r;
        }
        let basis = gb
            .iter()
            .enumerate()
            .map(|(a, v)| {
                let (_, m, c) = &v[0];
                BasisElem {
                    deg: m.degree() + prev.basis[*c].deg,
                    total: m.mul(&prev.basis[*c].total),
                    rank: rank[a],
                }
            })
            .collect();
        let next = Level { basis };
        let syz = syzygies(ring, prev, &next, &gb)?;
        maps.push(gb);
        levels.push(next);
        gb = syz;
        k += 1;
    }
    Ok(Frame { levels, maps })
}

/// Schreyer syzygies of `gb` (a Gröbner basis in `prev`), keeping per
/// element only the pairs with divisibility-minimal leading monomial.
fn syzygies<F: Field>(
    ring: &RingRef<F>,
    prev: &Level,
    next: &Level,
    gb: &[Vec<VTerm<F>>],
) -> Result<Vec<Vec<VTerm<F>>>> {
    let f = ring.field();
    let ncomp = prev.basis.len();
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for (a, v) in gb.iter().enumerate() {
        by_comp[v[0].2].push(a);
    }
    let leads: Vec<Monomial> = gb.iter().map(|v| v[0].1).collect();
    let masks: Vec<u32> = leads.iter().map(|m| m.support_mask()).collect();
    let inv_lc: Vec<F::Elem> = gb.iter().map(|v| f.inv(&v[0].0).unwrap()).collect();

    let mut out = Vec::new();
    for comp in &by_comp {
        for (pos, &a) in comp.iter().enumerate() {
            // candidate leads L_ab / m_a for b > a in the same component
            let mut cands: Vec<(usize, Monomial)> = comp[pos + 1..]
                .iter()
                .map(|&b| (b, leads[a].lcm(&leads[b]).div(&leads[a]).unwrap()))
                .collect();
            cands.sort_by(|x, y| x.1.degree().cmp(&y.1.degree()).then(x.0.cmp(&y.0)));
            let mut kept: Vec<(usize, Monomial)> = Vec::new();
            for (b, q) in cands {
                if !kept.iter().any(|(_, k)| k.divides(&q)) {
                    kept.push((b, q));
                }
            }
            for (b, qa) in kept {
                let l = qa.mul(&leads[a]);
                let qb = l.div(&leads[b]).unwrap();
                // S = qa/c_a h_a - qb/c_b h_b
                let ta: Vec<VTerm<F>> = gb[a][1..]
                    .iter()
                    .map(|(c, m, i)| (f.mul(c, &inv_lc[a]), m.mul(&qa), *i))
                    .collect();
                let mut s = vsub_mul(ring, prev, &ta, &inv_lc[b], &qb, &gb[b][1..]);
                let mut syz: Vec<VTerm<F>> =
                    vec![(inv_lc[a].clone(), qa, a), (f.neg(&inv_lc[b]), qb, b)];
                while let Some((c, m, i)) = s.first().cloned() {
                    let mm = m.support_mask();
                    let d = by_comp[i]
                        .iter()
                        .copied()
                        .find(|&d| masks[d] & !mm == 0 && leads[d].divides(&m))
                        .ok_or_else(|| {
                            Error::Internal("syzygy S-vector does not reduce to zero".into())
                        })?;
                    let q = f.mul(&c, &inv_lc[d]);
                    let qm = m.div(&leads[d]).unwrap();
                    s = vsub_mul(ring, prev, &s[1..], &q, &qm, &gb[d][1..]);
                    syz.push((f.neg(&q), qm, d));
                }
                out.push(sort_vector(ring, next, syz));
            }
        }
    }
    Ok(out)
}
