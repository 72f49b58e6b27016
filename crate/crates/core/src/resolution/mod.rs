//! Minimal graded free resolutions of `A/I`, Betti tables, regularity and
//! the `a_0` invariant.

mod betti;
mod matrix;
mod schreyer;

use std::collections::BTreeMap;

pub use betti::BettiTable;
pub use matrix::GradedMatrix;

use crate::error::{Error, Result};
use crate::families::FamilyInstance;
use crate::groebner::Ideal;
use crate::hilbert::{finite_length, hilbert_numerator, IntPoly};
use crate::idealops::saturation;
use crate::linalg::rank;
use crate::ring::{Field, Polynomial, RingRef};
use schreyer::{schreyer_frame, Level, VTerm};

/// A minimal free resolution `0 <- A <- F_1 <- ... <- F_p <- 0` of `A/I`,
/// with the Betti table of the non-minimal frame it was reduced from.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: RingRef<F>,
    maps: Vec<GradedMatrix<F>>,
    frame_betti: BettiTable,
    frame_ranks: Vec<usize>,
}

/// Outcome of the exactness checks on a resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub composition_zero: bool,
    pub minimal: bool,
    pub euler_matches_hilbert: bool,
}

impl Certificate {
    pub fn ok(&self) -> bool {
        self.composition_zero && self.minimal && self.euler_matches_hilbert
    }
}

impl<F: Field> Resolution<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    /// `d_1, ..., d_p`; `maps()[k]` goes from `F_{k+1}` to `F_k`.
    pub fn maps(&self) -> &[GradedMatrix<F>] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Ranks of `F_0, ..., F_p`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut r = vec![1];
        r.extend(self.maps.iter().map(|m| m.ncols()));
        r
    }

    /// Ranks of the Schreyer frame before minimisation.
    pub fn frame_ranks(&self) -> &[usize] {
        &self.frame_ranks
    }

    pub fn betti(&self) -> BettiTable {
        let mut degs = vec![vec![0]];
        degs.extend(self.maps.iter().map(|m| m.col_degrees().to_vec()));
        BettiTable::from_degrees("A/I", &degs)
    }

    /// Betti numbers from the scalar parts of the non-minimal frame.
    pub fn frame_betti(&self) -> &BettiTable {
        &self.frame_betti
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.find_unit().is_none())
    }

    pub fn composition_is_zero(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Composition, minimality and the Euler characteristic against the
    /// Hilbert numerator of `i`.
    pub fn certify(&self, i: &Ideal<F>) -> Result<Certificate> {
        Ok(Certificate {
            composition_zero: self.composition_is_zero()?,
            minimal: self.is_minimal(),
            euler_matches_hilbert: self.betti().euler_polynomial() == hilbert_numerator(i),
        })
    }
}

fn to_matrix<F: Field>(
    ring: &RingRef<F>,
    rows: &Level,
    cols: &Level,
    columns: &[Vec<VTerm<F>>],
) -> Result<GradedMatrix<F>> {
    let mut out = Vec::with_capacity(columns.len());
    for v in columns {
        let mut by_row: BTreeMap<usize, Vec<(F::Elem, crate::ring::Monomial)>> = BTreeMap::new();
        for (c, m, r) in v {
            by_row.entry(*r).or_default().push((c.clone(), *m));
        }
        out.push(
            by_row
                .into_iter()
                .map(|(r, t)| (r, Polynomial::from_terms(ring, t)))
                .collect(),
        );
    }
    GradedMatrix::new(ring, rows.degrees(), cols.degrees(), out)
}

/// `β_{k,j} = #F_{k,j} - rank(d_k)_j - rank(d_{k+1})_j` on the constant
/// parts of a (non-minimal) resolution.
fn scalar_betti<F: Field>(ring: &RingRef<F>, maps: &[GradedMatrix<F>]) -> BettiTable {
    let field = ring.field();
    let mut degs: Vec<Vec<u32>> = vec![vec![0]];
    degs.extend(maps.iter().map(|m| m.col_degrees().to_vec()));
    // rk[k][j]: rank of the degree-j scalar block of d_k
    let mut rk: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new(); degs.len() + 1];
    for (k, m) in maps.iter().enumerate() {
        let mut blocks: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (c, &d) in m.col_degrees().iter().enumerate() {
            blocks.entry(d).or_default().1.push(c);
        }
        for (r, &d) in m.row_degrees().iter().enumerate() {
            if let Some(b) = blocks.get_mut(&d) {
                b.0.push(r);
            }
        }
        for (d, (rows, cols)) in blocks {
            if rows.is_empty() {
                continue;
            }
            let pos: BTreeMap<usize, usize> =
                rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
            let mut dense = vec![vec![field.zero(); rows.len()]; cols.len()];
            for (ci, &c) in cols.iter().enumerate() {
                for (r, p) in m.column(c) {
                    if let Some(&ri) = pos.get(r) {
                        dense[ci][ri] = p.terms()[0].0.clone();
                    }
                }
            }
            rk[k + 1].insert(d, rank(field, &dense));
        }
    }
    let mut t = BettiTable::new("A/I");
    for (k, ds) in degs.iter().enumerate() {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for &d in ds {
            *count.entry(d).or_default() += 1;
        }
        for (d, n) in count {
            let a = rk[k].get(&d).copied().unwrap_or(0);
            let b = rk[k + 1].get(&d).copied().unwrap_or(0);
            t.add(k, d as i64, (n - a - b) as u64);
        }
    }
    t
}

/// Removes unit entries by exact Gaussian steps. Each step at `(r, c)` in
/// `d_k` clears row `r` by column operations and splits off the pair
/// `(F_k)_c -> (F_{k-1})_r`.
fn minimize<F: Field>(mut maps: Vec<GradedMatrix<F>>) -> Vec<GradedMatrix<F>> {
    if maps.is_empty() {
        return maps;
    }
    let mut dead: Vec<Vec<bool>> = vec![vec![false; maps[0].nrows()]];
    dead.extend(maps.iter().map(|m| vec![false; m.ncols()]));
    for k in 0..maps.len() {
        while let Some((r, c)) = maps[k].find_unit_live(&dead[k], &dead[k + 1]) {
            maps[k].clear_row(r, c, &dead[k + 1]);
            dead[k][r] = true;
            dead[k + 1][c] = true;
        }
    }
    for (k, m) in maps.iter_mut().enumerate() {
        m.drop_rows_cols(&dead[k], &dead[k + 1]);
    }
    while maps.last().is_some_and(|m| m.ncols() == 0) {
        maps.pop();
    }
    maps
}

/// Minimal free resolution of `A/I` for a homogeneous proper ideal `I`.
pub fn minimal_resolution<F: Field>(i: &Ideal<F>) -> Result<Resolution<F>> {
    i.require_homogeneous()?;
    if i.is_unit() {
        return Err(Error::UnitIdeal(
            "the quotient by the unit ideal has no resolution".into(),
        ));
    }
    let ring = i.ring().clone();
    let gb = i.groebner();
    let vectors = gb
        .polys()
        .iter()
        .map(|p| p.terms().iter().map(|(c, m)| (c.clone(), *m, 0)).collect())
        .collect();
    let frame = schreyer_frame(&ring, vectors)?;
    let mut maps = Vec::with_capacity(frame.maps.len());
    for (k, cols) in frame.maps.iter().enumerate() {
        maps.push(to_matrix(
            &ring,
            &frame.levels[k],
            &frame.levels[k + 1],
            cols,
        )?);
    }
    let frame_ranks = frame.levels.iter().map(|l| l.basis.len()).collect();
    let frame_betti = scalar_betti(&ring, &maps);
    let maps = minimize(maps);
    if maps.len() > ring.nvars() {
        return Err(Error::Internal(format!(
            "minimal resolution of length {} exceeds {} variables",
            maps.len(),
            ring.nvars()
        )));
    }
    Ok(Resolution {
        ring,
        maps,
        frame_betti,
        frame_ranks,
    })
}

/// Graded Betti numbers of `A/I`.
pub fn betti<F: Field>(i: &Ideal<F>) -> Result<BettiTable> {
    Ok(minimal_resolution(i)?.betti())
}

/// `reg(A/I) = max (j - i)`.
pub fn regularity_quotient<F: Field>(i: &Ideal<F>) -> Result<i64> {
    Ok(betti(i)?.regularity().unwrap())
}

/// `reg(I) = reg(A/I) + 1` for `0 ≠ I ≠ A`.
pub fn regularity<F: Field>(i: &Ideal<F>) -> Result<i64> {
    if i.is_zero() {
        return Err(Error::Precondition(
            "the zero ideal has regularity -infinity".into(),
        ));
    }
    Ok(regularity_quotient(i)? + 1)
}

/// Projective dimension of `A/I`.
pub fn pdim<F: Field>(i: &Ideal<F>) -> Result<usize> {
    Ok(minimal_resolution(i)?.length())
}

/// `a_0(A/I)`: top nonzero degree of `I^sat / I`; `None` stands for `-∞`.
pub fn a0<F: Field>(i: &Ideal<F>) -> Result<Option<i64>> {
    let sat = saturation(i)?;
    Ok(finite_length(i, &sat)?.top_degree.map(|d| d as i64))
}

/// `a_0(A/ℐ) - d`, which the exact sequence
/// `0 -> H^0(A/ℐ) -> H^1(A/b)(-d) -> ...` identifies with `a_1(A/b)`.
pub fn a1_via_sequence<F: Field>(inst: &FamilyInstance<F>) -> Result<Option<i64>> {
    Ok(a0(inst.almost_ci())?.map(|a| a - inst.d() as i64))
}

/// Same as [`a1_via_sequence`], building the instance first.
pub fn a1_of_family<F: Field>(field: F, m: usize, n: usize, primed: bool) -> Result<Option<i64>> {
    a1_via_sequence(&FamilyInstance::build(field, m, n, primed)?)
}

/// `Σ_i (-1)^i Σ_j β_{i,j} t^j` should equal the Hilbert numerator.
pub fn euler_polynomial(b: &BettiTable) -> IntPoly {
    b.euler_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PolyRing, PrimeField, Rationals};

    #[test]
    fn koszul_on_three_variables() {
        let r = PolyRing::standard(PrimeField::default(), 3);
        let i = Ideal::irrelevant(&r);
        let res = minimal_resolution(&i).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
        assert!(res.certify(&i).unwrap().ok());
        assert_eq!(regularity_quotient(&i).unwrap(), 0);
        assert_eq!(&res.betti(), res.frame_betti());
    }

    #[test]
    fn principal_and_twisted_cubic() {
        let r = PolyRing::standard(Rationals, 4);
        assert_eq!(regularity(&Ideal::parse(&r, &["X0"]).unwrap()).unwrap(), 1);
        let tc = Ideal::parse(&r, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]).unwrap();
        let res = minimal_resolution(&tc).unwrap();
        assert!(res.certify(&tc).unwrap().ok());
        let b = res.betti();
        assert_eq!((b.get(1, 2), b.get(2, 3)), (3, 2));
        assert_eq!(b.regularity(), Some(1));
        assert_eq!(a0(&tc).unwrap(), None);
    }

    #[test]
    fn non_minimal_frame_is_reduced() {
        // generators with a linear syzygy and a redundant Koszul part
        let r = PolyRing::standard(PrimeField::default(), 4);
        let i = Ideal::parse(&r, &["X0^2", "X0*X1", "X1^2", "X2^3 - X0*X3^2"]).unwrap();
        let res = minimal_resolution(&i).unwrap();
        let c = res.certify(&i).unwrap();
        assert!(c.ok(), "{c:?}");
        assert_eq!(&res.betti(), res.frame_betti());
        assert!(res.length() <= 4);
    }

    #[test]
    fn embedded_point_a0() {
        let r = PolyRing::standard(PrimeField::default(), 2);
        let i = Ideal::parse(&r, &["X0^2", "X0*X1"]).unwrap();
        assert_eq!(a0(&i).unwrap(), Some(1));
        assert!(a0(&i).unwrap().unwrap() <= regularity_quotient(&i).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let r = PolyRing::standard(PrimeField::default(), 2);
        assert!(matches!(
            minimal_resolution(&Ideal::unit(&r)),
            Err(Error::UnitIdeal(_))
        ));
        let inh = Ideal::parse(&r, &["X0^2 + X1"]).unwrap();
        assert!(matches!(
            minimal_resolution(&inh),
            Err(Error::NotHomogeneous)
        ));
    }
}
