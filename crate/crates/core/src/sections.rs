//! General hyperplane sections of one-dimensional projective schemes and
//! the regularity bounds expressed through them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{finite_length, HilbertData};
use crate::idealops::{colon, saturation, sum};
use crate::ring::{Field, Monomial, Polynomial, RingRef};

/// Seeds for successive draws: the first is `seed` itself, later ones are
/// splitmix64 steps from it.
pub fn derive_seed(seed: u64, k: u64) -> u64 {
    if k == 0 {
        return seed;
    }
    let mut z = seed.wrapping_add(k.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A linear form with all coefficients nonzero: uniform in `[1, p-1]` over
/// `F_p` (which must have `p > 1000`), uniform in `[1, 10^6]` over `Q`.
pub fn random_linear_form<F: Field>(ring: &RingRef<F>, seed: u64) -> Result<Polynomial<F>> {
    let p = ring.characteristic();
    if p != 0 && p <= 1000 {
        return Err(Error::InvalidField(format!(
            "random sections need a field with more than 1000 elements, got F_{p}"
        )));
    }
    let hi = if p == 0 { 1_000_000 } else { p - 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ring.nvars();
    let terms = (0..n)
        .map(|i| {
            (
                ring.field().from_i64(rng.gen_range(1..=hi) as i64),
                Monomial::var_power(n, i, 1),
            )
        })
        .collect();
    Ok(Polynomial::from_terms(ring, terms))
}

/// One draw of a hyperplane section.
#[derive(Clone, Debug)]
pub struct SectionDraw<F: Field> {
    pub seed: u64,
    pub form: Polynomial<F>,
    /// `(I + (l))^sat`.
    pub ideal: Ideal<F>,
    pub dim_before: Option<usize>,
    pub dim_after: Option<usize>,
    pub degree: i128,
    pub indeg: Option<u32>,
    /// `(I : l) / I` has finite length.
    pub finite_colon: bool,
}

impl<F: Field> SectionDraw<F> {
    fn dimension_drops(&self) -> bool {
        matches!((self.dim_before, self.dim_after), (Some(a), Some(b)) if b + 1 == a)
    }
}

/// A validated general section: two independent draws agreed on
/// `(deg 𝒵, i_𝒵)` and both cut the dimension by one.
#[derive(Clone, Debug)]
pub struct SectionData<F: Field> {
    pub draw: SectionDraw<F>,
    pub confirming_seed: u64,
    /// Every seed drawn, in order, including failed attempts.
    pub seeds_tried: Vec<u64>,
}

impl<F: Field> SectionData<F> {
    pub fn seed(&self) -> u64 {
        self.draw.seed
    }

    pub fn form(&self) -> &Polynomial<F> {
        &self.draw.form
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.draw.ideal
    }

    /// `deg 𝒵`.
    pub fn degree(&self) -> i128 {
        self.draw.degree
    }

    /// `i_𝒵`.
    pub fn indeg(&self) -> u32 {
        self.draw.indeg.unwrap_or(0)
    }
}

/// Least `μ` with `(I_𝒵 / (l))_μ ≠ 0`: the smallest degree of a
/// hypersurface of the hyperplane `l = 0` containing `𝒵`. `None` when
/// `l ∉ I_𝒵`.
pub fn indeg_modulo<F: Field>(i_z: &Ideal<F>, l: &Polynomial<F>) -> Option<u32> {
    if !i_z.contains(l) {
        return None;
    }
    let ring = i_z.ring();
    let hz = HilbertData::of(i_z);
    let hl = HilbertData::from_numerator(crate::hilbert::IntPoly::one_minus_power(1), ring.nvars());
    let top = i_z
        .groebner()
        .polys()
        .iter()
        .filter_map(|g| g.degree())
        .max()
        .unwrap_or(0);
    (1..=top.max(1)).find(|&mu| hl.value(mu as i64) > hz.value(mu as i64))
}

/// A single section by the form drawn from `seed`.
pub fn section_with_seed<F: Field>(i: &Ideal<F>, seed: u64) -> Result<SectionDraw<F>> {
    let ring = i.ring();
    let l = random_linear_form(ring, seed)?;
    let cut = sum(i, &Ideal::new(ring, vec![l.clone()])?)?;
    let dim_before = HilbertData::of(i).dimension();
    let dim_after = HilbertData::of(&cut).dimension();
    let ideal = saturation(&cut)?;
    let hz = HilbertData::of(&ideal);
    let finite_colon = finite_length(i, &colon(i, &l)?).is_ok();
    Ok(SectionDraw {
        seed,
        degree: hz.degree(),
        indeg: indeg_modulo(&ideal, &l),
        form: l,
        ideal,
        dim_before,
        dim_after,
        finite_colon,
    })
}

pub const SECTION_ATTEMPTS: u64 = 5;

/// General hyperplane section of `Proj(A/I)` for `dim A/I = 2`.
pub fn general_section<F: Field>(i: &Ideal<F>, seed: u64) -> Result<SectionData<F>> {
    i.require_homogeneous()?;
    let dim = HilbertData::of(i).dimension();
    if dim != Some(2) {
        return Err(Error::Precondition(format!(
            "general sections need dim A/I = 2, got {dim:?}"
        )));
    }
    let mut seeds = Vec::new();
    for attempt in 0..SECTION_ATTEMPTS {
        let (s1, s2) = (
            derive_seed(seed, 2 * attempt),
            derive_seed(seed, 2 * attempt + 1),
        );
        seeds.extend([s1, s2]);
        let a = section_with_seed(i, s1)?;
        let b = section_with_seed(i, s2)?;
        if a.form == b.form {
            continue;
        }
        let good = |d: &SectionDraw<F>| d.dimension_drops() && d.finite_colon && d.indeg.is_some();
        if good(&a) && good(&b) && (a.degree, a.indeg) == (b.degree, b.indeg) {
            return Ok(SectionData {
                draw: a,
                confirming_seed: s2,
                seeds_tried: seeds,
            });
        }
    }
    Err(Error::GenericityFailure { seeds })
}

/// `(d_1⋯d_c − deg 𝒵 + 1)(d_1 + ⋯ + d_{c+1} − c − i_𝒵) + i_𝒵` for
/// generator degrees `d_1 ≥ ⋯ ≥ d_s`, `s > c`.
pub fn section_bound_rhs(degrees: &[u32], codim: usize, deg_z: i128, i_z: i128) -> Result<i128> {
    let mut d: Vec<i128> = degrees.iter().map(|&x| x as i128).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.len() <= codim {
        return Err(Error::Precondition(format!(
            "need more than {codim} generators, got {}",
            d.len()
        )));
    }
    let prod: i128 = d[..codim].iter().product();
    let s: i128 = d[..=codim].iter().sum();
    Ok((prod - deg_z + 1) * (s - codim as i128 - i_z) + i_z)
}

/// Upper bounds on `reg(A/I)` for `I` generated in degrees `≤ d` in
/// `m + 2` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    /// `(m+2)(d-1)`, for `dim A/I ≤ 1`.
    pub dim_at_most_1: i128,
    /// `(m+2) d^m (d-1)`, for `dim A/I = 2`.
    pub dim2: i128,
    /// `(m+1) d^m (d-1)`, the sharper variant.
    pub dim2_sharp: i128,
}

pub fn degree_bounds(m: u32, d: u32) -> DegreeBounds {
    let (mm, dd) = (m as i128, d as i128);
    let dm = dd.pow(m);
    DegreeBounds {
        dim_at_most_1: (mm + 2) * (dd - 1),
        dim2: (mm + 2) * dm * (dd - 1),
        dim2_sharp: (mm + 1) * dm * (dd - 1),
    }
}
