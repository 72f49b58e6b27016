//! One function per claim. Each writes values and sub-claims into a
//! [`VerifyReport`]; errors become failed sub-claims.

use std::sync::OnceLock;
use std::time::Instant;

use serde_json::json;

use super::report::{extended, Claim, Params, Relation, Source, VerifyReport};
use crate::error::{Error, Result};
use crate::families::FamilyInstance;
use crate::groebner::Ideal;
use crate::hilbert::HilbertData;
use crate::idealops::{intersect, saturate_ideal, saturation_exponent_check_with};
use crate::resolution::{a0, minimal_resolution, BettiTable};
use crate::ring::{Field, Monomial, Polynomial};
use crate::sections::{degree_bounds, general_section, random_linear_form, section_bound_rhs};

type Memo<T> = OnceLock<std::result::Result<T, String>>;

fn memo<T: Clone>(cell: &Memo<T>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(|| f().map_err(|e| e.to_string()))
        .clone()
        .map_err(Error::Internal)
}

#[derive(Clone, Debug)]
struct Resolved {
    betti: BettiTable,
    certified: bool,
}

/// The ideal a claim is checked on, with the family instance it came from
/// (if any) and lazily computed invariants shared between claims.
pub struct Subject<F: Field> {
    label: String,
    instance: Option<FamilyInstance<F>>,
    ideal: Ideal<F>,
    resolved: Memo<Resolved>,
    curve: Memo<Resolved>,
    ci: Memo<Resolved>,
    a0: Memo<Option<i64>>,
    hilbert: OnceLock<HilbertData>,
}

impl<F: Field> Subject<F> {
    pub fn from_ideal(label: impl Into<String>, ideal: Ideal<F>) -> Self {
        Subject {
            label: label.into(),
            instance: None,
            ideal,
            resolved: OnceLock::new(),
            curve: OnceLock::new(),
            ci: OnceLock::new(),
            a0: OnceLock::new(),
            hilbert: OnceLock::new(),
        }
    }

    /// `ℐ` or `ℐ'` of the given family instance.
    pub fn from_instance(inst: FamilyInstance<F>) -> Self {
        let mut s = Subject::from_ideal(inst.label(), inst.almost_ci().clone());
        s.instance = Some(inst);
        s
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn instance(&self) -> Option<&FamilyInstance<F>> {
        self.instance.as_ref()
    }

    fn resolve(i: &Ideal<F>) -> Result<Resolved> {
        let res = minimal_resolution(i)?;
        let certified = res.certify(i)?.ok();
        Ok(Resolved {
            betti: res.betti(),
            certified,
        })
    }

    fn resolved(&self) -> Result<Resolved> {
        memo(&self.resolved, || Self::resolve(&self.ideal))
    }

    /// `reg(I) = reg(A/I) + 1`.
    fn reg(&self) -> Result<i64> {
        Ok(self.resolved()?.betti.regularity().unwrap() + 1)
    }

    fn a0(&self) -> Result<Option<i64>> {
        memo(&self.a0, || a0(&self.ideal))
    }

    fn hilbert(&self) -> &HilbertData {
        self.hilbert.get_or_init(|| HilbertData::of(&self.ideal))
    }

    /// Degrees of a minimal generating set, decreasing.
    fn minimal_generator_degrees(&self) -> Result<Vec<u32>> {
        let b = self.resolved()?.betti;
        let mut out = Vec::new();
        for ((i, j), k) in b.iter() {
            if i == 1 {
                out.extend(std::iter::repeat_n(j as u32, k as usize));
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    fn params(&self, seed: u64) -> Params {
        Params {
            instance: self.label.clone(),
            m: self.instance.as_ref().map(|i| i.m()),
            n: self.instance.as_ref().map(|i| i.n()),
            primed: self.instance.as_ref().map(|i| i.primed()),
            char: self.ideal.ring().characteristic(),
            seed,
        }
    }
}

/// Runs one claim on a subject. Never panics on mathematical failures:
/// they are recorded in the report.
pub fn run_claim<F: Field>(claim: Claim, s: &Subject<F>, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let mut r = VerifyReport::new(claim, s.params(seed));
    let outcome = match (claim.family(), s.instance()) {
        (Some(primed), Some(inst)) if inst.primed() == primed => match claim {
            Claim::LowerBound | Claim::PrimedLowerBound => lower_bound(s, inst, &mut r),
            Claim::PrimedDecomposition | Claim::Decomposition => decomposition(s, inst, &mut r),
            _ => sharpness(s, inst, &mut r),
        },
        (Some(primed), _) => {
            let family = if primed { "primed" } else { "unprimed" };
            r.skip(
                "applies",
                &format!("claim concerns the {family} family"),
                format!("{} is not such an instance", s.label()),
            );
            Ok(())
        }
        (None, _) => match claim {
            Claim::SectionBound => section_bound(s, seed, &mut r),
            Claim::SaturationExponent => saturation_exponent(s, seed, &mut r),
            _ => degree_bound(s, &mut r),
        },
    };
    if let Err(e) = outcome {
        r.fail("error", "computation finished", e.to_string());
    }
    r.elapsed_ms = start.elapsed().as_millis();
    r
}

/// A report for an instance that could not be built.
pub fn build_failure(
    claim: Claim,
    label: &str,
    m: usize,
    n: usize,
    primed: bool,
    char: u64,
    seed: u64,
    e: &Error,
) -> VerifyReport {
    let params = Params {
        instance: label.into(),
        m: Some(m),
        n: Some(n),
        primed: Some(primed),
        char,
        seed,
    };
    let mut r = VerifyReport::new(claim, params);
    r.fail("build", "family instance constructed", e.to_string());
    r
}

fn pow(b: usize, e: usize) -> i64 {
    (b as i64).pow(e as u32)
}

/// Generator degrees as stated for the family, decreasing.
fn stated_degrees(m: usize, n: usize, primed: bool) -> Vec<u32> {
    let (m32, n32) = (m as u32, n as u32);
    let mut v = if primed {
        let mut v = vec![n32 + 1; m];
        v.push((1 << (m - 1)) + 1);
        v.push(m32 * n32 + (1 << (m - 1)));
        v
    } else {
        let mut v = vec![n32 + 1; m - 1];
        v.push((1 << (m - 2)) + n32);
        v.push(m32 * n32 + (1 << (m - 2)) - 1);
        v
    };
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// The lower bound on `reg(ℐ)` and the chain of invariants behind it.
fn lower_bound<F: Field>(
    s: &Subject<F>,
    inst: &FamilyInstance<F>,
    r: &mut VerifyReport,
) -> Result<()> {
    let (m, n, primed) = (inst.m(), inst.n(), inst.primed());
    let d = inst.d() as i64;
    r.record("extra_form", inst.extra().to_string(), Source::Groebner);
    r.record("d", d, Source::Formula);

    let degs = s.minimal_generator_degrees()?;
    let stated = stated_degrees(m, n, primed);
    r.record("generator_degrees", json!(degs), Source::Resolution);
    r.assert_true(
        "degrees",
        "minimal generators have the stated degrees",
        degs == stated,
        Some(format!("stated {stated:?}")),
    );

    let dim = s.hilbert().dimension();
    r.record("dim", json!(dim), Source::Hilbert);
    r.compare(
        "dim",
        "dim A/I = 2",
        Relation::Eq,
        dim.map_or(-1, |x| x as i64),
        2,
    );

    let res = s.resolved()?;
    r.record(
        "betti",
        res.betti.to_json()["betti"].clone(),
        Source::Resolution,
    );
    r.assert_true(
        "resolution",
        "resolution certified: d∘d = 0, minimal, Euler characteristic = Hilbert numerator",
        res.certified,
        None,
    );

    let reg = s.reg()?;
    r.record("reg", reg, Source::Resolution);
    let bound = if primed {
        pow(n, m) + (m * n) as i64 + (1i64 << (m - 1)) - 1
    } else {
        pow(n, m) + (m * n) as i64 + (1i64 << (m - 2)) - 2
    };
    let text = if primed {
        "reg(I) >= n^m + mn + 2^(m-1) - 1"
    } else {
        "reg(I) >= n^m + mn + 2^(m-2) - 2"
    };
    r.compare("lower_bound", text, Relation::Ge, reg, bound);

    let a0 = s.a0()?;
    r.record("a0", extended(a0), Source::Hilbert);
    let a1 = a0.map(|a| a - d);
    r.record("a1_curve", extended(a1), Source::Formula);
    match a0 {
        Some(a) => r.compare("a0_reg", "reg(I) >= a_0(A/I) + 1", Relation::Ge, reg, a + 1),
        None => r.skip(
            "a0_reg",
            "reg(I) >= a_0(A/I) + 1",
            "I is saturated, a_0 = -inf",
        ),
    }

    let curve = memo(&s.curve, || Subject::resolve(inst.curve()))?;
    let reg_curve_quot = curve.betti.regularity().unwrap();
    r.record("reg_curve", reg_curve_quot + 1, Source::Resolution);
    r.assert_true(
        "curve_resolution",
        "curve resolution certified",
        curve.certified,
        None,
    );
    match a1 {
        Some(a) => r.compare(
            "a1_reg",
            "a_1(A/b) + 1 <= reg(A/b)",
            Relation::Le,
            a + 1,
            reg_curve_quot,
        ),
        None => r.skip("a1_reg", "a_1(A/b) + 1 <= reg(A/b)", "a_1(A/b) = -inf"),
    }

    // X1^{n^m} - X0^{n^m - 1} X2 is a minimal generator of b
    let nm = pow(n, m) as u32;
    let ring = inst.ring();
    let nv = ring.nvars();
    let binom = Polynomial::from_terms(
        ring,
        vec![
            (ring.field().one(), Monomial::var_power(nv, 1, nm)),
            (
                ring.field().from_i64(-1),
                Monomial::from_exponents(&pad(&[nm - 1, 0, 1], nv))?,
            ),
        ],
    );
    let minimal = inst.curve().contains(&binom) && curve.betti.get(1, nm as i64) > 0;
    r.assert_true(
        "curve_generator",
        "X1^(n^m) - X0^(n^m-1)*X2 lies in b and b has a minimal generator of degree n^m",
        minimal,
        None,
    );
    r.compare(
        "curve_reg_lower",
        "reg(b) >= n^m",
        Relation::Ge,
        reg_curve_quot + 1,
        nm as i64,
    );

    if primed {
        if n == 2 && (2..=4).contains(&m) {
            r.compare(
                "curve_reg",
                "reg(A/b) = n^m - 1",
                Relation::Eq,
                reg_curve_quot,
                nm as i64 - 1,
            );
            match a1 {
                Some(a) => r.compare(
                    "curve_a1",
                    "a_1(A/b) + 1 = n^m - 1",
                    Relation::Eq,
                    a + 1,
                    nm as i64 - 1,
                ),
                None => r.fail("curve_a1", "a_1(A/b) + 1 = n^m - 1", "a_1(A/b) = -inf"),
            }
        } else {
            r.skip(
                "curve_reg",
                "reg(A/b) = n^m - 1",
                "stated only for n = 2, m = 2, 3, 4",
            );
        }
    }
    Ok(())
}

fn pad(e: &[u32], n: usize) -> Vec<u32> {
    let mut v = e.to_vec();
    v.resize(n, 0);
    v
}

/// `I = b ∩ J ∩ K` with `J`, `K` supported on two lines, and the complete
/// intersection invariants of `I`.
fn decomposition<F: Field>(
    s: &Subject<F>,
    inst: &FamilyInstance<F>,
    r: &mut VerifyReport,
) -> Result<()> {
    let (m, n, primed) = (inst.m(), inst.n(), inst.primed());
    let (ci, b, a) = (inst.ci(), inst.curve(), inst.residual());

    let cap = intersect(b, a)?;
    r.assert_true(
        "intersection",
        "I = b ∩ a (equal reduced Groebner bases)",
        cap.same_as(ci),
        None,
    );

    let (j, k) = inst.residual_primes();
    r.assert_true(
        "support",
        "a ⊆ J and a ⊆ K",
        j.contains_ideal(a) && k.contains_ideal(a),
        None,
    );
    let double = saturate_ideal(&saturate_ideal(a, &j)?, &k)?;
    r.assert_true(
        "double_saturation",
        "(a : J^∞) : K^∞ = (1)",
        double.is_unit(),
        None,
    );

    let hd = HilbertData::of(ci);
    let codim = hd.codimension().map_or(-1, |c| c as i64);
    let gens = ci.gens().len() as i64;
    r.record("codim", codim, Source::Hilbert);
    r.compare(
        "codim",
        "codim I = number of generators",
        Relation::Eq,
        codim,
        gens,
    );
    let want_codim = if primed { m + 1 } else { m } as i64;
    r.compare(
        "codim_value",
        if primed {
            "codim I = m + 1"
        } else {
            "codim I = m"
        },
        Relation::Eq,
        codim,
        want_codim,
    );

    let degs = ci.generator_degrees();
    let res = memo(&s.ci, || Subject::resolve(ci))?;
    r.assert_true("resolution", "resolution certified", res.certified, None);
    let reg = res.betti.regularity().unwrap() + 1;
    r.record("reg_ci", reg, Source::Resolution);
    let koszul = degs.iter().map(|&d| d as i64).sum::<i64>() - gens + 1;
    r.compare(
        "koszul",
        "reg(I) = Σ d_i - c + 1",
        Relation::Eq,
        reg,
        koszul,
    );
    // reg(A/I) equals the degree of the extra form in both families
    let stated = if primed {
        (m * n) as i64 + (1 << (m - 1)) + 1
    } else {
        (m * n) as i64 + (1 << (m - 2))
    };
    let text = if primed {
        "reg(I) = mn + 2^(m-1) + 1"
    } else {
        "reg(I) = mn + 2^(m-2)"
    };
    r.compare("reg_ci", text, Relation::Eq, reg, stated);

    let deg_ci = hd.degree() as i64;
    let deg_b = HilbertData::of(b).degree() as i64;
    let deg_a = HilbertData::of(a).degree() as i64;
    r.record("deg_ci", deg_ci, Source::Hilbert);
    r.record("deg_curve", deg_b, Source::Hilbert);
    r.record("deg_residual", deg_a, Source::Hilbert);
    r.compare(
        "bezout",
        "deg(A/I) = Π d_i",
        Relation::Eq,
        deg_ci,
        degs.iter().map(|&d| d as i64).product(),
    );
    r.compare(
        "curve_degree",
        "deg(A/b) equals the top exponent of the parametrization",
        Relation::Eq,
        deg_b,
        inst.expected_curve_degree() as i64,
    );
    r.compare(
        "additivity",
        "deg(A/I) = deg(A/b) + deg(A/a)",
        Relation::Eq,
        deg_ci,
        deg_b + deg_a,
    );
    Ok(())
}

fn sharpness<F: Field>(
    s: &Subject<F>,
    inst: &FamilyInstance<F>,
    r: &mut VerifyReport,
) -> Result<()> {
    let (m, n) = (inst.m(), inst.n());
    let reg = s.reg()?;
    r.record("reg", reg, Source::Resolution);
    let curve = memo(&s.curve, || Subject::resolve(inst.curve()))?;
    let reg_b = curve.betti.regularity().unwrap() + 1;
    r.record("reg_curve", reg_b, Source::Resolution);
    let nm = pow(n, m);
    let two = 1i64 << (m - 2);
    if m == 2 || m == 3 {
        r.compare(
            "equality",
            "reg(I) = n^m + mn + 2^(m-2) - 2",
            Relation::Eq,
            reg,
            nm + (m * n) as i64 + two - 2,
        );
        r.compare("curve_reg", "reg(b) = n^m", Relation::Eq, reg_b, nm);
    } else {
        r.skip(
            "equality",
            "reg(I) = n^m + mn + 2^(m-2) - 2",
            "stated only for m = 2, 3",
        );
    }
    let np1 = pow(n + 1, m - 2);
    r.compare(
        "curve_upper",
        "reg(b) <= n^m + n(n+1)^(m-2) - 1",
        Relation::Le,
        reg_b,
        nm + n as i64 * np1 - 1,
    );
    r.compare(
        "upper",
        "reg(I) <= n^m + n(n+1)^(m-2) + mn + 2^(m-2) - 3",
        Relation::Le,
        reg,
        nm + n as i64 * np1 + (m * n) as i64 + two - 3,
    );
    let coarse = 2 * (m * m * n) as i64 * np1 * (n as i64 + two).pow(2);
    r.compare(
        "coarse_upper",
        "reg(I) <= 2 m^2 n (n+1)^(m-2) (n + 2^(m-2))^2",
        Relation::Le,
        reg,
        coarse,
    );
    Ok(())
}

fn require_dim2<F: Field>(s: &Subject<F>, r: &mut VerifyReport, id: &str, statement: &str) -> bool {
    let dim = s.hilbert().dimension();
    r.record("dim", json!(dim), Source::Hilbert);
    if dim != Some(2) {
        r.skip(id, statement, format!("needs dim A/I = 2, got {dim:?}"));
        return false;
    }
    true
}

fn section_bound<F: Field>(s: &Subject<F>, seed: u64, r: &mut VerifyReport) -> Result<()> {
    let statement = "reg(I) <= (d_1...d_c - deg Z + 1)(d_1 + ... + d_{c+1} - c - i_Z) + i_Z";
    if !require_dim2(s, r, "upper", statement) {
        return Ok(());
    }
    let degs = s.minimal_generator_degrees()?;
    let c = s.ideal.ring().nvars() - 2;
    r.record("generator_degrees", json!(degs), Source::Resolution);
    r.record("codim", c, Source::Hilbert);
    if degs.len() <= c {
        r.skip(
            "upper",
            statement,
            format!("needs more than {c} minimal generators, got {}", degs.len()),
        );
        return Ok(());
    }
    let sec = general_section(&s.ideal, seed)?;
    let (deg_z, i_z) = (sec.degree(), sec.indeg() as i128);
    r.record("section_form", sec.form().to_string(), Source::Section);
    r.record("section_seeds", json!(sec.seeds_tried), Source::Section);
    r.record("deg_Z", deg_z as i64, Source::Section);
    r.record("i_Z", i_z as i64, Source::Section);
    let deg = s.hilbert().degree() as i64;
    r.record("deg", deg, Source::Hilbert);
    r.compare(
        "section_degree",
        "deg Z = deg(A/I)",
        Relation::Eq,
        deg_z as i64,
        deg,
    );
    let rhs = section_bound_rhs(&degs, c, deg_z, i_z)? as i64;
    let reg = s.reg()?;
    r.record("reg", reg, Source::Resolution);
    r.record("rhs", rhs, Source::Formula);
    r.compare("upper", statement, Relation::Le, reg, rhs);
    Ok(())
}

pub const SATURATION_SEEDS: u64 = 3;

fn saturation_exponent<F: Field>(s: &Subject<F>, seed: u64, r: &mut VerifyReport) -> Result<()> {
    if !require_dim2(
        s,
        r,
        "bounds",
        "q <= a_0(A/I) - indeg(I^sat) + 1 <= reg(I) - indeg(I^sat)",
    ) {
        return Ok(());
    }
    let a0 = s.a0()?;
    let reg = s.reg()?;
    r.record("a0", extended(a0), Source::Hilbert);
    r.record("reg", reg, Source::Resolution);
    for k in 0..SATURATION_SEEDS {
        let sk = seed.wrapping_add(k);
        let l = random_linear_form(s.ideal.ring(), sk)?;
        let chk = saturation_exponent_check_with(&s.ideal, &l, a0, reg)?;
        let (lower, upper) = (format!("exponent_{k}"), format!("middle_{k}"));
        let lower_text = "q <= a_0(A/I) - indeg(I^sat) + 1";
        let upper_text = "a_0(A/I) - indeg(I^sat) + 1 <= reg(I) - indeg(I^sat)";
        r.record(&format!("seed_{k}"), sk, Source::Section);
        r.record(&format!("q_{k}"), chk.q, Source::Groebner);
        if !chk.hypotheses_hold {
            let why = if a0.is_none() {
                "I is saturated"
            } else {
                "(I : l)/I is not of finite length"
            };
            r.skip(&lower, lower_text, why);
            r.skip(&upper, upper_text, why);
            continue;
        }
        r.record(
            &format!("indeg_sat_{k}"),
            json!(chk.indeg_sat),
            Source::Hilbert,
        );
        match (chk.middle(), chk.right()) {
            (Some(mid), Some(right)) => {
                r.compare(&lower, lower_text, Relation::Le, chk.q as i64, mid);
                r.compare(&upper, upper_text, Relation::Le, mid, right);
            }
            _ => r.fail(&lower, lower_text, "I^sat is zero"),
        }
    }
    Ok(())
}

fn degree_bound<F: Field>(s: &Subject<F>, r: &mut VerifyReport) -> Result<()> {
    let nv = s.ideal.ring().nvars();
    let dim = s.hilbert().dimension();
    r.record("dim", json!(dim), Source::Hilbert);
    if nv < 2 {
        r.skip("upper", "reg(A/I) bound", "needs at least two variables");
        return Ok(());
    }
    let m = (nv - 2) as u32;
    let degs = s.minimal_generator_degrees()?;
    let d = degs.first().copied().unwrap_or(0);
    let reg_quot = s.reg()? - 1;
    r.record("max_degree", d, Source::Resolution);
    r.record("reg_quotient", reg_quot, Source::Resolution);
    let b = degree_bounds(m, d);
    match dim {
        Some(x) if x <= 1 => {
            r.compare(
                "upper",
                "reg(A/I) <= (m+2)(d-1)",
                Relation::Le,
                reg_quot,
                b.dim_at_most_1 as i64,
            );
        }
        Some(2) => {
            r.compare(
                "upper",
                "reg(A/I) <= (m+2) d^m (d-1)",
                Relation::Le,
                reg_quot,
                b.dim2 as i64,
            );
            r.info(
                "upper_sharp",
                "reg(A/I) <= (m+1) d^m (d-1)",
                Relation::Le,
                reg_quot,
                b.dim2_sharp as i64,
            );
        }
        other => r.skip(
            "upper",
            "reg(A/I) bound",
            format!("needs dim A/I <= 2, got {other:?}"),
        ),
    }
    Ok(())
}
