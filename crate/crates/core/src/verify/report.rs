//! Report records and their JSON, CSV and text renderings.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;

pub const SCHEMA: &str = "cmreg-report/1";

/// The statements checked; serialized under their short ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Claim {
    /// Upper bound on `reg(I)` through a general hyperplane section.
    #[serde(rename = "thm11")]
    SectionBound,
    /// Bounds on the saturation exponent of a linear form.
    #[serde(rename = "lemma12")]
    SaturationExponent,
    /// Primed family: `I' = b' ∩ J ∩ K`.
    #[serde(rename = "lemma21")]
    PrimedDecomposition,
    /// Unprimed family: `I = b ∩ J ∩ K`.
    #[serde(rename = "lemma31")]
    Decomposition,
    /// Primed family: lower bound on `reg(ℐ')`.
    #[serde(rename = "prop22")]
    PrimedLowerBound,
    /// Unprimed family: lower bound on `reg(ℐ)`.
    #[serde(rename = "prop32")]
    LowerBound,
    /// Unprimed family: equality for small `m` and explicit upper bounds.
    #[serde(rename = "remark33")]
    Sharpness,
    /// Bounds on `reg(A/I)` from the generator degrees alone.
    #[serde(rename = "cor13")]
    DegreeBound,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::SectionBound,
        Claim::SaturationExponent,
        Claim::PrimedDecomposition,
        Claim::Decomposition,
        Claim::PrimedLowerBound,
        Claim::LowerBound,
        Claim::Sharpness,
        Claim::DegreeBound,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::SectionBound => "thm11",
            Claim::SaturationExponent => "lemma12",
            Claim::PrimedDecomposition => "lemma21",
            Claim::Decomposition => "lemma31",
            Claim::PrimedLowerBound => "prop22",
            Claim::LowerBound => "prop32",
            Claim::Sharpness => "remark33",
            Claim::DegreeBound => "cor13",
        }
    }

    pub fn parse(s: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == s)
    }

    /// Whether the claim is about the primed family, the unprimed one, or
    /// any ideal with a two-dimensional quotient (`None`).
    pub fn family(self) -> Option<bool> {
        match self {
            Claim::PrimedDecomposition | Claim::PrimedLowerBound => Some(true),
            Claim::Decomposition | Claim::LowerBound | Claim::Sharpness => Some(false),
            Claim::SectionBound | Claim::SaturationExponent | Claim::DegreeBound => None,
        }
    }
}

/// How a reported number was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Resolution,
    Hilbert,
    Section,
    Formula,
    Groebner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Reported but not asserted.
    Info,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "holds")]
    Holds,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Holds => "holds",
        }
    }

    pub fn test(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Holds => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Params {
    pub instance: String,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub primed: Option<bool>,
    pub char: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: Value,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubClaim {
    pub id: String,
    pub statement: String,
    pub relation: Relation,
    pub lhs: Value,
    pub rhs: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub claim: Claim,
    pub params: Params,
    pub values: Vec<Quantity>,
    pub subclaims: Vec<SubClaim>,
    /// Wall-clock time; left out of JSON so reports stay reproducible.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn new(claim: Claim, params: Params) -> Self {
        VerifyReport {
            claim,
            params,
            values: Vec::new(),
            subclaims: Vec::new(),
            elapsed_ms: 0,
        }
    }

    /// No asserted sub-claim failed.
    pub fn passed(&self) -> bool {
        self.subclaims.iter().all(|s| s.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.subclaims.iter().filter(|s| s.status == status).count()
    }

    pub fn value(&self, name: &str) -> Option<&Value> {
        self.values
            .iter()
            .find(|q| q.name == name)
            .map(|q| &q.value)
    }

    pub fn subclaim(&self, id: &str) -> Option<&SubClaim> {
        self.subclaims.iter().find(|s| s.id == id)
    }

    pub(crate) fn record(&mut self, name: &str, value: impl Into<Value>, source: Source) {
        self.values.push(Quantity {
            name: name.into(),
            value: value.into(),
            source,
        });
    }

    /// Asserts `lhs relation rhs`.
    pub(crate) fn compare(
        &mut self,
        id: &str,
        statement: &str,
        relation: Relation,
        lhs: i64,
        rhs: i64,
    ) {
        let status = if relation.test(lhs, rhs) {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(
            id,
            statement,
            relation,
            json!(lhs),
            json!(rhs),
            status,
            None,
        );
    }

    pub(crate) fn assert_true(
        &mut self,
        id: &str,
        statement: &str,
        ok: bool,
        note: Option<String>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(
            id,
            statement,
            Relation::Holds,
            json!(ok),
            json!(true),
            status,
            note,
        );
    }

    pub(crate) fn skip(&mut self, id: &str, statement: &str, reason: impl Into<String>) {
        self.push(
            id,
            statement,
            Relation::Holds,
            Value::Null,
            Value::Null,
            Status::Skipped,
            Some(reason.into()),
        );
    }

    pub(crate) fn info(
        &mut self,
        id: &str,
        statement: &str,
        relation: Relation,
        lhs: i64,
        rhs: i64,
    ) {
        let note = format!(
            "not asserted; {}",
            if relation.test(lhs, rhs) {
                "holds"
            } else {
                "does not hold"
            }
        );
        self.push(
            id,
            statement,
            relation,
            json!(lhs),
            json!(rhs),
            Status::Info,
            Some(note),
        );
    }

    pub(crate) fn fail(&mut self, id: &str, statement: &str, note: impl Into<String>) {
        self.push(
            id,
            statement,
            Relation::Holds,
            json!(false),
            json!(true),
            Status::Fail,
            Some(note.into()),
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        id: &str,
        statement: &str,
        relation: Relation,
        lhs: Value,
        rhs: Value,
        status: Status,
        note: Option<String>,
    ) {
        self.subclaims.push(SubClaim {
            id: id.into(),
            statement: statement.into(),
            relation,
            lhs,
            rhs,
            status,
            note,
        });
    }

    fn sort_key(&self) -> (Claim, Option<usize>, Option<usize>, Option<bool>, String) {
        let p = &self.params;
        (self.claim, p.m, p.n, p.primed, p.instance.clone())
    }
}

/// `a_0`-style invariants: `None` is `-∞`.
pub(crate) fn extended(v: Option<i64>) -> Value {
    match v {
        Some(x) => json!(x),
        None => json!("-inf"),
    }
}

/// Reports from one run, kept in `(claim, m, n, primed)` order.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportSet {
    pub char: u64,
    pub seed: u64,
    pub reports: Vec<VerifyReport>,
}

impl ReportSet {
    pub fn new(char: u64, seed: u64, mut reports: Vec<VerifyReport>) -> Self {
        reports.sort_by_key(|r| r.sort_key());
        ReportSet {
            char,
            seed,
            reports,
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }

    pub fn count(&self, status: Status) -> usize {
        self.reports.iter().map(|r| r.count(status)).sum()
    }

    pub fn find(&self, claim: Claim, instance: &str) -> Option<&VerifyReport> {
        self.reports
            .iter()
            .find(|r| r.claim == claim && r.params.instance == instance)
    }

    pub fn to_json(&self) -> Result<String> {
        let v = json!({
            "schema": SCHEMA,
            "char": self.char,
            "seed": self.seed,
            "summary": {
                "reports": self.reports.len(),
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "skipped": self.count(Status::Skipped),
                "info": self.count(Status::Info),
                "ok": self.passed(),
            },
            "reports": self.reports,
        });
        Ok(serde_json::to_string_pretty(&v)? + "\n")
    }

    /// One row per sub-claim.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = [
            "claim", "instance", "m", "n", "primed", "char", "seed", "subclaim", "relation", "lhs",
            "rhs", "status", "note",
        ];
        w.write_record(header).map_err(csv_err)?;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.reports {
            let p = &r.params;
            for s in &r.subclaims {
                w.write_record([
                    r.claim.id().to_string(),
                    p.instance.clone(),
                    opt(p.m),
                    opt(p.n),
                    p.primed.map(|b| b.to_string()).unwrap_or_default(),
                    p.char.to_string(),
                    p.seed.to_string(),
                    s.id.clone(),
                    s.relation.symbol().to_string(),
                    plain(&s.lhs),
                    plain(&s.rhs),
                    status_name(s.status).to_string(),
                    s.note.clone().unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|e| crate::Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| crate::Error::Internal(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{verdict} {} {}  (char {}, seed {})",
                r.claim.id(),
                r.params.instance,
                r.params.char,
                r.params.seed
            );
            for q in &r.values {
                let _ = writeln!(
                    out,
                    "    {} = {}  [{}]",
                    q.name,
                    plain(&q.value),
                    source_name(q.source)
                );
            }
            for s in &r.subclaims {
                let body = match s.relation {
                    Relation::Holds => String::new(),
                    rel => format!(": {} {} {}", plain(&s.lhs), rel.symbol(), plain(&s.rhs)),
                };
                let note = s
                    .note
                    .as_deref()
                    .map(|n| format!("  ({n})"))
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "  {:<7} {} {}{body}{note}",
                    status_name(s.status),
                    s.id,
                    s.statement
                );
            }
        }
        let _ = writeln!(
            out,
            "{} reports: {} pass, {} fail, {} skipped, {} info",
            self.reports.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            self.count(Status::Info)
        );
        out
    }
}

fn csv_err(e: csv::Error) -> crate::Error {
    crate::Error::Internal(format!("csv: {e}"))
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
        Status::Info => "info",
    }
}

fn source_name(s: Source) -> &'static str {
    match s {
        Source::Resolution => "resolution",
        Source::Hilbert => "hilbert",
        Source::Section => "section",
        Source::Formula => "formula",
        Source::Groebner => "groebner",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportSet {
        let params = Params {
            instance: "x".into(),
            m: Some(2),
            n: Some(2),
            primed: Some(false),
            char: 32003,
            seed: 1,
        };
        let mut r = VerifyReport::new(Claim::LowerBound, params.clone());
        r.record("reg", 7, Source::Resolution);
        r.compare("lower", "reg >= bound", Relation::Ge, 7, 7);
        r.skip("eq", "equality", "m = 4");
        let mut t = VerifyReport::new(Claim::SectionBound, params);
        t.compare("upper", "reg <= rhs", Relation::Le, 9, 8);
        ReportSet::new(32003, 1, vec![r, t])
    }

    #[test]
    fn ordering_and_verdicts() {
        let s = sample();
        assert_eq!(s.reports[0].claim, Claim::SectionBound);
        assert!(!s.passed());
        assert_eq!(
            (
                s.count(Status::Pass),
                s.count(Status::Fail),
                s.count(Status::Skipped)
            ),
            (1, 1, 1)
        );
    }

    #[test]
    fn renderings() {
        let s = sample();
        let j: Value = serde_json::from_str(&s.to_json().unwrap()).unwrap();
        assert_eq!(j["schema"], SCHEMA);
        assert_eq!(j["reports"][1]["values"][0]["source"], "resolution");
        assert_eq!(j["reports"][0]["subclaims"][0]["relation"], "<=");
        assert!(j["reports"][0].get("elapsed_ms").is_none());
        let csv = s.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("thm11,x,2,2,false,32003,1,upper,<=,9,8,fail"));
        assert!(s.to_text().contains("FAIL thm11 x"));
        assert_eq!(Claim::parse("remark33"), Some(Claim::Sharpness));
    }
}
