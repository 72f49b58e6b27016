use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::hilbert::IntPoly;

/// Graded Betti numbers `β_{i,j}`; only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    module: String,
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn new(module: impl Into<String>) -> Self {
        BettiTable {
            module: module.into(),
            entries: BTreeMap::new(),
        }
    }

    /// From the degree lists of `F_0, F_1, ...`.
    pub fn from_degrees(module: impl Into<String>, degrees: &[Vec<u32>]) -> Self {
        let mut t = Self::new(module);
        for (i, degs) in degrees.iter().enumerate() {
            for &d in degs {
                t.add(i, d as i64, 1);
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, j: i64, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn module(&self) -> &str {
        &self.module
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `((i, j), β_{i,j})` in increasing `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, i64), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest `i` with a nonzero entry.
    pub fn pdim(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `max (j - i)` over the nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|(i, j)| j - *i as i64).max()
    }

    /// `max j` with `β_{i,j} ≠ 0` for a fixed `i`.
    pub fn max_degree(&self, i: usize) -> Option<i64> {
        self.entries
            .keys()
            .filter(|(k, _)| *k == i)
            .map(|(_, j)| *j)
            .max()
    }

    /// `Σ_i (-1)^i Σ_j β_{i,j} t^j`.
    pub fn euler_polynomial(&self) -> IntPoly {
        let top = self
            .entries
            .keys()
            .map(|(_, j)| *j)
            .max()
            .unwrap_or(0)
            .max(0) as usize;
        let mut c = vec![0i128; top + 1];
        for ((i, j), b) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            c[*j as usize] += s * *b as i128;
        }
        IntPoly::from_coeffs(c)
    }

    /// `{"module": .., "betti": [{"i":..,"j":..,"b":..}, ..]}`.
    pub fn to_json(&self) -> Value {
        let betti: Vec<Value> = self
            .iter()
            .map(|((i, j), b)| json!({"i": i, "j": j, "b": b}))
            .collect();
        json!({"module": self.module, "betti": betti})
    }

    /// Rows `j - i`, columns `i`, a `total:` row on top, `.` for zero.
    pub fn to_text(&self) -> String {
        let Some(pd) = self.pdim() else {
            return format!("{}: zero module\n", self.module);
        };
        let rmin = self
            .entries
            .keys()
            .map(|(i, j)| j - *i as i64)
            .min()
            .unwrap();
        let rmax = self.regularity().unwrap();
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push(("".into(), (0..=pd).map(|i| i.to_string()).collect()));
        rows.push((
            "total:".into(),
            (0..=pd).map(|i| self.total(i).to_string()).collect(),
        ));
        for r in rmin..=rmax {
            let cells = (0..=pd)
                .map(|i| match self.get(i, r + i as i64) {
                    0 => ".".to_string(),
                    b => b.to_string(),
                })
                .collect();
            rows.push((format!("{r}:"), cells));
        }
        let lw = rows.iter().map(|(l, _)| l.len()).max().unwrap();
        let widths: Vec<usize> = (0..=pd)
            .map(|c| rows.iter().map(|(_, v)| v[c].len()).max().unwrap())
            .collect();
        let mut out = String::new();
        for (label, cells) in rows {
            let mut line = format!("{label:>lw$}");
            for (c, cell) in cells.iter().enumerate() {
                line.push_str(&format!(" {cell:>w$}", w = widths[c]));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable({}, {:?})", self.module, self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_pattern_renders() {
        let t = BettiTable::from_degrees("A/I", &[vec![0], vec![1, 1, 1], vec![2, 2, 2], vec![3]]);
        assert_eq!(t.regularity(), Some(0));
        assert_eq!(t.pdim(), Some(3));
        assert_eq!(
            t.to_text(),
            "       0 1 2 3\ntotal: 1 3 3 1\n    0: 1 3 3 1\n"
        );
        assert_eq!(
            t.to_json().to_string(),
            r#"{"module":"A/I","betti":[{"i":0,"j":0,"b":1},{"i":1,"j":1,"b":3},{"i":2,"j":2,"b":3},{"i":3,"j":3,"b":1}]}"#
        );
        assert_eq!(
            t.euler_polynomial(),
            IntPoly::from_coeffs(vec![1, -3, 3, -1])
        );
    }
}
