//! Coefficient fields, monomials, monomial orders and sparse polynomials
//! over a standard-graded polynomial ring.

mod division;
mod field;
mod monomial;
mod parse;
mod poly;

use std::cmp::Ordering;
use std::sync::Arc;

pub use division::{is_groebner_set, normal_form, reduce, spoly, Reduction};
pub use field::{Field, PrimeField, Rationals, DEFAULT_CHARACTERISTIC};
pub use monomial::{mono_cmp, Monomial, MonomialOrder, MAX_VARS};
pub use poly::{poly_arith, ArithOp, Polynomial, Term};

pub(crate) use poly::sub_mul;

use crate::error::{Error, Result};

pub type RingRef<F> = Arc<PolyRing<F>>;

/// `k[X_0, ..., X_{N-1}]` with every variable of degree one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>, order: MonomialOrder) -> Result<RingRef<F>> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::Arity(format!(
                "a ring needs between 1 and {MAX_VARS} variables, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Arity(format!("duplicate variable name `{v}`")));
            }
        }
        match &order {
            MonomialOrder::Weighted(w) if w.len() != vars.len() || w.contains(&0) => {
                return Err(Error::Arity(
                    "weights must be positive, one per variable".into(),
                ));
            }
            MonomialOrder::Block(k) if *k > vars.len() => {
                return Err(Error::Arity(format!(
                    "block size {k} exceeds the variable count"
                )));
            }
            _ => {}
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// `X0..X{n-1}` under grevlex.
    pub fn standard(field: F, n: usize) -> RingRef<F> {
        let vars = (0..n).map(|i| format!("X{i}")).collect();
        Self::new(field, vars, MonomialOrder::Grevlex).expect("valid standard ring")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef<F>> {
        Self::new(self.field.clone(), self.vars.clone(), order)
    }

    /// Same field and order, different variables.
    pub fn with_vars(&self, vars: Vec<String>, order: MonomialOrder) -> Result<RingRef<F>> {
        Self::new(self.field.clone(), vars, order)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial<F> {
        Polynomial::monomial(
            self,
            self.field.one(),
            Monomial::var_power(self.nvars(), i, 1),
        )
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn parse(self: &Arc<Self>, s: &str) -> Result<Polynomial<F>> {
        parse::parse_polynomial(self, s)
    }

    /// Renders `ring: char=<p> vars=[...] order=<o>`.
    pub fn header(&self) -> String {
        format!(
            "ring: char={} vars=[{}] order={}",
            self.characteristic(),
            self.vars.join(","),
            self.order.name()
        )
    }
}
