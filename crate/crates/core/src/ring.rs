use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
///
/// Variables are positional; names only matter for parsing and printing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: FieldSpec,
    names: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: AsRef<str>>(field: FieldSpec, names: &[S], order: MonomialOrder) -> Result<Ring> {
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable name {n}")));
            }
        }
        if order.min_arity() > names.len() {
            return Err(Error::InvalidRing(format!(
                "order {order} needs at least {} variables",
                order.min_arity()
            )));
        }
        Ok(Arc::new(PolyRing {
            field,
            names,
            order,
        }))
    }

    /// Grevlex ring from a whitespace or comma separated variable list.
    pub fn grevlex(field: FieldSpec, vars: &str) -> Result<Ring> {
        let names: Vec<&str> = vars
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        Self::new(field, &names, MonomialOrder::GrevLex)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Self::new(self.field, &self.names, order)
    }

    /// Same variables and order over another field.
    pub fn with_field(&self, field: FieldSpec) -> Ring {
        Arc::new(PolyRing {
            field,
            names: self.names.clone(),
            order: self.order.clone(),
        })
    }

    /// Prepend `k` fresh variables, eliminated first by a block order.
    pub fn with_elimination_vars(&self, k: usize) -> Ring {
        let mut names: Vec<String> = (0..k).map(|i| format!("_t{i}")).collect();
        names.extend(self.names.iter().cloned());
        Arc::new(PolyRing {
            field: self.field,
            names,
            order: MonomialOrder::block(k, self.order.clone()),
        })
    }

    pub fn same(a: &Ring, b: &Ring) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

/// Convenience constructors that need the `Arc`.
pub trait RingExt {
    fn var(&self, i: usize) -> Polynomial;
    fn var_named(&self, name: &str) -> Result<Polynomial>;
    fn parse(&self, src: &str) -> Result<Polynomial>;
    fn parse_all(&self, srcs: &[&str]) -> Result<Vec<Polynomial>>;
    fn constant(&self, c: i64) -> Polynomial;
}

impl RingExt for Ring {
    fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self, i)
    }

    fn var_named(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .var_index(name)
            .ok_or_else(|| Error::InvalidRing(format!("unknown variable {name}")))?;
        Ok(Polynomial::var(self, i))
    }

    fn parse(&self, src: &str) -> Result<Polynomial> {
        crate::expr::parse_polynomial(self, src)
    }

    fn parse_all(&self, srcs: &[&str]) -> Result<Vec<Polynomial>> {
        srcs.iter().map(|s| self.parse(s)).collect()
    }

    fn constant(&self, c: i64) -> Polynomial {
        Polynomial::constant(self, self.field().from_i64(c))
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))
    }
}
