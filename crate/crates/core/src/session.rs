//! Session-level scalar context: one cyclotomic order and a fixed list of
//! named commuting indeterminates.

use std::sync::Arc;

use crate::cyclotomic::Cyclotomic;
use crate::error::Error;
use crate::ratfn::{ratfn_roots_of_unity, RatFn};

pub type Scalar = RatFn;

#[derive(Clone, Debug)]
pub struct Session {
    order: u32,
    names: Arc<Vec<String>>,
}

impl Session {
    pub fn new(order: u32, indeterminates: &[&str]) -> Session {
        assert!(order >= 1);
        Session {
            order,
            names: Arc::new(indeterminates.iter().map(|s| s.to_string()).collect()),
        }
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.order
    }

    pub fn indeterminate_names(&self) -> &[String] {
        &self.names
    }

    pub fn zeta(&self) -> Scalar {
        RatFn::zeta(self.order)
    }

    pub fn int(&self, n: i64) -> Scalar {
        RatFn::from_int(n)
    }

    pub fn indeterminate(&self, name: &str) -> Result<Scalar, Error> {
        let i = self
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown indeterminate `{}`", name)))?;
        Ok(RatFn::indeterminate(i as u16, Some(self.names.clone())))
    }

    /// Every n-th root of unity available in this session's field, complete
    /// or an error naming the missing order.
    pub fn roots_of_unity(&self, n: u32) -> Result<Vec<Scalar>, Error> {
        ratfn_roots_of_unity(self.order, n).ok_or(Error::RootsNotInField {
            wanted: n,
            order: self.order,
        })
    }

    pub fn zeta_value(&self) -> Cyclotomic {
        Cyclotomic::zeta(self.order)
    }

    /// Parses a scalar expression such as `-q^-1`, `1/(1-q)`, `zeta^2*s`.
    pub fn parse_scalar(&self, src: &str) -> Result<Scalar, Error> {
        crate::expr::parse_scalar(self, src)
    }
}
