//! The session scalar: rational functions over Q(zeta_N) in the declared
//! commuting indeterminates, kept in canonical reduced form.
//!
//! Canonical form: gcd(num, den) = 1 and the denominator is monic with
//! respect to the monomial order. Equality is therefore structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::cyclotomic::{roots_of_unity_in, Cyclotomic};
use crate::field::Field;
use crate::poly::{poly_gcd, Poly};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly, // nonzero, monic, coprime to num
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Option<RatFn> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> RatFn {
        if num.is_zero() {
            return RatFn { num, den: Poly::one() };
        }
        let (mut num, mut den) = (num, den);
        if !den.is_constant() {
            let g = poly_gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        // Normalize the denominator to be monic.
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFn { num, den }
    }

    pub fn from_poly(p: Poly) -> RatFn {
        RatFn::reduced(p, Poly::one())
    }

    pub fn from_cyclotomic(c: Cyclotomic) -> RatFn {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> RatFn {
        RatFn::from_cyclotomic(Cyclotomic::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> RatFn {
        assert!(d != 0);
        RatFn::from_cyclotomic(Cyclotomic::from_rat(num_rational::BigRational::new(
            n.into(),
            d.into(),
        )))
    }

    pub fn indeterminate(i: u16, names: Option<Arc<Vec<String>>>) -> RatFn {
        RatFn::from_poly(Poly::var(i, names))
    }

    pub fn zeta(order: u32) -> RatFn {
        RatFn::from_cyclotomic(Cyclotomic::zeta(order))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_cyclotomic(&self) -> Option<Cyclotomic> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn pow(&self, e: i64) -> Option<RatFn> {
        if e < 0 {
            return self.inv().map(|i| i.pow(-e).unwrap());
        }
        let mut out = RatFn::one();
        for _ in 0..e {
            out = out * self.clone();
        }
        Some(out)
    }

    /// When this scalar is exactly one indeterminate, its variable index.
    pub fn var_index(&self) -> Option<u16> {
        if !self.den.is_one() || self.num.num_terms() != 1 {
            return None;
        }
        let (m, c) = self.num.leading()?;
        if !c.is_one() || m.degree() != 1 {
            return None;
        }
        m.vars().next()
    }

    /// Substitutes a scalar for one indeterminate; errors only when the
    /// denominator collapses to zero.
    pub fn substitute(&self, var: u16, val: &RatFn) -> Option<RatFn> {
        let num =
            subst_poly_to_ratfn(&self.num, var, val)?;
        let den = subst_poly_to_ratfn(&self.den, var, val)?;
        num.checked_div(&den)
    }

    /// Shape analysis of the numerator for structural constraint solving.
    ///
    /// A constraint scalar c (den irrelevant for c = 0) is:
    /// - ZeroForcing(p) when num = lambda * p^k with lambda constant,
    /// - PowerOfUnity(p, k) when num = lambda * (p^k - 1),
    /// - Other otherwise.
    pub fn constraint_shape(&self) -> ConstraintKind {
        let terms: Vec<_> = self.num.terms().collect();
        let single_var = |m: &crate::poly::Monomial| -> Option<(u16, u32)> {
            let mut it = m.vars();
            let v = it.next()?;
            if it.next().is_some() {
                return None;
            }
            Some((v, m.exponent(v)))
        };
        match terms.len() {
            1 => {
                let (m, _) = terms[0];
                if m.is_unit() {
                    return ConstraintKind::Other; // nonzero constant: contradiction
                }
                match single_var(m) {
                    Some((v, _)) => ConstraintKind::ZeroForcing(v),
                    None => ConstraintKind::Other,
                }
            }
            2 => {
                let (m1, c1) = terms[1]; // leading
                let (m0, c0) = terms[0];
                if !m0.is_unit() {
                    return ConstraintKind::Other;
                }
                match single_var(m1) {
                    Some((v, k)) => {
                        let sum = c1.clone() + c0.clone();
                        if sum.is_zero() {
                            ConstraintKind::PowerOfUnity(v, k)
                        } else {
                            ConstraintKind::Other
                        }
                    }
                    None => ConstraintKind::Other,
                }
            }
            _ => ConstraintKind::Other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstraintKind {
    ZeroForcing(u16),
    PowerOfUnity(u16, u32),
    Other,
}

fn subst_poly_to_ratfn(p: &Poly, var: u16, val: &RatFn) -> Option<RatFn> {
    // Clear the substituted value's denominator degree-by-degree.
    let mut acc = RatFn::zero();
    for (m, c) in p.terms() {
        let e = m.exponent(var);
        let rest = crate::poly::Poly::from_terms(
            p.names.clone(),
            [(strip_var(m, var), c.clone())],
        );
        let mut t = RatFn::from_poly(rest);
        if e > 0 {
            t = t * val.pow(e as i64)?;
        }
        acc = acc + t;
    }
    Some(acc)
}

fn strip_var(m: &crate::poly::Monomial, var: u16) -> crate::poly::Monomial {
    let mut out = crate::poly::Monomial::unit();
    for v in m.vars() {
        if v != var {
            for _ in 0..m.exponent(v) {
                out = out.mul(&crate::poly::Monomial::var(v));
            }
        }
    }
    out
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFn {
    fn one() -> Self {
        RatFn::from_int(1)
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: Self) -> RatFn {
        if self.den == rhs.den {
            return RatFn::reduced(self.num + rhs.num, self.den);
        }
        RatFn::reduced(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: Self) -> RatFn {
        self + (-rhs)
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -self.num, den: self.den }
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: Self) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        RatFn::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RatFn {
    type Output = RatFn;
    fn div(self, rhs: Self) -> RatFn {
        self.checked_div(&rhs).expect("division by zero scalar")
    }
}

impl Field for RatFn {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFn::reduced(self.den.clone(), self.num.clone()))
    }

    fn from_i64(n: i64) -> Self {
        RatFn::from_int(n)
    }

    fn roots_of_unity(_n: u32) -> Option<Vec<Self>> {
        None // use Session::roots_of_unity, which knows the cyclotomic order
    }
}

/// Roots of unity of a given session order, lifted into the function field.
pub fn ratfn_roots_of_unity(order: u32, n: u32) -> Option<Vec<RatFn>> {
    roots_of_unity_in(order, n)
        .map(|v| v.into_iter().map(RatFn::from_cyclotomic).collect())
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let ns = format!("{}", self.num);
            let ds = format!("{}", self.den);
            let np = if self.num.num_terms() > 1 { format!("({})", ns) } else { ns };
            let dp = if self.den.num_terms() > 1 { format!("({})", ds) } else { ds };
            write!(f, "{}/{}", np, dp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFn {
        RatFn::indeterminate(0, None)
    }

    #[test]
    fn common_denominator_identity() {
        // q/(1-q) + 1 = 1/(1-q)
        let one = RatFn::one();
        let d = one.clone() - q();
        let lhs = q().checked_div(&d).unwrap() + RatFn::one();
        let rhs = RatFn::one().checked_div(&d).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn polynomial_cancellation() {
        // (q^2 - 1)/(q - 1) = q + 1
        let num = q() * q() - RatFn::one();
        let den = q() - RatFn::one();
        assert_eq!(num.checked_div(&den).unwrap(), q() + RatFn::one());
    }

    #[test]
    fn zeta4_squared() {
        let i = RatFn::zeta(4);
        assert_eq!(i.clone() * i, RatFn::from_int(-1));
    }

    #[test]
    fn canonical_equality_matches_cross_multiplication() {
        let a = q().checked_div(&(q() * q())).unwrap(); // 1/q
        let b = RatFn::one().checked_div(&q()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.num().clone() * b.den().clone(), b.num().clone() * a.den().clone());
    }

    #[test]
    fn division_by_zero_is_error() {
        assert!(RatFn::one().checked_div(&RatFn::zero()).is_none());
        assert!(RatFn::zero().inv().is_none());
    }
}

#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    /// Small scalars built from integer coefficients and powers of two
    /// indeterminates, dense enough to exercise gcd reduction.
    fn scalar_strategy() -> impl Strategy<Value = RatFn> {
        (
            -4i64..5,
            0u32..3,
            0u32..2,
            -3i64..4,
            0u32..2,
        )
            .prop_map(|(c0, e0, e1, c1, e2)| {
                let t0 = RatFn::indeterminate(0, None);
                let t1 = RatFn::indeterminate(1, None);
                RatFn::from_int(c0) * t0.pow(e0 as i64).unwrap() * t1.pow(e1 as i64).unwrap()
                    + RatFn::from_int(c1) * t0.pow(e2 as i64).unwrap()
            })
    }

    proptest! {
        #[test]
        fn field_axioms_hold(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
            // Associativity and commutativity.
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            // Distributivity.
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            // Units and inverses.
            prop_assert_eq!(a.clone() + RatFn::zero(), a.clone());
            prop_assert_eq!(a.clone() * RatFn::one(), a.clone());
            if let Some(ai) = a.inv() {
                prop_assert_eq!(a.clone() * ai, RatFn::one());
            }
            // Canonical-form equality agrees with cross multiplication.
            if !b.is_zero() && !c.is_zero() {
                let q1 = a.clone().checked_div(&b).unwrap();
                let q2 = (a.clone() * c.clone()).checked_div(&(b.clone() * c.clone())).unwrap();
                prop_assert_eq!(q1, q2);
            }
        }
    }
}
