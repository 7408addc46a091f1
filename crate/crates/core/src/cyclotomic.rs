//! Exact arithmetic in the cyclotomic field Q(zeta_N) = Q\[z\]/Phi_N(z).
//!
//! Elements are stored on the power basis {z^i : i < phi(N)} with rational
//! coordinates. Values whose higher coordinates vanish are demoted to
//! order 1 (plain rationals), which keeps the representation canonical and
//! lets rational constants mix freely with any session order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::Field;

pub type Rat = BigRational;

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rat> {
    assert!(n >= 1);
    // z^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut p = vec![Rat::zero(); n as usize + 1];
    p[0] = -rat(1);
    p[n as usize] = rat(1);
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub fn euler_phi(n: u32) -> u32 {
    (cyclotomic_polynomial(n).len() - 1) as u32
}

fn poly_trim(p: &mut Vec<Rat>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_div_exact(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (q, r) = poly_divmod(a, b);
    assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    q
}

fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r: Vec<Rat> = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] / &lead;
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            r[dr - db + i] -= t;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    (q, r)
}

/// Univariate extended Euclid over Q[z]: returns (g, s, t) with a*s + b*t = g.
fn poly_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let (mut s0, mut s1) = (vec![rat(1)], vec![]);
    let (mut t0, mut t1) = (vec![], vec![rat(1)]);
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

/// An element of Q(zeta_N) on the power basis of zeta_N.
///
/// Order 1 means a plain rational. Arithmetic between distinct orders is
/// permitted only when one side is rational; a session fixes a single order.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rat>, // length = phi(order), index i is the coefficient of zeta^i
}

impl Cyclotomic {
    pub fn from_rat(r: Rat) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// zeta_n as a field element (demoted when it is rational, e.g. n = 1, 2).
    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// zeta_n^k in canonical form.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![Rat::zero(); k + 1];
        raw[k] = rat(1);
        Self::reduce(n, raw)
    }

    /// Reduces a polynomial in zeta_n (low-to-high coefficients) mod Phi_n.
    fn reduce(order: u32, raw: Vec<Rat>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let (_, mut r) = poly_divmod(&raw, &phi);
        let deg = phi.len() - 1;
        r.resize(deg, Rat::zero());
        let mut out = Cyclotomic { order, coeffs: r };
        out.demote();
        out
    }

    fn demote(&mut self) {
        if self.order != 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            let c0 = self.coeffs[0].clone();
            self.order = 1;
            self.coeffs = vec![c0];
        }
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        if self.order == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn promote(&self, order: u32) -> Cyclotomic {
        if self.order == order {
            return self.clone();
        }
        assert_eq!(
            self.order, 1,
            "cyclotomic order mismatch: {} vs {}",
            self.order, order
        );
        let deg = euler_phi(order) as usize;
        let mut coeffs = vec![Rat::zero(); deg];
        coeffs[0] = self.coeffs[0].clone();
        Cyclotomic { order, coeffs }
    }

    fn align(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else if a.order == 1 {
            (a.promote(b.order), b.clone())
        } else {
            (a.clone(), b.promote(a.order))
        }
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut out = Cyclotomic::from_int(1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                out = out * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        out
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_int(1)
    }
    fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = Cyclotomic::align(&self, &rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a.demote();
        a
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = Cyclotomic::align(&self, &rhs);
        if a.order == 1 {
            return Cyclotomic::from_rat(&a.coeffs[0] * &b.coeffs[0]);
        }
        let raw = poly_mul(&a.coeffs, &b.coeffs);
        Cyclotomic::reduce(a.order, raw)
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rat() {
            return Some(Cyclotomic::from_rat(r.recip()));
        }
        let phi = cyclotomic_polynomial(self.order);
        let mut a = self.coeffs.clone();
        poly_trim(&mut a);
        let (g, s, _) = poly_ext_gcd(&a, &phi);
        // g is a nonzero constant since Phi is irreducible.
        debug_assert_eq!(g.len(), 1);
        let scale = g[0].recip();
        let inv: Vec<Rat> = s.iter().map(|c| c * &scale).collect();
        Some(Cyclotomic::reduce(self.order, inv))
    }

    fn from_i64(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }

    fn roots_of_unity(_n: u32) -> Option<Vec<Self>> {
        // The order is a value-level property here; root enumeration is done
        // through `roots_of_unity_in` with an explicit session order.
        None
    }
}

/// All solutions of x^n = 1 inside Q(zeta_order), or None when the field
/// does not contain a full set of n-th roots.
pub fn roots_of_unity_in(order: u32, n: u32) -> Option<Vec<Cyclotomic>> {
    assert!(n >= 1);
    let mut found: Vec<Cyclotomic> = Vec::new();
    // The roots of unity in Q(zeta_N) form the group generated by -1 and zeta_N.
    for sign in [1i64, -1] {
        for k in 0..order.max(1) {
            let mut x = Cyclotomic::zeta_pow(order, k as i64);
            if sign < 0 {
                x = -x;
            }
            if x.pow(n).is_one() && !found.contains(&x) {
                found.push(x);
            }
        }
    }
    if found.len() as u32 == n {
        Some(found)
    } else {
        None
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "zeta")?;
                } else {
                    write!(f, "zeta^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_match_known_tables() {
        assert_eq!(cyclotomic_polynomial(1), vec![rat(-1), rat(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![rat(1), rat(1)]);
        assert_eq!(cyclotomic_polynomial(3), vec![rat(1), rat(1), rat(1)]);
        assert_eq!(cyclotomic_polynomial(4), vec![rat(1), rat(0), rat(1)]);
        assert_eq!(cyclotomic_polynomial(6), vec![rat(1), rat(-1), rat(1)]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn zeta4_squares_to_minus_one() {
        let i = Cyclotomic::zeta(4);
        let m = i.clone() * i;
        assert_eq!(m, Cyclotomic::from_int(-1));
    }

    #[test]
    fn zeta_is_primitive() {
        for n in [2u32, 3, 4, 6, 8] {
            let z = Cyclotomic::zeta(n);
            for k in 1..n {
                assert!(!z.pow(k).is_one(), "zeta_{}^{} must not be 1", n, k);
            }
            assert!(z.pow(n).is_one());
        }
    }

    #[test]
    fn inverse_works_in_q_zeta3() {
        let z = Cyclotomic::zeta(3);
        let x = z.clone() + Cyclotomic::from_int(2);
        let xi = x.inv().unwrap();
        assert!((x * xi).is_one());
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn root_enumeration() {
        let r = roots_of_unity_in(3, 3).unwrap();
        assert_eq!(r.len(), 3);
        assert!(roots_of_unity_in(1, 2).unwrap().len() == 2);
        assert!(roots_of_unity_in(1, 3).is_none());
        assert_eq!(roots_of_unity_in(3, 6).map(|v| v.len()), Some(6));
    }
}
