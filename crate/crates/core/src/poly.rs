//! Sparse multivariate polynomials over Q(zeta_N).
//!
//! Monomials are sparse exponent vectors ordered degree-lexicographically,
//! so polynomials have a well-defined leading term used to normalize
//! fractions. The gcd is a primitive polynomial remainder sequence,
//! recursing on the highest variable present.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::field::Field;

/// Sparse monomial: (variable index, exponent) pairs, sorted, exponents > 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<(u16, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: u16) -> Self {
        Monomial(vec![(i, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: u16) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = u16> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(v1, e1)), Some(&(v2, e2))) => match v1.cmp(&v2) {
                    Ordering::Less => {
                        out.push((v1, e1));
                        i += 1;
                    }
                    Ordering::Greater => {
                        out.push((v2, e2));
                        j += 1;
                    }
                    Ordering::Equal => {
                        out.push((v1, e1 + e2));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// Exact quotient self / other, if other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        for &(v, e) in &self.0 {
            let oe = other.exponent(v);
            if oe > e {
                return None;
            }
            if e - oe > 0 {
                out.push((v, e - oe));
            }
        }
        for &(v, oe) in &other.0 {
            if self.exponent(v) < oe {
                return None;
            }
        }
        Some(Monomial(out))
    }

    fn without_var(&self, v: u16) -> Monomial {
        Monomial(self.0.iter().cloned().filter(|&(w, _)| w != v).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Same degree: lexicographic on the dense exponent sequence, lower
        // variable index compared first, higher exponent is larger.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(v1, e1)), Some(&(v2, e2))) => {
                    if v1 < v2 {
                        return Ordering::Greater; // other has exponent 0 at v1
                    }
                    if v1 > v2 {
                        return Ordering::Less;
                    }
                    match e1.cmp(&e2) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial; `names` is display-only metadata and is ignored
/// by equality.
#[derive(Clone)]
pub struct Poly {
    pub names: Option<Arc<Vec<String>>>,
    terms: BTreeMap<Monomial, Cyclotomic>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for Poly {}

impl Poly {
    pub fn zero_named(names: Option<Arc<Vec<String>>>) -> Self {
        Poly { names, terms: BTreeMap::new() }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { names: None, terms }
    }

    pub fn var(i: u16, names: Option<Arc<Vec<String>>>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(i), Cyclotomic::one());
        Poly { names, terms }
    }

    pub fn from_terms(
        names: Option<Arc<Vec<String>>>,
        it: impl IntoIterator<Item = (Monomial, Cyclotomic)>,
    ) -> Self {
        let mut out = Poly::zero_named(names);
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Cyclotomic)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_unit())
    }

    pub fn as_constant(&self) -> Option<Cyclotomic> {
        if self.terms.is_empty() {
            return Some(Cyclotomic::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Monomial::unit()).cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn max_var(&self) -> Option<u16> {
        self.terms.keys().flat_map(|m| m.vars()).max()
    }

    fn merge_names(a: &Poly, b: &Poly) -> Option<Arc<Vec<String>>> {
        a.names.clone().or_else(|| b.names.clone())
    }

    pub fn scale(&self, c: &Cyclotomic) -> Poly {
        if c.is_zero() {
            return Poly::zero_named(self.names.clone());
        }
        Poly {
            names: self.names.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            names: self.names.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    /// View as univariate in variable v: exponent -> coefficient polynomial.
    fn uni_view(&self, v: u16) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = m.without_var(v);
            out.entry(e)
                .or_insert_with(|| Poly::zero_named(self.names.clone()))
                .add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    fn from_uni(v: u16, map: BTreeMap<u32, Poly>) -> Poly {
        let mut out = Poly::zero_named(None);
        for (e, p) in map {
            let pow = if e == 0 {
                Monomial::unit()
            } else {
                Monomial(vec![(v, e)])
            };
            out.names = out.names.or(p.names.clone());
            for (m, c) in p.terms {
                out.add_term(m.mul(&pow), c);
            }
        }
        out
    }

    /// Long division by the leading term; returns the quotient only when the
    /// division is exact.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Poly::zero_named(Poly::merge_names(self, d));
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        let dinv = dc.inv().unwrap();
        while !rem.is_zero() {
            let (lm, lc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let q = lm.div(&dm)?;
            let qc = lc * dinv.clone();
            let mut t = Poly::zero_named(quo.names.clone());
            t.add_term(q.clone(), qc.clone());
            quo = quo + t;
            let sub = d.mul_monomial(&q).scale(&qc);
            rem = rem - sub;
        }
        Some(quo)
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().unwrap()),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::constant(Cyclotomic::one());
        out.names = self.names.clone();
        for _ in 0..e {
            out = out * self.clone();
        }
        out
    }

    /// Substitutes a polynomial for one variable.
    pub fn substitute(&self, var: u16, val: &Poly) -> Poly {
        let mut out = Poly::zero_named(self.names.clone().or_else(|| val.names.clone()));
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let rest = m.without_var(var);
            let mut t = Poly::from_terms(out.names.clone(), [(rest, c.clone())]);
            if e > 0 {
                t = t * val.pow(e);
            }
            out = out + t;
        }
        out
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero_named(None)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Cyclotomic::one())
    }
    fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Self) -> Poly {
        let names = Poly::merge_names(&self, &rhs);
        let mut out = self;
        out.names = names;
        for (m, c) in rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Self) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Self) -> Poly {
        let names = Poly::merge_names(&self, &rhs);
        let mut out = Poly::zero_named(names);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

/// Monic gcd of two multivariate polynomials (primitive PRS).
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let g = gcd_inner(a, b);
    if g.is_zero() {
        g
    } else {
        g.monic()
    }
}

fn gcd_inner(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let v = a.max_var().unwrap().max(b.max_var().unwrap());
    let au = a.uni_view(v);
    let bu = b.uni_view(v);
    if au.len() == 1 && au.contains_key(&0) {
        // a does not involve v
        let cb = content(&bu);
        return gcd_inner(a, &cb);
    }
    if bu.len() == 1 && bu.contains_key(&0) {
        let ca = content(&au);
        return gcd_inner(&ca, b);
    }
    let ca = content(&au);
    let cb = content(&bu);
    let cont = gcd_inner(&ca, &cb);
    let pa = primitive(&au, &ca);
    let pb = primitive(&bu, &cb);
    let mut p1 = pa;
    let mut p2 = pb;
    if uni_deg(&p1) < uni_deg(&p2) {
        std::mem::swap(&mut p1, &mut p2);
    }
    loop {
        let r = pseudo_rem(&p1, &p2);
        if r.is_empty() {
            let res = primitive(&p2, &content(&p2));
            return cont * Poly::from_uni(v, res);
        }
        if uni_deg(&r) == 0 {
            return cont;
        }
        p1 = std::mem::replace(&mut p2, r);
        let c = content(&p2);
        p2 = primitive(&p2, &c);
        let c1 = content(&p1);
        p1 = primitive(&p1, &c1);
    }
}

type Uni = BTreeMap<u32, Poly>;

fn uni_deg(p: &Uni) -> u32 {
    p.keys().next_back().copied().unwrap_or(0)
}

fn content(p: &Uni) -> Poly {
    let mut g = Poly::zero();
    for c in p.values() {
        g = gcd_inner(&g, c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        g
    } else {
        g.monic()
    }
}

fn primitive(p: &Uni, cont: &Poly) -> Uni {
    if cont.is_zero() || cont.is_one() {
        return p.clone();
    }
    p.iter()
        .map(|(e, c)| (*e, c.div_exact(cont).expect("content division")))
        .collect()
}

/// Pseudo-remainder of p1 by p2 as univariate polynomials over Poly.
fn pseudo_rem(p1: &Uni, p2: &Uni) -> Uni {
    let d2 = uni_deg(p2);
    let lead2 = p2[&d2].clone();
    let mut r = p1.clone();
    while !r.is_empty() && uni_deg(&r) >= d2 {
        let dr = uni_deg(&r);
        let lr = r[&dr].clone();
        // r := lead2 * r - lr * x^(dr-d2) * p2
        let mut nr: Uni = BTreeMap::new();
        for (e, c) in &r {
            nr.insert(*e, c.clone() * lead2.clone());
        }
        for (e, c) in p2 {
            let ne = e + dr - d2;
            let sub = c.clone() * lr.clone();
            let cur = nr.remove(&ne).unwrap_or_else(Poly::zero);
            let nv = cur - sub;
            if !nv.is_zero() {
                nr.insert(ne, nv);
            }
        }
        nr.retain(|_, c| !c.is_zero());
        debug_assert!(nr.is_empty() || uni_deg(&nr) < dr);
        r = nr;
    }
    r
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let name = |v: u16| -> String {
            match &self.names {
                Some(ns) if (v as usize) < ns.len() => ns[v as usize].clone(),
                _ => format!("t{}", v),
            }
        };
        let mut first = true;
        // Display from the leading term down.
        for (m, c) in self.terms.iter().rev() {
            let cs = format!("{}", c);
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                if c.is_rational() {
                    ("-", stripped.to_string())
                } else {
                    ("+", format!("({})", cs))
                }
            } else if cs.contains('+') || cs.contains(" - ") {
                ("+", format!("({})", cs))
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_unit() {
                write!(f, "{}", mag)?;
            } else {
                if mag != "1" {
                    write!(f, "{}*", mag)?;
                }
                let mut firstv = true;
                for &(v, e) in &m.0 {
                    if !firstv {
                        write!(f, "*")?;
                    }
                    firstv = false;
                    if e == 1 {
                        write!(f, "{}", name(v))?;
                    } else {
                        write!(f, "{}^{}", name(v), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    fn var(i: u16) -> Poly {
        Poly::var(i, None)
    }

    #[test]
    fn monomial_order_is_deglex() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        let xy = x.mul(&y);
        let x2 = x.mul(&x);
        assert!(x > y);
        assert!(x2 > xy);
        assert!(xy > x);
        assert_eq!(x2.div(&x), Some(x.clone()));
        assert_eq!(x.div(&y), None);
    }

    #[test]
    fn gcd_of_univariate_cancellation() {
        // gcd(q^2 - 1, q - 1) = q - 1
        let q = var(0);
        let a = q.clone() * q.clone() - Poly::one();
        let b = q.clone() - Poly::one();
        let g = poly_gcd(&a, &b);
        assert_eq!(g, b.monic());
        assert_eq!(a.div_exact(&g).unwrap(), q + Poly::one());
    }

    #[test]
    fn gcd_multivariate() {
        // gcd((x+y)*x, (x+y)*y) = x+y
        let x = var(0);
        let y = var(1);
        let s = x.clone() + y.clone();
        let a = s.clone() * x.clone();
        let b = s.clone() * y.clone();
        assert_eq!(poly_gcd(&a, &b), s.monic());
        let _ = c(0);
    }

    #[test]
    fn gcd_coprime() {
        let x = var(0);
        let y = var(1);
        assert!(poly_gcd(&x, &y).is_one());
    }
}
