//! Recursive-descent parser for scalar, algebra and tensor expressions.
//!
//! Grammar (no implicit multiplication):
//!   expr   := ['-'] term (('+'|'-') term)*
//!   term   := factor (('*'|'/') factor)*
//!   factor := atom ['^' ['-'] int]
//!   atom   := int | name | 'zeta' | 'tensor' '(' expr ',' expr [',' ...] ')' | '(' expr ')'
//!
//! Names resolve first to slot generators (in element/tensor contexts) and
//! then to session indeterminates. Division and negative powers are only
//! defined for scalar values.

use std::sync::Arc;


use crate::error::Error;
use crate::field::Field;
use crate::kernel::{AlgebraElement, Presentation};
use crate::session::Session;
use crate::tensor::TensorElement;
use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(src: &str) -> Result<Vec<Tok>, Error> {
    let mut out = Vec::new();
    let mut it = src.chars().peekable();
    while let Some(&ch) = it.peek() {
        match ch {
            ' ' | '\t' | '\n' => {
                it.next();
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(&d) = it.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as i64))
                            .ok_or_else(|| Error::Parse("integer literal overflow".into()))?;
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(n));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut s = String::new();
                while let Some(&c) = it.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Name(s));
            }
            '+' => {
                it.next();
                out.push(Tok::Plus);
            }
            '-' => {
                it.next();
                out.push(Tok::Minus);
            }
            '*' => {
                it.next();
                out.push(Tok::Star);
            }
            '/' => {
                it.next();
                out.push(Tok::Slash);
            }
            '^' => {
                it.next();
                out.push(Tok::Caret);
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            ',' => {
                it.next();
                out.push(Tok::Comma);
            }
            other => return Err(Error::Parse(format!("unexpected character `{}`", other))),
        }
    }
    Ok(out)
}

/// A parsed value: scalar, element of one presentation, or tensor.
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    Element(AlgebraElement<Scalar>),
    Tensor(TensorElement<Scalar>),
}

/// Evaluation context: the session plus the slot presentations available
/// for `tensor(...)` and bare generator names.
pub struct Env<'a> {
    pub session: &'a Session,
    pub slots: Vec<Arc<Presentation<Scalar>>>,
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    env: &'a Env<'a>,
    /// Presentation in which bare generator names resolve (element context).
    gen_scope: Option<Arc<Presentation<Scalar>>>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), Error> {
        match self.next() {
            Some(x) if x == t => Ok(()),
            other => Err(Error::Parse(format!("expected {:?}, found {:?}", t, other))),
        }
    }

    fn expr(&mut self) -> Result<Value, Error> {
        let mut neg = false;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            neg = true;
        }
        let mut acc = self.term()?;
        if neg {
            acc = neg_value(acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = add_values(acc, t)?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = add_values(acc, neg_value(t))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = mul_values(acc, f)?;
                }
                Some(Tok::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    let Value::Scalar(d) = f else {
                        return Err(Error::Parse("division only defined for scalars".into()));
                    };
                    let acc_s = match acc {
                        Value::Scalar(s) => s,
                        _ => return Err(Error::Parse("division only defined for scalars".into())),
                    };
                    let r = acc_s.checked_div(&d).ok_or(Error::DivisionByZero)?;
                    acc = Value::Scalar(r);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, Error> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let mut neg = false;
            if matches!(self.peek(), Some(Tok::Minus)) {
                self.next();
                neg = true;
            }
            let e = match self.next() {
                Some(Tok::Int(n)) => n,
                other => {
                    return Err(Error::Parse(format!("expected exponent, found {:?}", other)))
                }
            };
            let e = if neg { -e } else { e };
            return pow_value(base, e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value, Error> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Value::Scalar(Scalar::from_int(n))),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Name(name)) => {
                if name == "zeta" {
                    return Ok(Value::Scalar(self.env.session.zeta()));
                }
                if name == "tensor" {
                    self.expect(Tok::LParen)?;
                    let mut parts: Vec<AlgebraElement<Scalar>> = Vec::new();
                    for i in 0.. {
                        if i >= self.env.slots.len() {
                            return Err(Error::Parse("tensor has too many arguments".into()));
                        }
                        let saved = self.gen_scope.take();
                        self.gen_scope = Some(self.env.slots[i].clone());
                        let v = self.expr()?;
                        self.gen_scope = saved;
                        let el = match v {
                            Value::Element(e) => e,
                            Value::Scalar(s) => {
                                AlgebraElement::scalar(&self.env.slots[i], s)
                            }
                            Value::Tensor(_) => {
                                return Err(Error::Parse("nested tensor not supported".into()))
                            }
                        };
                        parts.push(el);
                        match self.next() {
                            Some(Tok::Comma) => continue,
                            Some(Tok::RParen) => break,
                            other => {
                                return Err(Error::Parse(format!(
                                    "expected `,` or `)`, found {:?}",
                                    other
                                )))
                            }
                        }
                    }
                    if parts.len() != self.env.slots.len() {
                        return Err(Error::Parse(format!(
                            "tensor arity {} does not match context arity {}",
                            parts.len(),
                            self.env.slots.len()
                        )));
                    }
                    return Ok(Value::Tensor(TensorElement::from_elements(&parts)));
                }
                // Generator in scope?
                let scope = self.gen_scope.clone().or_else(|| {
                    if self.env.slots.len() == 1 {
                        Some(self.env.slots[0].clone())
                    } else {
                        None
                    }
                });
                if let Some(p) = scope {
                    if p.gen_index(&name).is_some() {
                        return Ok(Value::Element(AlgebraElement::generator(&p, &name)?));
                    }
                }
                // Session indeterminate.
                self.env.session.indeterminate(&name).map(Value::Scalar)
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

fn neg_value(v: Value) -> Value {
    match v {
        Value::Scalar(s) => Value::Scalar(-s),
        Value::Element(e) => Value::Element(e.neg()),
        Value::Tensor(t) => Value::Tensor(t.neg()),
    }
}

fn add_values(a: Value, b: Value) -> Result<Value, Error> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y)),
        (Value::Element(x), Value::Element(y)) => Ok(Value::Element(x.add(&y))),
        (Value::Tensor(x), Value::Tensor(y)) => Ok(Value::Tensor(x.add(&y))),
        (Value::Element(x), Value::Scalar(s)) | (Value::Scalar(s), Value::Element(x)) => {
            let one = AlgebraElement::scalar(x.presentation(), s);
            Ok(Value::Element(x.add(&one)))
        }
        (Value::Tensor(x), Value::Scalar(s)) | (Value::Scalar(s), Value::Tensor(x)) => {
            let u = TensorElement::scalar(x.slots().to_vec(), s);
            Ok(Value::Tensor(x.add(&u)))
        }
        _ => Err(Error::Parse("cannot add element and tensor".into())),
    }
}

fn mul_values(a: Value, b: Value) -> Result<Value, Error> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x * y)),
        (Value::Scalar(s), Value::Element(e)) | (Value::Element(e), Value::Scalar(s)) => {
            Ok(Value::Element(e.scale(&s)))
        }
        (Value::Scalar(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(s)) => {
            Ok(Value::Tensor(t.scale(&s)))
        }
        (Value::Element(x), Value::Element(y)) => Ok(Value::Element(x.mul(&y))),
        (Value::Tensor(x), Value::Tensor(y)) => Ok(Value::Tensor(x.mul(&y))),
        _ => Err(Error::Parse("cannot multiply element and tensor".into())),
    }
}

fn pow_value(v: Value, e: i64) -> Result<Value, Error> {
    match v {
        Value::Scalar(s) => s
            .pow(e)
            .map(Value::Scalar)
            .ok_or(Error::DivisionByZero),
        Value::Element(x) => {
            if e < 0 {
                return Err(Error::Parse("negative powers only defined for scalars".into()));
            }
            Ok(Value::Element(x.pow(e as usize)))
        }
        Value::Tensor(t) => {
            if e < 0 {
                return Err(Error::Parse("negative powers only defined for scalars".into()));
            }
            let mut out = TensorElement::unit(t.slots().to_vec());
            for _ in 0..e {
                out = out.mul(&t);
            }
            Ok(Value::Tensor(out))
        }
    }
}

fn parse_with_env(env: &Env, src: &str) -> Result<Value, Error> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, env, gen_scope: None };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

pub fn parse_scalar(session: &Session, src: &str) -> Result<Scalar, Error> {
    let env = Env { session, slots: vec![] };
    match parse_with_env(&env, src)? {
        Value::Scalar(s) => Ok(s),
        other => Err(Error::Parse(format!("expected scalar, got {:?}", other))),
    }
}

pub fn parse_element(
    session: &Session,
    pres: &Arc<Presentation<Scalar>>,
    src: &str,
) -> Result<AlgebraElement<Scalar>, Error> {
    let env = Env { session, slots: vec![pres.clone()] };
    match parse_with_env(&env, src)? {
        Value::Element(e) => Ok(e),
        Value::Scalar(s) => Ok(AlgebraElement::scalar(pres, s)),
        other => Err(Error::Parse(format!("expected element, got {:?}", other))),
    }
}

pub fn parse_tensor(
    session: &Session,
    slots: &[Arc<Presentation<Scalar>>],
    src: &str,
) -> Result<TensorElement<Scalar>, Error> {
    let env = Env { session, slots: slots.to_vec() };
    match parse_with_env(&env, src)? {
        Value::Tensor(t) => Ok(t),
        Value::Scalar(s) => Ok(TensorElement::scalar(slots.to_vec(), s)),
        other => Err(Error::Parse(format!("expected tensor, got {:?}", other))),
    }
}

/// Parses a plain word such as `x*g^2` (names joined by `*`, positive powers).
pub fn parse_word(
    pres: &Arc<Presentation<Scalar>>,
    src: &str,
) -> Result<crate::kernel::Word, Error> {
    let toks = lex(src)?;
    let mut letters: Vec<u8> = Vec::new();
    let mut i = 0;
    if toks.len() == 1 {
        if let Tok::Int(1) = toks[0] {
            return Ok(crate::kernel::Word::unit());
        }
    }
    while i < toks.len() {
        let Tok::Name(name) = &toks[i] else {
            return Err(Error::Parse(format!("expected generator name in word `{}`", src)));
        };
        let g = pres
            .gen_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown generator `{}`", name)))?;
        i += 1;
        let mut e = 1usize;
        if i + 1 < toks.len() && toks[i] == Tok::Caret {
            if let Tok::Int(n) = toks[i + 1] {
                if n < 0 {
                    return Err(Error::Parse("word powers must be positive".into()));
                }
                e = n as usize;
                i += 2;
            } else {
                return Err(Error::Parse("expected integer exponent".into()));
            }
        }
        for _ in 0..e {
            letters.push(g);
        }
        if i < toks.len() {
            if toks[i] != Tok::Star {
                return Err(Error::Parse(format!("expected `*` in word `{}`", src)));
            }
            i += 1;
        }
    }
    Ok(crate::kernel::Word(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::slq2_presentation;
    use num_traits::One;

    #[test]
    fn scalar_expressions() {
        let s = Session::new(4, &["q", "s"]);
        let q = s.indeterminate("q").unwrap();
        assert_eq!(s.parse_scalar("-q^-1").unwrap(), -(q.inv().unwrap()));
        assert_eq!(
            s.parse_scalar("1/(1-q)").unwrap(),
            Scalar::one().checked_div(&(Scalar::one() - q.clone())).unwrap()
        );
        assert_eq!(s.parse_scalar("zeta^2").unwrap(), Scalar::from_int(-1));
        assert!(s.parse_scalar("nosuch").is_err());
        assert!(s.parse_scalar("1/0").is_err());
    }

    #[test]
    fn element_and_tensor_expressions() {
        let s = Session::new(1, &["q"]);
        let p = slq2_presentation(s.indeterminate("q").unwrap());
        let e = parse_element(&s, &p, "a*d - q*b*c").unwrap();
        // a*d = 1 + q b c, so e = 1.
        assert_eq!(e, crate::kernel::AlgebraElement::one(&p));
        let t = parse_tensor(&s, &[p.clone(), p.clone()], "tensor(a, d) - q*tensor(b, c)").unwrap();
        assert_eq!(t.num_terms(), 2);
        let w = parse_word(&p, "b*c^2").unwrap();
        assert_eq!(w.0, vec![0, 1, 1]);
        assert_eq!(parse_word(&p, "1").unwrap(), crate::kernel::Word::unit());
    }
}
