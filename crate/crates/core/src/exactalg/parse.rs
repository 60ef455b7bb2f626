//! Recursive-descent reader for the canonical polynomial text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::mpoly::MPoly;
use crate::combinatorics::HookParams;
use crate::error::{parse_err, Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return parse_err(format!("unexpected character {c:?} in polynomial"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    params: &'a HookParams,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero(self.params);
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let Some(Tok::Num(e)) = self.peek().cloned() else {
            return parse_err("expected an exponent after '^'");
        };
        self.pos += 1;
        let e: u32 = e
            .try_into()
            .map_err(|_| Error::Parse("exponent too large".into()))?;
        if !neg {
            return Ok(base.pow(e));
        }
        // only q may carry a negative exponent
        let qe = match base.terms().collect::<Vec<_>>().as_slice() {
            [(k, c)] if c.is_one() && k.0[1..].iter().all(|&x| x == 0) => k.q_exp(),
            _ => return parse_err("negative exponent on something other than a power of q"),
        };
        Ok(MPoly::q_pow(self.params, -qe * e as i32))
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut r = BigRational::from_integer(n);
                if self.eat('/') {
                    let Some(Tok::Num(d)) = self.peek().cloned() else {
                        return parse_err("expected a denominator after '/'");
                    };
                    self.pos += 1;
                    if d == BigInt::from(0) {
                        return parse_err("zero denominator");
                    }
                    r /= BigRational::from_integer(d);
                }
                Ok(MPoly::constant(self.params, r))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.variable(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return parse_err("missing ')'");
                }
                Ok(e)
            }
            other => parse_err(format!("unexpected token {other:?}")),
        }
    }

    fn variable(&self, name: &str) -> Result<MPoly> {
        if name == "q" {
            return Ok(MPoly::q(self.params));
        }
        if let Some(a) = name.strip_prefix('Q') {
            let a: usize = a
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable {name:?}")))?;
            if a == 0 || a > self.params.m() {
                return parse_err(format!("Q{a} outside Q1..Q{}", self.params.m()));
            }
            return Ok(MPoly::big_q_pow(self.params, a, 1));
        }
        let s = self.params.parse_symbol(name)?;
        Ok(MPoly::var(self.params, s))
    }
}

impl MPoly {
    /// Parses the canonical text form (and any expression built from `+ - * ^`, parentheses,
    /// rationals, `q`, `Q1..Qm` and alphabet variable names).
    pub fn parse(s: &str, params: &HookParams) -> Result<MPoly> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return parse_err("empty polynomial");
        }
        let mut p = Parser {
            toks,
            pos: 0,
            params,
        };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return parse_err(format!("trailing input at token {}", p.pos));
        }
        Ok(out)
    }
}
