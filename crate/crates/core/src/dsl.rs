//! Text syntax for structured rings.
//!
//! ```text
//! ring  := term ("x" term)*
//! term  := "Z" int | "Z" int "[x]/(" poly ")" | "GF(" int ")" | "GF(" int "^" int ")" | "(" ring ")"
//! poly  := ["-"] mono (("+" | "-") mono)*
//! mono  := int | [int ["*"]] "x" ["^" int]
//! ```
//!
//! Whitespace is ignored everywhere. Error positions are byte offsets into the
//! original text.

use crate::error::{Error, Result};
use crate::ring::{irreducible_poly, is_prime, RingSpec};

pub fn parse_ring_dsl(text: &str) -> Result<RingSpec> {
    let mut p = Parser::new(text);
    if p.chars.is_empty() {
        return Err(p.error("empty ring expression"));
    }
    let spec = p.ring()?;
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos].1)));
    }
    Ok(spec)
}

struct Parser {
    /// Non-whitespace characters with their byte offsets in the source.
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        Parser { chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), pos: 0, len: text.len() }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.offset(), msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        for c in s.chars() {
            if !self.eat(c) {
                return Err(self.error(format!("expected `{s}`")));
            }
        }
        Ok(())
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v * 10 + d as u64;
            if v > u32::MAX as u64 {
                self.pos = start;
                return Err(self.error("integer too large"));
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(v as u32)
    }

    fn ring(&mut self) -> Result<RingSpec> {
        let mut parts = vec![self.term()?];
        while self.eat('x') {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { RingSpec::Product(parts) })
    }

    fn term(&mut self) -> Result<RingSpec> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.ring()?;
                self.expect(")")?;
                Ok(inner)
            }
            Some('Z') => {
                self.pos += 1;
                let n = self.int()?;
                if self.peek() == Some('[') {
                    self.expect("[x]/(")?;
                    let coeffs = self.poly(n)?;
                    self.expect(")")?;
                    Ok(RingSpec::QuotPoly { modulus: n, coeffs })
                } else {
                    Ok(RingSpec::Zn(n))
                }
            }
            Some('G') => {
                let at = self.pos;
                self.expect("GF(")?;
                let q = self.int()?;
                let (p, k) = if self.eat('^') { (q, self.int()?) } else { prime_power(q).unwrap_or((q, 0)) };
                self.expect(")")?;
                if !is_prime(p) || k == 0 {
                    self.pos = at;
                    return Err(self.error(format!("GF order must be a prime power, got {q}")));
                }
                if k == 1 {
                    return Ok(RingSpec::Zn(p));
                }
                let coeffs = irreducible_poly(p, k)
                    .ok_or_else(|| Error::BadSpec(format!("GF({p}^{k}) is too large to enumerate")))?;
                Ok(RingSpec::QuotPoly { modulus: p, coeffs })
            }
            _ => Err(self.error("expected `Z`, `GF(` or `(`")),
        }
    }

    fn poly(&mut self, n: u32) -> Result<Vec<u32>> {
        if n == 0 {
            return Err(self.error("modulus must be positive"));
        }
        let mut coeffs: Vec<u64> = Vec::new();
        let mut negative = self.eat('-');
        loop {
            let (c, deg) = self.monomial()?;
            let d = deg as usize;
            if d > 64 {
                return Err(self.error("polynomial degree too large"));
            }
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            let c = c % n as u64;
            let signed = if negative { (n as u64 - c) % n as u64 } else { c };
            coeffs[d] = (coeffs[d] + signed) % n as u64;
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(coeffs.into_iter().map(|c| c as u32).collect())
    }

    fn monomial(&mut self) -> Result<(u64, u32)> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.int()? as u64;
            if !self.eat('*') && self.peek() != Some('x') {
                return Ok((c, 0));
            }
            c
        } else {
            1
        };
        if !self.eat('x') {
            return Err(self.error("expected `x` or a coefficient"));
        }
        let deg = if self.eat('^') { self.int()? } else { 1 };
        Ok((coeff, deg))
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}
